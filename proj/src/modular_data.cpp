#include "ddouble/modular_data.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "ddouble/detail/cyckernel.hpp"
#include "ddouble/detail/parallel.hpp"

namespace ddouble {

namespace {

// --- family-specific irrep labels (rho_a, chi_a, (1,s), t_i, ...) ------------

// a with value = zeta_m^a, or -1
long root_exponent(const CycNum& v, long m) {
    for (long a = 0; a < m; ++a)
        if (v == CycNum::root(m, a)) return a;
    return -1;
}

long theta_index(const CycNum& v, long m) {
    for (long a = 1; 2 * a <= m; ++a)
        if (v == cyc_theta(m, a)) return a;
    return -1;
}

std::string sign_slot(const CycNum& v, const char* minus) {
    if (v == CycNum(1)) return "1";
    if (v == CycNum(-1)) return minus;
    return "";
}

std::string irrep_label(const Group& g, const Subgroup& h, const CharTable& table, int irrep) {
    const ClassFunction& chi = table.irreducibles[irrep];
    int deg = table.degrees[irrep];
    int order = h.order();
    std::string fallback = "chi_" + std::to_string(irrep);
    if (order == 1) return "1";
    if (order == 2) return chi.values[1] == CycNum(1) ? "1" : "s";

    bool whole = h.is_whole_group();
    GroupFamily fam = g.family;
    int n = g.family_param;
    try {
        if (whole && fam == GroupFamily::Dihedral) {
            int x = 1, y = n;  // family element numbering
            if (deg == 2) {
                long a = theta_index(chi.at(x), n);
                if (a >= 0) return "chi_" + std::to_string(a);
            } else if (n % 2 == 1) {
                return chi.at(y) == CycNum(1) ? "1" : "s";
            } else {
                std::string a = sign_slot(chi.at(y), "s"), b = sign_slot(chi.at(x), "s");
                if (!a.empty() && !b.empty()) return "(" + a + "," + b + ")";
            }
            return fallback;
        }
        if (whole && fam == GroupFamily::Dicyclic) {
            int x = 1, y = 2 * n;
            if (deg == 2) {
                long a = theta_index(chi.at(x), 2 * n);
                if (a >= 0) return "chi_" + std::to_string(a);
            } else if (n % 2 == 1) {
                long a = root_exponent(chi.at(y), 4);
                if (a == 0) return "1";
                if (a == 1) return "t_i";
                if (a == 2) return "t_-1";
                if (a == 3) return "t_-i";
            } else {
                std::string a = sign_slot(chi.at(y), "s"), b = sign_slot(chi.at(x), "s");
                if (!a.empty() && !b.empty()) return "(" + a + "," + b + ")";
            }
            return fallback;
        }
        if (whole && fam == GroupFamily::Cyclic) {
            long a = root_exponent(chi.at(n > 1 ? 1 : 0), n);
            if (a >= 0) return "rho_" + std::to_string(a);
            return fallback;
        }
        if (fam == GroupFamily::Dihedral || fam == GroupFamily::Dicyclic) {
            int xspan = fam == GroupFamily::Dihedral ? n : 2 * n;
            int gen = -1;  // cyclic centralizers: label by the exponent at a generator
            for (int m : h.members)
                if (g.elem_order(m) == order) {
                    gen = m;
                    break;
                }
            if (gen >= 0) {
                long a = root_exponent(chi.at(gen), order);
                if (a < 0) return fallback;
                if (fam == GroupFamily::Dicyclic && order == 4 && gen >= xspan) {
                    // type-3 centralizer <y>: subscript says where y goes
                    if (a == 0) return "1";
                    if (a == 1) return "t_i";
                    if (a == 2) return "t_-1";
                    return "t_-i";
                }
                return "rho_" + std::to_string(a);
            }
            if (order == 4) {
                // Klein-four type-3 centralizer {1, y', x^m, y'x^m}: slots are
                // the values at y' and at the central x^m
                int central = -1, other = -1;
                for (int m : h.members) {
                    if (m == 0) continue;
                    bool cen = true;
                    for (int t = 0; t < g.order && cen; ++t) cen = g.commute(m, t);
                    if (cen && central < 0) central = m;
                }
                for (int m : h.members)
                    if (m != 0 && m != central && other < 0) other = m;
                if (central >= 0 && other >= 0) {
                    std::string a = sign_slot(chi.at(other), "t"), b = sign_slot(chi.at(central), "t");
                    if (!a.empty() && !b.empty()) return "(" + a + "," + b + ")";
                }
            }
            return fallback;
        }
    } catch (const std::exception&) {
        return fallback;
    }
    return fallback;
}

int find_trivial_irrep(const CharTable& t) {
    for (int i = 0; i < t.rank(); ++i) {
        bool all_one = true;
        for (const auto& v : t.irreducibles[i].values)
            if (!(v == CycNum(1))) {
                all_one = false;
                break;
            }
        if (all_one) return i;
    }
    throw std::logic_error("character table has no trivial character");
}

}  // namespace

CycNum DoubleData::double_char_value(int object, int g_elem, int x) const {
    const SimpleObject& ob = objects[object];
    const ConjClass& cls = classes[ob.class_index];
    if (!cls.contains(g_elem)) return CycNum(0);
    const Group& G = g();
    if (!G.commute(g_elem, x)) return CycNum(0);
    int tau = cls.tau_of(g_elem);
    // r = tau_g^-1 satisfies r g r^-1 = g_K; the value is chi(r x r^-1)
    int u = G.conj(G.inv(tau), x);
    return tables[ob.class_index].irreducibles[ob.irrep_index].at(u);
}

DoubleData build_double_data(Group g_in, const DixonOptions& opts) {
    DoubleData dd;
    dd.group = std::make_shared<const Group>(std::move(g_in));
    const Group& G = *dd.group;
    dd.classes = conjugacy_classes(G);
    dd.class_of.assign(G.order, -1);
    for (size_t c = 0; c < dd.classes.size(); ++c)
        for (int m : dd.classes[c].members) dd.class_of[m] = static_cast<int>(c);
    dd.conductor = exponent(G);
    for (const auto& cls : dd.classes) {
        dd.centralizers.push_back(centralizer(G, cls.rep));
        dd.tables.push_back(character_table(dd.centralizers.back(), opts));
    }
    for (size_t c = 0; c < dd.classes.size(); ++c) {
        dd.offsets.push_back(static_cast<int>(dd.objects.size()));
        const CharTable& t = dd.tables[c];
        for (int i = 0; i < t.rank(); ++i) {
            SimpleObject ob;
            ob.class_index = static_cast<int>(c);
            ob.irrep_index = i;
            ob.label = "V_{" + G.names[dd.classes[c].rep] + "," +
                       irrep_label(G, dd.centralizers[c], t, i) + "}";
            dd.objects.push_back(std::move(ob));
            dd.dims.push_back(dd.classes[c].size() * t.degrees[i]);
        }
    }
    dd.unit_index = dd.object_index(0, find_trivial_irrep(dd.tables[0]));

    // duals: class of g^-1; the partner irrep is resolved by matching the
    // transported conjugate character against the centralizer table
    dd.duals.assign(dd.rank(), -1);
    for (int a = 0; a < dd.rank(); ++a) {
        int ci = dd.objects[a].class_index;
        int g_rep = dd.classes[ci].rep;
        int ginv = G.inv(g_rep);
        int cj = dd.class_of[ginv];
        int t = dd.classes[cj].tau_of(ginv);  // t * g_{cj} * t^-1 = g^-1
        const ClassFunction& chi = dd.tables[ci].irreducibles[dd.objects[a].irrep_index];
        const Subgroup& target = dd.centralizers[cj];
        std::vector<CycNum> wanted;
        wanted.reserve(target.members.size());
        for (int u : target.members) wanted.push_back(chi.at(G.conj(t, u)).conjugate());
        int match = -1;
        for (int i = 0; i < dd.tables[cj].rank(); ++i)
            if (dd.tables[cj].irreducibles[i].values == wanted) {
                match = i;
                break;
            }
        if (match < 0) throw std::logic_error("dual resolution: no matching irrep");
        dd.duals[a] = dd.object_index(cj, match);
    }
    for (int a = 0; a < dd.rank(); ++a)
        if (dd.duals[dd.duals[a]] != a) throw std::logic_error("dual is not an involution");
    return dd;
}

CycNum DoubleCharacter::value(int g, int x) const {
    auto it = std::lower_bound(support.begin(), support.end(), g);
    if (it == support.end() || *it != g) return CycNum(0);
    size_t i = it - support.begin();
    auto jt = std::lower_bound(commuting[i].begin(), commuting[i].end(), x);
    if (jt == commuting[i].end() || *jt != x) return CycNum(0);
    return values[i][jt - commuting[i].begin()];
}

DoubleCharacter double_character(const DoubleData& dd, int object) {
    const Group& G = dd.g();
    const SimpleObject& ob = dd.objects[object];
    const ConjClass& cls = dd.classes[ob.class_index];
    DoubleCharacter out;
    out.object = object;
    out.support = cls.members;
    for (int g : cls.members) {
        Subgroup cg = centralizer(G, g);
        std::vector<CycNum> vals;
        vals.reserve(cg.members.size());
        for (int x : cg.members) vals.push_back(dd.double_char_value(object, g, x));
        out.commuting.push_back(cg.members);
        out.values.push_back(std::move(vals));
    }
    return out;
}

// --- S-matrix ----------------------------------------------------------------

namespace {

// centralizer character values as fixed-conductor integer vectors
template <class Z>
struct ClassVals {
    detail::CycKernel<Z> kernel;
    std::vector<std::vector<Z>> store;  // per class, irrep-major over member positions
    std::vector<long> csize;
    double max_coeff = 1.0;

    explicit ClassVals(const DoubleData& dd) : kernel(dd.conductor) {
        size_t nc = dd.classes.size();
        store.resize(nc);
        csize.resize(nc);
        for (size_t c = 0; c < nc; ++c) {
            const CharTable& t = dd.tables[c];
            long m = dd.centralizers[c].order();
            csize[c] = m;
            store[c].assign(static_cast<size_t>(t.rank()) * m * kernel.phi, Z(0));
            for (int i = 0; i < t.rank(); ++i)
                for (long u = 0; u < m; ++u) {
                    Z* dst = val(c, i, u);
                    kernel.from_cyc(t.irreducibles[i].values[u], dst);
                    max_coeff = std::max(max_coeff, kernel.max_abs(dst));
                }
        }
    }
    Z* val(size_t c, int irrep, long pos) {
        return store[c].data() + (static_cast<size_t>(irrep) * csize[c] + pos) * kernel.phi;
    }
    const Z* val(size_t c, int irrep, long pos) const {
        return store[c].data() + (static_cast<size_t>(irrep) * csize[c] + pos) * kernel.phi;
    }
};

}  // namespace

SMatrix s_matrix(const DoubleData& dd) {
    const Group& G = dd.g();
    const int nc = static_cast<int>(dd.classes.size());
    ClassVals<Integer> cv(dd);
    const auto& kernel = cv.kernel;
    const long phi = kernel.phi;

    SMatrix s;
    s.rank = dd.rank();
    s.unit_index = dd.unit_index;
    s.conductor = dd.conductor;
    s.entries.assign(static_cast<size_t>(s.rank) * s.rank, CycNum(0));

    // Eq-style sum per class pair: for fixed (I, J) the valid h contribute a
    // multiset of position pairs (u, v) shared by every irrep combination.
    detail::parallel_for(static_cast<long>(nc) * nc, [&](long lo, long hi) {
        std::vector<Integer> tmp(phi), acc(phi), scratch(2 * phi - 1);
        for (long idx = lo; idx < hi; ++idx) {
            int ci = static_cast<int>(idx / nc), cj = static_cast<int>(idx % nc);
            const Subgroup& CI = dd.centralizers[ci];
            const Subgroup& CJ = dd.centralizers[cj];
            int gi = dd.classes[ci].rep, gj = dd.classes[cj].rep;
            // s_ab = (1/|C_a||C_b|) sum over h with h g_b h^-1 in C(g_a) of
            // tr_a(h g_b h^-1) tr_b(h^-1 g_a h); this pairing (no inverse in
            // the second trace) is the manifestly symmetric form
            std::vector<long> counts(static_cast<size_t>(CI.order()) * CJ.order(), 0);
            for (int h = 0; h < G.order; ++h) {
                int u = CI.index_of(G.conj(h, gj));
                if (u < 0) continue;
                int v = CJ.index_of(G.conj(G.inv(h), gi));
                if (v < 0) throw std::logic_error("s_matrix: pairing element escaped centralizer");
                ++counts[static_cast<size_t>(u) * CJ.order() + v];
            }
            Integer denom = Integer(CI.order()) * CJ.order();
            for (int pi = 0; pi < dd.tables[ci].rank(); ++pi)
                for (int pj = 0; pj < dd.tables[cj].rank(); ++pj) {
                    for (long k = 0; k < phi; ++k) acc[k] = 0;
                    for (int u = 0; u < CI.order(); ++u)
                        for (int v = 0; v < CJ.order(); ++v) {
                            long cnt = counts[static_cast<size_t>(u) * CJ.order() + v];
                            if (cnt == 0) continue;
                            kernel.mul(cv.val(ci, pi, u), cv.val(cj, pj, v), tmp.data(),
                                       scratch.data());
                            kernel.add_scaled(acc.data(), tmp.data(), Integer(cnt));
                        }
                    int a = dd.object_index(ci, pi), b = dd.object_index(cj, pj);
                    s.entries[static_cast<size_t>(a) * s.rank + b] = kernel.to_cyc(acc.data(), denom);
                }
        }
    });
    return s;
}

bool smatrix_symmetric(const SMatrix& s) {
    for (int a = 0; a < s.rank; ++a)
        for (int b = a + 1; b < s.rank; ++b)
            if (!(s.at(a, b) == s.at(b, a))) return false;
    return true;
}

bool smatrix_unitary(const SMatrix& s) {
    std::atomic<bool> ok{true};
    detail::parallel_for(s.rank, [&](long lo, long hi) {
        for (long a = lo; a < hi && ok.load(std::memory_order_relaxed); ++a)
            for (int b = static_cast<int>(a); b < s.rank; ++b) {
                CycNum acc;
                for (int r = 0; r < s.rank; ++r)
                    acc += s.at(static_cast<int>(a), r) * s.at(b, r).conjugate();
                if (!(acc == CycNum(a == b ? 1 : 0))) ok.store(false, std::memory_order_relaxed);
            }
    });
    return ok.load();
}

bool smatrix_duality_permutation(const SMatrix& s, const DoubleData& dd) {
    std::atomic<bool> ok{true};
    detail::parallel_for(s.rank, [&](long lo, long hi) {
        for (long a = lo; a < hi && ok.load(std::memory_order_relaxed); ++a)
            for (int b = 0; b < s.rank; ++b) {
                CycNum acc;
                for (int r = 0; r < s.rank; ++r) acc += s.at(static_cast<int>(a), r) * s.at(r, b);
                if (!(acc == CycNum(dd.duals[a] == b ? 1 : 0)))
                    ok.store(false, std::memory_order_relaxed);
            }
    });
    return ok.load();
}

// --- Verlinde ----------------------------------------------------------------

namespace {

template <class Z>
FusionTensor verlinde_impl(const DoubleData& dd, const SMatrix& s,
                           const std::vector<Integer>& weights, const Integer& wdenom) {
    detail::CycKernel<Z> kernel(s.conductor);
    const int rank = s.rank;
    const long phi = kernel.phi;

    // X_ar = S_ar * |C_a| * |C_r| (integer vectors), Y_cr = conj(X_cr) * w_r
    std::vector<long> cord(rank);
    for (int a = 0; a < rank; ++a)
        cord[a] = dd.centralizers[dd.objects[a].class_index].order();
    std::vector<Z> X(static_cast<size_t>(rank) * rank * phi, Z(0));
    std::vector<Z> Y(static_cast<size_t>(rank) * rank * phi, Z(0));
    auto xat = [&](int a, int r) { return X.data() + (static_cast<size_t>(a) * rank + r) * phi; };
    auto yat = [&](int c, int r) { return Y.data() + (static_cast<size_t>(c) * rank + r) * phi; };
    for (int a = 0; a < rank; ++a)
        for (int r = 0; r < rank; ++r) {
            CycNum x = Rational(Integer(cord[a]) * cord[r]) * s.at(a, r);
            kernel.from_cyc(x, xat(a, r));
        }
    {
        std::vector<Z> conj(phi);
        for (int c = 0; c < rank; ++c)
            for (int r = 0; r < rank; ++r) {
                kernel.conj(xat(c, r), conj.data());
                Z w;
                detail::from_mpz(weights[r], w);
                kernel.add_scaled(yat(c, r), conj.data(), w);
            }
    }

    FusionTensor t;
    t.rank = rank;
    t.method = "verlinde";
    t.coeff.assign(static_cast<size_t>(rank) * rank * rank, 0);

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < rank; ++a)
        for (int b = a; b < rank; ++b) pairs.emplace_back(a, b);

    detail::parallel_for(static_cast<long>(pairs.size()), [&](long lo, long hi) {
        std::vector<Z> prod(phi), scratch(2 * phi - 1);
        std::vector<Z> acc(static_cast<size_t>(rank) * phi);
        for (long pi = lo; pi < hi; ++pi) {
            auto [a, b] = pairs[pi];
            for (auto& z : acc) z = 0;
            for (int r = 0; r < rank; ++r) {
                kernel.mul(xat(a, r), xat(b, r), prod.data(), scratch.data());
                for (int c = 0; c < rank; ++c)
                    kernel.mul_acc(acc.data() + static_cast<size_t>(c) * phi, prod.data(),
                                   yat(c, r), scratch.data());
            }
            for (int c = 0; c < rank; ++c) {
                const Z* av = acc.data() + static_cast<size_t>(c) * phi;
                for (long k = 1; k < phi; ++k)
                    if (av[k] != 0)
                        throw std::runtime_error("verlinde: non-rational fusion coefficient");
                Integer num = detail::to_mpz(av[0]);
                Integer den = wdenom * cord[a] * cord[b] * cord[c];
                if (num % den != 0)
                    throw std::runtime_error("verlinde: non-integer fusion coefficient");
                Integer q = num / den;
                if (q < 0) throw std::runtime_error("verlinde: negative fusion coefficient");
                if (!q.fits_sint_p()) throw std::runtime_error("verlinde: coefficient overflow");
                t.at(a, b, c) = static_cast<int32_t>(q.get_si());
                t.at(b, a, c) = t.at(a, b, c);
            }
        }
    });
    return t;
}

}  // namespace

FusionTensor verlinde_fusion(const DoubleData& dd, const SMatrix& s) {
    const int rank = s.rank;
    if (rank != dd.rank()) throw std::invalid_argument("verlinde: rank mismatch");
    // 1/S_0r is rational (unit row = dims/|G|); exact division via inverse()
    std::vector<Rational> f(rank);
    for (int r = 0; r < rank; ++r) {
        const CycNum& s0r = s.at(s.unit_index, r);
        CycNum invv = s0r.inverse();
        auto q = invv.as_rational();
        if (!q) throw std::logic_error("verlinde: unit row entry has irrational inverse");
        long cr = dd.centralizers[dd.objects[r].class_index].order();
        f[r] = *q / (Rational(cr) * cr * cr);
    }
    Integer wdenom = 1;
    for (int r = 0; r < rank; ++r) {
        Integer g;
        mpz_lcm(g.get_mpz_t(), wdenom.get_mpz_t(), f[r].get_den().get_mpz_t());
        wdenom = g;
    }
    std::vector<Integer> weights(rank);
    double wmax = 1.0;
    for (int r = 0; r < rank; ++r) {
        Rational w = f[r] * Rational(wdenom);
        if (w.get_den() != 1) throw std::logic_error("verlinde: weight not integral");
        weights[r] = w.get_num();
        wmax = std::max(wmax, std::fabs(weights[r].get_d()));
    }
    // magnitude bound for the int128 fast path
    detail::CycKernel<Integer> probe(s.conductor);
    double cmax = 1.0;
    {
        std::vector<Integer> buf(probe.phi);
        for (int a = 0; a < rank; ++a)
            for (int r = 0; r < rank; ++r) {
                long ca = dd.centralizers[dd.objects[a].class_index].order();
                long cr = dd.centralizers[dd.objects[r].class_index].order();
                CycNum x = Rational(Integer(ca) * cr) * s.at(a, r);
                probe.from_cyc(x, buf.data());
                cmax = std::max(cmax, probe.max_abs(buf.data()));
            }
    }
    double phi_d = static_cast<double>(probe.phi), amp = probe.red_amp;
    double bound = static_cast<double>(rank) * phi_d * phi_d * amp * amp * amp * wmax * cmax *
                   cmax * cmax * 16.0;
    if (!std::getenv("DDOUBLE_FORCE_BIGNUM") && detail::fits_int128(bound))
        return verlinde_impl<__int128>(dd, s, weights, wdenom);
    return verlinde_impl<Integer>(dd, s, weights, wdenom);
}

}  // namespace ddouble
