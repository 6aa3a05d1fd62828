#include "ddouble/fusion.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ddouble/detail/cyckernel.hpp"
#include "ddouble/detail/parallel.hpp"

namespace ddouble {

namespace {

// --- shared combinatorial data for the character formulas --------------------

struct PairSol {
    int k = 0, l = 0;
    int q_order = 0;                      // |C(k) cap C(l)|
    std::vector<std::array<int, 3>> xs;   // positions (in C(g_K), C(g_L), C(g_J))
};

struct TripleClassData {
    std::vector<PairSol> pairs;            // ascending in k; l is determined by k
    std::vector<std::vector<int>> orbits;  // pair indices per C(g_J)-orbit
};

TripleClassData solve_triple(const DoubleData& dd, int kc, int lc, int jc) {
    const Group& G = dd.g();
    const ConjClass& K = dd.classes[kc];
    const ConjClass& L = dd.classes[lc];
    const int gj = dd.classes[jc].rep;
    TripleClassData td;
    std::vector<int> pair_of_k(G.order, -1);
    for (int k : K.members) {
        int l = G.mul(G.inv(k), gj);
        if (!L.contains(l)) continue;
        PairSol p;
        p.k = k;
        p.l = l;
        int tk_inv = G.inv(K.tau_of(k));
        int tl_inv = G.inv(L.tau_of(l));
        for (int x = 0; x < G.order; ++x) {
            if (!G.commute(x, k) || !G.commute(x, l)) continue;
            int pk = dd.centralizers[kc].index_of(G.conj(tk_inv, x));
            int pl = dd.centralizers[lc].index_of(G.conj(tl_inv, x));
            int pj = dd.centralizers[jc].index_of(x);
            if (pk < 0 || pl < 0 || pj < 0)
                throw std::logic_error("fusion: twisted element escaped its centralizer");
            p.xs.push_back({pk, pl, pj});
        }
        p.q_order = static_cast<int>(p.xs.size());
        pair_of_k[k] = static_cast<int>(td.pairs.size());
        td.pairs.push_back(std::move(p));
    }
    std::vector<bool> seen(td.pairs.size(), false);
    for (size_t p = 0; p < td.pairs.size(); ++p) {
        if (seen[p]) continue;
        std::vector<int> orbit;
        std::vector<int> stack{static_cast<int>(p)};
        seen[p] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            orbit.push_back(cur);
            for (int gamma : dd.centralizers[jc].members) {
                int k2 = G.conj(gamma, td.pairs[cur].k);
                int idx = pair_of_k[k2];
                if (idx >= 0 && !seen[idx]) {
                    seen[idx] = true;
                    stack.push_back(idx);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        td.orbits.push_back(std::move(orbit));
    }
    return td;
}

struct QueryParts {
    int kc, lc, jc;
    const ClassFunction *chi, *psi, *phi;
};

QueryParts split_query(const DoubleData& dd, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a >= dd.rank() || b >= dd.rank() || c >= dd.rank())
        throw std::invalid_argument("fusion: object index out of range");
    QueryParts q;
    q.kc = dd.objects[a].class_index;
    q.lc = dd.objects[b].class_index;
    q.jc = dd.objects[c].class_index;
    q.chi = &dd.tables[q.kc].irreducibles[dd.objects[a].irrep_index];
    q.psi = &dd.tables[q.lc].irreducibles[dd.objects[b].irrep_index];
    q.phi = &dd.tables[q.jc].irreducibles[dd.objects[c].irrep_index];
    return q;
}

long finish_integer(const CycNum& total, const char* what) {
    auto n = total.as_integer();
    if (!n || *n < 0 || !n->fits_slong_p())
        throw std::runtime_error(std::string(what) + ": non-integer or negative coefficient " +
                                 total.str());
    return n->get_si();
}

CycNum pair_sum(const QueryParts& q, const PairSol& p, const std::vector<CycNum>& phi_conj) {
    CycNum acc;
    for (const auto& [pk, pl, pj] : p.xs) acc += q.chi->values[pk] * q.psi->values[pl] * phi_conj[pj];
    return acc;
}

std::vector<CycNum> conj_vector(const ClassFunction& f) {
    std::vector<CycNum> out;
    out.reserve(f.values.size());
    for (const auto& v : f.values) out.push_back(v.conjugate());
    return out;
}

bool is_normal(const Group& G, const Subgroup& h) {
    for (int g = 0; g < G.order; ++g)
        for (int m : h.members)
            if (!h.contains(G.conj(g, m))) return false;
    return true;
}

}  // namespace

long fusion_coeff_flat(const DoubleData& dd, int a, int b, int c) {
    QueryParts q = split_query(dd, a, b, c);
    TripleClassData td = solve_triple(dd, q.kc, q.lc, q.jc);
    std::vector<CycNum> phi_conj = conj_vector(*q.phi);
    CycNum acc;
    for (const auto& p : td.pairs) acc += pair_sum(q, p, phi_conj);
    CycNum total = Rational(dd.classes[q.jc].size(), dd.g().order) * acc;
    return finish_integer(total, "fusion (flat)");
}

long fusion_coeff_orbit(const DoubleData& dd, int a, int b, int c) {
    QueryParts q = split_query(dd, a, b, c);
    TripleClassData td = solve_triple(dd, q.kc, q.lc, q.jc);
    std::vector<CycNum> phi_conj = conj_vector(*q.phi);
    CycNum acc;
    for (const auto& orbit : td.orbits) {
        const PairSol& p = td.pairs[orbit.front()];
        acc += Rational(1, p.q_order) * pair_sum(q, p, phi_conj);
    }
    return finish_integer(acc, "fusion (orbit)");
}

long fusion_coeff_direct(const DoubleData& dd, int a, int b, int c) {
    QueryParts q = split_query(dd, a, b, c);
    const Group& G = dd.g();
    const ConjClass& KA = dd.classes[q.kc];
    CycNum acc;
    for (int g : dd.classes[q.jc].members) {
        Subgroup cg = centralizer(G, g);
        for (int x : cg.members) {
            CycNum t;
            for (int g1 : KA.members) {
                if (!G.commute(x, g1)) continue;
                int g2 = G.mul(G.inv(g1), g);
                if (dd.class_of[g2] != q.lc || !G.commute(x, g2)) continue;
                t += dd.double_char_value(a, g1, x) * dd.double_char_value(b, g2, x);
            }
            if (!t.is_zero()) acc += t * dd.double_char_value(c, g, x).conjugate();
        }
    }
    return finish_integer(Rational(1, G.order) * acc, "fusion (direct)");
}

long normal_centralizer_shortcut(const DoubleData& dd, int a, int b, int c) {
    QueryParts q = split_query(dd, a, b, c);
    const Group& G = dd.g();
    if (!is_normal(G, dd.centralizers[q.kc]) || !is_normal(G, dd.centralizers[q.lc]))
        throw std::domain_error("normal-centralizer shortcut: centralizer is not normal");
    Subgroup Q = subgroup_intersection(dd.centralizers[q.kc], dd.centralizers[q.lc]);
    const ConjClass& K = dd.classes[q.kc];
    const ConjClass& L = dd.classes[q.lc];
    const int gj = dd.classes[q.jc].rep;
    CycNum acc;
    for (int k : K.members) {
        int l = G.mul(G.inv(k), gj);
        if (!L.contains(l)) continue;
        int tk_inv = G.inv(K.tau_of(k));
        int tl_inv = G.inv(L.tau_of(l));
        CycNum ip;
        for (int x : Q.members)
            ip += q.chi->at(G.conj(tk_inv, x)) * q.psi->at(G.conj(tl_inv, x)) *
                  q.phi->at(x).conjugate();
        acc += Rational(1, Q.order()) * ip;
    }
    CycNum total = Rational(static_cast<long>(Q.order()) * dd.classes[q.jc].size(), G.order) * acc;
    return finish_integer(total, "fusion (normal shortcut)");
}

OrbitSet orbit_set(const DoubleData& dd, int a, int b, int c) {
    QueryParts q = split_query(dd, a, b, c);
    TripleClassData td = solve_triple(dd, q.kc, q.lc, q.jc);
    OrbitSet os;
    for (const auto& orbit : td.orbits) {
        const PairSol& rep = td.pairs[orbit.front()];
        os.reps.emplace_back(rep.k, rep.l);
        os.stabilizer_orders.push_back(rep.q_order);
        std::vector<std::pair<int, int>> members;
        for (int p : orbit) members.emplace_back(td.pairs[p].k, td.pairs[p].l);
        os.orbits.push_back(std::move(members));
    }
    return os;
}

MackeyReport mackey_coset_check(const DoubleData& dd, int a, int b, int c) {
    QueryParts q = split_query(dd, a, b, c);
    const Group& G = dd.g();
    TripleClassData td = solve_triple(dd, q.kc, q.lc, q.jc);
    const ConjClass& K = dd.classes[q.kc];
    const ConjClass& L = dd.classes[q.lc];
    const Subgroup& H2 = dd.centralizers[q.kc];
    const Subgroup& H3 = dd.centralizers[q.lc];

    MackeyReport rep;
    rep.orbit_count = static_cast<int>(td.orbits.size());
    // the product tau_l^-1 * tau_k selects the double coset of a pair
    auto coset_id = [&](const PairSol& p) {
        int d = G.mul(G.inv(L.tau_of(p.l)), K.tau_of(p.k));
        return double_coset_of(H3, d, H2).front();
    };
    std::vector<int> rep_coset;
    for (const auto& orbit : td.orbits) {
        int id = coset_id(td.pairs[orbit.front()]);
        for (int p : orbit)
            if (coset_id(td.pairs[p]) != id) rep.constant_on_orbits = false;
        rep_coset.push_back(id);
    }
    std::vector<int> uniq = rep_coset;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    rep.distinct_cosets = static_cast<int>(uniq.size());
    rep.injective = rep.distinct_cosets == rep.orbit_count;

    std::vector<CycNum> phi_conj = conj_vector(*q.phi);
    CycNum acc;
    for (const auto& orbit : td.orbits) {
        const PairSol& p = td.pairs[orbit.front()];
        acc += Rational(1, p.q_order) * pair_sum(q, p, phi_conj);
    }
    rep.mackey_sum = finish_integer(acc, "fusion (mackey)");
    rep.orbit_value = fusion_coeff_orbit(dd, a, b, c);
    return rep;
}

// --- full-tensor engines ------------------------------------------------------

namespace {

double tables_max_coeff(const DoubleData& dd) {
    double m = 1.0;
    for (const auto& t : dd.tables)
        for (const auto& f : t.irreducibles)
            for (const auto& v : f.values) {
                CycNum w = v.to_conductor(dd.conductor);
                for (const auto& cc : w.coeffs()) m = std::max(m, std::fabs(cc.get_num().get_d()));
            }
    return m;
}

template <class Z>
struct FusionEngine {
    detail::CycKernel<Z> kernel;
    std::vector<std::vector<Z>> vals;       // per class, irrep-major member positions
    std::vector<std::vector<Z>> conj_vals;
    std::vector<long> csize;

    explicit FusionEngine(const DoubleData& dd) : kernel(dd.conductor) {
        size_t nc = dd.classes.size();
        vals.resize(nc);
        conj_vals.resize(nc);
        csize.resize(nc);
        std::vector<Z> tmp(kernel.phi);
        for (size_t c = 0; c < nc; ++c) {
            const CharTable& t = dd.tables[c];
            long m = dd.centralizers[c].order();
            csize[c] = m;
            vals[c].assign(static_cast<size_t>(t.rank()) * m * kernel.phi, Z(0));
            conj_vals[c].assign(vals[c].size(), Z(0));
            for (int i = 0; i < t.rank(); ++i)
                for (long u = 0; u < m; ++u) {
                    Z* dst = at(vals, c, i, u);
                    kernel.from_cyc(t.irreducibles[i].values[u], dst);
                    kernel.conj(dst, at(conj_vals, c, i, u));
                }
        }
    }
    Z* at(std::vector<std::vector<Z>>& store, size_t c, int irrep, long pos) {
        return store[c].data() + (static_cast<size_t>(irrep) * csize[c] + pos) * kernel.phi;
    }
    const Z* val(size_t c, int irrep, long pos) const {
        return vals[c].data() + (static_cast<size_t>(irrep) * csize[c] + pos) * kernel.phi;
    }
    const Z* cval(size_t c, int irrep, long pos) const {
        return conj_vals[c].data() + (static_cast<size_t>(irrep) * csize[c] + pos) * kernel.phi;
    }
};

int32_t checked_coeff(const Integer& num, const Integer& den, const char* what) {
    if (num % den != 0) throw std::runtime_error(std::string(what) + ": non-integer coefficient");
    Integer q = num / den;
    if (q < 0) throw std::runtime_error(std::string(what) + ": negative coefficient");
    if (!q.fits_sint_p()) throw std::runtime_error(std::string(what) + ": coefficient overflow");
    return static_cast<int32_t>(q.get_si());
}

// flat sums over all solution pairs, or stabilizer-weighted orbit sums
template <class Z>
FusionTensor tensor_character(const DoubleData& dd, bool orbit_mode) {
    const Group& G = dd.g();
    FusionEngine<Z> E(dd);
    const long phi = E.kernel.phi;
    const int nc = static_cast<int>(dd.classes.size());
    FusionTensor t;
    t.rank = dd.rank();
    t.method = orbit_mode ? "orbit" : "character";
    t.coeff.assign(static_cast<size_t>(t.rank) * t.rank * t.rank, 0);

    detail::parallel_for(static_cast<long>(nc) * nc, [&](long lo, long hi) {
        std::vector<Z> tmp(phi), scratch(2 * phi - 1), acc(phi);
        for (long idx = lo; idx < hi; ++idx) {
            int kc = static_cast<int>(idx / nc), lc = static_cast<int>(idx % nc);
            int nk = dd.tables[kc].rank(), nl = dd.tables[lc].rank();
            for (int jc = 0; jc < nc; ++jc) {
                TripleClassData td = solve_triple(dd, kc, lc, jc);
                if (td.pairs.empty()) continue;
                // weighted (posK, posL, posJ) entries shared by all irrep triples
                std::vector<std::pair<std::array<int, 3>, long>> entries;
                long denom_scale = 1;
                if (!orbit_mode) {
                    for (const auto& p : td.pairs)
                        for (const auto& x : p.xs) entries.push_back({x, 1});
                } else {
                    long lcm = 1;
                    for (const auto& orbit : td.orbits)
                        lcm = lcm_long(lcm, td.pairs[orbit.front()].q_order);
                    denom_scale = lcm;
                    for (const auto& orbit : td.orbits) {
                        const PairSol& p = td.pairs[orbit.front()];
                        long w = lcm / p.q_order;
                        for (const auto& x : p.xs) entries.push_back({x, w});
                    }
                }
                std::sort(entries.begin(), entries.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<std::pair<std::array<int, 3>, long>> merged;
                for (const auto& e : entries) {
                    if (!merged.empty() && merged.back().first == e.first)
                        merged.back().second += e.second;
                    else
                        merged.push_back(e);
                }
                long cj = E.csize[jc];
                int nj = dd.tables[jc].rank();
                std::vector<Z> sj(static_cast<size_t>(cj) * phi);
                Integer den = orbit_mode ? Integer(denom_scale) : Integer(G.order);
                Integer numscale = orbit_mode ? Integer(1) : Integer(dd.classes[jc].size());
                for (int ia = 0; ia < nk; ++ia)
                    for (int ib = 0; ib < nl; ++ib) {
                        for (auto& z : sj) z = 0;
                        for (const auto& [pos, cnt] : merged) {
                            E.kernel.mul(E.val(kc, ia, pos[0]), E.val(lc, ib, pos[1]), tmp.data(),
                                         scratch.data());
                            E.kernel.add_scaled(sj.data() + static_cast<size_t>(pos[2]) * phi,
                                                tmp.data(), Z(cnt));
                        }
                        int a = dd.object_index(kc, ia), b = dd.object_index(lc, ib);
                        for (int ic = 0; ic < nj; ++ic) {
                            for (long k = 0; k < phi; ++k) acc[k] = 0;
                            for (long u = 0; u < cj; ++u)
                                E.kernel.mul_acc(acc.data(),
                                                 sj.data() + static_cast<size_t>(u) * phi,
                                                 E.cval(jc, ic, u), scratch.data());
                            for (long k = 1; k < phi; ++k)
                                if (acc[k] != 0)
                                    throw std::runtime_error(
                                        "fusion tensor: non-rational coefficient");
                            Integer num = detail::to_mpz(acc[0]) * numscale;
                            t.at(a, b, dd.object_index(jc, ic)) =
                                checked_coeff(num, den, "fusion tensor");
                        }
                    }
            }
        }
    });
    return t;
}

template <class Z>
FusionTensor tensor_direct(const DoubleData& dd) {
    const Group& G = dd.g();
    FusionEngine<Z> E(dd);
    const long phi = E.kernel.phi;
    const int nc = static_cast<int>(dd.classes.size());

    // global commuting-pair index, grouped by class
    std::vector<int> pair_start(nc + 1, 0);
    std::vector<int> upos;                      // position of tau_g^-1 x tau_g in C(g_K)
    std::vector<int> pair_of(static_cast<size_t>(G.order) * G.order, -1);
    std::vector<std::vector<std::vector<int>>> comm(nc);  // [class][x] -> members commuting
    for (int c = 0; c < nc; ++c) comm[c].assign(G.order, {});
    int npairs = 0;
    for (int c = 0; c < nc; ++c) {
        pair_start[c] = npairs;
        for (int g : dd.classes[c].members) {
            int tau_inv = G.inv(dd.classes[c].tau_of(g));
            for (int x = 0; x < G.order; ++x) {
                if (!G.commute(g, x)) continue;
                int u = dd.centralizers[c].index_of(G.conj(tau_inv, x));
                if (u < 0) throw std::logic_error("direct: twist escaped centralizer");
                pair_of[static_cast<size_t>(g) * G.order + x] = npairs;
                upos.push_back(u);
                comm[c][x].push_back(g);
                ++npairs;
            }
        }
    }
    pair_start[nc] = npairs;

    FusionTensor t;
    t.rank = dd.rank();
    t.method = "direct";
    t.coeff.assign(static_cast<size_t>(t.rank) * t.rank * t.rank, 0);

    std::vector<std::pair<int, int>> obpairs;
    for (int a = 0; a < t.rank; ++a)
        for (int b = 0; b < t.rank; ++b) obpairs.emplace_back(a, b);

    detail::parallel_for(static_cast<long>(obpairs.size()), [&](long lo, long hi) {
        std::vector<Z> T(static_cast<size_t>(npairs) * phi);
        std::vector<Z> scratch(2 * phi - 1), acc(phi);
        for (long pi = lo; pi < hi; ++pi) {
            auto [a, b] = obpairs[pi];
            int ka = dd.objects[a].class_index, ia = dd.objects[a].irrep_index;
            int kb = dd.objects[b].class_index, ib = dd.objects[b].irrep_index;
            for (auto& z : T) z = 0;
            for (int x = 0; x < G.order; ++x) {
                for (int g1 : comm[ka][x]) {
                    int p1 = pair_of[static_cast<size_t>(g1) * G.order + x];
                    const Z* v1 = E.val(ka, ia, upos[p1]);
                    for (int g2 : comm[kb][x]) {
                        int g = G.mul(g1, g2);
                        int pid = pair_of[static_cast<size_t>(g) * G.order + x];
                        int p2 = pair_of[static_cast<size_t>(g2) * G.order + x];
                        E.kernel.mul_acc(T.data() + static_cast<size_t>(pid) * phi, v1,
                                         E.val(kb, ib, upos[p2]), scratch.data());
                    }
                }
            }
            for (int jc = 0; jc < nc; ++jc) {
                int nj = dd.tables[jc].rank();
                for (int ic = 0; ic < nj; ++ic) {
                    for (long k = 0; k < phi; ++k) acc[k] = 0;
                    for (int pid = pair_start[jc]; pid < pair_start[jc + 1]; ++pid)
                        E.kernel.mul_acc(acc.data(), T.data() + static_cast<size_t>(pid) * phi,
                                         E.cval(jc, ic, upos[pid]), scratch.data());
                    for (long k = 1; k < phi; ++k)
                        if (acc[k] != 0)
                            throw std::runtime_error("fusion (direct): non-rational coefficient");
                    t.at(a, b, dd.object_index(jc, ic)) =
                        checked_coeff(detail::to_mpz(acc[0]), Integer(G.order), "fusion (direct)");
                }
            }
        }
    });
    return t;
}

bool character_engine_fits_int128(const DoubleData& dd) {
    if (std::getenv("DDOUBLE_FORCE_BIGNUM")) return false;
    detail::CycKernel<Integer> probe(dd.conductor);
    double c = tables_max_coeff(dd);
    double phi = static_cast<double>(probe.phi), amp = probe.red_amp;
    double n = static_cast<double>(dd.g().order);
    // loose majorant for both character-formula engines and the direct engine
    double bound = n * n * n * n * phi * phi * amp * amp * amp * c * c * c * 64.0;
    return detail::fits_int128(bound);
}

}  // namespace

FusionMethod fusion_method_from_string(const std::string& s) {
    if (s == "verlinde") return FusionMethod::Verlinde;
    if (s == "character" || s == "flat") return FusionMethod::Character;
    if (s == "orbit") return FusionMethod::Orbit;
    if (s == "direct") return FusionMethod::Direct;
    throw std::invalid_argument("unknown fusion method '" + s + "'");
}

std::string to_string(FusionMethod m) {
    switch (m) {
        case FusionMethod::Verlinde: return "verlinde";
        case FusionMethod::Character: return "character";
        case FusionMethod::Orbit: return "orbit";
        case FusionMethod::Direct: return "direct";
    }
    return "?";
}

FusionTensor fusion_tensor(const DoubleData& dd, FusionMethod method, int rank_budget) {
    if (dd.rank() > rank_budget)
        throw std::invalid_argument("fusion tensor: rank " + std::to_string(dd.rank()) +
                                    " exceeds budget " + std::to_string(rank_budget));
    switch (method) {
        case FusionMethod::Verlinde: {
            SMatrix s = s_matrix(dd);
            return verlinde_fusion(dd, s);
        }
        case FusionMethod::Character:
            return character_engine_fits_int128(dd) ? tensor_character<__int128>(dd, false)
                                                    : tensor_character<Integer>(dd, false);
        case FusionMethod::Orbit:
            return character_engine_fits_int128(dd) ? tensor_character<__int128>(dd, true)
                                                    : tensor_character<Integer>(dd, true);
        case FusionMethod::Direct:
            return character_engine_fits_int128(dd) ? tensor_direct<__int128>(dd)
                                                    : tensor_direct<Integer>(dd);
    }
    throw std::invalid_argument("unknown fusion method");
}

MultiplicityReport multiplicity_report(const FusionTensor& t) {
    MultiplicityReport r;
    for (int a = 0; a < t.rank; ++a)
        for (int b = 0; b < t.rank; ++b)
            for (int c = 0; c < t.rank; ++c)
                if (t.at(a, b, c) > r.max_coeff) {
                    r.max_coeff = t.at(a, b, c);
                    if (r.max_coeff > 1) {
                        r.witness_a = a;
                        r.witness_b = b;
                        r.witness_c = c;
                    }
                }
    if (r.max_coeff <= 1) r.witness_a = r.witness_b = r.witness_c = -1;
    return r;
}

bool dimension_conservation(const DoubleData& dd, const FusionTensor& t) {
    for (int a = 0; a < t.rank; ++a)
        for (int b = 0; b < t.rank; ++b) {
            long lhs = 0;
            for (int c = 0; c < t.rank; ++c) lhs += static_cast<long>(t.at(a, b, c)) * dd.dims[c];
            if (lhs != static_cast<long>(dd.dims[a]) * dd.dims[b]) return false;
        }
    return true;
}

bool double_characters_orthonormal(const DoubleData& dd) {
    const Group& G = dd.g();
    for (size_t c = 0; c < dd.classes.size(); ++c) {
        int n = dd.tables[c].rank();
        // objects in different classes have disjoint support
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int a = dd.object_index(static_cast<int>(c), i);
                int b = dd.object_index(static_cast<int>(c), j);
                CycNum acc;
                for (int g : dd.classes[c].members) {
                    Subgroup cg = centralizer(G, g);
                    for (int x : cg.members)
                        acc += dd.double_char_value(a, g, x) *
                               dd.double_char_value(b, g, x).conjugate();
                }
                if (!(Rational(1, G.order) * acc == CycNum(i == j ? 1 : 0))) return false;
            }
    }
    return true;
}

}  // namespace ddouble
