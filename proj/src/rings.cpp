#include "ddouble/rings.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>

#include "ddouble/detail/parallel.hpp"

namespace ddouble {

FusionRing make_fusion_ring(const DoubleData& dd, FusionTensor t) {
    FusionRing r;
    r.rank = t.rank;
    r.unit = dd.unit_index;
    r.dual = dd.duals;
    r.dims.assign(dd.dims.begin(), dd.dims.end());
    for (const auto& ob : dd.objects) r.labels.push_back(ob.label);
    r.tensor = std::move(t);
    return r;
}

FusionRing group_ring(const Group& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (!g.commute(a, b)) throw std::invalid_argument("group ring: group is not abelian");
    FusionRing r;
    r.rank = g.order;
    r.unit = 0;
    r.labels = g.names;
    r.dims.assign(g.order, 1);
    r.dual.resize(g.order);
    for (int a = 0; a < g.order; ++a) r.dual[a] = g.inv(a);
    r.tensor.rank = g.order;
    r.tensor.method = "group-ring";
    r.tensor.coeff.assign(static_cast<size_t>(g.order) * g.order * g.order, 0);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) r.tensor.at(a, b, g.mul(a, b)) = 1;
    return r;
}

FusionRing ring_from_tensor(FusionTensor t, std::vector<std::string> labels,
                            std::vector<long> dims) {
    FusionRing r;
    r.rank = t.rank;
    r.labels = std::move(labels);
    r.dims = std::move(dims);
    if (static_cast<int>(r.labels.size()) != r.rank) r.labels.resize(r.rank);
    if (static_cast<int>(r.dims.size()) != r.rank)
        throw std::invalid_argument("ring: dims size mismatch");
    // unit: the unique u with N_ub^c = N_bu^c = delta_bc
    int unit = -1;
    for (int u = 0; u < r.rank && unit < 0; ++u) {
        bool ok = true;
        for (int b = 0; b < r.rank && ok; ++b)
            for (int c = 0; c < r.rank && ok; ++c) {
                int32_t want = b == c ? 1 : 0;
                ok = t.at(u, b, c) == want && t.at(b, u, c) == want;
            }
        if (ok) unit = u;
    }
    if (unit < 0) throw std::invalid_argument("ring: tensor has no unit object");
    r.unit = unit;
    r.dual.assign(r.rank, -1);
    for (int b = 0; b < r.rank; ++b) {
        for (int a = 0; a < r.rank; ++a)
            if (t.at(a, b, unit) == 1) {
                if (r.dual[b] >= 0) throw std::invalid_argument("ring: dual not unique");
                r.dual[b] = a;
            }
        if (r.dual[b] < 0) throw std::invalid_argument("ring: object has no dual");
    }
    r.tensor = std::move(t);
    return r;
}

RingAxiomReport verify_ring_axioms(const FusionRing& r) {
    RingAxiomReport rep;
    const FusionTensor& t = r.tensor;
    const int n = r.rank;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (rep.failures.size() < 16) rep.failures.push_back(msg);
    };
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            int32_t want = b == c ? 1 : 0;
            if (t.at(r.unit, b, c) != want || t.at(b, r.unit, c) != want) {
                fail(rep.unit_ok, "unit law fails at (" + std::to_string(b) + "," + std::to_string(c) + ")");
                break;
            }
        }
    for (int a = 0; a < n && rep.commutative; ++a)
        for (int b = a + 1; b < n && rep.commutative; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(a, b, c) != t.at(b, a, c)) {
                    fail(rep.commutative, "commutativity fails at (" + std::to_string(a) + "," +
                                              std::to_string(b) + ")");
                    break;
                }
    // associativity as fusion-matrix identities: N_a N_b = sum_c N_ab^c N_c
    {
        std::atomic<bool> ok{true};
        detail::parallel_for(n, [&](long lo, long hi) {
            for (long a = lo; a < hi; ++a)
                for (int b = 0; b < n; ++b) {
                    for (int x = 0; x < n && ok.load(std::memory_order_relaxed); ++x)
                        for (int d = 0; d < n; ++d) {
                            long lhs = 0, rhs = 0;
                            for (int m = 0; m < n; ++m) {
                                lhs += static_cast<long>(t.at(static_cast<int>(a), x, m)) * t.at(b, m, d);
                                rhs += static_cast<long>(t.at(static_cast<int>(a), b, m)) * t.at(m, x, d);
                            }
                            if (lhs != rhs) ok.store(false, std::memory_order_relaxed);
                        }
                    if (!ok.load(std::memory_order_relaxed)) return;
                }
        });
        if (!ok.load()) fail(rep.associative, "associativity fails");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int32_t want = r.dual[b] == a ? 1 : 0;
            if (t.at(a, b, r.unit) != want) {
                fail(rep.dual_unit_ok, "N_ab^unit != delta_{a,b*} at (" + std::to_string(a) + "," +
                                           std::to_string(b) + ")");
                break;
            }
        }
    for (int a = 0; a < n && rep.dual_compat; ++a)
        for (int b = 0; b < n && rep.dual_compat; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(a, b, c) != t.at(r.dual[a], r.dual[b], r.dual[c])) {
                    fail(rep.dual_compat, "dual compatibility fails at (" + std::to_string(a) +
                                              "," + std::to_string(b) + "," + std::to_string(c) + ")");
                    break;
                }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long s = 0;
            for (int c = 0; c < n; ++c) s += static_cast<long>(t.at(a, b, c)) * r.dims[c];
            if (s != r.dims[a] * r.dims[b]) {
                fail(rep.dims_ok, "dimension multiplicativity fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
                break;
            }
        }
    return rep;
}

namespace {

// exact characteristic polynomial by Faddeev-LeVerrier (divisions are exact)
std::vector<Integer> char_poly(const std::vector<Integer>& m, int n) {
    std::vector<Integer> M(static_cast<size_t>(n) * n, 0), next(static_cast<size_t>(n) * n);
    std::vector<Integer> coeffs(n + 1);
    coeffs[n] = 1;  // x^n + c1 x^{n-1} + ... + cn
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;
    Integer c = 0;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer s = 0;
                for (int l = 0; l < n; ++l)
                    s += m[static_cast<size_t>(i) * n + l] * M[static_cast<size_t>(l) * n + j];
                next[static_cast<size_t>(i) * n + j] = s;
            }
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += next[static_cast<size_t>(i) * n + i];
        c = -tr / k;
        coeffs[n - k] = c;
        M = next;
        for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += c;
    }
    return coeffs;
}

// iso-invariant per-object key: dim, self-duality, sorted row sums of the
// fusion matrix, and its characteristic polynomial
std::vector<Integer> fingerprint(const FusionRing& r, int a) {
    const int n = r.rank;
    std::vector<Integer> key;
    key.push_back(r.dims[a]);
    key.push_back(r.dual[a] == a ? 1 : 0);
    key.push_back(r.dims[r.dual[a]]);
    std::vector<long> rowsums(n, 0);
    std::vector<Integer> mat(static_cast<size_t>(n) * n);
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            mat[static_cast<size_t>(b) * n + c] = r.tensor.at(a, b, c);
            rowsums[b] += r.tensor.at(a, b, c);
        }
    std::sort(rowsums.begin(), rowsums.end());
    for (long s : rowsums) key.push_back(s);
    key.push_back(-1);
    for (auto& cp : char_poly(mat, n)) key.push_back(cp);
    return key;
}

struct IsoSearch {
    const FusionRing& r1;
    const FusionRing& r2;
    std::vector<std::vector<int>> candidates;  // per object of r1
    std::vector<int> phi, used;               // current partial map

    bool consistent(int a) {
        // check every triple among assigned objects that involves a
        const int n = r1.rank;
        for (int u = 0; u < n; ++u) {
            if (phi[u] < 0) continue;
            for (int v = 0; v < n; ++v) {
                if (phi[v] < 0) continue;
                bool involves = u == a || v == a;
                for (int c = 0; c < n; ++c) {
                    if (phi[c] < 0 || (!involves && c != a)) continue;
                    if (r1.tensor.at(u, v, c) != r2.tensor.at(phi[u], phi[v], phi[c])) return false;
                }
            }
        }
        return true;
    }

    // assign with dual- and single-product propagation; records the trail
    bool assign(int a, int b2, std::vector<int>& trail) {
        if (phi[a] >= 0) return phi[a] == b2;
        if (used[b2]) return false;
        phi[a] = b2;
        used[b2] = 1;
        trail.push_back(a);
        if (!consistent(a)) return false;
        if (!assign(r1.dual[a], r2.dual[b2], trail)) return false;
        // forced images: single-constituent products u*a
        const int n = r1.rank;
        for (int u = 0; u < n; ++u) {
            if (phi[u] < 0) continue;
            int c1 = -1;
            bool single = true;
            for (int c = 0; c < n; ++c) {
                int32_t v = r1.tensor.at(u, a, c);
                if (v == 0) continue;
                if (v > 1 || c1 >= 0) {
                    single = false;
                    break;
                }
                c1 = c;
            }
            if (!single || c1 < 0) continue;
            int c2 = -1;
            bool single2 = true;
            for (int c = 0; c < n; ++c) {
                int32_t v = r2.tensor.at(phi[u], phi[a], c);
                if (v == 0) continue;
                if (v > 1 || c2 >= 0) {
                    single2 = false;
                    break;
                }
                c2 = c;
            }
            if (!single2 || c2 < 0) return false;
            if (!assign(c1, c2, trail)) return false;
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            int a = trail.back();
            trail.pop_back();
            used[phi[a]] = 0;
            phi[a] = -1;
        }
    }

    bool search(std::vector<int>& trail) {
        // most-constrained unassigned object
        int best = -1;
        size_t best_count = SIZE_MAX;
        for (int a = 0; a < r1.rank; ++a) {
            if (phi[a] >= 0) continue;
            size_t cnt = 0;
            for (int b2 : candidates[a])
                if (!used[b2]) ++cnt;
            if (cnt == 0) return false;
            if (cnt < best_count) {
                best_count = cnt;
                best = a;
            }
        }
        if (best < 0) return true;  // complete
        for (int b2 : candidates[best]) {
            if (used[b2]) continue;
            size_t mark = trail.size();
            if (assign(best, b2, trail) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> rings_isomorphic(const FusionRing& r1, const FusionRing& r2,
                                                 const IsoOptions& opts) {
    if (r1.rank > opts.rank_budget || r2.rank > opts.rank_budget)
        throw std::invalid_argument("rings_isomorphic: rank exceeds search budget");
    if (r1.rank != r2.rank) return std::nullopt;
    const int n = r1.rank;

    IsoSearch s{r1, r2, {}, std::vector<int>(n, -1), std::vector<int>(n, 0)};
    s.candidates.resize(n);
    if (opts.use_fingerprints) {
        std::vector<std::vector<Integer>> fp1(n), fp2(n);
        detail::parallel_for(n, [&](long lo, long hi) {
            for (long a = lo; a < hi; ++a) {
                fp1[a] = fingerprint(r1, static_cast<int>(a));
                fp2[a] = fingerprint(r2, static_cast<int>(a));
            }
        });
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (fp1[a] == fp2[b]) s.candidates[a].push_back(b);
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r1.dims[a] == r2.dims[b]) s.candidates[a].push_back(b);
    }

    std::vector<int> trail;
    if (!s.assign(r1.unit, r2.unit, trail)) return std::nullopt;
    if (!s.search(trail)) return std::nullopt;

    // full post-hoc verification before reporting
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r1.tensor.at(a, b, c) != r2.tensor.at(s.phi[a], s.phi[b], s.phi[c]))
                    throw std::logic_error("rings_isomorphic: candidate bijection failed verification");
    return s.phi;
}

Type3PatternReport verify_type3_pattern(const DoubleData& dd, const FusionTensor& t) {
    const Group& G = dd.g();
    if (G.family != GroupFamily::Dihedral || G.family_param % 2 == 0)
        throw std::domain_error("type3 pattern: requires a dihedral double with odd n");
    int n = G.family_param;
    Type3PatternReport rep;
    rep.n = n;
    rep.unit_index = dd.unit_index;
    // Z: the other one-dimensional object over the identity class
    for (int i = 0; i < dd.tables[0].rank(); ++i) {
        int ob = dd.object_index(0, i);
        if (ob != dd.unit_index && dd.dims[ob] == 1) {
            if (rep.z_index >= 0) {
                rep.failures.push_back("more than one candidate for Z");
                return rep;
            }
            rep.z_index = ob;
        }
    }
    // X, X': the two objects over the reflection class (the class of y)
    int refl = dd.class_of[n];  // y sits at index n in the family numbering
    if (dd.tables[refl].rank() != 2) {
        rep.failures.push_back("reflection class does not carry exactly two objects");
        return rep;
    }
    rep.x_index = dd.object_index(refl, 0);
    rep.xprime_index = dd.object_index(refl, 1);

    std::vector<int> ys;
    for (int ob = 0; ob < dd.rank(); ++ob)
        if (ob != rep.unit_index && ob != rep.z_index && ob != rep.x_index &&
            ob != rep.xprime_index)
            ys.push_back(ob);
    rep.y_count = static_cast<int>(ys.size());

    int X = rep.x_index, Xp = rep.xprime_index, I = rep.unit_index, Z = rep.z_index;
    auto expect = [&](int a, int b, int c, int32_t want, const char* rule) {
        if (t.at(a, b, c) != want) {
            std::ostringstream os;
            os << rule << ": N(" << a << "," << b << ")^" << c << " = " << t.at(a, b, c)
               << ", expected " << want;
            rep.failures.push_back(os.str());
        }
    };
    // X (x) X = I + sum Y_i
    expect(X, X, I, 1, "XX");
    expect(X, X, Z, 0, "XX");
    expect(X, X, X, 0, "XX");
    expect(X, X, Xp, 0, "XX");
    for (int y : ys) expect(X, X, y, 1, "XX");
    // X (x) X' = Z + sum Y_i
    expect(X, Xp, I, 0, "XX'");
    expect(X, Xp, Z, 1, "XX'");
    expect(X, Xp, X, 0, "XX'");
    expect(X, Xp, Xp, 0, "XX'");
    for (int y : ys) expect(X, Xp, y, 1, "XX'");
    // X (x) Y_i = X + X'
    for (int y : ys) {
        expect(X, y, X, 1, "XY");
        expect(X, y, Xp, 1, "XY");
        expect(X, y, I, 0, "XY");
        expect(X, y, Z, 0, "XY");
        for (int y2 : ys) expect(X, y, y2, 0, "XY");
    }
    // X (x) Z = X'
    expect(X, Z, Xp, 1, "XZ");
    expect(X, Z, X, 0, "XZ");
    expect(X, Z, I, 0, "XZ");
    expect(X, Z, Z, 0, "XZ");
    for (int y : ys) expect(X, Z, y, 0, "XZ");

    rep.ok = rep.failures.empty() && rep.z_index >= 0;
    return rep;
}

}  // namespace ddouble
