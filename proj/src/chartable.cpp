#include "ddouble/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ddouble {

const CycNum& ClassFunction::at(int parent_elem) const {
    int i = domain.index_of(parent_elem);
    if (i < 0) throw std::invalid_argument("class function: element outside domain");
    return values[i];
}

namespace {

// --- F_p helpers -------------------------------------------------------------

long mod_mul(long a, long b, long p) { return (a * b) % p; }

long mod_pow(long a, long e, long p) {
    long r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long smallest_primitive_root(long p) {
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

using FpVec = std::vector<long>;
using FpMat = std::vector<FpVec>;  // rows

// Row-reduce in place to reduced echelon form; returns pivot columns.
std::vector<int> rref(FpMat& m, long p) {
    std::vector<int> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        long iv = mod_inv(m[r][c], p);
        for (size_t j = c; j < cols; ++j) m[r][j] = mod_mul(m[r][j], iv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - mod_mul(f, m[r][j], p)) % p + p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Kernel basis of a square matrix, rows, canonical (RREF-derived).
FpMat kernel_basis(FpMat m, long p) {
    size_t n = m.size();
    std::vector<int> pivots = rref(m, p);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    FpMat basis;
    for (size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        FpVec v(n, 0);
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - m[r][freec]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct DixonState {
    const Group* g;
    std::vector<ConjClass> classes;
    std::vector<int> class_of;
    std::vector<int> inv_class;  // class of rep^-1
    int k = 0;
    long p = 0;
    long e = 0;
};

// (M_i)[j][l] = a_{ijl} = #{(u,v) in C_i x C_j : uv = rep_l}
FpMat class_matrix(const DixonState& st, int i) {
    FpMat m(st.k, FpVec(st.k, 0));
    for (int j = 0; j < st.k; ++j) {
        std::vector<long> cnt(st.k, 0);
        for (int u : st.classes[i].members)
            for (int v : st.classes[j].members) ++cnt[st.class_of[st.g->mul(u, v)]];
        for (int l = 0; l < st.k; ++l) {
            long size_l = st.classes[l].size();
            if (cnt[l] % size_l != 0) throw std::logic_error("class constants not integral");
            m[j][l] = (cnt[l] / size_l) % st.p;
        }
    }
    return m;
}

// Split a subspace (rows, RREF) into eigenspaces of the action of `mat`.
std::vector<FpMat> split_space(const FpMat& basis, const FpMat& mat, long p) {
    size_t d = basis.size(), k = mat.size();
    // eigenvectors are columns, bases are rows: act by M^T
    FpMat acted(d, FpVec(k, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t c = 0; c < k; ++c) {
            long s = 0;
            for (size_t j = 0; j < k; ++j) s = (s + basis[i][j] * mat[c][j]) % p;
            acted[i][c] = s;
        }
    // coordinates of acted rows in the basis (basis is RREF: read off pivots);
    // R[i][j] = coefficient of basis[i] in the image of basis[j], so that
    // coordinate columns transform by R
    std::vector<int> pivots;
    for (size_t i = 0; i < d; ++i) {
        size_t c = 0;
        while (c < k && basis[i][c] == 0) ++c;
        pivots.push_back(static_cast<int>(c));
    }
    FpMat action(d, FpVec(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) action[i][j] = acted[j][pivots[i]];
    // eigen-split the small action matrix
    std::vector<FpMat> out;
    size_t found = 0;
    for (long lam = 0; lam < p && found < d; ++lam) {
        FpMat shifted = action;
        for (size_t i = 0; i < d; ++i) shifted[i][i] = ((shifted[i][i] - lam) % p + p) % p;
        FpMat ker = kernel_basis(std::move(shifted), p);
        if (ker.empty()) continue;
        FpMat sub;
        for (const auto& coeffs : ker) {
            FpVec v(k, 0);
            for (size_t j = 0; j < d; ++j) {
                if (coeffs[j] == 0) continue;
                for (size_t c = 0; c < k; ++c) v[c] = (v[c] + coeffs[j] * basis[j][c]) % p;
            }
            sub.push_back(std::move(v));
        }
        rref(sub, p);
        found += sub.size();
        out.push_back(std::move(sub));
    }
    if (found != d) throw std::logic_error("dixon: eigenspace split lost dimensions");
    return out;
}

struct ModTable {
    std::vector<int> degrees;
    std::vector<std::vector<long>> values;  // [irrep][class] mod p
};

ModTable dixon_mod_table(const DixonState& st) {
    const long p = st.p;
    const int k = st.k;
    std::vector<FpMat> matrices;
    for (int i = 0; i < k; ++i) matrices.push_back(class_matrix(st, i));

    // start from the full space, split sequentially by each class matrix
    FpMat full(k, FpVec(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    std::vector<FpMat> spaces{full};
    auto pass = [&](const FpMat& m) {
        std::vector<FpMat> next;
        for (auto& sp : spaces) {
            if (sp.size() <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            for (auto& piece : split_space(sp, m, p)) next.push_back(std::move(piece));
        }
        spaces = std::move(next);
    };
    auto all_split = [&]() {
        return std::all_of(spaces.begin(), spaces.end(),
                           [](const FpMat& s) { return s.size() == 1; });
    };
    for (int i = 1; i < k && !all_split(); ++i) pass(matrices[i]);
    // tie-break with deterministic combinations sum_i c_i M_i, c_i = i^t
    for (long t = 1; t < p && !all_split(); ++t) {
        FpMat combo(k, FpVec(k, 0));
        for (int i = 1; i < k; ++i) {
            long c = mod_pow(i, t, p);
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s) combo[r][s] = (combo[r][s] + c * matrices[i][r][s]) % p;
        }
        pass(combo);
    }
    if (!all_split()) throw std::logic_error("dixon: failed to split eigenspaces");

    ModTable mt;
    long n = st.g->order;
    for (const auto& sp : spaces) {
        FpVec w = sp[0];
        if (w[0] == 0) throw std::logic_error("dixon: eigenvector vanishes at identity class");
        long scale = mod_inv(w[0], p);
        for (auto& v : w) v = mod_mul(v, scale, p);
        // d^2 = n / sum_l w_l * w_{l*} / |C_{l*}|
        long acc = 0;
        for (int l = 0; l < k; ++l) {
            long term = mod_mul(w[l], w[st.inv_class[l]], p);
            term = mod_mul(term, mod_inv(st.classes[st.inv_class[l]].size() % p, p), p);
            acc = (acc + term) % p;
        }
        long d2 = mod_mul(n % p, mod_inv(acc, p), p);
        int deg = 0;
        for (int d = 1; static_cast<long>(d) * d <= n; ++d)
            if (mod_mul(d, d, p) == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw std::logic_error("dixon: degree recovery failed");
        std::vector<long> row(k);
        for (int l = 0; l < k; ++l)
            row[l] = mod_mul(mod_mul(deg, w[l], p), mod_inv(st.classes[l].size() % p, p), p);
        mt.degrees.push_back(deg);
        mt.values.push_back(std::move(row));
    }
    return mt;
}

}  // namespace

std::vector<long> dixon_primes(const Subgroup& h, int count) {
    Group abstract = subgroup_as_group(h);
    long e = exponent(abstract);
    double bound = 2.0 * std::sqrt(static_cast<double>(abstract.order));
    std::vector<long> out;
    for (long p = 1 + e; static_cast<int>(out.size()) < count; p += e)
        if (static_cast<double>(p) > bound && is_prime(p)) out.push_back(p);
    return out;
}

CharTable character_table(const Subgroup& h, const DixonOptions& opts) {
    const Group abstract = subgroup_as_group(h);
    DixonState st;
    st.g = &abstract;
    st.classes = conjugacy_classes(abstract);
    st.k = static_cast<int>(st.classes.size());
    st.class_of.assign(abstract.order, -1);
    for (int c = 0; c < st.k; ++c)
        for (int m : st.classes[c].members) st.class_of[m] = c;
    st.inv_class.resize(st.k);
    for (int c = 0; c < st.k; ++c) st.inv_class[c] = st.class_of[abstract.inv(st.classes[c].rep)];
    st.e = exponent(abstract);
    if (opts.prime_override > 0) {
        long p = opts.prime_override;
        if (!is_prime(p) || (p - 1) % st.e != 0 ||
            static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(abstract.order)))
            throw std::invalid_argument("dixon: prime override not admissible");
        st.p = p;
    } else {
        st.p = dixon_primes(h, 1).front();
    }

    ModTable mt = dixon_mod_table(st);

    // lift: count root-of-unity multiplicities through the fixed primitive
    // e-th root w mod p, coherently across all element orders
    const long p = st.p;
    long w = mod_pow(smallest_primitive_root(p), (p - 1) / st.e, p);
    std::vector<std::vector<int>> power_class(st.k);  // class of rep^j
    for (int c = 0; c < st.k; ++c) {
        int rep = st.classes[c].rep;
        int m = abstract.elem_order(rep);
        power_class[c].resize(m);
        int cur = 0;  // rep^0
        for (int j = 0; j < m; ++j) {
            power_class[c][j] = st.class_of[cur];
            cur = abstract.mul(cur, rep);
        }
    }
    int rank = st.k;
    std::vector<std::vector<CycNum>> lifted(rank, std::vector<CycNum>(st.k));
    for (int t = 0; t < rank; ++t) {
        for (int c = 0; c < st.k; ++c) {
            int m = static_cast<int>(power_class[c].size());
            long z = mod_pow(w, st.e / m, p);
            long zinv = mod_inv(z, p);
            CycNum val;
            long total = 0;
            for (int s = 0; s < m; ++s) {
                long acc = 0;
                for (int j = 0; j < m; ++j)
                    acc = (acc + mod_mul(mt.values[t][power_class[c][j]], mod_pow(zinv, static_cast<long>(s) * j, p), p)) % p;
                long mu = mod_mul(acc, mod_inv(m % p, p), p);
                if (mu > mt.degrees[t]) throw std::logic_error("dixon: bad eigenvalue multiplicity");
                total += mu;
                if (mu != 0) val += Rational(mu) * CycNum::root(m, s);
            }
            if (total != mt.degrees[t]) throw std::logic_error("dixon: multiplicities do not sum to degree");
            lifted[t][c] = val;
        }
    }

    // canonical sort: degree, then lexicographic value tuple in class order
    std::vector<int> order(rank);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (mt.degrees[a] != mt.degrees[b]) return mt.degrees[a] < mt.degrees[b];
        for (int c = 0; c < st.k; ++c) {
            int cmp = cyc_compare_common(lifted[a][c], lifted[b][c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });

    CharTable table;
    table.domain = h;
    table.prime = p;
    // classes with parent labels (index map is monotone, order is preserved)
    for (const auto& cc : st.classes) {
        ConjClass mapped;
        mapped.rep = h.members[cc.rep];
        for (size_t i = 0; i < cc.members.size(); ++i) {
            mapped.members.push_back(h.members[cc.members[i]]);
            mapped.transversal.push_back(h.members[cc.transversal[i]]);
        }
        table.classes.push_back(std::move(mapped));
    }
    for (int oi : order) {
        ClassFunction f;
        f.domain = h;
        f.values.resize(h.order());
        for (int i = 0; i < h.order(); ++i) f.values[i] = lifted[oi][st.class_of[i]];
        table.irreducibles.push_back(std::move(f));
        table.degrees.push_back(mt.degrees[oi]);
    }
    return table;
}

CycNum inner_product(const ClassFunction& f, const ClassFunction& g, const Subgroup& h) {
    CycNum acc;
    for (int x : h.members) acc += f.at(x) * g.at(x).conjugate();
    return Rational(1, h.order()) * acc;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.domain.parent != g.domain.parent || f.domain.members != g.domain.members)
        throw std::invalid_argument("pointwise product: domain mismatch");
    ClassFunction out;
    out.domain = f.domain;
    out.values.resize(f.values.size());
    for (size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i] * g.values[i];
    return out;
}

ClassFunction restrict_to(const ClassFunction& f, const Subgroup& s) {
    if (s.parent != f.domain.parent) throw std::invalid_argument("restrict: parent mismatch");
    ClassFunction out;
    out.domain = s;
    out.values.reserve(s.members.size());
    for (int x : s.members) {
        if (f.domain.index_of(x) < 0) throw std::invalid_argument("restrict: not a subgroup of the domain");
        out.values.push_back(f.at(x));
    }
    return out;
}

ClassFunction conjugate_twist(const ClassFunction& f, int r, int k, int g_from) {
    const Group& G = *f.domain.parent;
    if (G.mul(G.mul(G.inv(r), g_from), r) != k)
        throw std::invalid_argument("conjugate_twist: r does not conjugate g_K to k");
    Subgroup ck = centralizer(G, k);
    ClassFunction out;
    out.domain = ck;
    out.values.reserve(ck.members.size());
    for (int x : ck.members) out.values.push_back(f.at(G.conj(r, x)));
    return out;
}

ClassFunction conjugate_values(const ClassFunction& f) {
    ClassFunction out;
    out.domain = f.domain;
    out.values.reserve(f.values.size());
    for (const auto& v : f.values) out.values.push_back(v.conjugate());
    return out;
}

std::vector<long> decompose(const ClassFunction& f, const CharTable& table) {
    std::vector<long> mult;
    for (const auto& chi : table.irreducibles) {
        CycNum ip = inner_product(f, chi, table.domain);
        auto m = ip.as_integer();
        if (!m || *m < 0) throw std::domain_error("decompose: non-integer or negative multiplicity");
        mult.push_back(m->get_si());
    }
    return mult;
}

}  // namespace ddouble
