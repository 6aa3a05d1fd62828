#include "ddouble/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ddouble/rational.hpp"
#include "json.hpp"

namespace ddouble {

int Group::elem_order(int g) const {
    int k = 1, cur = g;
    while (cur != 0) {
        cur = mul(cur, g);
        ++k;
    }
    return k;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

int Subgroup::index_of(int g) const {
    auto it = std::lower_bound(members.begin(), members.end(), g);
    if (it == members.end() || *it != g) return -1;
    return static_cast<int>(it - members.begin());
}

int ConjClass::tau_of(int s) const {
    auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it == members.end() || *it != s) throw std::invalid_argument("element not in class");
    return transversal[it - members.begin()];
}

bool ConjClass::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

namespace {

// Coset-extension closure from an ordered generator list. The first
// generator's cyclic group comes first, then each later generator extends by
// left cosets of the previously closed subgroup. Identity is element 0 and
// the ordering is fully determined by the generator order.
template <class Elem, class Mul>
std::vector<Elem> coset_closure(const Elem& id, const std::vector<Elem>& gens, Mul mul,
                                int size_cap) {
    std::vector<Elem> elems{id};
    std::map<Elem, int> index{{id, 0}};
    auto push = [&](const Elem& e) {
        if (static_cast<int>(elems.size()) >= size_cap)
            throw std::invalid_argument("group closure exceeds size cap");
        index.emplace(e, static_cast<int>(elems.size()));
        elems.push_back(e);
    };
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Elem& g = gens[gi];
        if (index.count(g)) continue;
        size_t m = elems.size();  // previously closed subgroup
        std::deque<Elem> reps{g};
        for (size_t j = 0; j < m; ++j) push(mul(g, elems[j]));
        while (!reps.empty()) {
            Elem r = reps.front();
            reps.pop_front();
            for (size_t si = 0; si <= gi; ++si) {
                Elem t = mul(gens[si], r);
                if (!index.count(t)) {
                    for (size_t j = 0; j < m; ++j) push(mul(t, elems[j]));
                    reps.push_back(t);
                }
            }
        }
    }
    return elems;
}

void finish_tables(Group& g) {
    g.inverse.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) {
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                g.inverse[a] = b;
                break;
            }
        }
        if (g.inverse[a] < 0) throw std::invalid_argument("non-group table: element has no inverse");
    }
}

void check_associativity(const Group& g) {
    if (g.order <= 200) {
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                for (int c = 0; c < g.order; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw std::invalid_argument("non-group table: associativity fails");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> d(0, g.order - 1);
        for (int t = 0; t < 200000; ++t) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw std::invalid_argument("non-group table: associativity fails");
        }
    }
}

std::string power_name(const std::string& base, int e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string word_name(int b, int a) {  // y^b x^a
    if (b == 0) return power_name("x", a);
    if (a == 0) return "y";
    return "y" + power_name("x", a);
}

using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) {  // apply q, then p
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

std::string perm_cycle_name(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : " ") << j;
            first = false;
            j = p[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : std::string("1");
}

}  // namespace

Group make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    Group g;
    g.order = n;
    g.family = GroupFamily::Cyclic;
    g.family_param = n;
    g.table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    g.names.resize(n);
    for (int a = 0; a < n; ++a) g.names[a] = power_name("x", a);
    if (n > 1) g.generators = {1};
    finish_tables(g);
    return g;
}

Group make_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
    Group g;
    g.order = 2 * n;
    g.family = GroupFamily::Dihedral;
    g.family_param = n;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    auto id = [n](int b, int a) { return b * n + a; };
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < n; ++d) {
                    // (y^b x^a)(y^c x^d): x^a y = y x^-a
                    int lhs = id(b, a), rhs = id(c, d), res;
                    if (c == 0)
                        res = id(b, (a + d) % n);
                    else
                        res = id((b + 1) % 2, ((d - a) % n + n) % n);
                    g.table[static_cast<size_t>(lhs) * g.order + rhs] = res;
                }
    g.names.resize(g.order);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a) g.names[id(b, a)] = word_name(b, a);
    g.generators = n > 1 ? std::vector<int>{1, n} : std::vector<int>{1};
    finish_tables(g);
    return g;
}

Group make_dicyclic(int n) {
    if (n < 1) throw std::invalid_argument("dicyclic: n must be >= 1");
    Group g;
    int nn = 2 * n;
    g.order = 4 * n;
    g.family = GroupFamily::Dicyclic;
    g.family_param = n;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    auto id = [nn](int b, int a) { return b * nn + a; };
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < nn; ++a)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < nn; ++d) {
                    // x^{2n} = 1, y^2 = x^n, x^a y = y x^-a
                    int lhs = id(b, a), rhs = id(c, d), res;
                    if (c == 0) {
                        res = id(b, (a + d) % nn);
                    } else {
                        int e = ((d - a) % nn + nn) % nn;
                        res = (b == 0) ? id(1, e) : id(0, (e + n) % nn);
                    }
                    g.table[static_cast<size_t>(lhs) * g.order + rhs] = res;
                }
    g.names.resize(g.order);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < nn; ++a) g.names[id(b, a)] = word_name(b, a);
    g.generators = {1, nn};
    finish_tables(g);
    return g;
}

Group make_perm_group(const std::vector<std::vector<int>>& gens, int size_cap) {
    if (gens.empty()) throw std::invalid_argument("perm: no generators");
    size_t degree = gens.front().size();
    for (const auto& p : gens) {
        if (p.size() != degree) throw std::invalid_argument("perm: mixed degrees");
        std::vector<int> seen(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(degree) || seen[v]++)
                throw std::invalid_argument("perm: not a permutation");
        }
    }
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems = coset_closure(id, gens, perm_compose, size_cap);
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    Group g;
    g.order = static_cast<int>(elems.size());
    g.family = GroupFamily::PermGens;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            g.table[static_cast<size_t>(a) * g.order + b] = index.at(perm_compose(elems[a], elems[b]));
    g.names.resize(g.order);
    for (int a = 0; a < g.order; ++a) g.names[a] = perm_cycle_name(elems[a]);
    for (const auto& p : gens) g.generators.push_back(index.at(p));
    finish_tables(g);
    return g;
}

Group make_symmetric(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("symmetric: n must be in 1..6");
    if (n == 1) {
        Group g = make_cyclic(1);
        g.family = GroupFamily::Symmetric;
        g.family_param = 1;
        return g;
    }
    // generators: the n-cycle (0 1 ... n-1), then the transposition (0 1)
    Perm cycle(n), swap01(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    Group g = make_perm_group({cycle, swap01}, 10000);
    g.family = GroupFamily::Symmetric;
    g.family_param = n;
    return g;
}

Group make_product(const Group& a, const Group& b, int size_cap) {
    long total = static_cast<long>(a.order) * b.order;
    if (total > size_cap) throw std::invalid_argument("product: order exceeds size cap");
    auto enc = [&](int i, int j) { return i * b.order + j; };
    auto mul = [&](int u, int v) {
        int ui = u / b.order, uj = u % b.order, vi = v / b.order, vj = v % b.order;
        return enc(a.mul(ui, vi), b.mul(uj, vj));
    };
    std::vector<int> gens;
    auto add_gens = [&](const Group& h, bool left) {
        std::vector<int> hg = h.generators;
        if (hg.empty() && h.order > 1)
            for (int e = 1; e < h.order; ++e) hg.push_back(e);
        for (int e : hg) gens.push_back(left ? enc(e, 0) : enc(0, e));
    };
    add_gens(a, true);
    add_gens(b, false);
    std::vector<int> elems = coset_closure(0, gens, mul, size_cap);
    if (static_cast<long>(elems.size()) != total)
        throw std::logic_error("product: generators do not span");  // unreachable by construction
    std::vector<int> pos(total, -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    Group g;
    g.order = static_cast<int>(total);
    g.family = GroupFamily::Product;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            g.table[static_cast<size_t>(i) * g.order + j] = pos[mul(elems[i], elems[j])];
    g.names.resize(g.order);
    for (int i = 0; i < g.order; ++i) {
        int e = elems[i];
        g.names[i] = "(" + a.names[e / b.order] + "," + b.names[e % b.order] + ")";
    }
    for (int e : gens)
        if (pos[e] > 0) g.generators.push_back(pos[e]);
    finish_tables(g);
    return g;
}

Group make_from_table(int order, const std::vector<int>& table) {
    if (order < 1) throw std::invalid_argument("table: order must be >= 1");
    if (static_cast<long>(table.size()) != static_cast<long>(order) * order)
        throw std::invalid_argument("table: wrong size");
    for (int v : table)
        if (v < 0 || v >= order) throw std::invalid_argument("table: entry out of range");
    Group g;
    g.order = order;
    g.family = GroupFamily::Table;
    g.table = table;
    for (int a = 0; a < order; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw std::invalid_argument("non-group table: index 0 is not the identity");
    finish_tables(g);
    check_associativity(g);
    g.names.resize(order);
    g.names[0] = "1";
    for (int a = 1; a < order; ++a) g.names[a] = "g" + std::to_string(a);
    return g;
}

namespace {

long parse_long(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 9)
        throw std::invalid_argument("group spec: expected a (reasonable) number in '" + s + "'");
    return std::stol(s.substr(start, pos - start));
}

Group parse_spec(const std::string& s, size_t& pos, int size_cap);

Group parse_perm_spec(const std::string& s, size_t& pos, int size_cap) {
    std::vector<std::vector<std::vector<int>>> gens_cycles;  // generator -> cycles -> points
    std::vector<std::vector<int>> cur;
    int max_point = -1;
    while (pos < s.size() && s[pos] != ',') {
        char c = s[pos];
        if (c == '(') {
            ++pos;
            std::vector<int> cyc;
            while (pos < s.size() && s[pos] != ')') {
                if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                    ++pos;
                    continue;
                }
                long v = parse_long(s, pos);
                if (v > 11) throw std::invalid_argument("perm: points must be in 0..11");
                cyc.push_back(static_cast<int>(v));
                max_point = std::max(max_point, static_cast<int>(v));
            }
            if (pos >= s.size()) throw std::invalid_argument("perm: unterminated cycle");
            ++pos;  // ')'
            if (!cyc.empty()) cur.push_back(cyc);
        } else if (c == ';') {
            ++pos;
            gens_cycles.push_back(cur);
            cur.clear();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else {
            throw std::invalid_argument(std::string("perm: unexpected character '") + c + "'");
        }
    }
    gens_cycles.push_back(cur);
    int degree = max_point + 1;
    if (degree < 1) degree = 1;
    std::vector<std::vector<int>> gens;
    for (const auto& cycles : gens_cycles) {
        std::vector<int> p(degree);
        std::vector<bool> used(degree, false);
        std::iota(p.begin(), p.end(), 0);
        for (const auto& cyc : cycles) {
            for (size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (used[from]) throw std::invalid_argument("perm: point repeated in generator");
                used[from] = true;
                p[from] = to;
            }
        }
        gens.push_back(p);
    }
    return make_perm_group(gens, size_cap);
}

Group parse_spec(const std::string& s, size_t& pos, int size_cap) {
    size_t colon = s.find(':', pos);
    if (colon == std::string::npos)
        throw std::invalid_argument("group spec: expected FAMILY:ARGS in '" + s + "'");
    std::string fam = s.substr(pos, colon - pos);
    pos = colon + 1;
    if (fam == "cyclic" || fam == "dihedral" || fam == "dicyclic" || fam == "symmetric") {
        long n = parse_long(s, pos);
        long order = fam == "cyclic" ? n : fam == "dihedral" ? 2 * n : fam == "dicyclic" ? 4 * n : 0;
        if (fam != "symmetric" && order > size_cap)
            throw std::invalid_argument("group spec: order exceeds size cap");
        if (fam == "cyclic") return make_cyclic(static_cast<int>(n));
        if (fam == "dihedral") return make_dihedral(static_cast<int>(n));
        if (fam == "dicyclic") return make_dicyclic(static_cast<int>(n));
        return make_symmetric(static_cast<int>(n));
    }
    if (fam == "product") {
        Group a = parse_spec(s, pos, size_cap);
        if (pos >= s.size() || s[pos] != ',')
            throw std::invalid_argument("product: expected ',' between factors");
        ++pos;
        Group b = parse_spec(s, pos, size_cap);
        return make_product(a, b, size_cap);
    }
    if (fam == "perm") return parse_perm_spec(s, pos, size_cap);
    if (fam == "table") {
        size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string file = s.substr(pos, end - pos);
        pos = end;
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("table: cannot open '" + file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw std::invalid_argument("table: bad JSON in '" + file + "': " + e.what());
        }
        if (!j.contains("order") || !j.contains("mult"))
            throw std::invalid_argument("table: JSON must have 'order' and 'mult'");
        int order = j["order"].get<int>();
        if (order > size_cap) throw std::invalid_argument("table: order exceeds size cap");
        std::vector<int> table;
        for (const auto& row : j["mult"])
            for (const auto& v : row) table.push_back(v.get<int>());
        return make_from_table(order, table);
    }
    throw std::invalid_argument("group spec: unknown family '" + fam + "'");
}

}  // namespace

Group build_group(const std::string& spec, int size_cap) {
    size_t pos = 0;
    Group g = parse_spec(spec, pos, size_cap);
    if (pos != spec.size())
        throw std::invalid_argument("group spec: trailing input at '" + spec.substr(pos) + "'");
    g.spec = spec;
    return g;
}

std::vector<ConjClass> conjugacy_classes(const Group& g) {
    std::vector<int> class_of(g.order, -1);
    std::vector<ConjClass> classes;
    for (int rep = 0; rep < g.order; ++rep) {
        if (class_of[rep] >= 0) continue;
        int ci = static_cast<int>(classes.size());
        std::vector<int> tau(g.order, -1);
        std::deque<int> queue{rep};
        class_of[rep] = ci;
        tau[rep] = 0;
        std::vector<int> members{rep};
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            for (int h = 0; h < g.order; ++h) {
                int t = g.conj(h, s);
                if (class_of[t] < 0) {
                    class_of[t] = ci;
                    tau[t] = g.mul(h, tau[s]);
                    members.push_back(t);
                    queue.push_back(t);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ConjClass cc;
        cc.rep = rep;
        cc.members = members;
        cc.transversal.reserve(members.size());
        for (int m : members) cc.transversal.push_back(tau[m]);
        classes.push_back(std::move(cc));
    }
    std::stable_sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.rep < b.rep;
    });
    return classes;
}

Subgroup whole_group(const Group& g) {
    Subgroup s;
    s.parent = &g;
    s.members.resize(g.order);
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

Subgroup centralizer(const Group& g, int elem) {
    if (elem < 0 || elem >= g.order) throw std::invalid_argument("centralizer: element out of range");
    Subgroup s;
    s.parent = &g;
    for (int h = 0; h < g.order; ++h)
        if (g.commute(h, elem)) s.members.push_back(h);
    return s;
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent) throw std::invalid_argument("subgroup intersection: parent mismatch");
    Subgroup s;
    s.parent = a.parent;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(s.members));
    return s;
}

long exponent(const Group& g) {
    long e = 1;
    for (int a = 0; a < g.order; ++a) e = lcm_long(e, g.elem_order(a));
    return e;
}

std::vector<int> double_coset_of(const Subgroup& h_left, int g, const Subgroup& h_right) {
    if (h_left.parent != h_right.parent)
        throw std::invalid_argument("double cosets: parent mismatch");
    const Group& G = *h_left.parent;
    std::vector<bool> in(G.order, false);
    std::vector<int> out;
    for (int a : h_left.members)
        for (int b : h_right.members) {
            int t = G.mul(G.mul(a, g), b);
            if (!in[t]) {
                in[t] = true;
                out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> double_cosets(const Subgroup& h_left, const Subgroup& h_right) {
    if (h_left.parent != h_right.parent)
        throw std::invalid_argument("double cosets: parent mismatch");
    const Group& G = *h_left.parent;
    std::vector<bool> seen(G.order, false);
    std::vector<int> reps;
    for (int g = 0; g < G.order; ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int t : double_coset_of(h_left, g, h_right)) seen[t] = true;
    }
    return reps;
}

Group subgroup_as_group(const Subgroup& s) {
    const Group& G = *s.parent;
    int m = s.order();
    Group g;
    g.order = m;
    g.family = GroupFamily::Table;
    g.table.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int t = s.index_of(G.mul(s.members[i], s.members[j]));
            if (t < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
            g.table[static_cast<size_t>(i) * m + j] = t;
        }
    g.names.resize(m);
    for (int i = 0; i < m; ++i) g.names[i] = G.names[s.members[i]];
    finish_tables(g);
    return g;
}

}  // namespace ddouble
