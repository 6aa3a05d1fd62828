#include <algorithm>

#include "doctest.h"

#include "ddouble/chartable.hpp"

using namespace ddouble;

namespace {

// the two-dimensional dihedral character with chi(x) = theta_a
int find_chi_a(const CharTable& t, int n, int a) {
    for (int i = 0; i < t.rank(); ++i)
        if (t.degrees[i] == 2 && t.irreducibles[i].at(1) == cyc_theta(n, a)) return i;
    return -1;
}

// fold an exponent into the canonical chi index range 1..(n-1)/2
int fold(int a, int n) {
    a = ((a % n) + n) % n;
    return std::min(a, n - a);
}

void check_orthogonality(const CharTable& t) {
    const Subgroup& h = t.domain;
    for (int i = 0; i < t.rank(); ++i)
        for (int j = i; j < t.rank(); ++j) {
            CycNum ip = inner_product(t.irreducibles[i], t.irreducibles[j], h);
            REQUIRE(ip == CycNum(i == j ? 1 : 0));
        }
    // column orthogonality: sum_chi chi(g_i) conj(chi(g_j)) = delta |C_H(g_i)|
    for (size_t ci = 0; ci < t.classes.size(); ++ci)
        for (size_t cj = ci; cj < t.classes.size(); ++cj) {
            CycNum acc;
            for (const auto& chi : t.irreducibles)
                acc += chi.at(t.classes[ci].rep) * chi.at(t.classes[cj].rep).conjugate();
            long want = ci == cj ? h.order() / t.classes[ci].size() : 0;
            REQUIRE(acc == CycNum(want));
        }
    long d2 = 0;
    for (int d : t.degrees) {
        d2 += static_cast<long>(d) * d;
        REQUIRE(h.order() % d == 0);  // degree divides |H|
    }
    REQUIRE(d2 == h.order());
    REQUIRE(t.rank() == static_cast<int>(t.classes.size()));
}

}  // namespace

TEST_CASE("D6 character table matches the closed form") {
    Group g = build_group("dihedral:3");
    CharTable t = character_table(whole_group(g));
    REQUIRE(t.degrees == std::vector<int>{1, 1, 2});
    check_orthogonality(t);
    int chi = find_chi_a(t, 3, 1);
    REQUIRE(chi >= 0);
    // chi(x) = theta_1 = -1 at n=3, chi(y) = 0
    CHECK(t.irreducibles[chi].at(1) == CycNum(-1));
    CHECK(t.irreducibles[chi].at(3) == CycNum(0));
}

TEST_CASE("D8 has four linear characters") {
    Group g = build_group("dihedral:4");
    CharTable t = character_table(whole_group(g));
    REQUIRE(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
    check_orthogonality(t);
}

TEST_CASE("trivial group") {
    Group g = build_group("cyclic:1");
    CharTable t = character_table(whole_group(g));
    REQUIRE(t.degrees == std::vector<int>{1});
    CHECK(t.irreducibles[0].values[0] == CycNum(1));
}

TEST_CASE("orthogonality across a spread of groups and their centralizers") {
    for (const char* spec : {"dihedral:5", "dihedral:6", "dicyclic:2", "dicyclic:3",
                             "symmetric:4", "perm:(0 1 2);(0 1)(2 3)", "cyclic:8"}) {
        Group g = build_group(spec);
        CharTable t = character_table(whole_group(g));
        check_orthogonality(t);
        for (const auto& cls : conjugacy_classes(g)) {
            Subgroup c = centralizer(g, cls.rep);
            check_orthogonality(character_table(c));
        }
    }
}

TEST_CASE("dixon output is independent of the admissible prime") {
    for (const char* spec : {"dihedral:3", "dicyclic:2"}) {
        Group g = build_group(spec);
        Subgroup w = whole_group(g);
        auto primes = dixon_primes(w, 2);
        REQUIRE(primes.size() == 2);
        DixonOptions o1, o2;
        o1.prime_override = primes[0];
        o2.prime_override = primes[1];
        CharTable t1 = character_table(w, o1), t2 = character_table(w, o2);
        CHECK(t1.prime != t2.prime);
        REQUIRE(t1.degrees == t2.degrees);
        for (int i = 0; i < t1.rank(); ++i)
            for (size_t v = 0; v < t1.irreducibles[i].values.size(); ++v)
                REQUIRE(t1.irreducibles[i].values[v] == t2.irreducibles[i].values[v]);
    }
    Group g = build_group("dihedral:3");
    DixonOptions bad;
    bad.prime_override = 5;  // 5 != 1 mod 6
    CHECK_THROWS_AS(character_table(whole_group(g), bad), std::invalid_argument);
}

TEST_CASE("inner products of irreducibles") {
    Group g = build_group("dihedral:3");
    CharTable t = character_table(whole_group(g));
    Subgroup w = whole_group(g);
    CHECK(inner_product(t.irreducibles[0], t.irreducibles[0], w) == CycNum(1));
    CHECK(inner_product(t.irreducibles[0], t.irreducibles[1], w) == CycNum(0));
    // <chi_a^2, 1> = 1 (from chi_a^2 = 1 + s + chi_2a)
    int chi = find_chi_a(t, 3, 1);
    int triv = -1;
    for (int i = 0; i < t.rank(); ++i)
        if (t.degrees[i] == 1 && t.irreducibles[i].at(3) == CycNum(1)) triv = i;
    REQUIRE(triv >= 0);
    ClassFunction sq = pointwise_product(t.irreducibles[chi], t.irreducibles[chi]);
    CHECK(inner_product(sq, t.irreducibles[triv], w) == CycNum(1));
}

TEST_CASE("dihedral character products: chi_a chi_b = chi_{a+b} + chi_{a-b}, chi_a^2 = 1 + s + chi_2a") {
    for (int n : {5, 7}) {
        Group g = build_group("dihedral:" + std::to_string(n));
        CharTable t = character_table(whole_group(g));
        int m = (n - 1) / 2;
        int triv = -1, sign = -1;
        for (int i = 0; i < t.rank(); ++i) {
            if (t.degrees[i] != 1) continue;
            if (t.irreducibles[i].at(n) == CycNum(1))
                triv = i;
            else
                sign = i;
        }
        REQUIRE(triv >= 0);
        REQUIRE(sign >= 0);
        // s * chi_a = chi_a
        for (int a = 1; a <= m; ++a) {
            int ia = find_chi_a(t, n, a);
            REQUIRE(ia >= 0);
            ClassFunction p = pointwise_product(t.irreducibles[sign], t.irreducibles[ia]);
            auto mult = decompose(p, t);
            std::vector<long> want(t.rank(), 0);
            want[ia] = 1;
            CHECK(mult == want);
        }
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                ClassFunction p = pointwise_product(t.irreducibles[find_chi_a(t, n, a)],
                                                    t.irreducibles[find_chi_a(t, n, b)]);
                auto mult = decompose(p, t);
                std::vector<long> want(t.rank(), 0);
                if (a == b) {
                    want[triv] = 1;
                    want[sign] = 1;
                    want[find_chi_a(t, n, fold(2 * a, n))] = 1;
                } else {
                    want[find_chi_a(t, n, fold(a + b, n))] += 1;
                    want[find_chi_a(t, n, fold(a - b, n))] += 1;
                }
                CHECK(mult == want);
            }
    }
}

TEST_CASE("restriction") {
    Group g = build_group("dihedral:5");
    CharTable t = character_table(whole_group(g));
    Subgroup cx = centralizer(g, 1);  // <x>, order 5
    CharTable tc = character_table(cx);
    // restrict(chi_a, <x>) = rho_a + rho_{-a}
    int ia = find_chi_a(t, 5, 2);
    ClassFunction r = restrict_to(t.irreducibles[ia], cx);
    auto mult = decompose(r, tc);
    long total = 0;
    for (long v : mult) total += v;
    CHECK(total == 2);
    int hits = 0;
    for (int i = 0; i < tc.rank(); ++i) {
        if (!mult[i]) continue;
        CHECK((tc.irreducibles[i].at(1) == CycNum::root(5, 2) ||
               tc.irreducibles[i].at(1) == CycNum::root(5, 3)));
        ++hits;
    }
    CHECK(hits == 2);
    // trivial restricts to trivial
    int triv = -1;
    for (int i = 0; i < t.rank(); ++i)
        if (t.degrees[i] == 1 && t.irreducibles[i].at(5) == CycNum(1)) triv = i;
    ClassFunction rt = restrict_to(t.irreducibles[triv], cx);
    for (const auto& v : rt.values) CHECK(v == CycNum(1));

    // (s,1) on D8 restricts trivially to <x>
    Group d8 = build_group("dihedral:4");
    CharTable t8 = character_table(whole_group(d8));
    Subgroup cx8 = centralizer(d8, 1);
    for (int i = 0; i < t8.rank(); ++i) {
        if (t8.degrees[i] != 1) continue;
        if (t8.irreducibles[i].at(4) == CycNum(-1) && t8.irreducibles[i].at(1) == CycNum(1)) {
            ClassFunction rr = restrict_to(t8.irreducibles[i], cx8);
            for (const auto& v : rr.values) CHECK(v == CycNum(1));
        }
    }

    Subgroup notsub;
    notsub.parent = &d8;
    notsub.members = {0, 1};
    CHECK_THROWS_AS(restrict_to(t.irreducibles[0], notsub), std::invalid_argument);
}

TEST_CASE("conjugate twist: rho_l by y becomes rho_{-l}") {
    Group g = build_group("dihedral:5");
    Subgroup cx = centralizer(g, 1);
    CharTable tc = character_table(cx);
    int y = 5;
    for (int i = 0; i < tc.rank(); ++i) {
        // twist from C(x) to C(y^-1 x y) = C(x^-1) = <x>
        int k = g.conj(g.inv(y), 1);
        ClassFunction tw = conjugate_twist(tc.irreducibles[i], y, k, 1);
        CycNum before = tc.irreducibles[i].at(1);
        CHECK(tw.at(1) == before.conjugate());  // rho_l(x) -> rho_{-l}(x)
    }
    // identity twist is the identity
    ClassFunction same = conjugate_twist(tc.irreducibles[1], 0, 1, 1);
    for (size_t v = 0; v < same.values.size(); ++v)
        CHECK(same.values[v] == tc.irreducibles[1].values[v]);
    // r must actually conjugate g_K to k
    CHECK_THROWS_AS(conjugate_twist(tc.irreducibles[1], 0, 2, 1), std::invalid_argument);
}

TEST_CASE("conjugate twist does not depend on the choice of r (D10 type-3)") {
    Group g = build_group("dihedral:5");
    auto classes = conjugacy_classes(g);
    const ConjClass* refl = nullptr;
    for (const auto& c : classes)
        if (c.size() == 5) refl = &c;
    REQUIRE(refl);
    Subgroup cy = centralizer(g, refl->rep);
    CharTable tc = character_table(cy);
    for (int k : refl->members) {
        for (int i = 0; i < tc.rank(); ++i) {
            std::vector<CycNum> seen;
            for (int r = 0; r < g.order; ++r) {
                if (g.mul(g.mul(g.inv(r), refl->rep), r) != k) continue;
                ClassFunction tw = conjugate_twist(tc.irreducibles[i], r, k, refl->rep);
                if (seen.empty())
                    seen = tw.values;
                else
                    REQUIRE(tw.values == seen);
            }
            REQUIRE(!seen.empty());
        }
    }
}

TEST_CASE("products of characters decompose with nonnegative integers") {
    Group g = build_group("symmetric:4");
    CharTable t = character_table(whole_group(g));
    for (int i = 0; i < t.rank(); ++i)
        for (int j = 0; j < t.rank(); ++j) {
            auto mult = decompose(pointwise_product(t.irreducibles[i], t.irreducibles[j]), t);
            long dim = 0;
            for (int k = 0; k < t.rank(); ++k) dim += mult[k] * t.degrees[k];
            CHECK(dim == static_cast<long>(t.degrees[i]) * t.degrees[j]);
        }
}
