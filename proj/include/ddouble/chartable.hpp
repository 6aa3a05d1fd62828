#pragma once

#include <vector>

#include "ddouble/cyclotomic.hpp"
#include "ddouble/group.hpp"

namespace ddouble {

// A function on a subgroup, constant on its conjugacy classes, with exact
// cyclotomic values. Values are indexed by position in domain.members.
struct ClassFunction {
    Subgroup domain;
    std::vector<CycNum> values;

    const CycNum& at(int parent_elem) const;
};

struct CharTable {
    Subgroup domain;
    std::vector<ConjClass> classes;          // classes of the subgroup, parent labels
    std::vector<ClassFunction> irreducibles; // sorted by (degree, value tuple)
    std::vector<int> degrees;
    long prime = 0;                          // Dixon prime actually used

    int rank() const { return static_cast<int>(irreducibles.size()); }
};

struct DixonOptions {
    long prime_override = 0;  // 0 = smallest admissible prime
};

// Exact irreducible character table by Dixon's mod-p method: class-sum
// matrices are simultaneously diagonalized over F_p (p = 1 mod exponent,
// p > 2*sqrt(|H|)), degrees and mod-p values recovered, then lifted to
// cyclotomic values through root-of-unity multiplicity counts.
CharTable character_table(const Subgroup& h, const DixonOptions& opts = {});

// The first `count` primes admissible for Dixon on this subgroup.
std::vector<long> dixon_primes(const Subgroup& h, int count);

// (1/|H|) sum_{x in H} f(x) * conj(g(x)); f and g must cover H.
CycNum inner_product(const ClassFunction& f, const ClassFunction& g, const Subgroup& h);

// pointwise product on a shared domain
ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);

// restriction to a subgroup of the domain
ClassFunction restrict_to(const ClassFunction& f, const Subgroup& s);

// Given f on C(g_from) and r with r^-1 g_from r = k, the twisted function
// x -> f(r x r^-1) on C(k). Independent of the choice of r.
ClassFunction conjugate_twist(const ClassFunction& f, int r, int k, int g_from);

// complex-conjugated values, same domain
ClassFunction conjugate_values(const ClassFunction& f);

// Multiplicities of the irreducibles in f; throws std::domain_error if any
// inner product is not a nonnegative integer.
std::vector<long> decompose(const ClassFunction& f, const CharTable& table);

}  // namespace ddouble
