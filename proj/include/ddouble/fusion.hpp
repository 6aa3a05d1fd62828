#pragma once

#include <optional>
#include <utility>

#include "ddouble/modular_data.hpp"

namespace ddouble {

// Orbit structure of {(k, l) in K x L : kl = g_J} under simultaneous
// conjugation by C(g_J). Depends only on the classes of a query.
struct OrbitSet {
    std::vector<std::pair<int, int>> reps;               // lex-minimal per orbit
    std::vector<std::vector<std::pair<int, int>>> orbits;
    std::vector<int> stabilizer_orders;                  // |C(k) cap C(l)| at each rep
};

// All fusion coefficients are exact; a non-integer or negative total is a
// wiring defect and throws std::runtime_error.

// flat sum: delta_{J in KL} (|J|/|G|) sum_{kl=g_J} sum_{x in C(k) cap C(l)}
// chi^(k)(x) psi^(l)(x) conj(phi(x))
long fusion_coeff_flat(const DoubleData& dd, int a, int b, int c);

// orbit sum: sum over orbit representatives of <chi^(k) psi^(l), phi>
long fusion_coeff_orbit(const DoubleData& dd, int a, int b, int c);

// comultiplication route: tensor-product character paired against the
// simple double characters over commuting pairs
long fusion_coeff_direct(const DoubleData& dd, int a, int b, int c);

// shortcut valid when C(g_K) and C(g_L) are normal in G; throws
// std::domain_error otherwise
long normal_centralizer_shortcut(const DoubleData& dd, int a, int b, int c);

OrbitSet orbit_set(const DoubleData& dd, int a, int b, int c);

struct MackeyReport {
    int orbit_count = 0;
    int distinct_cosets = 0;
    bool constant_on_orbits = true;  // pairs in one orbit land in one double coset
    bool injective = true;           // distinct orbits land in distinct double cosets
    long mackey_sum = 0;
    long orbit_value = 0;

    bool ok() const { return constant_on_orbits && injective && mackey_sum == orbit_value; }
};

// Verifies the double-coset/orbit bijection and the Mackey form of the sum.
MackeyReport mackey_coset_check(const DoubleData& dd, int a, int b, int c);

enum class FusionMethod { Verlinde, Character, Orbit, Direct };

FusionMethod fusion_method_from_string(const std::string& s);
std::string to_string(FusionMethod m);

// Full tensor by the chosen method; deterministic. Budget guards rank^3.
FusionTensor fusion_tensor(const DoubleData& dd, FusionMethod method, int rank_budget = 64);

struct MultiplicityReport {
    int max_coeff = 0;
    int witness_a = -1, witness_b = -1, witness_c = -1;  // set when max > 1

    bool multiplicity_free() const { return max_coeff <= 1; }
};

MultiplicityReport multiplicity_report(const FusionTensor& t);

// sum_c N_ab^c dim(c) == dim(a) dim(b) for every pair
bool dimension_conservation(const DoubleData& dd, const FusionTensor& t);

// <hat-chi_a, hat-chi_b> = delta_ab under the commuting-pair inner product
bool double_characters_orthonormal(const DoubleData& dd);

}  // namespace ddouble
