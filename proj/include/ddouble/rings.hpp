#pragma once

#include <optional>

#include "ddouble/modular_data.hpp"

namespace ddouble {

// A based commutative ring with nonnegative structure constants, duality
// involution and integer dimensions, abstracted from any tensor source.
struct FusionRing {
    int rank = 0;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::vector<long> dims;
    FusionTensor tensor;
};

FusionRing make_fusion_ring(const DoubleData& dd, FusionTensor t);

// group ring of an abelian group: N_ab^c = [ab = c], all dims 1
FusionRing group_ring(const Group& g);

// derive unit and duals from a bare tensor (for fusion.json files)
FusionRing ring_from_tensor(FusionTensor t, std::vector<std::string> labels,
                            std::vector<long> dims);

struct RingAxiomReport {
    bool unit_ok = true;
    bool commutative = true;
    bool associative = true;
    bool dual_unit_ok = true;   // N_ab^0 = delta_{a, dual(b)}
    bool dual_compat = true;    // N_ab^c = N_{a*b*}^{c*}
    bool dims_ok = true;        // dims are multiplicative
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

RingAxiomReport verify_ring_axioms(const FusionRing& r);

struct IsoOptions {
    int rank_budget = 32;
    bool use_fingerprints = true;
};

// Backtracking search for a basis bijection phi with
// N_ab^c = N'_{phi a, phi b}^{phi c}, constrained to preserve unit, dims,
// duality and per-object fingerprints (sorted row-sum multiset + exact
// integer characteristic polynomial of the fusion matrix). Any returned
// bijection is re-verified by a full triple loop.
std::optional<std::vector<int>> rings_isomorphic(const FusionRing& r1, const FusionRing& r2,
                                                 const IsoOptions& opts = {});

struct Type3PatternReport {
    bool ok = false;
    int n = 0;
    int unit_index = -1, z_index = -1, x_index = -1, xprime_index = -1;
    int y_count = 0;
    std::vector<std::string> failures;
};

// The X/X'/Y/Z identities mirrored by the odd dihedral double's type-3
// objects; t must be the fusion tensor of dd. Throws std::domain_error
// unless dd is a dihedral double with odd n.
Type3PatternReport verify_type3_pattern(const DoubleData& dd, const FusionTensor& t);

}  // namespace ddouble
