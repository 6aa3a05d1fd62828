#include <numeric>

#include "doctest.h"

#include "ddouble/fusion.hpp"
#include "ddouble/rings.hpp"

using namespace ddouble;

namespace {

FusionRing double_ring(const char* spec) {
    DoubleData dd = build_double_data(build_group(spec));
    return make_fusion_ring(dd, fusion_tensor(dd, FusionMethod::Character));
}

}  // namespace

TEST_CASE("ring axioms pass for the D6 double and a group ring") {
    FusionRing r = double_ring("dihedral:3");
    RingAxiomReport rep = verify_ring_axioms(r);
    CHECK(rep.ok());
    FusionRing gr = group_ring(build_group("product:cyclic:2,cyclic:2"));
    CHECK(verify_ring_axioms(gr).ok());
    CHECK_THROWS_AS(group_ring(build_group("dihedral:3")), std::invalid_argument);
}

TEST_CASE("a corrupted tensor is detected") {
    FusionRing r = double_ring("dihedral:3");
    r.tensor.at(3, 4, 5) += 1;
    RingAxiomReport rep = verify_ring_axioms(r);
    CHECK(!rep.ok());
    CHECK((!rep.associative || !rep.commutative || !rep.dims_ok));
}

TEST_CASE("ring_from_tensor recovers unit and duals") {
    FusionRing r = double_ring("dihedral:3");
    FusionRing r2 = ring_from_tensor(r.tensor, r.labels, r.dims);
    CHECK(r2.unit == r.unit);
    CHECK(r2.dual == r.dual);
}

TEST_CASE("self-isomorphism is found and verified") {
    FusionRing r = double_ring("dihedral:3");
    auto phi = rings_isomorphic(r, r);
    REQUIRE(phi);
    // any valid bijection fixes the unit
    CHECK((*phi)[r.unit] == r.unit);
    // the unpruned search agrees at this small rank
    IsoOptions noprune;
    noprune.use_fingerprints = false;
    CHECK(rings_isomorphic(r, r, noprune));
}

TEST_CASE("dims multiset mismatch yields none") {
    FusionRing r = double_ring("dihedral:3");  // rank 8, dims {1,1,2,...}
    FusionRing gr = group_ring(build_group("cyclic:8"));
    CHECK(!rings_isomorphic(r, gr));
}

TEST_CASE("C2 double is the Z2 x Z2 group ring") {
    FusionRing r = double_ring("cyclic:2");
    FusionRing gr = group_ring(build_group("product:cyclic:2,cyclic:2"));
    auto phi = rings_isomorphic(r, gr);
    REQUIRE(phi);
    // pruning never prunes a true isomorphism: the unpruned search agrees
    IsoOptions noprune;
    noprune.use_fingerprints = false;
    CHECK(rings_isomorphic(r, gr, noprune));
}

TEST_CASE("search budget") {
    FusionRing r = double_ring("dihedral:3");
    IsoOptions tight;
    tight.rank_budget = 4;
    CHECK_THROWS_AS(rings_isomorphic(r, r, tight), std::invalid_argument);
}

TEST_CASE("type-3 pattern for n = 3") {
    DoubleData dd = build_double_data(build_group("dihedral:3"));
    FusionTensor t = fusion_tensor(dd, FusionMethod::Character);
    Type3PatternReport rep = verify_type3_pattern(dd, t);
    CHECK(rep.ok);
    CHECK(rep.y_count == 4);
    CHECK(rep.n == 3);
}

TEST_CASE("type-3 pattern rejects even n") {
    DoubleData dd = build_double_data(build_group("dihedral:2"));
    FusionTensor t = fusion_tensor(dd, FusionMethod::Character);
    CHECK_THROWS_AS(verify_type3_pattern(dd, t), std::domain_error);
}
