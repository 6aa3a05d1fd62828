#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "ddouble/chartable.hpp"

namespace ddouble {

// a simple object V_{K, pi}: conjugacy class + centralizer irreducible
struct SimpleObject {
    int class_index = 0;
    int irrep_index = 0;
    std::string label;
};

// Per-group context for D(G): classes with transversals, centralizer
// character tables, and the simple-object list in deterministic order
// (class index, then irrep index). Copyable; the group lives behind a
// shared pointer so subgroup back-references stay valid.
struct DoubleData {
    std::shared_ptr<const Group> group;
    std::vector<ConjClass> classes;
    std::vector<int> class_of;           // element -> class index
    std::vector<Subgroup> centralizers;  // of each class representative
    std::vector<CharTable> tables;
    std::vector<int> offsets;            // class -> first object index
    std::vector<SimpleObject> objects;
    std::vector<int> dims;               // |K| * degree(pi)
    std::vector<int> duals;              // involutive permutation
    int unit_index = 0;
    long conductor = 1;                  // exponent(G)

    const Group& g() const { return *group; }
    int rank() const { return static_cast<int>(objects.size()); }
    int object_index(int class_i, int irrep_i) const { return offsets[class_i] + irrep_i; }
    // the character value hat-chi_a(x (x) delta_g); zero outside the support
    CycNum double_char_value(int object, int g, int x) const;
};

DoubleData build_double_data(Group g, const DixonOptions& opts = {});

// materialized character of V_{K,pi} on its commuting-pair support
struct DoubleCharacter {
    int object = 0;
    std::vector<int> support;                  // class members g, ascending
    std::vector<std::vector<int>> commuting;   // C(g).members per support entry
    std::vector<std::vector<CycNum>> values;

    CycNum value(int g, int x) const;  // zero outside the support
};

DoubleCharacter double_character(const DoubleData& dd, int object);

struct SMatrix {
    int rank = 0;
    int unit_index = 0;
    long conductor = 1;
    std::vector<CycNum> entries;  // row-major rank x rank

    const CycNum& at(int a, int b) const { return entries[static_cast<size_t>(a) * rank + b]; }
};

// the normalized S-matrix, exact, at conductor exponent(G)
SMatrix s_matrix(const DoubleData& dd);

bool smatrix_symmetric(const SMatrix& s);
bool smatrix_unitary(const SMatrix& s);
// S^2 equals the permutation matrix of the duality involution
bool smatrix_duality_permutation(const SMatrix& s, const DoubleData& dd);

struct FusionTensor {
    int rank = 0;
    std::string method;           // verlinde | character | orbit | direct
    std::vector<int32_t> coeff;   // rank^3, index ((a*rank)+b)*rank+c

    int32_t at(int a, int b, int c) const {
        return coeff[(static_cast<size_t>(a) * rank + b) * rank + c];
    }
    int32_t& at(int a, int b, int c) {
        return coeff[(static_cast<size_t>(a) * rank + b) * rank + c];
    }
};

// Verlinde formula N_ab^c = sum_r S_ar S_br conj(S_cr) / S_0r, evaluated
// exactly; a non-integer or negative coefficient is a hard error.
FusionTensor verlinde_fusion(const DoubleData& dd, const SMatrix& s);

}  // namespace ddouble
