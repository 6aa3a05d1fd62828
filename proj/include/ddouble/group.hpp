#pragma once

#include <string>
#include <vector>

namespace ddouble {

enum class GroupFamily { Cyclic, Dihedral, Dicyclic, Symmetric, Product, PermGens, Table };

// A finite group as an indexed element set with a full multiplication table.
// Element 0 is the identity. Immutable after construction.
struct Group {
    int order = 1;
    std::vector<int> table;        // row-major: table[a*order+b] = a*b
    std::vector<int> inverse;
    std::vector<int> generators;
    std::vector<std::string> names;
    GroupFamily family = GroupFamily::Table;
    int family_param = 0;          // n for cyclic/dihedral/dicyclic/symmetric
    std::string spec;              // the spec string it was built from, if any

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }
    // h g h^-1
    int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }
    int elem_order(int g) const;
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    const std::string& name(int g) const { return names[g]; }
};

struct Subgroup {
    const Group* parent = nullptr;
    std::vector<int> members;  // sorted ascending; members[0] == 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
    // position of g in members, -1 if absent
    int index_of(int g) const;
    bool is_whole_group() const { return parent && order() == parent->order; }
};

struct ConjClass {
    int rep = 0;                   // minimal element index in the class
    std::vector<int> members;      // sorted ascending
    std::vector<int> transversal;  // parallel to members: tau with tau*rep*tau^-1 = member

    int size() const { return static_cast<int>(members.size()); }
    // tau_s for a member s
    int tau_of(int s) const;
    bool contains(int g) const;
};

// --- construction -----------------------------------------------------------

// Parses the spec grammar: cyclic:N, dihedral:N (order 2N), dicyclic:N
// (order 4N), symmetric:N (N <= 6), product:SPEC,SPEC,
// perm:(cycles);(cycles) on <= 12 points (0-based), table:FILE.json.
// Throws std::invalid_argument on bad input.
Group build_group(const std::string& spec, int size_cap = 10000);

Group make_cyclic(int n);
Group make_dihedral(int n);   // order 2n
Group make_dicyclic(int n);   // order 4n
Group make_symmetric(int n);  // n <= 6
Group make_product(const Group& a, const Group& b, int size_cap = 10000);
// generators as permutations of {0..degree-1}
Group make_perm_group(const std::vector<std::vector<int>>& gens, int size_cap = 10000);
// validates the table is a group law with identity at index 0
Group make_from_table(int order, const std::vector<int>& table);

// --- structure --------------------------------------------------------------

// Classes partition G, sorted by (size, rep); transversals stored.
std::vector<ConjClass> conjugacy_classes(const Group& g);

Subgroup whole_group(const Group& g);
Subgroup centralizer(const Group& g, int elem);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

// lcm of element orders
long exponent(const Group& g);

// One representative (the minimal element index) per double coset
// H_left \ G / H_right; representatives sorted ascending.
std::vector<int> double_cosets(const Subgroup& h_left, const Subgroup& h_right);
// the full double coset H_left * g * H_right, sorted
std::vector<int> double_coset_of(const Subgroup& h_left, int g, const Subgroup& h_right);

// Re-indexes a subgroup as a standalone Group (element i = members[i]).
Group subgroup_as_group(const Subgroup& s);

}  // namespace ddouble
