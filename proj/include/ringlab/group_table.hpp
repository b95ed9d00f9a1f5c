#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

// A finite group as an explicit Cayley table. Immutable after construction.
struct GroupTable {
    int order = 0;
    std::vector<int32_t> op;  // order x order, row-major
    int32_t identity = 0;
    std::vector<int32_t> inv;
    std::string label;
    std::vector<std::string> names;

    int op_of(int a, int b) const {
        return op[static_cast<std::size_t>(a) * order + b];
    }
    int inv_of(int a) const { return inv[static_cast<std::size_t>(a)]; }
};

struct GroupAxiomReport {
    bool ok = true;
    std::string axiom;
    std::array<int, 3> witness{-1, -1, -1};
};

GroupTable make_cyclic(int n);
GroupTable make_elementary_abelian(int p, int k, std::size_t cap = kDefaultSizeCap);
GroupTable make_group_product(const GroupTable& a, const GroupTable& b,
                              std::size_t cap = kDefaultSizeCap);

GroupAxiomReport verify_group_axioms(const GroupTable& g);

int element_order(const GroupTable& g, int x);
bool is_p_group(const GroupTable& g, int p);
bool is_elementary_2group(const GroupTable& g);

// Every explicit finite table is torsion; recorded rather than computed.
constexpr bool is_torsion(const GroupTable&) { return true; }

// Elements of the cyclic subgroup generated by x, ascending parent indices.
std::vector<int> cyclic_subgroup(const GroupTable& g, int x);

// Standalone table on a closed subset of g (ascending parent indices).
// Throws NotASubgroupError when the subset is not closed.
GroupTable subgroup_table(const GroupTable& g, const std::vector<int>& elements);

GroupTable subgroup_generated(const GroupTable& g, int x);

}  // namespace ringlab
