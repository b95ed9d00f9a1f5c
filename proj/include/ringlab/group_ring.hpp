#pragma once

#include "ringlab/group_table.hpp"
#include "ringlab/ring_table.hpp"

namespace ringlab {

// Group ring R[G]: elements are coefficient vectors over R indexed by the
// elements of G, multiplied by Cayley-table convolution. Element index is
// the mixed-radix encoding of the coefficient vector (digit i = coefficient
// of group element i, place value r.order^i).
RingTable make_group_ring(const RingTable& r, const GroupTable& g,
                          std::size_t cap = kDefaultSizeCap);

// Coefficient vector of a group-ring element, indexed by group element.
std::vector<int> group_ring_coeffs(const RingTable& r, const GroupTable& g, int x);
int group_ring_element(const RingTable& r, const GroupTable& g,
                       const std::vector<int>& coeffs);

// 1 * g_i as a group-ring element.
int basis_element(const RingTable& r, const GroupTable& g, int gi);
// a * 1 (coefficient a at the group identity).
int embed_scalar(const RingTable& r, const GroupTable& g, int a);

// Coefficient sum in the base ring.
int augmentation(const RingTable& r, const GroupTable& g, int x);

// Kernel of the augmentation map over rg, cross-checked against the additive
// span of { a*(1 - h) : a in R, h != identity }. A mismatch indicates a
// corrupt table and raises ConsistencyError.
ElementSet augmentation_ideal(const RingTable& rg, const RingTable& r,
                              const GroupTable& g);

struct SubgroupRingEmbedding {
    std::vector<int> subgroup;  // parent group indices, ascending
    GroupTable h;               // standalone subgroup table
    RingTable rh;               // group ring over the subgroup
    ElementSet support;         // elements of R[G] supported on the subgroup
    std::vector<int> to_sub;    // R[G] index -> R[H] index, -1 off support
};

SubgroupRingEmbedding embed_subgroup_ring(const RingTable& r, const GroupTable& g,
                                          const std::vector<int>& subgroup_elements,
                                          std::size_t cap = kDefaultSizeCap);

}  // namespace ringlab
