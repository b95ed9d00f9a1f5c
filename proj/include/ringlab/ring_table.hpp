#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/element_set.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

/**
 * A finite unital ring given by explicit addition and multiplication tables
 * over element indices 0..order-1. Immutable after construction; every
 * computation in the library is a read-only scan over these tables.
 *
 * The one permitted degenerate case is order == 1 (zero == one), which
 * arises as a quotient by the whole ring. The named constructors below all
 * reject orders below 2.
 */
struct RingTable {
    int order = 0;
    std::vector<int32_t> add;  // order x order, row-major
    std::vector<int32_t> mul;  // order x order, row-major
    int32_t zero = 0;
    int32_t one = 0;
    std::vector<int32_t> neg;  // additive inverse per element
    std::string label;         // construction expression
    std::vector<std::string> names;  // human-readable element names
    std::string fingerprint;   // content hash over label, order and tables

    int add_of(int a, int b) const {
        return add[static_cast<std::size_t>(a) * order + b];
    }
    int mul_of(int a, int b) const {
        return mul[static_cast<std::size_t>(a) * order + b];
    }
    int neg_of(int a) const { return neg[static_cast<std::size_t>(a)]; }
    int sub_of(int a, int b) const { return add_of(a, neg_of(b)); }

    // a^k for k >= 1.
    int pow_of(int a, int k) const;

    // k * 1 for any integer k (repeated addition of the identity).
    int int_embed(long long k) const;
};

struct AxiomReport {
    bool ok = true;
    std::string axiom;  // first failing law, empty when ok
    std::array<int, 3> witness{-1, -1, -1};
};

RingTable make_zn(int n);

RingTable make_product(const RingTable& a, const RingTable& b,
                       std::size_t cap = kDefaultSizeCap);

// Full k x k matrix ring over r, entries listed row-major in the
// mixed-radix element index.
RingTable make_matrix(int k, const RingTable& r,
                      std::size_t cap = kDefaultSizeCap);

// Upper-triangular k x k matrices over r.
RingTable make_upper_triangular(int k, const RingTable& r,
                                std::size_t cap = kDefaultSizeCap);

// Smallest additive subgroup containing gens that is closed under left and
// right multiplication by every ring element (worklist closure).
ElementSet ideal_generated(const RingTable& r, const std::vector<int>& gens);

bool is_two_sided_ideal(const RingTable& r, const ElementSet& s);

struct QuotientResult {
    RingTable ring;
    // parent element index -> quotient element index
    std::vector<int> projection;
};

// Coset ring with canonical representatives (smallest member index).
// Throws NotAnIdealError when the set is not a two-sided ideal.
QuotientResult make_quotient_with_projection(const RingTable& r,
                                             const ElementSet& ideal);
RingTable make_quotient(const RingTable& r, const ElementSet& ideal);

// Exhaustive check of all ring laws; failure is a verdict, not an error.
AxiomReport verify_ring_axioms(const RingTable& r);

std::string ring_fingerprint_hex(const RingTable& r);

}  // namespace ringlab
