#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "ringlab/struct_sets.hpp"

namespace ringlab {

enum class DecompositionKind {
    TripotentDelta,     // e^3 = e, d in delta, e + d = target
    SumIdem,            // e, f idempotent, ef = fe, j in J, e + f + j = target
    DiffIdemCommuting,  // as above with e - f + j = target
    DiffIdemOrth,       // ef = fe = 0, e - f + j = target
    SquareIdem,         // e idempotent, j in J, e + j = target^2
    IdemInvolution,     // e idempotent, v^2 = 1, ev = ve, j in J, e + v + j = target
};

const char* to_string(DecompositionKind k);
std::optional<DecompositionKind> decomposition_kind_from_string(std::string_view s);

// A per-element certificate: parts are listed in the kind's tuple order.
struct Decomposition {
    DecompositionKind kind = DecompositionKind::TripotentDelta;
    std::vector<int> parts;
    int target = -1;
};

// Exhaustive search in lexicographic part order; first certificate or none.
std::optional<Decomposition> decompose(const RingTable& r, const StructuralSets& s,
                                       int a, DecompositionKind kind);

// Independent re-check of a certificate's defining equations.
bool verify_decomposition(const RingTable& r, const StructuralSets& s,
                          const Decomposition& d);

struct CoverVerdict {
    bool ok = true;
    int witness = -1;  // first element violating the class condition
};

struct DtVerdict {
    bool ok = true;
    int witness = -1;                       // first uncoverable element
    std::vector<Decomposition> certificates;  // one per element when ok
};

DtVerdict is_dt(const RingTable& r, const StructuralSets& s);
CoverVerdict is_semi_tripotent(const RingTable& r, const StructuralSets& s);
CoverVerdict is_clean(const RingTable& r, const StructuralSets& s);
// Counts ordered pairs (e, u); witness is the first element whose
// representation count differs from one.
CoverVerdict is_uniquely_clean(const RingTable& r, const StructuralSets& s);
// 1 + delta = U as sets; also asserts the unit-sum characterizations agree
// (U + U contained in delta iff U + U = delta iff the set equality), raising
// ConsistencyError otherwise.
CoverVerdict is_delta_u(const RingTable& r, const StructuralSets& s);
CoverVerdict is_di(const RingTable& r, const StructuralSets& s);
CoverVerdict is_boolean(const RingTable& r);
CoverVerdict is_yaqub(const RingTable& r);  // x^3 = x for all x, and 3 nilpotent
CoverVerdict is_two_uj(const RingTable& r, const StructuralSets& s);
CoverVerdict is_reduced(const RingTable& r);

struct ClassVerdict {
    std::string ring;
    bool dt = false;
    bool semi_tripotent = false;
    bool clean = false;
    bool uniquely_clean = false;
    bool delta_u = false;
    bool di = false;
    bool boolean_ring = false;
    bool yaqub = false;
    bool two_uj = false;
    bool reduced_mod_j = false;
    // failed class -> (witness element, witness name); the reduced_mod_j
    // witness lives in R/J(R)
    std::map<std::string, std::pair<int, std::string>> witnesses;
};

ClassVerdict classify_ring(const RingTable& r, const StructuralSets& s);

struct RjFactorization {
    RingTable rbar;  // R / J(R)
    RingTable r1;    // rbar / 2*rbar
    RingTable r2;    // rbar / 3*rbar
    bool hypothesis_dt = false;
    bool iso_ok = false;  // rbar -> r1 x r2 bijective and operation-preserving
    bool r1_ok = false;   // trivial or Boolean
    bool r2_ok = false;   // trivial or Yaqub
    std::string note;
    bool ok() const { return iso_ok && r1_ok && r2_ok; }
};

// Always runs; on non-DT input the result is a hypothesis-violation report
// rather than an error.
RjFactorization rj_factorization(const RingTable& r, const StructuralSets& s);

}  // namespace ringlab
