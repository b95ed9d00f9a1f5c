#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

// Hard limit on constructed table orders. O(n^2) tables and element scans
// stay desk-scale below this; overridable per call and via the CLI --cap flag.
inline constexpr std::size_t kDefaultSizeCap = 4096;

bool is_prime(long long n);
std::vector<int> primes_upto(int n);

// base^exp, saturating to ULLONG_MAX on overflow. Used for static size
// estimates before any table is allocated.
unsigned long long checked_pow(unsigned long long base, unsigned exp);

// Mixed-radix encoding of digit vectors: digit i carries place value base^i.
// Shared by the matrix, triangular and group-ring constructions so element
// indices are reproducible across runs.
int mixed_radix_encode(const std::vector<int>& digits, int base);
std::vector<int> mixed_radix_decode(int index, int base, int ndigits);

// FNV-1a 64-bit accumulator for content fingerprints.
class Fnv1a {
public:
    void feed_bytes(const void* data, std::size_t n);
    void feed_i32(int32_t v);
    void feed_i32s(const std::vector<int32_t>& vs);
    void feed_str(const std::string& s);
    std::string hex() const;

private:
    uint64_t h_ = 1469598103934665603ull;
};

}  // namespace ringlab
