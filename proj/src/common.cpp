#include "ringlab/common.hpp"

#include <climits>

namespace ringlab {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> primes_upto(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

unsigned long long checked_pow(unsigned long long base, unsigned exp) {
    unsigned long long r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > ULLONG_MAX / base) return ULLONG_MAX;
        r *= base;
    }
    return r;
}

int mixed_radix_encode(const std::vector<int>& digits, int base) {
    long long idx = 0;
    long long place = 1;
    for (int d : digits) {
        idx += place * d;
        place *= base;
    }
    return static_cast<int>(idx);
}

std::vector<int> mixed_radix_decode(int index, int base, int ndigits) {
    std::vector<int> digits(ndigits);
    for (int i = 0; i < ndigits; ++i) {
        digits[i] = index % base;
        index /= base;
    }
    return digits;
}

void Fnv1a::feed_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h_ ^= p[i];
        h_ *= 1099511628211ull;
    }
}

void Fnv1a::feed_i32(int32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    feed_bytes(b, 4);
}

void Fnv1a::feed_i32s(const std::vector<int32_t>& vs) {
    for (int32_t v : vs) feed_i32(v);
}

void Fnv1a::feed_str(const std::string& s) {
    feed_bytes(s.data(), s.size());
    feed_i32(static_cast<int32_t>(s.size()));
}

std::string Fnv1a::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    uint64_t h = h_;
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace ringlab
