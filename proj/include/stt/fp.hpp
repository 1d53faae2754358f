#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stt {

// Arithmetic in the prime field F_p. Elements are residues in [0, p).
namespace fp {

inline bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

// Fermat inverse; p prime, a != 0.
inline uint32_t inv(uint32_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("fp::inv of zero");
    return pow(a, p - 2, p);
}

inline uint32_t reduce_int(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

}  // namespace fp

using Vec = std::vector<uint32_t>;

inline void vec_addmul(Vec& dst, const Vec& src, uint32_t c, uint32_t p) {
    for (size_t i = 0; i < dst.size(); ++i)
        dst[i] = fp::add(dst[i], fp::mul(src[i], c, p), p);
}

inline bool vec_is_zero(const Vec& v) {
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

}  // namespace stt
