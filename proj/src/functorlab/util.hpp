#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace functorlab {

/* Deterministic generator for sampled checks and property tests.
 * (xorshift64*; fixed seeds keep reports and tests reproducible.) */
class Rng {
  public:
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : s_(seed ? seed : 1) {}
    uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dull;
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    int64_t range(int64_t lo, int64_t hi) { // inclusive
        return lo + int64_t(below(uint64_t(hi - lo + 1)));
    }

  private:
    uint64_t s_;
};

// saturating multiply for size forecasts
inline uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > UINT64_MAX / b)
        return UINT64_MAX;
    return a * b;
}

inline uint64_t sat_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}

// a^b with saturation, for hom-set cardinalities
inline uint64_t sat_pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e--)
        r = sat_mul(r, a);
    return r;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }
inline uint64_t lcm_u64(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    return sat_mul(a / std::gcd(a, b), b);
}

} // namespace functorlab
