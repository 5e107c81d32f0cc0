#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

#include "error.hpp"

namespace functorlab {

/* Coefficient ring of a matrix / complex: Z, Q, or F_p (p prime). */
struct RingTag {
    enum Kind : uint8_t { Z, Q, Fp } kind = Z;
    uint32_t p = 0; // prime, only for Fp

    static RingTag integers() { return {Z, 0}; }
    static RingTag rationals() { return {Q, 0}; }
    static RingTag fp(uint32_t p);

    bool is_field() const { return kind != Z; }
    // characteristic (0 for Z and Q)
    uint32_t characteristic() const { return kind == Fp ? p : 0; }

    bool operator==(const RingTag& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const RingTag& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
        case Z: return "Z";
        case Q: return "Q";
        default: return "F" + std::to_string(p);
        }
    }
};

bool is_prime_u32(uint32_t n);

/* One exact scalar in canonical form:
 *   Z  - arbitrary-precision integer
 *   Q  - reduced rational
 *   Fp - residue in 0..p-1
 * All values stored in an mpq (integers/residues with denominator 1), which
 * keeps the type small and the canonicalization uniform. */
class Scalar {
  public:
    Scalar() : tag_(RingTag::integers()), v_(0) {}
    Scalar(RingTag t, long n) : tag_(t), v_(n) { canon(); }
    Scalar(RingTag t, const mpz_class& n) : tag_(t), v_(n) { canon(); }
    Scalar(RingTag t, const mpq_class& q) : tag_(t), v_(q) { canon(); }

    static Scalar zero(RingTag t) { return Scalar(t, 0); }
    static Scalar one(RingTag t) { return Scalar(t, 1); }

    const RingTag& tag() const { return tag_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    const mpq_class& rat() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Scalar operator+(const Scalar& o) const { return bin(o, v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { return bin(o, v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { return bin(o, v_ * o.v_); }
    Scalar operator-() const { return Scalar(tag_, mpq_class(-v_)); }

    // multiplicative inverse; fails on 0 and on non-unit integers
    Scalar inv() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    bool operator==(const Scalar& o) const { return tag_ == o.tag_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const { return v_.get_str(); }

  private:
    Scalar bin(const Scalar& o, mpq_class r) const {
        check(tag_ == o.tag_, ErrKind::Validation,
              "scalar ring mismatch: " + tag_.str() + " vs " + o.tag_.str());
        return Scalar(tag_, r);
    }
    void canon();

    RingTag tag_;
    mpq_class v_;
};

} // namespace functorlab
