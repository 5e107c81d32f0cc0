#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"
#include "util.hpp"

namespace functorlab {

/* Finite commutative ring presented as Z/m1 x ... x Z/mk (a field F_p is the
 * one-factor case with m1 = p prime). Elements are codes 0..size-1 in mixed
 * radix, little-endian in the factors. */
class FiniteRing {
  public:
    FiniteRing() : FiniteRing({2}, "Z/2") {}
    static FiniteRing zmod(uint32_t m);
    static FiniteRing fp(uint32_t p);
    static FiniteRing product(const FiniteRing& a, const FiniteRing& b);

    uint64_t size() const { return size_; }
    uint32_t n_factors() const { return uint32_t(moduli_.size()); }
    const std::vector<uint32_t>& moduli() const { return moduli_; }
    uint32_t characteristic() const { return char_; } // = exponent of (R,+)

    uint32_t zero() const { return 0; }
    uint32_t one() const { return one_; }
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    bool is_unit(uint32_t a) const;

    std::vector<uint32_t> decode(uint32_t code) const;
    uint32_t encode(const std::vector<uint32_t>& comps) const;

    std::string name() const { return name_; }
    std::string elem_str(uint32_t a) const;

    bool operator==(const FiniteRing& o) const { return moduli_ == o.moduli_; }

  private:
    FiniteRing(std::vector<uint32_t> moduli, std::string name);

    std::vector<uint32_t> moduli_;
    uint64_t size_ = 1;
    uint32_t one_ = 0;
    uint32_t char_ = 1;
    std::string name_;
};

/* Unital ring homomorphism given by its full element table. */
class RingMap {
  public:
    RingMap(FiniteRing from, FiniteRing to, std::vector<uint32_t> table);

    // x mod d for cyclic rings with d | m; componentwise products of such
    static RingMap reduction(const FiniteRing& from, const FiniteRing& to);
    // projection of a product ring onto a subset of factors
    static RingMap projection(const FiniteRing& from, std::vector<uint32_t> keep);
    static RingMap identity(const FiniteRing& r);

    const FiniteRing& from() const { return from_; }
    const FiniteRing& to() const { return to_; }
    uint32_t apply(uint32_t a) const { return table_[a]; }
    bool is_surjective() const { return surjective_; }
    bool is_identity() const;

    // fibers[s] = all r with apply(r) = s
    const std::vector<std::vector<uint32_t>>& fibers() const { return fibers_; }

  private:
    void validate();

    FiniteRing from_, to_;
    std::vector<uint32_t> table_;
    bool surjective_ = false;
    std::vector<std::vector<uint32_t>> fibers_;
};

} // namespace functorlab
