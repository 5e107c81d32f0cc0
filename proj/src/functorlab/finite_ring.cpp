#include "finite_ring.hpp"

#include <algorithm>

namespace functorlab {

FiniteRing::FiniteRing(std::vector<uint32_t> moduli, std::string name)
    : moduli_(std::move(moduli)), name_(std::move(name)) {
    check(!moduli_.empty(), ErrKind::Validation, "ring needs at least one factor");
    for (uint32_t m : moduli_) {
        check(m >= 2, ErrKind::Validation, "ring factor modulus must be >= 2");
        size_ *= m;
        check(size_ <= (1u << 20), ErrKind::TooLarge, "ring too large to enumerate");
        char_ = uint32_t(lcm_u64(char_, m));
    }
    std::vector<uint32_t> ones(moduli_.size(), 1);
    one_ = encode(ones);
}

FiniteRing FiniteRing::zmod(uint32_t m) { return FiniteRing({m}, "Z/" + std::to_string(m)); }

FiniteRing FiniteRing::fp(uint32_t p) {
    check(is_prime_u32(p), ErrKind::Validation, "F_p needs prime p");
    return FiniteRing({p}, "F" + std::to_string(p));
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b) {
    std::vector<uint32_t> m = a.moduli_;
    m.insert(m.end(), b.moduli_.begin(), b.moduli_.end());
    return FiniteRing(std::move(m), a.name_ + "x" + b.name_);
}

std::vector<uint32_t> FiniteRing::decode(uint32_t code) const {
    std::vector<uint32_t> c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        c[i] = code % moduli_[i];
        code /= moduli_[i];
    }
    return c;
}

uint32_t FiniteRing::encode(const std::vector<uint32_t>& comps) const {
    check(comps.size() == moduli_.size(), ErrKind::Validation, "bad component count");
    uint32_t code = 0;
    for (size_t i = moduli_.size(); i-- > 0;) {
        check(comps[i] < moduli_[i], ErrKind::Validation, "component out of range");
        code = code * moduli_[i] + comps[i];
    }
    return code;
}

uint32_t FiniteRing::add(uint32_t a, uint32_t b) const {
    auto x = decode(a), y = decode(b);
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = (x[i] + y[i]) % moduli_[i];
    return encode(x);
}

uint32_t FiniteRing::neg(uint32_t a) const {
    auto x = decode(a);
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = x[i] ? moduli_[i] - x[i] : 0;
    return encode(x);
}

uint32_t FiniteRing::mul(uint32_t a, uint32_t b) const {
    auto x = decode(a), y = decode(b);
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = uint32_t((uint64_t(x[i]) * y[i]) % moduli_[i]);
    return encode(x);
}

bool FiniteRing::is_unit(uint32_t a) const {
    auto x = decode(a);
    for (size_t i = 0; i < x.size(); ++i)
        if (std::gcd(x[i], moduli_[i]) != 1)
            return false;
    return true;
}

std::string FiniteRing::elem_str(uint32_t a) const {
    if (moduli_.size() == 1)
        return std::to_string(a);
    auto x = decode(a);
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i)
        s += std::to_string(x[i]) + (i + 1 < x.size() ? "," : ")");
    return s;
}

RingMap::RingMap(FiniteRing from, FiniteRing to, std::vector<uint32_t> table)
    : from_(std::move(from)), to_(std::move(to)), table_(std::move(table)) {
    validate();
}

void RingMap::validate() {
    check(table_.size() == from_.size(), ErrKind::Validation, "ring map table size mismatch");
    for (uint32_t v : table_)
        check(v < to_.size(), ErrKind::Validation, "ring map value out of range");
    check(table_[from_.one()] == to_.one(), ErrKind::Validation, "ring map must preserve 1");
    check(table_[0] == 0, ErrKind::Validation, "ring map must preserve 0");
    // additive and multiplicative (rings here are small; exhaustive is fine)
    for (uint32_t a = 0; a < from_.size(); ++a)
        for (uint32_t b = 0; b <= a; ++b) {
            check(table_[from_.add(a, b)] == to_.add(table_[a], table_[b]), ErrKind::Validation,
                  "ring map not additive");
            check(table_[from_.mul(a, b)] == to_.mul(table_[a], table_[b]), ErrKind::Validation,
                  "ring map not multiplicative");
        }
    fibers_.assign(to_.size(), {});
    for (uint32_t a = 0; a < from_.size(); ++a)
        fibers_[table_[a]].push_back(a);
    surjective_ = true;
    for (const auto& f : fibers_)
        if (f.empty())
            surjective_ = false;
}

RingMap RingMap::reduction(const FiniteRing& from, const FiniteRing& to) {
    check(from.n_factors() == to.n_factors(), ErrKind::Validation,
          "reduction needs matching factor counts");
    for (uint32_t i = 0; i < from.n_factors(); ++i)
        check(from.moduli()[i] % to.moduli()[i] == 0, ErrKind::Validation,
              "reduction needs target moduli dividing source moduli");
    std::vector<uint32_t> table(from.size());
    for (uint32_t a = 0; a < from.size(); ++a) {
        auto c = from.decode(a);
        for (size_t i = 0; i < c.size(); ++i)
            c[i] %= to.moduli()[i];
        table[a] = to.encode(c);
    }
    return RingMap(from, to, std::move(table));
}

RingMap RingMap::projection(const FiniteRing& from, std::vector<uint32_t> keep) {
    check(!keep.empty(), ErrKind::Validation, "projection keeps at least one factor");
    FiniteRing to = [&] {
        FiniteRing r = FiniteRing::zmod(from.moduli()[keep[0]]);
        for (size_t i = 1; i < keep.size(); ++i)
            r = FiniteRing::product(r, FiniteRing::zmod(from.moduli()[keep[i]]));
        return r;
    }();
    std::vector<uint32_t> table(from.size());
    for (uint32_t a = 0; a < from.size(); ++a) {
        auto c = from.decode(a);
        std::vector<uint32_t> kept;
        for (uint32_t i : keep)
            kept.push_back(c[i]);
        table[a] = to.encode(kept);
    }
    return RingMap(from, to, std::move(table));
}

RingMap RingMap::identity(const FiniteRing& r) {
    std::vector<uint32_t> table(r.size());
    for (uint32_t a = 0; a < r.size(); ++a)
        table[a] = a;
    return RingMap(r, r, std::move(table));
}

bool RingMap::is_identity() const {
    if (!(from_ == to_))
        return false;
    for (uint32_t a = 0; a < table_.size(); ++a)
        if (table_[a] != a)
            return false;
    return true;
}

} // namespace functorlab
