#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "finite_ring.hpp"

namespace functorlab {

struct Arrow {
    uint32_t src = 0, dst = 0;
    uint64_t mor = 0;
    bool operator<(const Arrow& o) const {
        if (src != o.src)
            return src < o.src;
        if (dst != o.dst)
            return dst < o.dst;
        return mor < o.mor;
    }
    bool operator==(const Arrow& o) const {
        return src == o.src && dst == o.dst && mor == o.mor;
    }
};

// canonical biproduct a (+) b with its structure morphisms
struct Biprod {
    uint32_t obj = 0;
    uint64_t inj1 = 0, inj2 = 0;   // a -> a(+)b, b -> a(+)b
    uint64_t proj1 = 0, proj2 = 0; // a(+)b -> a, a(+)b -> b
};

class Cat;
using CatPtr = std::shared_ptr<const Cat>;

/* A finite category with enumerated hom-sets that carry an abelian group
 * structure (entrywise addition for the matrix categories, componentwise for
 * products). Morphisms are indices into the enumeration, so all downstream
 * bases are reproducible. */
class Cat : public std::enable_shared_from_this<Cat> {
  public:
    virtual ~Cat() = default;

    virtual std::string name() const = 0;
    virtual uint32_t n_objects() const = 0;
    virtual std::string obj_name(uint32_t o) const = 0;
    virtual uint32_t zero_object() const = 0;

    virtual uint64_t hom_size(uint32_t a, uint32_t b) const = 0;
    virtual uint64_t identity(uint32_t o) const = 0;
    virtual uint64_t zero_mor(uint32_t a, uint32_t b) const = 0;
    // g o f for f in hom(a,b), g in hom(b,c)
    virtual uint64_t compose(uint32_t a, uint32_t b, uint32_t c, uint64_t f,
                             uint64_t g) const = 0;

    // abelian structure of hom(a,b)
    virtual uint64_t mor_add(uint32_t a, uint32_t b, uint64_t f, uint64_t g) const = 0;
    // cyclic factor orders of hom(a,b) as an abelian group
    virtual std::vector<uint32_t> hom_group_orders(uint32_t a, uint32_t b) const = 0;
    virtual std::vector<uint32_t> mor_coords(uint32_t a, uint32_t b, uint64_t f) const = 0;
    virtual uint64_t mor_from_coords(uint32_t a, uint32_t b,
                                     const std::vector<uint32_t>& c) const = 0;

    virtual Biprod biproduct(uint32_t a, uint32_t b) const = 0;

    // multiplicative generating set of all morphisms
    virtual std::vector<Arrow> generating_arrows() const = 0;

    virtual std::string mor_str(uint32_t a, uint32_t b, uint64_t f) const = 0;

    // structure inspection
    virtual const class TruncCat* as_base() const { return nullptr; }
    virtual std::pair<CatPtr, CatPtr> as_product() const { return {nullptr, nullptr}; }
    virtual CatPtr as_opposite() const { return nullptr; }

    bool is_identity_mor(uint32_t a, uint32_t b, uint64_t f) const {
        return a == b && f == identity(a);
    }
    uint64_t total_arrows() const; // saturating
    // deterministic enumeration of all arrows; throws TooLarge above cap
    void for_each_arrow(uint64_t cap, const std::function<void(const Arrow&)>& fn) const;

    bool same_as(const Cat& o) const { return name() == o.name(); }
};

/* Skeleton of the finitely generated free right modules over R, truncated at
 * rank N: objects are ranks 0..N, hom(i,j) = all jxi matrices over R,
 * enumerated in row-major lexicographic order of entry codes. */
class TruncCat final : public Cat {
  public:
    static std::shared_ptr<const TruncCat> make(FiniteRing r, uint32_t n, uint64_t cap = 1u << 16);

    const FiniteRing& ring() const { return ring_; }
    uint32_t trunc() const { return n_; }

    std::string name() const override;
    uint32_t n_objects() const override { return n_ + 1; }
    std::string obj_name(uint32_t o) const override { return std::to_string(o); }
    uint32_t zero_object() const override { return 0; }

    uint64_t hom_size(uint32_t a, uint32_t b) const override {
        return sat_pow(ring_.size(), uint64_t(a) * b);
    }
    uint64_t identity(uint32_t o) const override;
    uint64_t zero_mor(uint32_t, uint32_t) const override { return 0; }
    uint64_t compose(uint32_t a, uint32_t b, uint32_t c, uint64_t f, uint64_t g) const override;

    uint64_t mor_add(uint32_t a, uint32_t b, uint64_t f, uint64_t g) const override;
    std::vector<uint32_t> hom_group_orders(uint32_t a, uint32_t b) const override;
    std::vector<uint32_t> mor_coords(uint32_t a, uint32_t b, uint64_t f) const override;
    uint64_t mor_from_coords(uint32_t a, uint32_t b,
                             const std::vector<uint32_t>& c) const override;

    Biprod biproduct(uint32_t a, uint32_t b) const override;
    std::vector<Arrow> generating_arrows() const override;
    std::string mor_str(uint32_t a, uint32_t b, uint64_t f) const override;
    const TruncCat* as_base() const override { return this; }

    // entries of the b x a matrix of f, row-major
    std::vector<uint32_t> decode(uint32_t a, uint32_t b, uint64_t f) const;
    uint64_t encode(uint32_t a, uint32_t b, const std::vector<uint32_t>& entries) const;

  private:
    TruncCat(FiniteRing r, uint32_t n) : ring_(std::move(r)), n_(n) {}
    FiniteRing ring_;
    uint32_t n_;
};

CatPtr product_cat(CatPtr a, CatPtr b);
CatPtr opposite_cat(CatPtr c);

/* Exhaustive (below cap) or sampled validation of the category laws:
 * associativity, identities, bilinearity of composition. */
void validate_category(const CatPtr& c, uint64_t pair_cap = 200000,
                       uint32_t samples = 2000);

/* object/morphism splitting helpers for product categories */
inline std::pair<uint32_t, uint32_t> prod_split_obj(const Cat& c, uint32_t o) {
    auto [a, b] = c.as_product();
    check(a != nullptr, ErrKind::Validation, "not a product category");
    return {o / b->n_objects(), o % b->n_objects()};
}
inline uint32_t prod_join_obj(const Cat& c, uint32_t x, uint32_t y) {
    auto [a, b] = c.as_product();
    check(a != nullptr, ErrKind::Validation, "not a product category");
    return x * b->n_objects() + y;
}
inline std::pair<uint64_t, uint64_t> prod_split_mor(const Cat& c, uint32_t src, uint32_t dst,
                                                    uint64_t f) {
    auto [a, b] = c.as_product();
    check(a != nullptr, ErrKind::Validation, "not a product category");
    uint64_t h2 = b->hom_size(prod_split_obj(c, src).second, prod_split_obj(c, dst).second);
    return {f / h2, f % h2};
}
inline uint64_t prod_join_mor(const Cat& c, uint32_t src, uint32_t dst, uint64_t f1,
                              uint64_t f2) {
    auto [a, b] = c.as_product();
    check(a != nullptr, ErrKind::Validation, "not a product category");
    uint64_t h2 = b->hom_size(prod_split_obj(c, src).second, prod_split_obj(c, dst).second);
    return f1 * h2 + f2;
}

} // namespace functorlab
