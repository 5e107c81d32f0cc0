#pragma once

#include "cat.hpp"

namespace functorlab {

class AddFunctor;
using AddFunctorPtr = std::shared_ptr<const AddFunctor>;

/* An additive functor between two of our categories, used both as a
 * restriction direction for comparison maps and as a factorization target.
 * All kinds preserve biproducts within the truncation bounds. */
class AddFunctor : public std::enable_shared_from_this<AddFunctor> {
  public:
    virtual ~AddFunctor() = default;
    virtual std::string name() const = 0;
    virtual CatPtr src() const = 0;
    virtual CatPtr tgt() const = 0;
    virtual uint32_t obj(uint32_t o) const = 0;
    virtual uint64_t mor(uint32_t a, uint32_t b, uint64_t f) const = 0;
    // full and essentially surjective (additive quotient)
    virtual bool is_additive_quotient() const { return false; }
    virtual const RingMap* ring_map() const { return nullptr; }

    // the same functor between the opposite categories
    AddFunctorPtr opposite() const;

    /* functoriality / additivity validation: exhaustive below the pair cap,
     * sampled otherwise */
    void validate(uint64_t pair_cap = 200000, uint32_t samples = 2000) const;
};

AddFunctorPtr identity_functor(CatPtr c);
// entrywise application of a surjective ring map, same truncation
AddFunctorPtr quotient_functor(std::shared_ptr<const TruncCat> src,
                               std::shared_ptr<const TruncCat> tgt, RingMap rm);
AddFunctorPtr diagonal_functor(CatPtr c);           // C -> C x C
AddFunctorPtr sum_functor(std::shared_ptr<const TruncCat> small,
                          std::shared_ptr<const TruncCat> big); // C x C -> C', N' >= 2N
AddFunctorPtr compose_functors(AddFunctorPtr first, AddFunctorPtr then);
// window widening P^{<=N} -> P^{<=N'} over the same ring, N <= N'
AddFunctorPtr inclusion_functor(std::shared_ptr<const TruncCat> small,
                                std::shared_ptr<const TruncCat> big);

/* k-triviality of a category: every hom group tensors to zero with k.
 * On failure, witness is the offending (x, y). */
struct KTrivialVerdict {
    bool trivial = true;
    uint32_t witness_x = 0, witness_y = 0;
};
KTrivialVerdict check_k_trivial(const CatPtr& c, RingTag k);

// is d invertible in k (k a field, or Z)
bool invertible_in(uint64_t d, RingTag k);

} // namespace functorlab
