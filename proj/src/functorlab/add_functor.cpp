#include "add_functor.hpp"

namespace functorlab {

namespace {

class IdentityF final : public AddFunctor {
  public:
    explicit IdentityF(CatPtr c) : c_(std::move(c)) {}
    std::string name() const override { return "id[" + c_->name() + "]"; }
    CatPtr src() const override { return c_; }
    CatPtr tgt() const override { return c_; }
    uint32_t obj(uint32_t o) const override { return o; }
    uint64_t mor(uint32_t, uint32_t, uint64_t f) const override { return f; }
    bool is_additive_quotient() const override { return true; }

  private:
    CatPtr c_;
};

class QuotientF final : public AddFunctor {
  public:
    QuotientF(std::shared_ptr<const TruncCat> s, std::shared_ptr<const TruncCat> t, RingMap rm)
        : s_(std::move(s)), t_(std::move(t)), rm_(std::move(rm)) {
        check(rm_.is_surjective(), ErrKind::Validation,
              "quotient functor needs a surjective ring map");
        check(rm_.from() == s_->ring() && rm_.to() == t_->ring(), ErrKind::Validation,
              "ring map endpoints do not match the categories");
        check(s_->trunc() == t_->trunc(), ErrKind::Validation,
              "quotient functor needs equal truncations");
    }
    std::string name() const override {
        return "pi[" + s_->ring().name() + "->" + t_->ring().name() + "]";
    }
    CatPtr src() const override { return s_; }
    CatPtr tgt() const override { return t_; }
    uint32_t obj(uint32_t o) const override { return o; }
    uint64_t mor(uint32_t a, uint32_t b, uint64_t f) const override {
        auto e = s_->decode(a, b, f);
        for (auto& x : e)
            x = rm_.apply(x);
        return t_->encode(a, b, e);
    }
    bool is_additive_quotient() const override { return true; }
    const RingMap* ring_map() const override { return &rm_; }

  private:
    std::shared_ptr<const TruncCat> s_, t_;
    RingMap rm_;
};

class DiagonalF final : public AddFunctor {
  public:
    explicit DiagonalF(CatPtr c) : c_(std::move(c)), prod_(product_cat(c_, c_)) {}
    std::string name() const override { return "Delta[" + c_->name() + "]"; }
    CatPtr src() const override { return c_; }
    CatPtr tgt() const override { return prod_; }
    uint32_t obj(uint32_t o) const override { return o * c_->n_objects() + o; }
    uint64_t mor(uint32_t a, uint32_t b, uint64_t f) const override {
        return f * c_->hom_size(a, b) + f;
    }

  private:
    CatPtr c_;
    CatPtr prod_;
};

class SumF final : public AddFunctor {
  public:
    SumF(std::shared_ptr<const TruncCat> small, std::shared_ptr<const TruncCat> big)
        : small_(std::move(small)), big_(std::move(big)),
          prod_(product_cat(small_, small_)) {
        check(small_->ring() == big_->ring(), ErrKind::Validation,
              "sum functor needs one base ring");
        check(big_->trunc() >= 2 * small_->trunc(), ErrKind::TruncationBound,
              "sum functor target truncation must be at least 2N");
    }
    std::string name() const override {
        return "Sigma[" + small_->name() + "->" + big_->name() + "]";
    }
    CatPtr src() const override { return prod_; }
    CatPtr tgt() const override { return big_; }
    uint32_t obj(uint32_t o) const override {
        return o / small_->n_objects() + o % small_->n_objects();
    }
    uint64_t mor(uint32_t a, uint32_t b, uint64_t f) const override {
        uint32_t a1 = a / small_->n_objects(), a2 = a % small_->n_objects();
        uint32_t b1 = b / small_->n_objects(), b2 = b % small_->n_objects();
        uint64_t h2 = small_->hom_size(a2, b2);
        auto m1 = small_->decode(a1, b1, f / h2);
        auto m2 = small_->decode(a2, b2, f % h2);
        // block diagonal (b1+b2) x (a1+a2)
        uint32_t rows = b1 + b2, cols = a1 + a2;
        std::vector<uint32_t> e(size_t(rows) * cols, 0);
        for (uint32_t i = 0; i < b1; ++i)
            for (uint32_t j = 0; j < a1; ++j)
                e[size_t(i) * cols + j] = m1[size_t(i) * a1 + j];
        for (uint32_t i = 0; i < b2; ++i)
            for (uint32_t j = 0; j < a2; ++j)
                e[size_t(b1 + i) * cols + (a1 + j)] = m2[size_t(i) * a2 + j];
        return big_->encode(cols, rows, e);
    }

  private:
    std::shared_ptr<const TruncCat> small_, big_;
    CatPtr prod_;
};

class InclusionF final : public AddFunctor {
  public:
    InclusionF(std::shared_ptr<const TruncCat> s, std::shared_ptr<const TruncCat> b)
        : s_(std::move(s)), b_(std::move(b)) {
        check(s_->ring() == b_->ring(), ErrKind::Validation, "inclusion needs one base ring");
        check(s_->trunc() <= b_->trunc(), ErrKind::Validation,
              "inclusion target must be at least as wide");
    }
    std::string name() const override { return "incl[" + s_->name() + "->" + b_->name() + "]"; }
    CatPtr src() const override { return s_; }
    CatPtr tgt() const override { return b_; }
    uint32_t obj(uint32_t o) const override { return o; }
    uint64_t mor(uint32_t a, uint32_t b, uint64_t f) const override {
        return b_->encode(a, b, s_->decode(a, b, f));
    }

  private:
    std::shared_ptr<const TruncCat> s_, b_;
};

class CompositeF final : public AddFunctor {
  public:
    CompositeF(AddFunctorPtr f, AddFunctorPtr g) : f_(std::move(f)), g_(std::move(g)) {
        check(f_->tgt()->same_as(*g_->src()), ErrKind::Validation,
              "functor composition endpoint mismatch");
    }
    std::string name() const override { return g_->name() + " . " + f_->name(); }
    CatPtr src() const override { return f_->src(); }
    CatPtr tgt() const override { return g_->tgt(); }
    uint32_t obj(uint32_t o) const override { return g_->obj(f_->obj(o)); }
    uint64_t mor(uint32_t a, uint32_t b, uint64_t m) const override {
        return g_->mor(f_->obj(a), f_->obj(b), f_->mor(a, b, m));
    }
    bool is_additive_quotient() const override {
        return f_->is_additive_quotient() && g_->is_additive_quotient();
    }

  private:
    AddFunctorPtr f_, g_;
};

class OppositeF final : public AddFunctor {
  public:
    explicit OppositeF(AddFunctorPtr f)
        : f_(std::move(f)), src_(opposite_cat(f_->src())), tgt_(opposite_cat(f_->tgt())) {}
    std::string name() const override { return f_->name() + "^op"; }
    CatPtr src() const override { return src_; }
    CatPtr tgt() const override { return tgt_; }
    uint32_t obj(uint32_t o) const override { return f_->obj(o); }
    uint64_t mor(uint32_t a, uint32_t b, uint64_t m) const override {
        return f_->mor(b, a, m);
    }
    bool is_additive_quotient() const override { return f_->is_additive_quotient(); }

  private:
    AddFunctorPtr f_;
    CatPtr src_, tgt_;
};

} // namespace

AddFunctorPtr AddFunctor::opposite() const {
    return std::make_shared<OppositeF>(shared_from_this());
}

void AddFunctor::validate(uint64_t pair_cap, uint32_t samples) const {
    CatPtr s = src();
    // identities
    for (uint32_t o = 0; o < s->n_objects(); ++o)
        check(mor(o, o, s->identity(o)) == tgt()->identity(obj(o)), ErrKind::Validation,
              name() + " does not preserve identities");
    // composition + additivity
    uint64_t pairs = 0;
    uint32_t n = s->n_objects();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t c = 0; c < n; ++c)
                pairs = sat_add(pairs, sat_mul(s->hom_size(a, b), s->hom_size(b, c)));
    auto check_pair = [&](uint32_t a, uint32_t b, uint32_t c, uint64_t f, uint64_t g) {
        uint64_t lhs = mor(a, c, s->compose(a, b, c, f, g));
        uint64_t rhs = tgt()->compose(obj(a), obj(b), obj(c), mor(a, b, f), mor(b, c, g));
        check(lhs == rhs, ErrKind::Validation, name() + " is not functorial");
    };
    Rng rng(0xF00D);
    if (pairs <= pair_cap) {
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t c = 0; c < n; ++c)
                    for (uint64_t f = 0; f < s->hom_size(a, b); ++f)
                        for (uint64_t g = 0; g < s->hom_size(b, c); ++g)
                            check_pair(a, b, c, f, g);
    } else {
        for (uint32_t t = 0; t < samples; ++t) {
            uint32_t a = uint32_t(rng.below(n)), b = uint32_t(rng.below(n)),
                     c = uint32_t(rng.below(n));
            if (!s->hom_size(a, b) || !s->hom_size(b, c))
                continue;
            check_pair(a, b, c, rng.below(s->hom_size(a, b)), rng.below(s->hom_size(b, c)));
        }
    }
    for (uint32_t t = 0; t < samples; ++t) {
        uint32_t a = uint32_t(rng.below(n)), b = uint32_t(rng.below(n));
        uint64_t h = s->hom_size(a, b);
        if (!h)
            continue;
        uint64_t f = rng.below(h), g = rng.below(h);
        check(mor(a, b, s->mor_add(a, b, f, g)) ==
                  tgt()->mor_add(obj(a), obj(b), mor(a, b, f), mor(a, b, g)),
              ErrKind::Validation, name() + " is not additive on hom groups");
    }
}

AddFunctorPtr identity_functor(CatPtr c) { return std::make_shared<IdentityF>(std::move(c)); }

AddFunctorPtr quotient_functor(std::shared_ptr<const TruncCat> src,
                               std::shared_ptr<const TruncCat> tgt, RingMap rm) {
    return std::make_shared<QuotientF>(std::move(src), std::move(tgt), std::move(rm));
}

AddFunctorPtr diagonal_functor(CatPtr c) { return std::make_shared<DiagonalF>(std::move(c)); }

AddFunctorPtr sum_functor(std::shared_ptr<const TruncCat> small,
                          std::shared_ptr<const TruncCat> big) {
    return std::make_shared<SumF>(std::move(small), std::move(big));
}

AddFunctorPtr compose_functors(AddFunctorPtr first, AddFunctorPtr then) {
    return std::make_shared<CompositeF>(std::move(first), std::move(then));
}

AddFunctorPtr inclusion_functor(std::shared_ptr<const TruncCat> small,
                                std::shared_ptr<const TruncCat> big) {
    return std::make_shared<InclusionF>(std::move(small), std::move(big));
}

KTrivialVerdict check_k_trivial(const CatPtr& c, RingTag k) {
    KTrivialVerdict v;
    for (uint32_t x = 0; x < c->n_objects(); ++x)
        for (uint32_t y = 0; y < c->n_objects(); ++y)
            for (uint32_t d : c->hom_group_orders(x, y))
                if (!invertible_in(d, k)) {
                    v.trivial = false;
                    v.witness_x = x;
                    v.witness_y = y;
                    return v;
                }
    return v;
}

bool invertible_in(uint64_t d, RingTag k) {
    switch (k.kind) {
    case RingTag::Q: return d != 0;
    case RingTag::Fp: return d % k.p != 0;
    default: return d == 1; // in Z only units
    }
}

} // namespace functorlab
