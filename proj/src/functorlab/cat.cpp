#include "cat.hpp"

#include <set>

namespace functorlab {

uint64_t Cat::total_arrows() const {
    uint64_t t = 0;
    for (uint32_t a = 0; a < n_objects(); ++a)
        for (uint32_t b = 0; b < n_objects(); ++b)
            t = sat_add(t, hom_size(a, b));
    return t;
}

void Cat::for_each_arrow(uint64_t cap, const std::function<void(const Arrow&)>& fn) const {
    check(total_arrows() <= cap, ErrKind::TooLarge,
          "arrow enumeration over cap on " + name() + " (" + std::to_string(total_arrows()) +
              " > " + std::to_string(cap) + ")");
    for (uint32_t a = 0; a < n_objects(); ++a)
        for (uint32_t b = 0; b < n_objects(); ++b)
            for (uint64_t f = 0; f < hom_size(a, b); ++f)
                fn(Arrow{a, b, f});
}

/* ---------------- TruncCat ---------------- */

std::shared_ptr<const TruncCat> TruncCat::make(FiniteRing r, uint32_t n, uint64_t cap) {
    uint64_t biggest = sat_pow(r.size(), uint64_t(n) * n);
    check(biggest <= cap, ErrKind::TooLarge,
          "instance too large: |hom(" + std::to_string(n) + "," + std::to_string(n) + ")| = " +
              std::to_string(biggest) + " exceeds the enumeration cap " + std::to_string(cap));
    return std::shared_ptr<const TruncCat>(new TruncCat(std::move(r), n));
}

std::string TruncCat::name() const { return "P[" + ring_.name() + "]<=" + std::to_string(n_); }

std::vector<uint32_t> TruncCat::decode(uint32_t a, uint32_t b, uint64_t f) const {
    size_t n = size_t(a) * b;
    std::vector<uint32_t> e(n);
    for (size_t t = n; t-- > 0;) { // first entry is the most significant digit
        e[t] = uint32_t(f % ring_.size());
        f /= ring_.size();
    }
    check(f == 0, ErrKind::Validation, "morphism index out of range");
    return e;
}

uint64_t TruncCat::encode(uint32_t a, uint32_t b, const std::vector<uint32_t>& entries) const {
    check(entries.size() == size_t(a) * b, ErrKind::Validation, "entry count mismatch");
    uint64_t f = 0;
    for (uint32_t e : entries) {
        check(e < ring_.size(), ErrKind::Validation, "entry code out of range");
        f = f * ring_.size() + e;
    }
    return f;
}

uint64_t TruncCat::identity(uint32_t o) const {
    std::vector<uint32_t> e(size_t(o) * o, 0);
    for (uint32_t i = 0; i < o; ++i)
        e[size_t(i) * o + i] = ring_.one();
    return encode(o, o, e);
}

uint64_t TruncCat::compose(uint32_t a, uint32_t b, uint32_t c, uint64_t f, uint64_t g) const {
    // f: a->b is b x a, g: b->c is c x b; result g.f is c x a
    auto mf = decode(a, b, f), mg = decode(b, c, g);
    std::vector<uint32_t> r(size_t(c) * a, 0);
    for (uint32_t i = 0; i < c; ++i)
        for (uint32_t j = 0; j < a; ++j) {
            uint32_t s = 0;
            for (uint32_t t = 0; t < b; ++t)
                s = ring_.add(s, ring_.mul(mg[size_t(i) * b + t], mf[size_t(t) * a + j]));
            r[size_t(i) * a + j] = s;
        }
    return encode(a, c, r);
}

uint64_t TruncCat::mor_add(uint32_t a, uint32_t b, uint64_t f, uint64_t g) const {
    auto mf = decode(a, b, f), mg = decode(a, b, g);
    for (size_t t = 0; t < mf.size(); ++t)
        mf[t] = ring_.add(mf[t], mg[t]);
    return encode(a, b, mf);
}

std::vector<uint32_t> TruncCat::hom_group_orders(uint32_t a, uint32_t b) const {
    std::vector<uint32_t> orders;
    for (size_t t = 0; t < size_t(a) * b; ++t)
        for (uint32_t m : ring_.moduli())
            orders.push_back(m);
    return orders;
}

std::vector<uint32_t> TruncCat::mor_coords(uint32_t a, uint32_t b, uint64_t f) const {
    std::vector<uint32_t> c;
    for (uint32_t e : decode(a, b, f))
        for (uint32_t comp : ring_.decode(e))
            c.push_back(comp);
    return c;
}

uint64_t TruncCat::mor_from_coords(uint32_t a, uint32_t b,
                                   const std::vector<uint32_t>& c) const {
    size_t k = ring_.n_factors();
    check(c.size() == size_t(a) * b * k, ErrKind::Validation, "coordinate count mismatch");
    std::vector<uint32_t> entries(size_t(a) * b);
    for (size_t t = 0; t < entries.size(); ++t)
        entries[t] =
            ring_.encode(std::vector<uint32_t>(c.begin() + t * k, c.begin() + (t + 1) * k));
    return encode(a, b, entries);
}

Biprod TruncCat::biproduct(uint32_t a, uint32_t b) const {
    check(a + b <= n_, ErrKind::TruncationBound,
          "biproduct " + std::to_string(a) + "(+)" + std::to_string(b) +
              " exceeds truncation N = " + std::to_string(n_) + " (raise N to form it)");
    Biprod bp;
    bp.obj = a + b;
    uint32_t s = a + b;
    std::vector<uint32_t> i1(size_t(s) * a, 0), i2(size_t(s) * b, 0), p1(size_t(a) * s, 0),
        p2(size_t(b) * s, 0);
    for (uint32_t t = 0; t < a; ++t) {
        i1[size_t(t) * a + t] = ring_.one();
        p1[size_t(t) * s + t] = ring_.one();
    }
    for (uint32_t t = 0; t < b; ++t) {
        i2[size_t(a + t) * b + t] = ring_.one();
        p2[size_t(t) * s + (a + t)] = ring_.one();
    }
    bp.inj1 = encode(a, s, i1);
    bp.inj2 = encode(b, s, i2);
    bp.proj1 = encode(s, a, p1);
    bp.proj2 = encode(s, b, p2);
    return bp;
}

std::vector<Arrow> TruncCat::generating_arrows() const {
    std::set<Arrow> gens;
    // axis scalings diag(1,..,r,..,1) (all ring elements, covers zero and units)
    for (uint32_t n = 1; n <= n_; ++n)
        for (uint32_t pos = 0; pos < n; ++pos)
            for (uint32_t r = 0; r < ring_.size(); ++r) {
                std::vector<uint32_t> e(size_t(n) * n, 0);
                for (uint32_t i = 0; i < n; ++i)
                    e[size_t(i) * n + i] = i == pos ? r : ring_.one();
                gens.insert(Arrow{n, n, encode(n, n, e)});
            }
    // transvections I + r E_{ij}
    for (uint32_t n = 2; n <= n_; ++n)
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                for (uint32_t r = 1; r < ring_.size(); ++r) {
                    std::vector<uint32_t> e(size_t(n) * n, 0);
                    for (uint32_t t = 0; t < n; ++t)
                        e[size_t(t) * n + t] = ring_.one();
                    e[size_t(i) * n + j] = r;
                    gens.insert(Arrow{n, n, encode(n, n, e)});
                }
            }
    // canonical injections/projections between adjacent ranks
    for (uint32_t n = 0; n + 1 <= n_; ++n) {
        Biprod bp = biproduct(n, 1);
        gens.insert(Arrow{n, n + 1, bp.inj1});
        gens.insert(Arrow{n + 1, n, bp.proj1});
    }
    return std::vector<Arrow>(gens.begin(), gens.end());
}

std::string TruncCat::mor_str(uint32_t a, uint32_t b, uint64_t f) const {
    auto e = decode(a, b, f);
    std::string s = "[";
    for (uint32_t i = 0; i < b; ++i) {
        for (uint32_t j = 0; j < a; ++j)
            s += ring_.elem_str(e[size_t(i) * a + j]) + (j + 1 < a ? " " : "");
        s += (i + 1 < b ? "; " : "");
    }
    return s + "]";
}

/* ---------------- product ---------------- */

namespace {

class ProductCat final : public Cat {
  public:
    ProductCat(CatPtr a, CatPtr b) : a_(std::move(a)), b_(std::move(b)) {}

    std::string name() const override { return "(" + a_->name() + ")x(" + b_->name() + ")"; }
    uint32_t n_objects() const override { return a_->n_objects() * b_->n_objects(); }
    std::string obj_name(uint32_t o) const override {
        auto [x, y] = split_obj(o);
        return "(" + a_->obj_name(x) + "," + b_->obj_name(y) + ")";
    }
    uint32_t zero_object() const override {
        return a_->zero_object() * b_->n_objects() + b_->zero_object();
    }

    std::pair<uint32_t, uint32_t> split_obj(uint32_t o) const {
        return {o / b_->n_objects(), o % b_->n_objects()};
    }
    uint32_t join_obj(uint32_t x, uint32_t y) const { return x * b_->n_objects() + y; }

    uint64_t hom_size(uint32_t a, uint32_t b) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        return sat_mul(a_->hom_size(xa, xb), b_->hom_size(ya, yb));
    }
    std::pair<uint64_t, uint64_t> split_mor(uint32_t a, uint32_t b, uint64_t f) const {
        auto [ya, yb] = std::pair(split_obj(a).second, split_obj(b).second);
        uint64_t h2 = b_->hom_size(ya, yb);
        return {f / h2, f % h2};
    }
    uint64_t join_mor(uint32_t a, uint32_t b, uint64_t f1, uint64_t f2) const {
        auto [ya, yb] = std::pair(split_obj(a).second, split_obj(b).second);
        return f1 * b_->hom_size(ya, yb) + f2;
    }

    uint64_t identity(uint32_t o) const override {
        auto [x, y] = split_obj(o);
        return join_mor(o, o, a_->identity(x), b_->identity(y));
    }
    uint64_t zero_mor(uint32_t a, uint32_t b) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        return join_mor(a, b, a_->zero_mor(xa, xb), b_->zero_mor(ya, yb));
    }
    uint64_t compose(uint32_t a, uint32_t b, uint32_t c, uint64_t f, uint64_t g) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        auto [xc, yc] = split_obj(c);
        auto [f1, f2] = split_mor(a, b, f);
        auto [g1, g2] = split_mor(b, c, g);
        return join_mor(a, c, a_->compose(xa, xb, xc, f1, g1), b_->compose(ya, yb, yc, f2, g2));
    }
    uint64_t mor_add(uint32_t a, uint32_t b, uint64_t f, uint64_t g) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        auto [f1, f2] = split_mor(a, b, f);
        auto [g1, g2] = split_mor(a, b, g);
        return join_mor(a, b, a_->mor_add(xa, xb, f1, g1), b_->mor_add(ya, yb, f2, g2));
    }
    std::vector<uint32_t> hom_group_orders(uint32_t a, uint32_t b) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        auto o1 = a_->hom_group_orders(xa, xb), o2 = b_->hom_group_orders(ya, yb);
        o1.insert(o1.end(), o2.begin(), o2.end());
        return o1;
    }
    std::vector<uint32_t> mor_coords(uint32_t a, uint32_t b, uint64_t f) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        auto [f1, f2] = split_mor(a, b, f);
        auto c1 = a_->mor_coords(xa, xb, f1), c2 = b_->mor_coords(ya, yb, f2);
        c1.insert(c1.end(), c2.begin(), c2.end());
        return c1;
    }
    uint64_t mor_from_coords(uint32_t a, uint32_t b,
                             const std::vector<uint32_t>& c) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        size_t n1 = a_->hom_group_orders(xa, xb).size();
        std::vector<uint32_t> c1(c.begin(), c.begin() + n1), c2(c.begin() + n1, c.end());
        return join_mor(a, b, a_->mor_from_coords(xa, xb, c1), b_->mor_from_coords(ya, yb, c2));
    }
    Biprod biproduct(uint32_t a, uint32_t b) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        Biprod p = a_->biproduct(xa, xb), q = b_->biproduct(ya, yb);
        Biprod r;
        r.obj = join_obj(p.obj, q.obj);
        r.inj1 = join_mor(a, r.obj, p.inj1, q.inj1);
        r.inj2 = join_mor(b, r.obj, p.inj2, q.inj2);
        r.proj1 = join_mor(r.obj, a, p.proj1, q.proj1);
        r.proj2 = join_mor(r.obj, b, p.proj2, q.proj2);
        return r;
    }
    std::vector<Arrow> generating_arrows() const override {
        std::vector<Arrow> gens;
        for (const Arrow& g : a_->generating_arrows())
            for (uint32_t y = 0; y < b_->n_objects(); ++y)
                gens.push_back(Arrow{join_obj(g.src, y), join_obj(g.dst, y),
                                     join_mor(join_obj(g.src, y), join_obj(g.dst, y), g.mor,
                                              b_->identity(y))});
        for (const Arrow& g : b_->generating_arrows())
            for (uint32_t x = 0; x < a_->n_objects(); ++x)
                gens.push_back(Arrow{join_obj(x, g.src), join_obj(x, g.dst),
                                     join_mor(join_obj(x, g.src), join_obj(x, g.dst),
                                              a_->identity(x), g.mor)});
        return gens;
    }
    std::string mor_str(uint32_t a, uint32_t b, uint64_t f) const override {
        auto [xa, ya] = split_obj(a);
        auto [xb, yb] = split_obj(b);
        auto [f1, f2] = split_mor(a, b, f);
        return "(" + a_->mor_str(xa, xb, f1) + "," + b_->mor_str(ya, yb, f2) + ")";
    }
    std::pair<CatPtr, CatPtr> as_product() const override { return {a_, b_}; }

  private:
    CatPtr a_, b_;
};

class OppositeCat final : public Cat {
  public:
    explicit OppositeCat(CatPtr c) : c_(std::move(c)) {}

    std::string name() const override { return "op(" + c_->name() + ")"; }
    uint32_t n_objects() const override { return c_->n_objects(); }
    std::string obj_name(uint32_t o) const override { return c_->obj_name(o); }
    uint32_t zero_object() const override { return c_->zero_object(); }
    uint64_t hom_size(uint32_t a, uint32_t b) const override { return c_->hom_size(b, a); }
    uint64_t identity(uint32_t o) const override { return c_->identity(o); }
    uint64_t zero_mor(uint32_t a, uint32_t b) const override { return c_->zero_mor(b, a); }
    uint64_t compose(uint32_t a, uint32_t b, uint32_t c, uint64_t f, uint64_t g) const override {
        return c_->compose(c, b, a, g, f);
    }
    uint64_t mor_add(uint32_t a, uint32_t b, uint64_t f, uint64_t g) const override {
        return c_->mor_add(b, a, f, g);
    }
    std::vector<uint32_t> hom_group_orders(uint32_t a, uint32_t b) const override {
        return c_->hom_group_orders(b, a);
    }
    std::vector<uint32_t> mor_coords(uint32_t a, uint32_t b, uint64_t f) const override {
        return c_->mor_coords(b, a, f);
    }
    uint64_t mor_from_coords(uint32_t a, uint32_t b,
                             const std::vector<uint32_t>& c) const override {
        return c_->mor_from_coords(b, a, c);
    }
    Biprod biproduct(uint32_t a, uint32_t b) const override {
        Biprod p = c_->biproduct(a, b);
        std::swap(p.inj1, p.proj1);
        std::swap(p.inj2, p.proj2);
        return p;
    }
    std::vector<Arrow> generating_arrows() const override {
        std::vector<Arrow> gens;
        for (const Arrow& g : c_->generating_arrows())
            gens.push_back(Arrow{g.dst, g.src, g.mor});
        return gens;
    }
    std::string mor_str(uint32_t a, uint32_t b, uint64_t f) const override {
        return c_->mor_str(b, a, f) + "^op";
    }
    CatPtr as_opposite() const override { return c_; }

  private:
    CatPtr c_;
};

} // namespace

CatPtr product_cat(CatPtr a, CatPtr b) {
    return std::make_shared<ProductCat>(std::move(a), std::move(b));
}

CatPtr opposite_cat(CatPtr c) {
    if (auto base = c->as_opposite())
        return base; // op(op(C)) = C
    return std::make_shared<OppositeCat>(std::move(c));
}

void validate_category(const CatPtr& c, uint64_t pair_cap, uint32_t samples) {
    const uint32_t n = c->n_objects();
    // identity laws and composition closure on all arrows if cheap
    uint64_t total = c->total_arrows();
    if (total <= pair_cap) {
        c->for_each_arrow(pair_cap, [&](const Arrow& f) {
            uint64_t l = c->compose(f.src, f.dst, f.dst, f.mor, c->identity(f.dst));
            uint64_t r = c->compose(f.src, f.src, f.dst, c->identity(f.src), f.mor);
            check(l == f.mor && r == f.mor, ErrKind::Validation,
                  "identity law fails on " + c->name());
        });
    }
    // associativity: exhaustive when the triple count is small, else sampled
    uint64_t triples = 0;
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t d = 0; d < n; ++d)
                for (uint32_t e = 0; e < n; ++e)
                    triples = sat_add(triples, sat_mul(c->hom_size(a, b),
                                                       sat_mul(c->hom_size(b, d),
                                                               c->hom_size(d, e))));
    Rng rng(0xC0FFEE);
    auto check_assoc = [&](uint32_t a, uint32_t b, uint32_t d, uint32_t e, uint64_t f,
                           uint64_t g, uint64_t h) {
        uint64_t gf = c->compose(a, b, d, f, g);
        uint64_t hg = c->compose(b, d, e, g, h);
        check(c->compose(a, d, e, gf, h) == c->compose(a, b, e, f, hg), ErrKind::Validation,
              "associativity fails on " + c->name());
    };
    if (triples <= pair_cap) {
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t d = 0; d < n; ++d)
                    for (uint32_t e = 0; e < n; ++e)
                        for (uint64_t f = 0; f < c->hom_size(a, b); ++f)
                            for (uint64_t g = 0; g < c->hom_size(b, d); ++g)
                                for (uint64_t h = 0; h < c->hom_size(d, e); ++h)
                                    check_assoc(a, b, d, e, f, g, h);
    } else {
        for (uint32_t t = 0; t < samples; ++t) {
            uint32_t a = uint32_t(rng.below(n)), b = uint32_t(rng.below(n)),
                     d = uint32_t(rng.below(n)), e = uint32_t(rng.below(n));
            if (!c->hom_size(a, b) || !c->hom_size(b, d) || !c->hom_size(d, e))
                continue;
            check_assoc(a, b, d, e, rng.below(c->hom_size(a, b)), rng.below(c->hom_size(b, d)),
                        rng.below(c->hom_size(d, e)));
        }
    }
    // bilinearity of composition: g.(f1+f2) = g.f1 + g.f2 and symmetrically
    for (uint32_t t = 0; t < samples; ++t) {
        uint32_t a = uint32_t(rng.below(n)), b = uint32_t(rng.below(n)),
                 d = uint32_t(rng.below(n));
        uint64_t hab = c->hom_size(a, b), hbd = c->hom_size(b, d);
        if (!hab || !hbd)
            continue;
        uint64_t f1 = rng.below(hab), f2 = rng.below(hab), g = rng.below(hbd);
        uint64_t lhs = c->compose(a, b, d, c->mor_add(a, b, f1, f2), g);
        uint64_t rhs = c->mor_add(a, d, c->compose(a, b, d, f1, g), c->compose(a, b, d, f2, g));
        check(lhs == rhs, ErrKind::Validation, "composition not bilinear on " + c->name());
        uint64_t g2 = rng.below(hbd);
        lhs = c->compose(a, b, d, f1, c->mor_add(b, d, g, g2));
        rhs = c->mor_add(a, d, c->compose(a, b, d, f1, g), c->compose(a, b, d, f1, g2));
        check(lhs == rhs, ErrKind::Validation, "composition not bilinear on " + c->name());
    }
}

} // namespace functorlab
