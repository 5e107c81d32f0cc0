#pragma once

#include "functor_rep.hpp"

namespace functorlab {

/* iterated biproduct x_1 (+) ... (+) x_d with per-slot injections/projections */
struct IteratedBiprod {
    uint32_t obj = 0;
    std::vector<uint64_t> inj;  // inj[i] : x_i -> obj
    std::vector<uint64_t> proj; // proj[i] : obj -> x_i
};

inline IteratedBiprod iterated_biproduct(const Cat& c, const std::vector<uint32_t>& xs) {
    check(!xs.empty(), ErrKind::Validation, "empty biproduct tuple");
    IteratedBiprod out;
    out.obj = xs[0];
    out.inj = {c.identity(xs[0])};
    out.proj = {c.identity(xs[0])};
    for (size_t i = 1; i < xs.size(); ++i) {
        Biprod bp = c.biproduct(out.obj, xs[i]); // may throw TruncationBound
        for (size_t t = 0; t < i; ++t) {
            out.inj[t] = c.compose(xs[t], out.obj, bp.obj, out.inj[t], bp.inj1);
            out.proj[t] = c.compose(bp.obj, out.obj, xs[t], bp.proj1, out.proj[t]);
        }
        out.inj.push_back(bp.inj2);
        out.proj.push_back(bp.proj2);
        out.obj = bp.obj;
    }
    return out;
}

/* The decomposition of F(x_1 (+) ... (+) x_d): per subset sigma the summand
 * dimension, computed from the commuting idempotents F(i_S . p_S). */
template <class F> struct CrossEffectReport {
    uint32_t d = 0;
    std::vector<uint32_t> tuple;
    uint64_t dim_f0 = 0;
    std::map<std::vector<uint32_t>, uint64_t> summand_dim; // nonempty sigma -> dim
    uint64_t cr_dim = 0;                                   // sigma = {1..d}
    uint64_t total_dim = 0;
    bool identity_holds = false; // total = F(0) + sum of summands (recomputed)
};

template <class F>
CrossEffectReport<F> cross_effect(const FunctorRep<F>& fr, uint32_t d,
                                  const std::vector<uint32_t>& tuple) {
    check(tuple.size() == d && d >= 1, ErrKind::Validation, "cross effect arity mismatch");
    const Cat& c = *fr.cat;
    const F& k = fr.k;
    IteratedBiprod bp = iterated_biproduct(c, tuple);
    const uint32_t X = bp.obj;

    // e_i = inj_i . proj_i as endomorphisms of X; e_S = sum over S
    std::vector<uint64_t> e(d);
    for (uint32_t i = 0; i < d; ++i)
        e[i] = c.compose(X, tuple[i], X, bp.proj[i], bp.inj[i]);

    auto e_of_subset = [&](uint32_t mask) {
        uint64_t m = c.zero_mor(X, X);
        for (uint32_t i = 0; i < d; ++i)
            if (mask & (1u << i))
                m = c.mor_add(X, X, m, e[i]);
        return m;
    };

    // F applied to each subset idempotent, as dense matrices
    std::vector<DenseMat<F>> fe(1u << d);
    for (uint32_t mask = 0; mask < (1u << d); ++mask)
        fe[mask] = DenseMat<F>::from_sparse(k, fr.act(X, X, e_of_subset(mask)));

    CrossEffectReport<F> rep;
    rep.d = d;
    rep.tuple = tuple;
    rep.total_dim = fr.dim(X);
    // rank of the zero-endomorphism image = dim of the constant part
    {
        Echelon<F> ech(k, uint32_t(fr.dim(X)));
        for (uint32_t col = 0; col < fr.dim(X); ++col) {
            Vec<F> v(fr.dim(X), k.zero());
            for (uint32_t r = 0; r < fr.dim(X); ++r)
                v[r] = fe[0].at(r, col);
            ech.insert(std::move(v));
        }
        rep.dim_f0 = ech.rank();
    }
    uint64_t sum = rep.dim_f0;
    for (uint32_t mask = 1; mask < (1u << d); ++mask) {
        // p_sigma = sum_{S subset sigma} (-1)^{|sigma| - |S|} F(e_S)
        DenseMat<F> p(k, uint32_t(fr.dim(X)), uint32_t(fr.dim(X)));
        uint32_t bits = uint32_t(__builtin_popcount(mask));
        for (uint32_t sub = mask;; sub = (sub - 1) & mask) {
            int sgn = ((bits - __builtin_popcount(sub)) % 2 == 0) ? 1 : -1;
            for (size_t t = 0; t < p.a.size(); ++t)
                p.a[t] = sgn > 0 ? k.add(p.a[t], fe[sub].a[t]) : k.sub(p.a[t], fe[sub].a[t]);
            if (sub == 0)
                break;
        }
        Echelon<F> ech(k, uint32_t(fr.dim(X)));
        for (uint32_t col = 0; col < fr.dim(X); ++col) {
            Vec<F> v(fr.dim(X), k.zero());
            for (uint32_t r = 0; r < fr.dim(X); ++r)
                v[r] = p.at(r, col);
            ech.insert(std::move(v));
        }
        std::vector<uint32_t> sigma;
        for (uint32_t i = 0; i < d; ++i)
            if (mask & (1u << i))
                sigma.push_back(i);
        rep.summand_dim[sigma] = ech.rank();
        sum += ech.rank();
        if (mask + 1 == (1u << d))
            rep.cr_dim = ech.rank();
    }
    rep.identity_holds = (sum == rep.total_dim);
    check(rep.identity_holds, ErrKind::Validation,
          "cross-effect decomposition dimension identity failed");
    return rep;
}

/* least d with vanishing cr_{d+1} on all admissible tuples, or ">= bound";
 * admissible = positive ranks summing within the truncation window. */
struct PolyDegree {
    bool bounded = false;
    uint32_t degree = 0; // meaningful when bounded
    uint32_t bound = 0;
    std::string window; // rank window actually tested
};

// all tuples of d entries from `ranks` (nondecreasing, to cut symmetry)
inline void admissible_tuples(const std::vector<uint32_t>& ranks, uint32_t d, uint32_t max_sum,
                              const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> t(d);
    std::function<void(uint32_t, uint32_t, uint32_t)> rec = [&](uint32_t slot, uint32_t start,
                                                                uint32_t sum) {
        if (slot == d) {
            fn(t);
            return;
        }
        for (uint32_t i = start; i < ranks.size(); ++i) {
            if (sum + ranks[i] > max_sum)
                continue;
            t[slot] = ranks[i];
            rec(slot + 1, i, sum + ranks[i]);
        }
    };
    rec(0, 0, 0);
}

// object "ranks" of a base category (weights elsewhere)
inline std::vector<uint32_t> positive_ranks(const Cat& c) {
    std::vector<uint32_t> out;
    const TruncCat* b = c.as_base();
    check(b != nullptr, ErrKind::Validation, "polynomial degree needs a base matrix category");
    for (uint32_t r = 1; r <= b->trunc(); ++r)
        out.push_back(r);
    return out;
}

template <class F>
bool cross_effect_vanishes(const FunctorRep<F>& fr, uint32_t d) {
    const TruncCat* b = fr.cat->as_base();
    check(b != nullptr, ErrKind::Validation, "cross effects need a base matrix category");
    auto ranks = positive_ranks(*fr.cat);
    bool any = false, vanish = true;
    admissible_tuples(ranks, d, b->trunc(), [&](const std::vector<uint32_t>& t) {
        any = true;
        if (!vanish)
            return;
        if (cross_effect(fr, d, t).cr_dim != 0)
            vanish = false;
    });
    check(any, ErrKind::TruncationBound,
          "no admissible tuple of arity " + std::to_string(d) + " inside the truncation window");
    return vanish;
}

template <class F> PolyDegree poly_degree(const FunctorRep<F>& fr, uint32_t bound) {
    const TruncCat* b = fr.cat->as_base();
    check(b != nullptr, ErrKind::Validation, "polynomial degree needs a base matrix category");
    PolyDegree out;
    out.bound = bound;
    out.window = "ranks 1.." + std::to_string(b->trunc()) + " with sums <= " +
                 std::to_string(b->trunc());
    for (uint32_t dd = 0; dd < bound; ++dd) {
        // degree dd means cr_{dd+1} vanishes
        if (cross_effect_vanishes(fr, dd + 1)) {
            out.bounded = true;
            out.degree = dd;
            return out;
        }
    }
    return out;
}

/* F factors through phi (full, essentially surjective) iff F identifies
 * morphisms with the same image; checked fiberwise, exhaustively. */
template <class F> struct FactorsThrough {
    bool factors = false;
    FPtr<F> descended; // on tgt(phi), when factors
    std::string witness;
};

template <class F>
FactorsThrough<F> factors_through(AddFunctorPtr phi, std::shared_ptr<const FunctorRep<F>> fr,
                                  uint64_t arrow_cap = 200000) {
    check(phi->src()->same_as(*fr->cat), ErrKind::Validation, "factor check category mismatch");
    check(phi->is_additive_quotient(), ErrKind::Validation,
          "factorization target must come from an additive quotient");
    const Cat& a = *phi->src();
    const Cat& b = *phi->tgt();
    const F& k = fr->k;
    FactorsThrough<F> out;

    // group arrows by image and compare actions; record canonical preimages
    std::map<std::tuple<uint32_t, uint32_t, uint64_t>, uint64_t> preimage;
    bool ok = true;
    std::string witness;
    a.for_each_arrow(arrow_cap, [&](const Arrow& ar) {
        if (!ok)
            return;
        uint32_t bx = phi->obj(ar.src), by = phi->obj(ar.dst);
        uint64_t img = phi->mor(ar.src, ar.dst, ar.mor);
        auto key = std::make_tuple(bx, by, img);
        auto it = preimage.find(key);
        if (it == preimage.end()) {
            preimage.emplace(key, ar.mor);
            return;
        }
        // same object pair in our quotients (object-identity functors)
        if (!fr->act(ar.src, ar.dst, ar.mor).equals(k, fr->act(ar.src, ar.dst, it->second))) {
            ok = false;
            witness = a.mor_str(ar.src, ar.dst, ar.mor) + " vs " +
                      a.mor_str(ar.src, ar.dst, it->second);
        }
    });
    out.factors = ok;
    out.witness = witness;
    if (!ok)
        return out;

    // descend: objects match (our additive quotients are object-identical)
    check(b.n_objects() == a.n_objects(), ErrKind::Unsupported,
          "descent expects an object-identical quotient");
    FunctorRep<F> down;
    down.cat = phi->tgt();
    down.k = k;
    down.name = fr->name + "/descended";
    for (uint32_t o = 0; o < b.n_objects(); ++o)
        down.dims.push_back(fr->dim(o));
    auto pre = std::make_shared<std::map<std::tuple<uint32_t, uint32_t, uint64_t>, uint64_t>>(
        std::move(preimage));
    auto up = fr;
    down.act = [pre, up](uint32_t x, uint32_t y, uint64_t f) {
        auto it = pre->find(std::make_tuple(x, y, f));
        check(it != pre->end(), ErrKind::Validation, "descended action: no recorded preimage");
        return up->act(x, y, it->second);
    };
    out.descended = seal(std::move(down));
    return out;
}

template <class F> struct AntipolynomialVerdict {
    bool antipolynomial = false;
    bool factors = false;
    bool target_k_trivial = false;
    std::string detail;
};

template <class F>
AntipolynomialVerdict<F> is_antipolynomial_via(AddFunctorPtr phi,
                                               std::shared_ptr<const FunctorRep<F>> fr) {
    AntipolynomialVerdict<F> v;
    auto ft = factors_through<F>(phi, fr);
    v.factors = ft.factors;
    auto kt = check_k_trivial(phi->tgt(), fr->k.tag());
    v.target_k_trivial = kt.trivial;
    v.antipolynomial = v.factors && v.target_k_trivial;
    if (!v.factors)
        v.detail = "does not factor: " + ft.witness;
    else if (!v.target_k_trivial)
        v.detail = "target not k-trivial at (" + phi->tgt()->obj_name(kt.witness_x) + "," +
                   phi->tgt()->obj_name(kt.witness_y) + ")";
    return v;
}

/* slot functors of a bifunctor on a product category */
template <class F>
FPtr<F> slot_functor(std::shared_ptr<const FunctorRep<F>> b, bool fix_first, uint32_t fixed) {
    auto [c1, c2] = b->cat->as_product();
    check(c1 != nullptr, ErrKind::Validation, "slot functor needs a product category");
    FunctorRep<F> fr;
    fr.cat = fix_first ? c2 : c1;
    fr.k = b->k;
    fr.name = b->name + (fix_first ? "(x0,-)" : "(-,y0)");
    CatPtr pc = b->cat;
    for (uint32_t o = 0; o < fr.cat->n_objects(); ++o)
        fr.dims.push_back(
            b->dim(fix_first ? prod_join_obj(*pc, fixed, o) : prod_join_obj(*pc, o, fixed)));
    auto bb = b;
    bool ff = fix_first;
    uint32_t fx = fixed;
    fr.act = [bb, pc, ff, fx](uint32_t x, uint32_t y, uint64_t f) {
        uint32_t a = ff ? prod_join_obj(*pc, fx, x) : prod_join_obj(*pc, x, fx);
        uint32_t bo = ff ? prod_join_obj(*pc, fx, y) : prod_join_obj(*pc, y, fx);
        auto [cf, cs] = pc->as_product();
        uint64_t idm = ff ? cf->identity(fx) : cs->identity(fx);
        uint64_t m = ff ? prod_join_mor(*pc, a, bo, idm, f) : prod_join_mor(*pc, a, bo, f, idm);
        return bb->act(a, bo, m);
    };
    return seal(std::move(fr));
}

template <class F> struct ApTypeVerdict {
    bool ap_type = false;
    std::string detail;
    std::vector<bool> second_slot_poly; // per first-slot object
    std::vector<bool> first_slot_anti;  // per second-slot object
};

/* antipolynomial in the first variable (via phi), polynomial of degree
 * < degree_bound in the second */
template <class F>
ApTypeVerdict<F> ap_type_check(std::shared_ptr<const FunctorRep<F>> b, AddFunctorPtr phi,
                               uint32_t degree_bound) {
    auto [c1, c2] = b->cat->as_product();
    check(c1 != nullptr, ErrKind::Validation, "AP-type check needs a bifunctor");
    ApTypeVerdict<F> v;
    v.ap_type = true;
    for (uint32_t x = 0; x < c1->n_objects(); ++x) {
        auto slot = slot_functor<F>(b, true, x);
        bool poly = cross_effect_vanishes(*slot, degree_bound);
        v.second_slot_poly.push_back(poly);
        if (!poly) {
            v.ap_type = false;
            v.detail = "second slot not polynomial (< " + std::to_string(degree_bound) +
                       ") at x = " + c1->obj_name(x);
        }
    }
    for (uint32_t y = 0; y < c2->n_objects(); ++y) {
        auto slot = slot_functor<F>(b, false, y);
        auto anti = is_antipolynomial_via<F>(phi, slot);
        v.first_slot_anti.push_back(anti.antipolynomial);
        if (!anti.antipolynomial) {
            v.ap_type = false;
            v.detail = "first slot not antipolynomial at y = " + c2->obj_name(y) + ": " +
                       anti.detail;
        }
    }
    return v;
}

} // namespace functorlab
