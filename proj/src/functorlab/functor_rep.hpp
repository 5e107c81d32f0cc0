#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "abelian.hpp"
#include "add_functor.hpp"
#include "cat.hpp"
#include "field.hpp"

namespace functorlab {

/* Functor to finite abelian groups, used as input to linearization. */
class AbGroupFunctor {
  public:
    CatPtr cat;
    std::function<PresentedAb(uint32_t)> value;                       // diagonal presentations
    std::function<AbMap(uint32_t, uint32_t, uint64_t)> action;
    std::string name;

    static AbGroupFunctor hom_functor(CatPtr c, uint32_t base) {
        AbGroupFunctor g;
        g.cat = c;
        g.name = "Hom(" + c->obj_name(base) + ",-)";
        g.value = [c, base](uint32_t x) {
            std::vector<uint64_t> orders;
            for (uint32_t d : c->hom_group_orders(base, x))
                orders.push_back(d);
            return PresentedAb::from_orders(orders);
        };
        auto val = g.value;
        g.action = [c, base, val](uint32_t a, uint32_t b, uint64_t f) {
            AbMap m;
            m.src = val(a);
            m.tgt = val(b);
            m.m = ZMat(m.tgt.rank, std::vector<mpz_class>(m.src.rank, 0));
            for (uint32_t t = 0; t < m.src.rank; ++t) {
                std::vector<uint32_t> e(m.src.rank, 0);
                e[t] = 1;
                uint64_t u = c->mor_from_coords(base, a, e);
                uint64_t fu = c->compose(base, a, b, u, f);
                auto coords = c->mor_coords(base, b, fu);
                for (uint32_t s = 0; s < m.tgt.rank; ++s)
                    m.m[s][t] = coords[s];
            }
            return m;
        };
        return g;
    }

    static AbGroupFunctor constant_group(CatPtr c, std::vector<uint64_t> orders) {
        AbGroupFunctor g;
        g.cat = c;
        g.name = "const";
        PresentedAb grp = PresentedAb::from_orders(orders);
        g.value = [grp](uint32_t) { return grp; };
        g.action = [grp](uint32_t, uint32_t, uint64_t) { return AbMap::id(grp); };
        return g;
    }

    static AbGroupFunctor restrict_along(AddFunctorPtr phi, AbGroupFunctor inner) {
        AbGroupFunctor g;
        g.cat = phi->src();
        g.name = inner.name + " . " + phi->name();
        g.value = [phi, inner](uint32_t x) { return inner.value(phi->obj(x)); };
        g.action = [phi, inner](uint32_t a, uint32_t b, uint64_t f) {
            return inner.action(phi->obj(a), phi->obj(b), phi->mor(a, b, f));
        };
        return g;
    }
};

/* A functor C -> k-Mod: one free k-module per object, one matrix per
 * morphism. Construction validates functoriality (exhaustively below the
 * arrow-pair cap, sampled above). Values are immutable afterwards. */
template <class F> class FunctorRep {
  public:
    using Ptr = std::shared_ptr<const FunctorRep<F>>;

    CatPtr cat;
    F k;
    std::string name;
    std::vector<uint64_t> dims;
    std::vector<std::vector<std::string>> labels; // optional basis provenance
    std::function<SpMat<F>(uint32_t, uint32_t, uint64_t)> act;

    // structure flags used by resolution strategies
    Ptr tensor_left, tensor_right; // set when this is an external tensor

    uint64_t dim(uint32_t o) const { return dims[o]; }
    uint64_t total_dim() const {
        uint64_t t = 0;
        for (uint64_t d : dims)
            t = sat_add(t, d);
        return t;
    }
    SpMat<F> operator()(uint32_t a, uint32_t b, uint64_t f) const { return act(a, b, f); }
    bool is_reduced() const { return dims[cat->zero_object()] == 0; }
};

template <class F> using FPtr = typename FunctorRep<F>::Ptr;

/* F(id) = id and F(g o f) = F(g) F(f); exhaustive below the pair cap. */
template <class F>
void validate_functor(const FunctorRep<F>& fr, uint64_t pair_cap = 60000,
                      uint32_t samples = 300) {
    const Cat& c = *fr.cat;
    const F& k = fr.k;
    for (uint32_t o = 0; o < c.n_objects(); ++o) {
        SpMat<F> m = fr(o, o, c.identity(o));
        check(m.equals(k, SpMat<F>::identity(k, uint32_t(fr.dim(o)))), ErrKind::Validation,
              fr.name + ": F(id) != id at " + c.obj_name(o));
    }
    uint64_t pairs = 0;
    uint32_t n = c.n_objects();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t d = 0; d < n; ++d)
                pairs = sat_add(pairs, sat_mul(c.hom_size(a, b), c.hom_size(b, d)));
    auto check_pair = [&](uint32_t a, uint32_t b, uint32_t d, uint64_t f, uint64_t g) {
        SpMat<F> lhs = fr(a, d, c.compose(a, b, d, f, g));
        SpMat<F> rhs = fr(b, d, g).compose(k, fr(a, b, f));
        check(lhs.equals(k, rhs), ErrKind::Validation,
              fr.name + ": F(g o f) != F(g) F(f) on " + c.name());
    };
    if (pairs <= pair_cap) {
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t d = 0; d < n; ++d)
                    for (uint64_t f = 0; f < c.hom_size(a, b); ++f)
                        for (uint64_t g = 0; g < c.hom_size(b, d); ++g)
                            check_pair(a, b, d, f, g);
    } else {
        Rng rng(0xFACADE);
        for (uint32_t t = 0; t < samples; ++t) {
            uint32_t a = uint32_t(rng.below(n)), b = uint32_t(rng.below(n)),
                     d = uint32_t(rng.below(n));
            if (!c.hom_size(a, b) || !c.hom_size(b, d))
                continue;
            check_pair(a, b, d, rng.below(c.hom_size(a, b)), rng.below(c.hom_size(b, d)));
        }
    }
}

/* caching wrapper: tabulates eagerly on small categories */
template <class F> FPtr<F> seal(FunctorRep<F> fr, bool validate = true) {
    const uint64_t arrows = fr.cat->total_arrows();
    if (arrows <= 20000) {
        auto table = std::make_shared<std::map<std::tuple<uint32_t, uint32_t, uint64_t>, SpMat<F>>>();
        const Cat& c = *fr.cat;
        auto inner = fr.act;
        c.for_each_arrow(20000, [&](const Arrow& a) {
            table->emplace(std::make_tuple(a.src, a.dst, a.mor), inner(a.src, a.dst, a.mor));
        });
        fr.act = [table](uint32_t a, uint32_t b, uint64_t f) {
            return table->at(std::make_tuple(a, b, f));
        };
    }
    auto p = std::make_shared<FunctorRep<F>>(std::move(fr));
    if (validate)
        validate_functor(*p);
    return p;
}

/* P^c = k[C(c,-)], basis labelled by morphisms, action by post-composition */
template <class F> FPtr<F> standard_projective(const F& k, CatPtr cat, uint32_t c) {
    FunctorRep<F> fr;
    fr.cat = cat;
    fr.k = k;
    fr.name = "P^" + cat->obj_name(c) + "[" + cat->name() + "]";
    for (uint32_t x = 0; x < cat->n_objects(); ++x)
        fr.dims.push_back(cat->hom_size(c, x));
    fr.labels.resize(cat->n_objects());
    if (fr.total_dim() <= 4096)
        for (uint32_t x = 0; x < cat->n_objects(); ++x)
            for (uint64_t g = 0; g < cat->hom_size(c, x); ++g)
                fr.labels[x].push_back(cat->mor_str(c, x, g));
    CatPtr cc = cat;
    fr.act = [cc, c, k](uint32_t a, uint32_t b, uint64_t f) {
        SpMat<F> m(uint32_t(cc->hom_size(c, b)), uint32_t(cc->hom_size(c, a)));
        for (uint64_t g = 0; g < cc->hom_size(c, a); ++g)
            m.col[g].push(uint32_t(cc->compose(c, a, b, g, f)), k.one());
        return m;
    };
    return seal(std::move(fr));
}

/* k[G] for a finite-abelian-group-valued functor G */
template <class F>
FPtr<F> linearize(const F& k, const AbGroupFunctor& g, uint64_t cap = 4096) {
    FunctorRep<F> fr;
    fr.cat = g.cat;
    fr.k = k;
    fr.name = "k[" + g.name + "]";
    std::vector<PresentedAb> vals;
    for (uint32_t x = 0; x < g.cat->n_objects(); ++x) {
        vals.push_back(g.value(x));
        uint64_t n = vals.back().enum_size();
        check(n <= cap, ErrKind::TooLarge, "linearization cap exceeded: |G(x)| = " +
                                               std::to_string(n) + " at " + g.cat->obj_name(x));
        fr.dims.push_back(n);
    }
    auto gv = std::make_shared<std::vector<PresentedAb>>(std::move(vals));
    auto act = g.action;
    fr.act = [gv, act, k](uint32_t a, uint32_t b, uint64_t f) {
        AbMap m = act(a, b, f);
        SpMat<F> out(uint32_t((*gv)[b].enum_size()), uint32_t((*gv)[a].enum_size()));
        for (uint64_t e = 0; e < (*gv)[a].enum_size(); ++e)
            out.col[e].push(uint32_t((*gv)[b].encode_elem(m.apply((*gv)[a].decode_elem(e)))),
                            k.one());
        return out;
    };
    return seal(std::move(fr));
}

/* h^a (x) k: the additive standard projective with k coefficients */
template <class F> FPtr<F> additive_standard(const F& k, CatPtr cat, uint32_t a) {
    check(k.tag().is_field(), ErrKind::Validation, "additive standard needs field coefficients");
    FunctorRep<F> fr;
    fr.cat = cat;
    fr.k = k;
    fr.name = "h^" + cat->obj_name(a) + "(x)k";
    uint32_t p = k.p(); // 0 for Q
    // surviving coordinate positions of each hom group
    auto survivors = std::make_shared<std::vector<std::vector<uint32_t>>>();
    for (uint32_t x = 0; x < cat->n_objects(); ++x) {
        std::vector<uint32_t> s;
        auto orders = cat->hom_group_orders(a, x);
        for (uint32_t t = 0; t < orders.size(); ++t)
            if (p != 0 && orders[t] % p == 0)
                s.push_back(t);
        fr.dims.push_back(s.size());
        survivors->push_back(std::move(s));
    }
    CatPtr cc = cat;
    fr.act = [cc, a, k, survivors](uint32_t x, uint32_t y, uint64_t f) {
        const auto& sx = (*survivors)[x];
        const auto& sy = (*survivors)[y];
        SpMat<F> m(uint32_t(sy.size()), uint32_t(sx.size()));
        auto xorders = cc->hom_group_orders(a, x);
        for (uint32_t t = 0; t < sx.size(); ++t) {
            std::vector<uint32_t> e(xorders.size(), 0);
            e[sx[t]] = 1;
            uint64_t u = cc->mor_from_coords(a, x, e);
            uint64_t fu = cc->compose(a, x, y, u, f);
            auto coords = cc->mor_coords(a, y, fu);
            for (uint32_t s = 0; s < sy.size(); ++s) {
                auto v = k.from_int(int64_t(coords[sy[s]]));
                if (!k.is_zero(v))
                    m.col[t].push(s, v);
            }
        }
        return m;
    };
    return seal(std::move(fr));
}

/* constant functor with value k^d */
template <class F> FPtr<F> constant_functor(const F& k, CatPtr cat, uint32_t d) {
    FunctorRep<F> fr;
    fr.cat = cat;
    fr.k = k;
    fr.name = "const k^" + std::to_string(d);
    fr.dims.assign(cat->n_objects(), d);
    fr.act = [k, d](uint32_t, uint32_t, uint64_t) { return SpMat<F>::identity(k, d); };
    return seal(std::move(fr));
}

template <class F> FPtr<F> restrict_functor(AddFunctorPtr phi, std::shared_ptr<const FunctorRep<F>> g) {
    check(phi->tgt()->same_as(*g->cat), ErrKind::Validation,
          "restriction target category mismatch");
    FunctorRep<F> fr;
    fr.cat = phi->src();
    fr.k = g->k;
    fr.name = g->name + " . " + phi->name();
    for (uint32_t x = 0; x < fr.cat->n_objects(); ++x)
        fr.dims.push_back(g->dim(phi->obj(x)));
    fr.act = [phi, g](uint32_t a, uint32_t b, uint64_t f) {
        return g->act(phi->obj(a), phi->obj(b), phi->mor(a, b, f));
    };
    return seal(std::move(fr));
}

/* objectwise tensor product (F (x) G)(x) = F(x) (x) G(x) */
template <class F> FPtr<F> pointwise_tensor(std::shared_ptr<const FunctorRep<F>> f, std::shared_ptr<const FunctorRep<F>> g) {
    check(f->cat->same_as(*g->cat), ErrKind::Validation, "tensor needs one category");
    FunctorRep<F> fr;
    fr.cat = f->cat;
    fr.k = f->k;
    fr.name = "(" + f->name + ")(x)(" + g->name + ")";
    for (uint32_t x = 0; x < fr.cat->n_objects(); ++x)
        fr.dims.push_back(sat_mul(f->dim(x), g->dim(x)));
    F k = f->k;
    fr.act = [f, g, k](uint32_t a, uint32_t b, uint64_t m) {
        return SpMat<F>::kron(k, f->act(a, b, m), g->act(a, b, m));
    };
    return seal(std::move(fr));
}

/* external tensor F [x] G on the product category */
template <class F> FPtr<F> external_tensor(std::shared_ptr<const FunctorRep<F>> f, std::shared_ptr<const FunctorRep<F>> g) {
    FunctorRep<F> fr;
    fr.cat = product_cat(f->cat, g->cat);
    fr.k = f->k;
    fr.name = "(" + f->name + ")[x](" + g->name + ")";
    CatPtr pc = fr.cat;
    for (uint32_t o = 0; o < pc->n_objects(); ++o) {
        auto [x, y] = prod_split_obj(*pc, o);
        fr.dims.push_back(sat_mul(f->dim(x), g->dim(y)));
    }
    F k = f->k;
    fr.act = [f, g, k, pc](uint32_t a, uint32_t b, uint64_t m) {
        auto [ax, ay] = prod_split_obj(*pc, a);
        auto [bx, by] = prod_split_obj(*pc, b);
        auto [m1, m2] = prod_split_mor(*pc, a, b, m);
        return SpMat<F>::kron(k, f->act(ax, bx, m1), g->act(ay, by, m2));
    };
    auto sealed = seal(std::move(fr));
    auto mut = std::const_pointer_cast<FunctorRep<F>>(sealed);
    mut->tensor_left = f;
    mut->tensor_right = g;
    return sealed;
}

/* D F on the opposite category: transpose every matrix */
template <class F> FPtr<F> dual_functor(std::shared_ptr<const FunctorRep<F>> f) {
    check(f->k.tag().is_field(), ErrKind::Validation, "duality needs field coefficients");
    FunctorRep<F> fr;
    fr.cat = opposite_cat(f->cat);
    fr.k = f->k;
    fr.name = "D(" + f->name + ")";
    fr.dims = f->dims;
    CatPtr oc = fr.cat;
    F k = f->k;
    fr.act = [f, k](uint32_t a, uint32_t b, uint64_t m) {
        // m : a -> b in C^op is a morphism b -> a in C
        return f->act(b, a, m).transpose(k);
    };
    return seal(std::move(fr));
}

/* reduced part: kernel of F applied to the zero endomorphism, with the
 * split inclusion/projection kept as witnesses */
template <class F> struct ReducedData {
    FPtr<F> functor;
    std::vector<std::vector<Vec<F>>> incl; // per object: kernel basis columns
};

template <class F> ReducedData<F> reduced_part_data(std::shared_ptr<const FunctorRep<F>> f) {
    const F k = f->k;
    CatPtr c = f->cat;
    auto incl = std::make_shared<std::vector<std::vector<Vec<F>>>>();
    auto solver = std::make_shared<std::vector<Echelon<F>>>();
    FunctorRep<F> fr;
    fr.cat = c;
    fr.k = k;
    fr.name = "red(" + f->name + ")";
    for (uint32_t x = 0; x < c->n_objects(); ++x) {
        SpMat<F> e = f->act(x, x, c->zero_mor(x, x));
        auto ker = sp_kernel(k, e);
        fr.dims.push_back(ker.size());
        // coordinate solver for the kernel basis
        Echelon<F> ech(k, uint32_t(f->dim(x)), uint32_t(ker.size()));
        for (uint32_t i = 0; i < ker.size(); ++i) {
            Vec<F> tag(ker.size(), k.zero());
            tag[i] = k.one();
            ech.insert(ker[i], std::move(tag));
        }
        incl->push_back(std::move(ker));
        solver->push_back(std::move(ech));
    }
    fr.act = [f, k, incl, solver](uint32_t a, uint32_t b, uint64_t m) {
        SpMat<F> fm = f->act(a, b, m);
        const auto& ka = (*incl)[a];
        SpMat<F> out(uint32_t((*incl)[b].size()), uint32_t(ka.size()));
        for (uint32_t j = 0; j < ka.size(); ++j) {
            Vec<F> img = fm.apply(k, ka[j]);
            Vec<F> tag((*incl)[b].size(), k.zero());
            (*solver)[b].reduce(img, &tag);
            for (const auto& x : img)
                check(k.is_zero(x), ErrKind::Validation,
                      "reduced part is not preserved by the action");
            for (uint32_t i = 0; i < tag.size(); ++i)
                if (!k.is_zero(tag[i]))
                    out.col[j].push(i, k.neg(tag[i]));
        }
        return out;
    };
    ReducedData<F> rd;
    rd.incl = *incl;
    rd.functor = seal(std::move(fr));
    return rd;
}

template <class F> FPtr<F> reduced_part(std::shared_ptr<const FunctorRep<F>> f) { return reduced_part_data<F>(f).functor; }

/* ----- hom spaces and tensors over the category ----- */

/* Natural transformations F => G as the kernel of the naturality system.
 * Solved on the generating arrows by default (naturality squares compose);
 * the exhaustive path is kept for cross-validation. */
template <class F> struct HomSpace {
    uint32_t dim = 0;
    // each transformation: per object a dense (dim G(x)) x (dim F(x)) matrix
    std::vector<std::vector<DenseMat<F>>> basis;
};

template <class F>
HomSpace<F> hom_space(const FunctorRep<F>& f, const FunctorRep<F>& g, bool use_generators = true,
                      uint64_t arrow_cap = 20000) {
    check(f.cat->same_as(*g.cat), ErrKind::Validation, "hom space needs one category");
    const F& k = f.k;
    const Cat& c = *f.cat;
    const uint32_t n = c.n_objects();

    std::vector<uint64_t> offset(n + 1, 0);
    for (uint32_t x = 0; x < n; ++x)
        offset[x + 1] = offset[x] + f.dim(x) * g.dim(x);
    uint32_t vars = uint32_t(offset[n]);
    // eta_x entry (r, c) at offset[x] + r * dimF + c
    Echelon<F> eqs(k, vars);

    auto add_arrow = [&](const Arrow& ar) {
        if (eqs.rank() == vars)
            return;
        SpMat<F> fm = f.act(ar.src, ar.dst, ar.mor);
        SpMat<F> gm = g.act(ar.src, ar.dst, ar.mor);
        uint32_t fa = uint32_t(f.dim(ar.src)), fb = uint32_t(f.dim(ar.dst));
        uint32_t gb = uint32_t(g.dim(ar.dst));
        // G(f) eta_a - eta_b F(f) = 0 : one equation per (row in G(b), col in F(a))
        DenseMat<F> gd = DenseMat<F>::from_sparse(k, gm);
        DenseMat<F> fd = DenseMat<F>::from_sparse(k, fm);
        for (uint32_t r = 0; r < gb; ++r)
            for (uint32_t col = 0; col < fa; ++col) {
                Vec<F> eq(vars, k.zero());
                // sum_s G(f)[r][s] * eta_a[s][col]
                for (uint32_t s = 0; s < g.dim(ar.src); ++s)
                    if (!k.is_zero(gd.at(r, s)))
                        eq[offset[ar.src] + size_t(s) * fa + col] = gd.at(r, s);
                // - sum_t eta_b[r][t] * F(f)[t][col]
                for (uint32_t t = 0; t < fb; ++t)
                    if (!k.is_zero(fd.at(t, col)))
                        eq[offset[ar.dst] + size_t(r) * fb + t] =
                            k.sub(eq[offset[ar.dst] + size_t(r) * fb + t], fd.at(t, col));
                eqs.insert(std::move(eq));
            }
    };

    if (use_generators) {
        for (const Arrow& ar : c.generating_arrows())
            add_arrow(ar);
    } else {
        c.for_each_arrow(arrow_cap, add_arrow);
    }

    HomSpace<F> out;
    auto ker = kernel_from_rref(k, eqs);
    out.dim = uint32_t(ker.size());
    for (const auto& v : ker) {
        std::vector<DenseMat<F>> eta;
        for (uint32_t x = 0; x < n; ++x) {
            DenseMat<F> m(k, uint32_t(g.dim(x)), uint32_t(f.dim(x)));
            for (uint32_t r = 0; r < g.dim(x); ++r)
                for (uint32_t col = 0; col < f.dim(x); ++col)
                    m.at(r, col) = v[offset[x] + size_t(r) * f.dim(x) + col];
            eta.push_back(std::move(m));
        }
        out.basis.push_back(std::move(eta));
    }
    return out;
}

/* F (x)_{k[C]} G for F on C^op and G on C: quotient of the direct sum of
 * F(x) (x) G(x) by the naturality relations, with explicit projection. */
template <class F> struct TensorOverCat {
    uint32_t dim = 0;
    uint64_t total = 0;
    std::vector<uint64_t> offset; // block offset per object
    Echelon<F> reducer;           // relation span + chosen basis reps (tagged)
    std::vector<Vec<F>> reps;

    TensorOverCat() : reducer(F{}, 0, 0) {}

    // class coordinates of an element of the direct sum
    Vec<F> coords(const F& k, const Vec<F>& v) const {
        Vec<F> w = v, tag(dim, k.zero());
        reducer.reduce(w, dim ? &tag : nullptr);
        for (const auto& x : w)
            check(k.is_zero(x), ErrKind::Validation, "tensor class reduction failed");
        for (auto& x : tag)
            x = k.neg(x);
        return tag;
    }
};

template <class F>
TensorOverCat<F> tensor_over_cat(const FunctorRep<F>& fop, const FunctorRep<F>& g,
                                 bool use_generators = true, uint64_t arrow_cap = 20000) {
    CatPtr base = fop.cat->as_opposite();
    check(base != nullptr && base->same_as(*g.cat), ErrKind::Validation,
          "tensor over category: first argument must live on the opposite category");
    const F& k = g.k;
    const Cat& c = *g.cat;
    const uint32_t n = c.n_objects();

    TensorOverCat<F> out;
    out.offset.assign(n + 1, 0);
    for (uint32_t x = 0; x < n; ++x)
        out.offset[x + 1] = out.offset[x] + fop.dim(x) * g.dim(x);
    out.total = out.offset[n];
    uint32_t total = uint32_t(out.total);

    Echelon<F> rel(k, total);
    auto add_arrow = [&](const Arrow& ar) {
        // arrow f : a -> b in C; relation F(f)u (x) t - u (x) G(f)t
        uint32_t a = ar.src, b = ar.dst;
        SpMat<F> fm = fop.act(b, a, ar.mor); // F(f) : F(b) -> F(a)
        SpMat<F> gm = g.act(a, b, ar.mor);
        for (uint32_t u = 0; u < fop.dim(b); ++u)
            for (uint32_t t = 0; t < g.dim(a); ++t) {
                Vec<F> eq(total, k.zero());
                for (const auto& [r, x] : fm.col[u].nz)
                    eq[out.offset[a] + size_t(r) * g.dim(a) + t] = x;
                for (const auto& [s, x] : gm.col[t].nz) {
                    auto& slot = eq[out.offset[b] + size_t(u) * g.dim(b) + s];
                    slot = k.sub(slot, x);
                }
                rel.insert(std::move(eq));
            }
    };
    if (use_generators) {
        for (const Arrow& ar : c.generating_arrows())
            add_arrow(ar);
    } else {
        c.for_each_arrow(arrow_cap, add_arrow);
    }

    // choose representatives extending the relation span
    std::vector<Vec<F>> reps;
    {
        Echelon<F> span(k, total);
        for (const auto& r : rel.rows())
            span.insert(r);
        for (uint32_t i = 0; i < total; ++i) {
            Vec<F> e(total, k.zero());
            e[i] = k.one();
            if (span.insert(e)) {
                Vec<F> v(total, k.zero());
                v[i] = k.one();
                reps.push_back(std::move(v));
            }
        }
    }
    out.dim = uint32_t(reps.size());
    out.reps = reps;
    out.reducer = Echelon<F>(k, total, out.dim);
    for (const auto& r : rel.rows())
        out.reducer.insert(r, Vec<F>(out.dim, k.zero()));
    for (uint32_t i = 0; i < out.dim; ++i) {
        Vec<F> tag(out.dim, k.zero());
        tag[i] = k.one();
        out.reducer.insert(reps[i], std::move(tag));
    }
    return out;
}

} // namespace functorlab
