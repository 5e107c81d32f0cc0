#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functorlab/homology_engine.hpp>

using namespace functorlab;

using F2 = FpC<2>;
using F3 = FpC<3>;

namespace {

template <class F> bool summaries_equal(const HomologySummary& a, const HomologySummary& b) {
    if (a.lo != b.lo || a.hi != b.hi)
        return false;
    for (int i = a.lo; i <= a.hi; ++i)
        if (!(a.at(i) == b.at(i)))
            return false;
    return true;
}

} // namespace

TEST_CASE("bar complexes satisfy d^2 = 0 and compute Tor_0 = tensor") {
    F3 k;
    auto c = TruncCat::make(FiniteRing::zmod(4), 1);
    auto cop = opposite_cat(c);
    auto fop = standard_projective(k, cop, 1);
    auto g = standard_projective(k, c, 1);
    for (BarMode mode : {BarMode::Unnormalized, BarMode::Normalized}) {
        auto bar = build_bar(*fop, *g, mode, 3);
        auto fc = bar_to_complex(bar);
        fc.validate(); // throws if d^2 != 0
        CHECK(fc.homology_at(0).dim == tensor_over_cat(*fop, *g).dim);
    }
}

TEST_CASE("projectives have vanishing higher Tor and Ext (bar route)") {
    F3 k;
    auto c = TruncCat::make(FiniteRing::zmod(4), 1);
    auto cop = opposite_cat(c);
    EngineOpts opts;
    opts.n_max = 3;
    opts.route = EngineOpts::Route::Bar;
    for (uint32_t co : {0u, 1u}) {
        auto pop = standard_projective(k, cop, co);
        for (auto g : {standard_projective(k, c, 1), constant_functor(k, CatPtr(c), 1)}) {
            auto tor = tor_over_cat<F3>(pop, g, opts);
            CHECK(tor.summary.at(0).free_rank == tensor_over_cat(*pop, *g).dim);
            for (int i = 1; i <= 3; ++i)
                CHECK(tor.summary.at(i).is_zero());
        }
        auto pc = standard_projective(k, c, co);
        for (auto g : {standard_projective(k, c, 1), constant_functor(k, CatPtr(c), 2)}) {
            auto ext = ext_over_cat<F3>(pc, g, opts);
            CHECK(ext.summary.at(0).free_rank == g->dim(co)); // Yoneda in degree 0
            for (int i = 1; i <= 3; ++i)
                CHECK(ext.summary.at(i).is_zero());
        }
    }
}

TEST_CASE("normalized and unnormalized bars have equal homology") {
    F2 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 1);
    auto cop = opposite_cat(c);
    auto fop = standard_projective(k, cop, 1);
    auto g = standard_projective(k, c, 1);
    auto bu = bar_to_complex(build_bar(*fop, *g, BarMode::Unnormalized, 4));
    auto bn = bar_to_complex(build_bar(*fop, *g, BarMode::Normalized, 4));
    bu.validate();
    bn.validate();
    for (uint32_t i = 0; i <= 3; ++i)
        CHECK(bu.homology_at(i).dim == bn.homology_at(i).dim);
    // reduced mode agrees on reduced coefficient functors
    auto rop = reduced_part<F2>(fop);
    auto rg = reduced_part<F2>(g);
    auto br = bar_to_complex(build_bar(*rop, *rg, BarMode::ReducedNormalized, 4));
    auto bn2 = bar_to_complex(build_bar(*rop, *rg, BarMode::Normalized, 4));
    br.validate();
    for (uint32_t i = 0; i <= 3; ++i)
        CHECK(br.homology_at(i).dim == bn2.homology_at(i).dim);
}

TEST_CASE("resolutions are exact and reproduce the bar answers") {
    F3 k;
    auto c = TruncCat::make(FiniteRing::zmod(4), 1);
    auto cop = opposite_cat(c);
    auto g = standard_projective(k, c, 1);
    ResolutionOpts ro;
    ro.length = 4;
    auto r = build_resolution<F3>(g, ro);
    validate_resolution(*r);

    // a non-projective functor: the restricted projective from Z/2
    auto b = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi = quotient_functor(c, b, RingMap::reduction(c->ring(), b->ring()));
    auto ga = restrict_functor(phi, standard_projective(k, b, 1));
    auto ra = build_resolution<F3>(ga, ro);
    validate_resolution(*ra);

    auto fop = restrict_functor(phi->opposite(), standard_projective(k, opposite_cat(b), 1));
    EngineOpts bar_opts, res_opts;
    bar_opts.n_max = res_opts.n_max = 3;
    bar_opts.route = EngineOpts::Route::Bar;
    res_opts.route = EngineOpts::Route::Resolution;
    auto t1 = tor_over_cat<F3>(fop, ga, bar_opts);
    auto t2 = tor_over_cat<F3>(fop, ga, res_opts);
    CHECK(summaries_equal<F3>(t1.summary, t2.summary));
    auto e1 = ext_over_cat<F3>(ga, ga, bar_opts);
    auto e2 = ext_over_cat<F3>(ga, ga, res_opts);
    CHECK(summaries_equal<F3>(e1.summary, e2.summary));
}

TEST_CASE("restriction along Z/4 -> Z/2 with F3 coefficients") {
    // At N = 1 the instance is truncation-sensitive: the rank-2 object is
    // missing, so Tor_1 = Tor_2 = F_3 survive and the comparison maps are
    // only surjective (Tor) / injective (Ext) above degree 0 (hand-checked:
    // the class e_[1] in the first generator block is not a boundary).
    // At N = 2 everything is an isomorphism.
    F3 k;
    for (uint32_t n : {1u, 2u}) {
        auto a = TruncCat::make(FiniteRing::zmod(4), n);
        auto b = TruncCat::make(FiniteRing::zmod(2), n);
        auto phi = quotient_functor(a, b, RingMap::reduction(a->ring(), b->ring()));
        auto fop = standard_projective(k, opposite_cat(b), 1);
        auto g = standard_projective(k, b, 1);

        std::vector<EngineOpts::Route> routes = {EngineOpts::Route::Resolution};
        if (n == 1)
            routes.push_back(EngineOpts::Route::Bar);
        for (auto route : routes) {
            EngineOpts opts;
            opts.n_max = 2;
            opts.route = route;
            auto cmp = tor_comparison<F3>(phi, fop, g, opts);
            REQUIRE(cmp.rows.size() == 3);
            CHECK(cmp.rows[0].lhs_dim == 2); // Tor_0 = dim P^1(1) = 2
            CHECK(cmp.rows[0].verdict == MapVerdict::Iso);
            auto ecmp = ext_comparison<F3>(phi, g, g, opts);
            CHECK(ecmp.rows[0].verdict == MapVerdict::Iso);
            for (int i : {1, 2}) {
                if (n == 1) {
                    CHECK(cmp.rows[i].lhs_dim == 1);
                    CHECK(cmp.rows[i].verdict == MapVerdict::SurjectiveOnly);
                    CHECK(ecmp.rows[i].verdict == MapVerdict::InjectiveOnly);
                } else {
                    CHECK(cmp.rows[i].lhs_dim == 0);
                    CHECK(cmp.rows[i].verdict == MapVerdict::Iso);
                    CHECK(ecmp.rows[i].verdict == MapVerdict::Iso);
                }
            }
        }
    }
}

TEST_CASE("identity comparison maps are isomorphisms") {
    F2 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 1);
    auto idf = identity_functor(c);
    auto fop = standard_projective(k, opposite_cat(c), 1);
    auto g = standard_projective(k, c, 1);
    EngineOpts opts;
    opts.n_max = 2;
    auto cmp = tor_comparison<F2>(idf, fop, g, opts);
    for (const auto& row : cmp.rows)
        CHECK(row.verdict == MapVerdict::Iso);
}

TEST_CASE("no Ext between constant and reduced functors in any degree") {
    F2 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 1);
    auto cst = constant_functor(k, CatPtr(c), 1);
    auto red = reduced_part(standard_projective(k, c, 1));
    EngineOpts opts;
    opts.n_max = 3;
    for (auto route : {EngineOpts::Route::Bar, EngineOpts::Route::Resolution}) {
        opts.route = route;
        auto e = ext_over_cat<F2>(cst, red, opts);
        for (int i = 0; i <= 3; ++i)
            CHECK(e.summary.at(i).is_zero());
        auto e2 = ext_over_cat<F2>(red, cst, opts);
        for (int i = 0; i <= 3; ++i)
            CHECK(e2.summary.at(i).is_zero());
    }
}

TEST_CASE("tensor resolutions resolve external tensors") {
    F3 k;
    auto c = TruncCat::make(FiniteRing::zmod(4), 1);
    ResolutionOpts ro;
    ro.length = 3;
    auto f = standard_projective(k, c, 1);
    auto b = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi = quotient_functor(c, b, RingMap::reduction(c->ring(), b->ring()));
    auto g = restrict_functor(phi, standard_projective(k, b, 1));
    auto q1 = build_resolution<F3>(f, ro);
    auto q2 = build_resolution<F3>(g, ro);
    auto box = external_tensor(f, g);
    auto qt = tensor_resolution<F3>(q1, q2, box);
    validate_resolution(*qt);
    // greedy resolution of the same functor gives the same Tor
    auto boxop = external_tensor(dual_functor(dual_functor(f)), g); // same functor
    EngineOpts opts;
    opts.n_max = 2;
    opts.route = EngineOpts::Route::Resolution;
    auto fop2 = external_tensor(standard_projective(k, opposite_cat(c), 1),
                                restrict_functor(phi->opposite(),
                                                 standard_projective(k, opposite_cat(b), 1)));
    // Tor over the product category via the tensor resolution
    FComplex<F3> tc = tor_complex(*fop2, *qt, 2);
    tc.validate();
    auto rg = build_resolution<F3>(box, ResolutionOpts{3, 200000, 4000});
    FComplex<F3> tg = tor_complex(*fop2, *rg, 2);
    tg.validate();
    for (uint32_t i = 0; i <= 2; ++i)
        CHECK(tc.homology_at(i).dim == tg.homology_at(i).dim);
}

TEST_CASE("contractions satisfy the homotopy identities") {
    F3 k;
    auto c = TruncCat::make(FiniteRing::zmod(4), 1);
    auto b = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi = quotient_functor(c, b, RingMap::reduction(c->ring(), b->ring()));
    auto g = restrict_functor(phi, standard_projective(k, b, 1));
    ResolutionOpts ro;
    ro.length = 3;
    auto r = build_resolution<F3>(g, ro);
    Rng rng(11);
    for (uint32_t x = 0; x < 2; ++x) {
        DirectContraction<F3> con(r, x);
        // eps . eta = id on M(x)
        for (uint64_t t = 0; t < g->dim(x); ++t) {
            Vec<F3> e(g->dim(x), k.zero());
            e[t] = k.one();
            Vec<F3> back = r->aug_at(x).apply(k, con.eta(e));
            CHECK(back == e);
        }
        // d h + h d = 1 in degree 1
        for (int trial = 0; trial < 4; ++trial) {
            Vec<F3> v(r->pdim(1, x), k.zero());
            for (auto& e : v)
                e = k.from_int(int64_t(rng.below(3)));
            Vec<F3> dv = r->diff_at(1, x).apply(k, v);
            Vec<F3> hdv = con.h(0, dv);
            Vec<F3> dhv = r->diff_at(2, x).apply(k, con.h(1, v));
            for (uint32_t t = 0; t < v.size(); ++t)
                CHECK(k.add(hdv[t], dhv[t]) == v[t]);
        }
    }
}
