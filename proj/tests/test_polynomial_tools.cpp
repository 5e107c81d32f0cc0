#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functorlab/algebra_tor.hpp>
#include <functorlab/ring_tor.hpp>
#include <functorlab/cross_effects.hpp>

using namespace functorlab;

using F2 = FpC<2>;
using F3 = FpC<3>;

TEST_CASE("first cross-effect is the reduced part") {
    F2 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 2);
    auto p1 = standard_projective(k, c, 1);
    auto red = reduced_part(p1);
    for (uint32_t x : {1u, 2u}) {
        auto rep = cross_effect(*p1, 1, {x});
        CHECK(rep.cr_dim == red->dim(x));
        CHECK(rep.dim_f0 == p1->dim(0));
    }
}

TEST_CASE("second cross-effect of P^1 on the rank-2 window") {
    F2 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 2);
    auto p1 = standard_projective(k, c, 1);
    auto rep = cross_effect(*p1, 2, {1, 1});
    // dim F(1(+)1) = |hom(1,2)| = 4 splits as 1 + 1 + 1 + cr_2
    CHECK(rep.total_dim == 4);
    CHECK(rep.dim_f0 == 1);
    CHECK(rep.cr_dim == 1);
    CHECK(rep.identity_holds);

    // symmetry of the cross-effect under permuting the tuple happens to be
    // invisible at (1,1); check a mixed tuple on the rank-3 window instead
    auto c3 = TruncCat::make(FiniteRing::fp(2), 3);
    auto q1 = standard_projective(k, c3, 1);
    auto r12 = cross_effect(*q1, 2, {1, 2});
    auto r21 = cross_effect(*q1, 2, {2, 1});
    CHECK(r12.cr_dim == r21.cr_dim);

    // constant functors have no positive cross-effects
    auto cst = constant_functor(k, CatPtr(c), 2);
    CHECK(cross_effect(*cst, 1, {1}).cr_dim == 0);
    CHECK(cross_effect(*cst, 2, {1, 1}).cr_dim == 0);
}

TEST_CASE("reduced linearization cross-effect dimension formula") {
    // dim cr_2 k[G](x,y) = (|G(x)|-1)(|G(y)|-1) * dim k[G(0)] for additive G
    F3 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 2);
    auto kg = linearize(k, AbGroupFunctor::hom_functor(c, 1));
    auto rep = cross_effect(*kg, 2, {1, 1});
    CHECK(rep.cr_dim == (2 - 1) * (2 - 1) * 1);
}

TEST_CASE("polynomial degree within the truncation window") {
    F2 k;
    auto c = TruncCat::make(FiniteRing::fp(2), 2);
    auto h1 = additive_standard(k, c, 1);
    auto pd = poly_degree(*h1, 3);
    REQUIRE(pd.bounded);
    CHECK(pd.degree == 1);

    auto cst = constant_functor(k, CatPtr(c), 1);
    auto pd0 = poly_degree(*cst, 3);
    REQUIRE(pd0.bounded);
    CHECK(pd0.degree == 0);

    auto c3 = TruncCat::make(FiniteRing::fp(2), 3);
    auto p1 = standard_projective(k, c3, 1);
    auto pdp = poly_degree(*p1, 3);
    CHECK_FALSE(pdp.bounded); // ">= 3"

    // tuples beyond the window raise the truncation error
    auto c1 = TruncCat::make(FiniteRing::fp(2), 1);
    auto q = standard_projective(k, c1, 1);
    CHECK_THROWS_AS(cross_effect_vanishes(*q, 2), Error);

    // subadditivity of the degree under (x), on a window wide enough for cr_3
    auto c4 = TruncCat::make(FiniteRing::fp(2), 4);
    auto h14 = additive_standard(k, c4, 1);
    auto t = pointwise_tensor(h14, h14);
    auto pdt = poly_degree(*t, 3);
    REQUIRE(pdt.bounded);
    CHECK(pdt.degree == 2);
}

TEST_CASE("factorization through additive quotients") {
    F3 k;
    auto a = TruncCat::make(FiniteRing::zmod(4), 1);
    auto b = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi = quotient_functor(a, b, RingMap::reduction(a->ring(), b->ring()));

    auto g = standard_projective(k, b, 1);
    auto f = restrict_functor(phi, g);
    auto ft = factors_through<F3>(phi, f);
    REQUIRE(ft.factors);
    CHECK(ft.descended->dims == g->dims);
    for (uint64_t m = 0; m < b->hom_size(1, 1); ++m)
        CHECK(ft.descended->act(1, 1, m).equals(k, g->act(1, 1, m)));

    auto pa = standard_projective(k, a, 1);
    auto nf = factors_through<F3>(phi, pa);
    CHECK_FALSE(nf.factors);

    auto cst = constant_functor(k, CatPtr(a), 1);
    CHECK(factors_through<F3>(phi, cst).factors);
}

TEST_CASE("antipolynomial functors via a k-trivial quotient") {
    auto a = TruncCat::make(FiniteRing::zmod(6), 1);
    auto b = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi = quotient_functor(a, b, RingMap::reduction(a->ring(), b->ring()));

    {
        F3 k;
        auto f = restrict_functor(phi, standard_projective(k, b, 1));
        auto v = is_antipolynomial_via<F3>(phi, f);
        CHECK(v.antipolynomial); // exponent 2 invertible mod 3
        auto cst = constant_functor(k, CatPtr(a), 1);
        CHECK(is_antipolynomial_via<F3>(phi, cst).antipolynomial);
    }
    {
        F2 k;
        auto f = restrict_functor(phi, standard_projective(k, b, 1));
        auto v = is_antipolynomial_via<F2>(phi, f);
        CHECK_FALSE(v.antipolynomial); // target not 2-trivial
        CHECK(v.factors);
        CHECK_FALSE(v.target_k_trivial);
    }
}

TEST_CASE("AP-type bifunctors") {
    F3 k;
    auto a = TruncCat::make(FiniteRing::zmod(6), 2);
    auto b = TruncCat::make(FiniteRing::zmod(2), 2);
    auto phi = quotient_functor(a, b, RingMap::reduction(a->ring(), b->ring()));

    auto a1 = restrict_functor(phi, standard_projective(k, b, 1)); // antipolynomial
    auto p1 = additive_standard(k, a, 1);                          // degree <= 1
    auto box = external_tensor(a1, p1);
    auto v = ap_type_check<F3>(box, phi, 2);
    CHECK(v.ap_type);

    auto cst = external_tensor(constant_functor(k, CatPtr(a), 1),
                               constant_functor(k, CatPtr(a), 1));
    CHECK(ap_type_check<F3>(cst, phi, 1).ap_type);

    // the rank-2 cross effect is out of reach at N = 1: truncation error
    auto a1n = TruncCat::make(FiniteRing::zmod(6), 1);
    auto b1n = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi1 = quotient_functor(a1n, b1n, RingMap::reduction(a1n->ring(), b1n->ring()));
    auto box1 = external_tensor(restrict_functor(phi1, standard_projective(k, b1n, 1)),
                                additive_standard(k, a1n, 1));
    CHECK_THROWS_AS(ap_type_check<F3>(box1, phi1, 2), Error);

    // standard projective bifunctor fails on the antipolynomial slot for F2
    F2 k2;
    auto a2 = TruncCat::make(FiniteRing::zmod(2), 2);
    auto phi2 = identity_functor(a2);
    auto pp = external_tensor(standard_projective(k2, a2, 1), standard_projective(k2, a2, 1));
    auto w = ap_type_check<F2>(pp, phi2, 2);
    CHECK_FALSE(w.ap_type); // identity target is not 2-trivial
}

TEST_CASE("dual-numbers Tor is one-dimensional in every degree") {
    F2 k;
    auto alg = KAlgebra<F2>::dual_numbers(k);
    auto m = dual_numbers_residue(alg);
    auto bar = algebra_tor(alg, m, m, 4);
    auto res = algebra_tor_resolution(alg, m, m, 4);
    for (int i = 0; i <= 4; ++i) {
        CHECK(bar.at(i).free_rank == 1);
        CHECK(res.at(i).free_rank == 1);
    }
    // over a field (R (x) k semisimple) all higher Tor vanish
    auto fld = KAlgebra<F2>::ring_tensor(FiniteRing::zmod(4), k);
    CHECK(fld.dim == 1);
    KModule<F2> triv;
    triv.dim = 1;
    {
        DenseMat<F2> one(k, 1, 1);
        one.at(0, 0) = k.one();
        triv.act = {one};
    }
    auto t = algebra_tor(fld, triv, triv, 3);
    CHECK(t.at(0).free_rank == 1);
    for (int i = 1; i <= 3; ++i)
        CHECK(t.at(i).is_zero());
}

TEST_CASE("integral ring Tor matches the periodic resolutions") {
    // Z/4-modules: Tor_i(Z/2, Z/2) = Z/2 for all i
    auto rm = RingMap::reduction(FiniteRing::zmod(4), FiniteRing::zmod(2));
    auto s = RMod::via_map(rm);
    s.validate();
    auto tor = ring_tor_z(s, s, 4);
    for (int i = 0; i <= 4; ++i) {
        CHECK(tor.at(i).free_rank == 0);
        CHECK(tor.at(i).torsion == std::vector<mpz_class>{2});
    }
    // identity map: S = R, higher Tor vanishes
    auto idm = RingMap::identity(FiniteRing::zmod(4));
    auto r = RMod::via_map(idm);
    auto tor_id = ring_tor_z(r, r, 3);
    CHECK(tor_id.at(0).torsion == std::vector<mpz_class>{4});
    for (int i = 1; i <= 3; ++i)
        CHECK(tor_id.at(i).is_zero());

    // excision criterion: Z/4 -> Z/2 satisfied for F3, violated for F2
    auto ok = excision_criterion(rm, RingTag::fp(3), 3);
    CHECK(ok.satisfied);
    auto bad = excision_criterion(rm, RingTag::fp(2), 3);
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.first_violation_i == 1);
    // Z/6 -> Z/2: T_i = Tor^{Z/6}(Z/2, Z/2): the 2-part is periodic
    auto rm6 = RingMap::reduction(FiniteRing::zmod(6), FiniteRing::zmod(2));
    auto s6 = RMod::via_map(rm6);
    auto t6 = ring_tor_z(s6, s6, 2);
    CHECK(t6.at(0).torsion == std::vector<mpz_class>{2});
    CHECK(excision_criterion(rm6, RingTag::fp(3), 3).satisfied);
}
