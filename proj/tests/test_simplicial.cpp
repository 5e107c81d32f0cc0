#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functorlab/fcomplex.hpp>
#include <functorlab/simplicial.hpp>

using namespace functorlab;

TEST_CASE("Eilenberg-MacLane models via the Dold-Kan image") {
    auto x = em_space({2}, 1, 5);
    x.validate();
    // degree m group is (Z/2)^m (nerve identification)
    for (uint32_t m = 0; m <= 5; ++m)
        CHECK(x.grp[m].rank == m);

    auto x2 = em_space({2}, 2, 5);
    x2.validate();
    CHECK(count_surjections(4, 2) == 6);
    CHECK(x2.grp[4].rank == 6);

    auto c = constant_simplicial({3}, 3);
    c.validate();
    for (uint32_t m = 0; m <= 3; ++m)
        CHECK(c.grp[m].rank == 1);
}

TEST_CASE("homotopy of EM spaces is concentrated in one degree") {
    auto x = em_space({2}, 1, 4);
    auto pi = homotopy_groups(x, 3);
    CHECK(pi.summary.at(0).is_zero());
    CHECK(pi.summary.at(1).torsion == std::vector<mpz_class>{2});
    CHECK(pi.summary.at(2).is_zero());
    CHECK(pi.summary.at(3).is_zero());

    auto x2 = em_space({4}, 2, 4);
    auto pi2 = homotopy_groups(x2, 3);
    CHECK(pi2.summary.at(1).is_zero());
    CHECK(pi2.summary.at(2).torsion == std::vector<mpz_class>{4});
    CHECK(pi2.summary.at(3).is_zero());

    auto c = constant_simplicial({6}, 3);
    auto pic = homotopy_groups(c, 2);
    CHECK(pic.summary.at(0).torsion == std::vector<mpz_class>{6});
    CHECK(pic.summary.at(1).is_zero());

    // certified range only up to T-1
    CHECK_THROWS_AS(homotopy_groups(x, 4), Error);
}

TEST_CASE("Moore homotopy agrees with the unnormalized complex") {
    for (auto x : {em_space({2}, 1, 4), em_space({2}, 2, 4), em_space({2, 2}, 1, 3)}) {
        auto pi = homotopy_groups(x, x.T - 1);
        auto moore = moore_homotopy(x, x.T - 1);
        for (uint32_t i = 0; i + 1 <= x.T; ++i)
            CHECK(pi.summary.at(int(i)) == moore.at(int(i)));
    }
}

TEST_CASE("integral homotopy of the linearized circle-like space") {
    // pi_* Z[K(Z/2,1)] = (Z, Z/2, 0, Z/2) in degrees 0..3
    auto x = em_space({2}, 1, 4);
    auto z = linearize_z(x, 3, 4096);
    CHECK(z.pi.summary.at(0).free_rank == 1);
    CHECK(z.pi.summary.at(0).torsion.empty());
    CHECK(z.pi.summary.at(1).torsion == std::vector<mpz_class>{2});
    CHECK(z.pi.summary.at(2).is_zero());
    CHECK(z.pi.summary.at(3).torsion == std::vector<mpz_class>{2});

    // linearization cap: K(Z/2,2) at T = 6 has a degreewise set of size 2^15
    auto big = em_space({2}, 2, 6);
    CHECK_THROWS_AS(linearize_z(big, 5, 4096), Error);
}

TEST_CASE("Hurewicz maps are split injective with the canonical retraction") {
    auto x = em_space({2}, 1, 4);
    auto rep = hurewicz_map(x, 3, 4096);
    REQUIRE(rep.degs.size() == 4);
    for (const auto& d : rep.degs)
        CHECK(d.split_injective);
    // 0-connected: h_1 is an isomorphism
    CHECK(rep.degs[1].iso);
    CHECK(rep.degs[1].additive_ok);

    auto c = constant_simplicial({2}, 2);
    auto repc = hurewicz_map(c, 1, 4096);
    CHECK(repc.degs[0].split_injective); // h_0 is the canonical set map
}

TEST_CASE("k-negligible groups") {
    CHECK(k_negligible({2}, RingTag::fp(3)));
    CHECK_FALSE(k_negligible({2}, RingTag::fp(2)));
    CHECK(k_negligible({}, RingTag::fp(2)));
    CHECK(k_negligible({2, 4}, RingTag::rationals()));
}

TEST_CASE("field linearization has vanishing positive homotopy for negligible A") {
    // pi_i F3[K(Z/2,1)] = 0 for 0 < i <= 3 (k-local vanishing)
    using F3 = FpC<3>;
    F3 k;
    auto x = em_space({2}, 1, 4);
    auto set = underlying_set(x, 4096);
    FComplex<F3> c;
    c.k = k;
    for (uint32_t m = 0; m <= 4; ++m)
        c.dims.push_back(uint32_t(set.size[m]));
    c.d.resize(5);
    c.d[0] = SpMat<F3>(0, c.dims[0]);
    for (uint32_t m = 1; m <= 4; ++m) {
        SpMat<F3> d(c.dims[m - 1], c.dims[m]);
        for (uint32_t i = 0; i <= m; ++i)
            for (uint64_t e = 0; e < set.size[m]; ++e)
                d.col[e].push(uint32_t(set.face[m][i][e]),
                              i % 2 == 0 ? k.one() : k.neg(k.one()));
        c.d[m] = std::move(d);
    }
    c.validate();
    CHECK(c.homology_at(0).dim == 1); // pi_0 k[X] = k[pi_0 X] = k
    for (uint32_t i = 1; i <= 3; ++i)
        CHECK(c.homology_at(i).dim == 0);
}
