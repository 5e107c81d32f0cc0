#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <functorlab/add_functor.hpp>
#include <functorlab/cat.hpp>

using namespace functorlab;

TEST_CASE("hom-set sizes of truncated matrix categories") {
    auto c = TruncCat::make(FiniteRing::fp(2), 1);
    CHECK(c->n_objects() == 2);
    CHECK(c->hom_size(1, 1) == 2);

    auto c4 = TruncCat::make(FiniteRing::zmod(4), 1);
    CHECK(c4->hom_size(1, 1) == 4);

    auto c2 = TruncCat::make(FiniteRing::fp(2), 2);
    CHECK(c2->hom_size(2, 2) == 16);
    CHECK(c2->hom_size(1, 2) == 4);
    CHECK(c2->hom_size(0, 2) == 1);

    CHECK_THROWS_WITH_AS(TruncCat::make(FiniteRing::zmod(6), 3),
                         doctest::Contains("instance too large"), Error);
}

TEST_CASE("category laws hold exhaustively on small instances") {
    validate_category(TruncCat::make(FiniteRing::fp(2), 2));
    validate_category(TruncCat::make(FiniteRing::zmod(4), 1));
    validate_category(TruncCat::make(FiniteRing::zmod(6), 1));
    auto c = TruncCat::make(FiniteRing::fp(2), 1);
    validate_category(product_cat(c, c));
    validate_category(opposite_cat(TruncCat::make(FiniteRing::zmod(4), 1)));
}

TEST_CASE("biproducts and the truncation bound") {
    auto c = TruncCat::make(FiniteRing::fp(2), 2);
    CHECK(c->biproduct(0, 1).obj == 1);
    CHECK(c->biproduct(1, 1).obj == 2);
    // proj_i . inj_j = delta_ij, inj1 proj1 + inj2 proj2 = id
    auto bp = c->biproduct(1, 1);
    CHECK(c->compose(1, 2, 1, bp.inj1, bp.proj1) == c->identity(1));
    CHECK(c->compose(1, 2, 1, bp.inj1, bp.proj2) == c->zero_mor(1, 1));
    uint64_t e11 = c->compose(2, 1, 2, bp.proj1, bp.inj1);
    uint64_t e22 = c->compose(2, 1, 2, bp.proj2, bp.inj2);
    CHECK(c->mor_add(2, 2, e11, e22) == c->identity(2));

    auto c1 = TruncCat::make(FiniteRing::fp(2), 1);
    CHECK_THROWS_WITH_AS(c1->biproduct(1, 1), doctest::Contains("truncation"), Error);
}

TEST_CASE("generating arrows generate every morphism under composition") {
    for (auto c : {TruncCat::make(FiniteRing::fp(2), 2), TruncCat::make(FiniteRing::zmod(4), 1),
                   TruncCat::make(FiniteRing::zmod(6), 2)}) {
        std::set<Arrow> have;
        for (uint32_t o = 0; o < c->n_objects(); ++o)
            have.insert(Arrow{o, o, c->identity(o)});
        for (const auto& g : c->generating_arrows())
            have.insert(g);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Arrow> cur(have.begin(), have.end());
            for (const auto& f : cur)
                for (const auto& g : cur) {
                    if (f.dst != g.src)
                        continue;
                    Arrow h{f.src, g.dst, c->compose(f.src, f.dst, g.dst, f.mor, g.mor)};
                    if (have.insert(h).second)
                        grew = true;
                }
        }
        CHECK(have.size() == c->total_arrows());
    }
}

TEST_CASE("morphism group coordinates round-trip") {
    auto c = TruncCat::make(FiniteRing::zmod(6), 1);
    for (uint64_t f = 0; f < c->hom_size(1, 1); ++f)
        CHECK(c->mor_from_coords(1, 1, c->mor_coords(1, 1, f)) == f);
    auto orders = c->hom_group_orders(1, 1);
    CHECK(orders == std::vector<uint32_t>{6});
}

TEST_CASE("quotient functor fibers") {
    auto a = TruncCat::make(FiniteRing::zmod(4), 1);
    auto b = TruncCat::make(FiniteRing::zmod(2), 1);
    auto rm = RingMap::reduction(a->ring(), b->ring());
    auto phi = quotient_functor(a, b, rm);
    phi->validate();
    // hom(1,1): 4 -> 2, fibers of size 2
    std::map<uint64_t, int> fiber;
    for (uint64_t f = 0; f < 4; ++f)
        fiber[phi->mor(1, 1, f)]++;
    CHECK(fiber.size() == 2);
    for (auto& [k, v] : fiber)
        CHECK(v == 2);

    auto a6 = TruncCat::make(FiniteRing::zmod(6), 1);
    auto b2 = TruncCat::make(FiniteRing::zmod(2), 1);
    auto phi6 = quotient_functor(a6, b2, RingMap::reduction(a6->ring(), b2->ring()));
    phi6->validate();
    std::map<uint64_t, int> fiber6;
    for (uint64_t f = 0; f < 6; ++f)
        fiber6[phi6->mor(1, 1, f)]++;
    CHECK(fiber6.size() == 2);
    for (auto& [k, v] : fiber6)
        CHECK(v == 3);

    CHECK(RingMap::identity(a->ring()).is_identity());
    // non-surjective maps are rejected outright by the table validator
    // (a unital additive map Z/4 -> Z/4 hitting only {0,2} cannot exist,
    //  so surjectivity failures show up through projection maps instead)
    auto pr = RingMap::projection(FiniteRing::product(FiniteRing::zmod(2), FiniteRing::zmod(3)),
                                  {0});
    CHECK(pr.is_surjective());
    CHECK(pr.to().size() == 2);
}

TEST_CASE("diagonal and sum functors") {
    auto c = TruncCat::make(FiniteRing::fp(2), 1);
    auto big = TruncCat::make(FiniteRing::fp(2), 2);
    auto d = diagonal_functor(c);
    d->validate();
    auto s = sum_functor(c, big);
    s->validate();
    // Sigma(Delta(x)) = x (+) x
    auto sd = compose_functors(d, s);
    CHECK(sd->obj(1) == 2);
    sd->validate();
    // opposite lift stays functorial
    s->opposite()->validate();
}

TEST_CASE("k-triviality of hom groups") {
    auto c = TruncCat::make(FiniteRing::zmod(2), 2);
    CHECK(check_k_trivial(c, RingTag::fp(3)).trivial);
    auto v = check_k_trivial(c, RingTag::fp(2));
    CHECK_FALSE(v.trivial);
    CHECK(v.witness_x == 1); // hom(1,1) = Z/2 is the first nonzero hom group
    CHECK(v.witness_y == 1);
    CHECK(check_k_trivial(c, RingTag::rationals()).trivial);
}

TEST_CASE("ring pairs with vanishing tensor have invertible characteristic") {
    // gcd(char R, char S) = 1 on the instance ring pairs used downstream
    auto pairs = {std::pair{FiniteRing::zmod(4), FiniteRing::zmod(3)},
                  std::pair{FiniteRing::zmod(2), FiniteRing::zmod(9)}};
    for (const auto& [r, s] : pairs) {
        bool tensor_zero = std::gcd(r.characteristic(), s.characteristic()) == 1;
        REQUIRE(tensor_zero);
        // char R must be a unit in S
        uint32_t c = r.characteristic() % s.characteristic();
        uint32_t code = 0;
        for (uint32_t i = 0; i < c; ++i)
            code = s.add(code, s.one());
        CHECK(s.is_unit(code));
    }
    // control: Z/4 (x) Z/2 != 0 and 4 is not a unit in Z/2
    CHECK(std::gcd(4u, 2u) != 1);
}

TEST_CASE("opposite categories compose correctly") {
    auto c = TruncCat::make(FiniteRing::zmod(4), 1);
    auto op = opposite_cat(c);
    CHECK(opposite_cat(op)->same_as(*c)); // op(op(C)) = C
    // hom sizes swap
    auto c2 = TruncCat::make(FiniteRing::fp(2), 2);
    auto op2 = opposite_cat(c2);
    CHECK(op2->hom_size(1, 2) == c2->hom_size(2, 1));
}
