#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <functorlab/abelian.hpp>
#include <functorlab/chain.hpp>
#include <functorlab/matrix.hpp>
#include <functorlab/snf.hpp>
#include <functorlab/util.hpp>

using namespace functorlab;

namespace {

Matrix zmat(uint32_t r, uint32_t c, std::initializer_list<long> vals) {
    Matrix m(RingTag::integers(), r, c);
    auto it = vals.begin();
    for (uint32_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < c; ++j)
            m.set(i, j, Scalar(RingTag::integers(), *it++));
    return m;
}

// gcd of all k x k minors, brute force (independent oracle for the SNF test)
mpz_class minor_gcd(const Matrix& m, uint32_t k) {
    auto d = m.dense();
    std::vector<uint32_t> rows(k), cols(k);
    mpz_class g = 0;
    std::function<void(uint32_t, uint32_t)> pick_cols = [&](uint32_t ci, uint32_t start) {
        if (ci == k) {
            std::function<mpz_class(std::vector<uint32_t>, std::vector<uint32_t>)> det =
                [&](std::vector<uint32_t> rs, std::vector<uint32_t> cs) -> mpz_class {
                if (rs.empty())
                    return 1;
                mpz_class s = 0;
                for (size_t i = 0; i < rs.size(); ++i) {
                    auto rs2 = rs;
                    rs2.erase(rs2.begin() + long(i));
                    auto cs2 = cs;
                    cs2.erase(cs2.begin());
                    mpz_class term = d[rs[i]][cs[0]].num() * det(rs2, cs2);
                    s += (i % 2 == 0) ? term : -term;
                }
                return s;
            };
            mpz_class v = det(rows, cols);
            g = gcd(g, v);
            return;
        }
        for (uint32_t c = start; c < m.cols(); ++c) {
            cols[ci] = c;
            pick_cols(ci + 1, c + 1);
        }
    };
    std::function<void(uint32_t, uint32_t)> pick_rows = [&](uint32_t ri, uint32_t start) {
        if (ri == k) {
            pick_cols(0, 0);
            return;
        }
        for (uint32_t r = start; r < m.rows(); ++r) {
            rows[ri] = r;
            pick_rows(ri + 1, r + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

} // namespace

TEST_CASE("smith normal form on the stated examples") {
    auto id2 = Matrix::identity(RingTag::integers(), 2);
    auto s = smith_normal_form(id2);
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<mpz_class>{1, 1});

    Matrix z(RingTag::integers(), 3, 2);
    s = smith_normal_form(z);
    CHECK(s.rank == 0);
    CHECK(s.invariant_factors.empty());

    // diag(2,3) -> (1,6) by hand row/column reduction
    auto d23 = zmat(2, 2, {2, 0, 0, 3});
    s = smith_normal_form(d23);
    CHECK(s.invariant_factors == std::vector<mpz_class>{1, 6});

    // empty matrix allowed
    Matrix e(RingTag::integers(), 0, 0);
    CHECK(smith_normal_form(e).invariant_factors.empty());
}

TEST_CASE("snf transforms multiply back to the diagonal form") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(RingTag::integers(), 3, 4);
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 4; ++j)
                m.set(i, j, Scalar(RingTag::integers(), rng.range(-5, 5)));
        auto s = smith_normal_form(m, true);
        ZMat lar = zmat_mul(zmat_mul(s.L, zmat_from(m)), s.R);
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 4; ++j) {
                mpz_class want = (i == j && i < s.rank) ? s.invariant_factors[i] : 0;
                CHECK(lar[i][j] == want);
            }
        ZMat li = zmat_mul(s.L, s.Linv);
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 3; ++j)
                CHECK(li[i][j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("product of first i invariant factors equals the gcd of i x i minors") {
    Rng rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        Matrix m(RingTag::integers(), 3, 4);
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 4; ++j)
                m.set(i, j, Scalar(RingTag::integers(), rng.range(-5, 5)));
        auto s = smith_normal_form(m);
        mpz_class prod = 1;
        for (uint32_t i = 1; i <= 3; ++i) {
            mpz_class g = minor_gcd(m, i);
            if (i <= s.rank) {
                prod *= s.invariant_factors[i - 1];
                CHECK(g == prod);
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("rank/kernel/cokernel over small fields") {
    auto f3 = RingTag::fp(3);
    auto id = Matrix::identity(f3, 4);
    auto rk = rank_kernel_cokernel(id);
    CHECK(rk.rank == 4);
    CHECK(rk.kernel.empty());
    CHECK(rk.coker_dim == 0);

    Matrix z(f3, 2, 3);
    rk = rank_kernel_cokernel(z);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 3);

    auto f2 = RingTag::fp(2);
    Matrix m(f2, 2, 2);
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j)
            m.set(i, j, Scalar::one(f2));
    rk = rank_kernel_cokernel(m);
    CHECK(rk.rank == 1);
    CHECK(rk.kernel.size() == 1);

    CHECK_THROWS_AS(rank_kernel_cokernel(Matrix(RingTag::integers(), 1, 1)), Error);
}

TEST_CASE("homology of stated complexes") {
    // 0 -> Z --2--> Z -> 0 in degrees 1, 0
    ChainComplex c(RingTag::integers(), 0, {1, 1});
    c.set_diff(1, zmat(1, 1, {2}));
    auto h = homology(c);
    CHECK(h.at(0).free_rank == 0);
    CHECK(h.at(0).torsion == std::vector<mpz_class>{2});
    CHECK(h.at(1).is_zero());

    // zero maps: H_n = C_n
    ChainComplex z(RingTag::integers(), 0, {2, 3, 1});
    auto hz = homology(z);
    CHECK(hz.at(0).free_rank == 2);
    CHECK(hz.at(1).free_rank == 3);
    CHECK(hz.at(2).free_rank == 1);

    // shift invariance
    auto hs = homology(c.shifted(5));
    CHECK(hs.at(5).torsion == std::vector<mpz_class>{2});
}

TEST_CASE("d^2 != 0 is rejected with the failing degree") {
    ChainComplex c(RingTag::integers(), 0, {1, 1, 1});
    c.set_diff(1, zmat(1, 1, {1}));
    c.set_diff(2, zmat(1, 1, {1}));
    CHECK_THROWS_WITH_AS(homology(c), doctest::Contains("d^2 != 0"), Error);
}

TEST_CASE("bar complex of Z/2 over Z truncated at degree 4 (group homology oracle)") {
    // Normalized bar complex of the group Z/2 over Z: one basis chain per
    // degree; inner faces hit the unit and die, end faces contribute
    // 1 + (-1)^n. Classical answer: (Z, Z/2, 0, Z/2, 0) in degrees 0..4.
    ChainComplex c(RingTag::integers(), 0, {1, 1, 1, 1, 1, 1});
    for (int n = 1; n <= 5; ++n) {
        long coeff = (n % 2 == 0) ? 2 : 0;
        Matrix d(RingTag::integers(), 1, 1);
        d.set(0, 0, Scalar(RingTag::integers(), coeff));
        c.set_diff(n, d);
    }
    auto h = homology(c);
    CHECK(h.at(0).free_rank == 1);
    CHECK(h.at(1).torsion == std::vector<mpz_class>{2});
    CHECK(h.at(2).is_zero());
    CHECK(h.at(3).torsion == std::vector<mpz_class>{2});
    CHECK(h.at(4).is_zero());
}

TEST_CASE("euler characteristic matches over a field") {
    auto f2 = RingTag::fp(2);
    ChainComplex c(f2, 0, {2, 2, 1});
    Matrix d1(f2, 2, 2);
    d1.set(0, 0, Scalar::one(f2));
    d1.set(1, 0, Scalar::one(f2));
    c.set_diff(1, d1);
    Matrix d2(f2, 2, 1);
    d2.set(1, 0, Scalar::one(f2)); // lands in ker d1
    c.set_diff(2, d2);
    auto h = homology(c);
    long chi_c = 2 - 2 + 1;
    long chi_h = long(h.at(0).free_rank) - long(h.at(1).free_rank) + long(h.at(2).free_rank);
    CHECK(chi_c == chi_h);
}

TEST_CASE("universal coefficients from invariant factors") {
    HomologySummary h;
    h.tag = RingTag::integers();
    h.lo = 0;
    h.hi = 0;
    HomologySummary::Deg d;

    d.torsion = {2}; // H = Z/2
    h.degs = {d};
    auto uc = universal_coefficients(h, RingTag::fp(3));
    CHECK(uc.tensor_at(0) == 0);
    CHECK(uc.tor1_at(0) == 0);

    d.torsion.clear();
    d.free_rank = 1; // H = Z
    h.degs = {d};
    uc = universal_coefficients(h, RingTag::rationals());
    CHECK(uc.tensor_at(0) == 1);
    CHECK(uc.tor1_at(0) == 0);

    d.free_rank = 1;
    d.torsion = {2}; // H = Z + Z/2
    h.degs = {d};
    uc = universal_coefficients(h, RingTag::fp(2));
    CHECK(uc.tensor_at(0) == 2);
    CHECK(uc.tor1_at(0) == 1);

    CHECK_THROWS_AS(universal_coefficients(h, RingTag::integers()), Error);

    // no p-torsion: Tor_1 = 0
    d.free_rank = 3;
    d.torsion = {5, 25};
    h.degs = {d};
    uc = universal_coefficients(h, RingTag::fp(2));
    CHECK(uc.tor1_at(0) == 0);
}

TEST_CASE("presented abelian group homology with generators") {
    // Z/4 --*2--> Z/4 --0--> 0 : homology Z/4 / im(2) = Z/2, generator 1
    PresentedAb g = PresentedAb::from_orders({4});
    AbMap two{g, g, {{2}}};
    AbHomologyAt at = ab_homology_at(g, &two, nullptr);
    REQUIRE(at.orders.size() == 1);
    CHECK(at.orders[0] == 2);
    std::vector<mpz_class> gen(1);
    gen[0] = at.gens[0][0];
    auto c = at.coords(gen);
    CHECK(c[0] % 2 == 1);

    // the periodic complex Z/4 --2--> Z/4 --2--> Z/4 is exact in the middle
    AbHomologyAt mid = ab_homology_at(g, &two, &two);
    CHECK(mid.orders.empty());
}

TEST_CASE("scalar canonicalization and arithmetic") {
    auto f5 = RingTag::fp(5);
    Scalar a(f5, -3);
    CHECK(a.str() == "2");
    CHECK((a * a.inv()).is_one());
    Scalar q(RingTag::rationals(), mpq_class(6, 4));
    CHECK(q.str() == "3/2");
    CHECK_THROWS_AS(Scalar(RingTag::integers(), mpq_class(1, 2)), Error);
    CHECK_THROWS_AS(Scalar(RingTag::integers(), 2).inv(), Error);
}
