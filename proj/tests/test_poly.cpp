#include <doctest.h>

#include <random>

#include "ffsq/factor.hpp"
#include "ffsq/poly.hpp"

using namespace ffsq;

namespace {

Poly random_poly(const FieldCtxPtr& ctx, int max_deg, std::mt19937_64& rng) {
    std::vector<uint32_t> c(static_cast<size_t>(max_deg) + 1);
    for (auto& x : c) x = static_cast<uint32_t>(rng() % ctx->q());
    return Poly(ctx, std::move(c));
}

}  // namespace

TEST_CASE("ring basics over GF(3)") {
    auto g3 = field_new(3, 1);
    Poly t2m1 = poly_from_ints(g3, {-1, 0, 1});
    Poly tm1 = poly_from_ints(g3, {-1, 1});
    CHECK(gcd(t2m1, tm1) == poly_from_ints(g3, {2, 1}));  // monic form of T-1

    Poly tcube = Poly::monomial(g3.get(), 3);
    CHECK(derivative(tcube).is_zero());  // 3T^2 = 0 in char 3

    Poly t2p1 = poly_from_ints(g3, {1, 0, 1});
    CHECK(eval(t2p1, 1) == 2);
}

TEST_CASE("degree and normalization") {
    auto g3 = field_new(3, 1);
    Poly z = Poly::zero(g3.get());
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK_THROWS_AS(z.deg(), std::invalid_argument);
    Poly with_trailing(g3.get(), std::vector<uint32_t>{1, 2, 0, 0});
    CHECK(with_trailing.deg() == 1);
    CHECK(poly_from_ints(g3, {0, 0, 3}).is_zero());  // 3 = 0 mod 3
}

TEST_CASE("divmod round trip, randomized") {
    std::mt19937_64 rng(12345);
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {3, 2}}) {
        auto F = field_new(p, k);
        for (int trial = 0; trial < 300; ++trial) {
            Poly f = random_poly(F, 7, rng);
            Poly d = random_poly(F, 3, rng);
            if (d.is_zero()) continue;
            auto [quot, rem] = divmod(f, d);
            CHECK(quot * d + rem == f);
            if (!rem.is_zero()) CHECK(rem.deg() < d.deg());
        }
    }
}

TEST_CASE("division errors") {
    auto g3 = field_new(3, 1);
    auto g5 = field_new(5, 1);
    Poly f = poly_from_ints(g3, {1, 1});
    CHECK_THROWS_AS(divmod(f, Poly::zero(g3.get())), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(f * poly_from_ints(g5, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(make_monic(Poly::zero(g3.get())), std::invalid_argument);
}

TEST_CASE("substitution T -> -T^2") {
    auto g3 = field_new(3, 1);
    CHECK(compose_neg_square(poly_from_ints(g3, {1, 1})) == poly_from_ints(g3, {1, 0, 2}));
    CHECK(compose_neg_square(poly_from_ints(g3, {0, 1})) == poly_from_ints(g3, {0, 0, 2}));
    CHECK(compose_neg_square(poly_from_ints(g3, {1, 0, 1})) == poly_from_ints(g3, {1, 0, 0, 0, 1}));

    CHECK(monic_neg_square(poly_from_ints(g3, {1, 1})) == poly_from_ints(g3, {2, 0, 1}));
    CHECK(monic_neg_square(poly_from_ints(g3, {1, 0, 1})) == poly_from_ints(g3, {1, 0, 0, 0, 1}));
    CHECK_THROWS_AS(monic_neg_square(poly_from_ints(g3, {1, 2})), std::invalid_argument);
}

TEST_CASE("compose_neg_square is multiplicative") {
    std::mt19937_64 rng(777);
    auto g9 = field_new(3, 2);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_poly(g9, 4, rng);
        Poly g = random_poly(g9, 3, rng);
        CHECK(compose_neg_square(f * g) == compose_neg_square(f) * compose_neg_square(g));
    }
}

TEST_CASE("monic_neg_square doubles the degree, exhaustively over GF(3)") {
    auto g3 = field_new(3, 1);
    for (uint32_t n = 1; n <= 6; ++n) {
        MonicRange range(g3, n);
        for (uint64_t i = 0; i < range.size(); ++i) {
            Poly f = range.at(i);
            Poly g = monic_neg_square(f);
            CHECK(g.is_monic());
            CHECK(g.deg() == 2 * f.deg());
        }
    }
}

TEST_CASE("norm") {
    auto g9 = field_new(3, 2);
    CHECK(norm(poly_from_ints(g9, {0, 1, 0, 1})) == 729);
    CHECK(norm(Poly::zero(g9.get())) == 0);
    auto g7 = field_new(7, 1);
    CHECK(norm(poly_from_ints(g7, {5})) == 1);
}

TEST_CASE("squarefree detection") {
    auto g3 = field_new(3, 1);
    CHECK(is_squarefree(poly_from_ints(g3, {-1, 0, 1})));
    Poly tp1 = poly_from_ints(g3, {1, 1});
    CHECK(!is_squarefree(tp1 * tp1));
    // T^3 - 1 = (T-1)^3 has zero derivative
    CHECK(!is_squarefree(poly_from_ints(g3, {-1, 0, 0, 1})));
    CHECK_THROWS_AS(is_squarefree(Poly::zero(g3.get())), std::invalid_argument);
}

TEST_CASE("text format") {
    auto g9 = field_new(3, 2);
    Poly f = poly_from_string(g9, "0:0,1:0,2:1");
    REQUIRE(f.deg() == 2);
    CHECK(f.coeff(0) == 0);
    CHECK(f.coeff(1) == 1);
    CHECK(f.coeff(2) == g9->from_coords({2, 1}));
    CHECK(poly_to_string(f) == "0:0,1:0,2:1");

    auto g3 = field_new(3, 1);
    CHECK(poly_to_string(poly_from_ints(g3, {1, 0, 1})) == "1,0,1");
    CHECK(poly_from_string(g3, "1,0,1") == poly_from_ints(g3, {1, 0, 1}));
    CHECK(poly_to_string(Poly::zero(g3.get())) == "0");

    CHECK_THROWS_AS(poly_from_string(g3, "1,x"), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_string(g3, "5,1"), std::invalid_argument);   // 5 >= p
    CHECK_THROWS_AS(poly_from_string(g3, "1:2,1"), std::invalid_argument); // k=1 field
    CHECK_THROWS_AS(poly_from_string(g3, ""), std::invalid_argument);
}

TEST_CASE("text round trip, randomized") {
    std::mt19937_64 rng(99);
    auto g25 = field_new(5, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = random_poly(g25, 5, rng);
        if (f.is_zero()) continue;
        CHECK(poly_from_string(g25, poly_to_string(f)) == f);
    }
}
