#include <doctest.h>

#include "ffsq/factor.hpp"

using namespace ffsq;

namespace {

Poly product(const Factorization& fac) {
    Poly acc = Poly::one(fac.input.ctx());
    for (auto& t : fac.factors)
        for (uint32_t i = 0; i < t.multiplicity; ++i) acc = acc * t.prime;
    return acc;
}

void check_valid(const Factorization& fac) {
    CHECK(product(fac) == fac.input);
    int degsum = 0;
    for (size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& t = fac.factors[i];
        CHECK(t.prime.is_monic());
        CHECK(t.multiplicity >= 1);
        CHECK(is_irreducible(t.prime));
        degsum += t.prime.deg() * static_cast<int>(t.multiplicity);
        if (i > 0) CHECK(canonical_less(fac.factors[i - 1].prime, t.prime));
    }
    if (fac.input.deg() > 0) CHECK(degsum == fac.input.deg());
}

// number of monic irreducibles of degree n over GF(q), by the necklace
// count (1/n) sum_{d|n} mu(d) q^(n/d) — independent of the factoring code
uint64_t necklace_count(uint64_t q, uint32_t n) {
    int64_t total = 0;
    for (uint64_t d : divisors(n)) {
        int64_t term = moebius(d);
        for (uint32_t i = 0; i < n / d; ++i) term *= static_cast<int64_t>(q);
        total += term;
    }
    return static_cast<uint64_t>(total) / n;
}

}  // namespace

TEST_CASE("irreducibility examples over GF(3)") {
    auto g3 = field_new(3, 1);
    CHECK(is_irreducible(poly_from_ints(g3, {1, 0, 1})));    // T^2+1
    CHECK(!is_irreducible(poly_from_ints(g3, {-1, 0, 1})));  // T^2-1
    CHECK(!is_irreducible(poly_from_ints(g3, {1, 0, 0, 0, 1})));  // T^4+1

    CHECK_THROWS_AS(is_irreducible(poly_from_ints(g3, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(poly_from_ints(g3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(Poly::zero(g3.get())), std::invalid_argument);
}

TEST_CASE("T^4+1 over GF(3) splits into the known quadratics") {
    auto g3 = field_new(3, 1);
    Poly a = poly_from_ints(g3, {2, 1, 1});
    Poly b = poly_from_ints(g3, {2, 2, 1});
    CHECK(a * b == poly_from_ints(g3, {1, 0, 0, 0, 1}));

    auto fac = factor(poly_from_ints(g3, {1, 0, 0, 0, 1}));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].prime == a);
    CHECK(fac.factors[1].prime == b);
    CHECK(fac.factors[0].multiplicity == 1);
    CHECK(fac.factors[1].multiplicity == 1);
}

TEST_CASE("factorization examples") {
    auto g3 = field_new(3, 1);
    auto fac = factor(poly_from_ints(g3, {-1, 0, 1}));  // (T+1)(T+2)
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].prime == poly_from_ints(g3, {1, 1}));
    CHECK(fac.factors[1].prime == poly_from_ints(g3, {2, 1}));

    // T(T+1)^2 = T^3+2T^2+T
    auto fac2 = factor(poly_from_ints(g3, {0, 1, 2, 1}));
    REQUIRE(fac2.factors.size() == 2);
    CHECK(fac2.factors[0].prime == poly_from_ints(g3, {0, 1}));
    CHECK(fac2.factors[0].multiplicity == 1);
    CHECK(fac2.factors[1].prime == poly_from_ints(g3, {1, 1}));
    CHECK(fac2.factors[1].multiplicity == 2);

    CHECK(factor(Poly::one(g3.get())).factors.empty());
    CHECK_THROWS_AS(factor(poly_from_ints(g3, {1, 2})), std::invalid_argument);
}

TEST_CASE("reconstruction and irreducibility agreement, exhaustive") {
    auto g3 = field_new(3, 1);
    for (uint32_t n = 1; n <= 5; ++n) {
        MonicRange range(g3, n);
        for (uint64_t i = 0; i < range.size(); ++i) {
            Poly f = range.at(i);
            auto fac = factor(f);
            check_valid(fac);
            bool single = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
            CHECK(is_irreducible(f) == single);
        }
    }
    auto g9 = field_new(3, 2);
    for (uint32_t n = 1; n <= 3; ++n) {
        MonicRange range(g9, n);
        for (uint64_t i = 0; i < range.size(); ++i) {
            Poly f = range.at(i);
            auto fac = factor(f);
            check_valid(fac);
            bool single = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
            CHECK(is_irreducible(f) == single);
        }
    }
}

TEST_CASE("irreducible counts match the necklace formula") {
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
        auto F = field_new(p, k);
        for (uint32_t n = 1; n <= 4; ++n) {
            if (checked_pow(F->q(), n, 100000) == std::nullopt) continue;
            MonicRange range(F, n, 100000);
            uint64_t count = 0;
            for (uint64_t i = 0; i < range.size(); ++i)
                if (is_irreducible(range.at(i))) ++count;
            CHECK(count == necklace_count(F->q(), n));
        }
    }
}

TEST_CASE("large-field path (distinct/equal degree) agrees and is seed-deterministic") {
    auto F = field_new(11, 2);  // q = 121, so quadratics exceed the trial-division space
    Poly a = poly_from_ints(F, {3, 1});
    Poly b = poly_from_ints(F, {7, 1});
    Poly c = poly_from_ints(F, {1, 0, 1});
    REQUIRE(is_irreducible(c));
    Poly f = a * a * b * c;
    auto fac1 = factor(f, 42);
    auto fac2 = factor(f, 42);
    check_valid(fac1);
    REQUIRE(fac1.factors.size() == fac2.factors.size());
    for (size_t i = 0; i < fac1.factors.size(); ++i) {
        CHECK(fac1.factors[i].prime == fac2.factors[i].prime);
        CHECK(fac1.factors[i].multiplicity == fac2.factors[i].multiplicity);
    }
    // a different seed still produces the same canonical factorization
    auto fac3 = factor(f, 1337);
    for (size_t i = 0; i < fac1.factors.size(); ++i)
        CHECK(fac1.factors[i].prime == fac3.factors[i].prime);

    // stress: products of random linears over GF(121), canonical result
    for (uint64_t s = 0; s < 20; ++s) {
        Poly g = poly_from_ints(F, {static_cast<int64_t>(s % 11), 1, 1});  // some quadratic
        auto fg = factor(g * a, s);
        check_valid(fg);
    }
}

TEST_CASE("monic enumeration") {
    auto g3 = field_new(3, 1);
    MonicRange r1(g3, 1);
    REQUIRE(r1.size() == 3);
    CHECK(r1.at(0) == poly_from_ints(g3, {0, 1}));
    CHECK(r1.at(1) == poly_from_ints(g3, {1, 1}));
    CHECK(r1.at(2) == poly_from_ints(g3, {2, 1}));

    CHECK(MonicRange(g3, 4).size() == 81);
    auto g9 = field_new(3, 2);
    CHECK(MonicRange(g9, 2).size() == 81);

    CHECK_THROWS_AS(MonicRange(g9, 10, 1000), guard_error);
    CHECK_THROWS_AS(r1.at(3), std::out_of_range);
}

TEST_CASE("bounded-degree enumeration") {
    auto g3 = field_new(3, 1);
    BoundedDegRange r(g3, 1);
    REQUIRE(r.size() == 9);
    CHECK(r.at(0).is_zero());
    CHECK(r.at(1) == Poly::one(g3.get()));
    CHECK(r.at(3) == poly_from_ints(g3, {0, 1}));
}
