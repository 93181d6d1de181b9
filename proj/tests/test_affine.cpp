#include <doctest.h>

#include "ffsq/affine.hpp"
#include "ffsq/intervals.hpp"

using namespace ffsq;

TEST_CASE("cycle type case analysis at p=3") {
    auto F = field_new(3, 2);
    Partition identity = affine_cycle_type(*F, {1, 0});
    CHECK(identity.mult[0] == 9);  // nine fixed points

    Partition translation = affine_cycle_type(*F, {1, 1});
    CHECK(translation.mult[0] == 0);
    CHECK(translation.mult[2] == 3);  // three 3-cycles

    uint32_t minus_one = F->neg(1);
    Partition order2 = affine_cycle_type(*F, {minus_one, 0});
    CHECK(order2.mult[0] == 1);
    CHECK(order2.mult[1] == 4);  // one fixed point + four 2-cycles

    CHECK_THROWS_AS(affine_cycle_type(*F, {0, 1}), std::invalid_argument);
}

TEST_CASE("case analysis agrees with direct orbit iteration, p in {3,5}") {
    for (uint32_t p : {3u, 5u}) {
        auto F = field_new(p, 2);
        for (uint32_t a = 1; a < F->q(); ++a)
            for (uint32_t b = 0; b < F->q(); ++b)
                CHECK(affine_cycle_type(*F, {a, b}) == affine_cycle_type_orbits(*F, {a, b}));
    }
}

TEST_CASE("cycle-type census") {
    auto census3 = n_lambda_census(3);
    // expected classes at p=3: identity 1, translations 8, d=2: 9, d=4: 18, d=8: 36
    Int total = 0;
    std::vector<Int> values;
    for (auto& [lambda, count] : census3) {
        total += count;
        values.push_back(count);
    }
    CHECK(total == 72);
    REQUIRE(values.size() == 5);

    auto F = field_new(3, 2);
    std::map<Partition, Int> direct;
    for (uint32_t a = 1; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b) ++direct[affine_cycle_type_orbits(*F, {a, b})];
    CHECK(census3 == direct);

    Int total5 = 0;
    for (auto& [lambda, count] : n_lambda_census(5)) total5 += count;
    CHECK(total5 == 600);  // 25 * 24

    CHECK_THROWS_AS(n_lambda_census(4), std::invalid_argument);
}

TEST_CASE("c_p by formula") {
    CHECK(c_p_formula(3) == Rat(713, 4096));
    CHECK(c_p_formula(3) == Rat(6417, 36864));
    // denominator divides 2^{p^2} p^2 (p^2-1)
    for (uint32_t p : {3u, 5u, 7u}) {
        Int full_den = pow2(static_cast<uint64_t>(p) * p) * (p * p) * (p * p - 1);
        Rat c = c_p_formula(p);
        CHECK(full_den % boost::multiprecision::denominator(c) == 0);
    }
}

TEST_CASE("c_p crosses the binomial density as p grows") {
    // at p=3 the affine constant is below binom(2n,n)/4^n; from p=5 on it
    // is above, which is what makes the two-coefficient interval deviate
    auto binom_ref = [](uint32_t p) {
        return xn_density_closed_form(p * p);
    };
    CHECK(c_p_formula(3) < binom_ref(3));
    for (uint32_t p : {5u, 7u, 11u, 13u}) CHECK(c_p_formula(p) > binom_ref(p));
}

TEST_CASE("X_n cap count: closed form, census route, brute force") {
    CHECK(xn_cap_count(3) == 6417);  // 1 + 8*64 + 9*(16 + 128 + 512)
    CHECK(xn_cap_count_census(3) == 6417);
    CHECK(xn_cap_count_enumerated(3) == 6417);
    // the three agree for p = 5 on the two cheap routes
    CHECK(xn_cap_count(5) == xn_cap_count_census(5));
    CHECK_THROWS_AS(xn_cap_count_enumerated(5), guard_error);

    // exact consistency with c_p
    for (uint32_t p : {3u, 5u, 7u}) {
        uint64_t n = static_cast<uint64_t>(p) * p;
        Rat ratio(xn_cap_count(p), pow2(n) * n * (n - 1));
        CHECK(ratio == c_p_formula(p));
    }
}

TEST_CASE("small-epsilon experiment at p=3") {
    DensityReport r1 = small_epsilon_experiment(3, 1);
    CHECK(r1.q == 9);
    CHECK(r1.total == 81);
    CHECK(r1.n == 9);
    CHECK(r1.m == 1);
    CHECK(r1.reference == Rat(713, 4096));

    bool saw_cp = false, saw_binom = false;
    for (auto& [key, value] : r1.extra) {
        if (key == "c_p_num") {
            saw_cp = true;
            CHECK(value == "713");
        }
        if (key == "binom_ref_num") {
            saw_binom = true;
            CHECK(value == boost::multiprecision::numerator(xn_density_closed_form(9)).str());
        }
    }
    CHECK(saw_cp);
    CHECK(saw_binom);

    // monte-carlo mode is seeded and deterministic
    DensityReport mc1 = small_epsilon_experiment(3, 2, true, 300, 7);
    DensityReport mc2 = small_epsilon_experiment(3, 2, true, 300, 7);
    CHECK(report_to_json(mc1) == report_to_json(mc2));
    CHECK(mc1.total == 300);
}

TEST_CASE("first interval experiment is exact") {
    CHECK(first_interval_experiment(field_new(3, 1), 1).mean == Rat(2, 3));
    CHECK(first_interval_experiment(field_new(3, 2), 1).mean == Rat(5, 9));
    DensityReport r = first_interval_experiment(field_new(3, 4), 2);
    CHECK(r.mean == Rat(41, 81));
    CHECK(r.reference == Rat(41, 81));
    CHECK(r.deviation() == 0);
    CHECK(r.n == 5);
}
