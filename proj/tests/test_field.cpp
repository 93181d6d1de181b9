#include <doctest.h>

#include <set>

#include "ffsq/field.hpp"

using namespace ffsq;

TEST_CASE("field construction") {
    auto g3 = field_new(3, 1);
    CHECK(g3->q() == 3);
    auto g9 = field_new(3, 2);
    CHECK(g9->q() == 9);
    // deterministic modulus for GF(9): x^2 + 1
    CHECK(g9->modulus() == std::vector<uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(field_new(2, 3), std::invalid_argument);  // even characteristic
    CHECK_THROWS_AS(field_new(9, 1), std::invalid_argument);  // composite
    CHECK_THROWS_AS(field_new(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_new(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(field_new(3, 20, 1 << 10), guard_error);  // oversized q
}

TEST_CASE("basic arithmetic") {
    auto g3 = field_new(3, 1);
    CHECK(g3->inv(2) == 2);  // 2*2 = 4 = 1
    CHECK(g3->add(2, 2) == 1);
    CHECK(g3->neg(1) == 2);
    CHECK_THROWS_AS(g3->inv(0), std::invalid_argument);

    auto g9 = field_new(3, 2);
    // with modulus x^2+1: x*x = -1 = 2 (packed value of x is 3)
    CHECK(g9->mul(3, 3) == 2);

    FieldElement a(g3, 1), b(g9, 1);
    CHECK_THROWS_AS(static_cast<void>(a + b), std::invalid_argument);
}

TEST_CASE("field axioms on every element, several fields") {
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {3, 2}, {7, 2}}) {
        auto F = field_new(p, k);
        for (uint32_t x = 0; x < F->q(); ++x) {
            CHECK(F->add(x, F->neg(x)) == 0);
            if (x != 0) {
                CHECK(F->mul(x, F->inv(x)) == 1);
                CHECK(F->pow(x, F->q() - 1) == 1);  // Lagrange
            }
            for (uint32_t y = 0; y < F->q(); ++y) {
                CHECK(F->add(x, y) == F->add(y, x));
                CHECK(F->mul(x, y) == F->mul(y, x));
            }
        }
        // distributivity on a sample
        for (uint32_t x = 0; x < F->q(); x += 2)
            for (uint32_t y = 1; y < F->q(); y += 3)
                for (uint32_t z = 0; z < F->q(); z += 3)
                    CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
    }
}

TEST_CASE("square counts are (q+1)/2") {
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}}) {
        auto F = field_new(p, k);
        uint64_t count = 0;
        for (uint32_t x = 0; x < F->q(); ++x)
            if (F->is_square(x)) ++count;
        CHECK(count == (F->q() + 1) / 2);
    }
}

TEST_CASE("is_square agrees with brute force over GF(7)") {
    auto F = field_new(7, 1);
    CHECK(F->is_square(2));  // 3^2 = 2
    for (uint32_t x = 0; x < 7; ++x) {
        bool brute = false;
        for (uint32_t y = 0; y < 7; ++y)
            if (F->mul(y, y) == x) brute = true;
        CHECK(F->is_square(x) == brute);
    }
}

TEST_CASE("element enumeration is a stable bijection") {
    auto F = field_new(3, 2);
    auto elems = enumerate_elements(F);
    REQUIRE(elems.size() == 9);
    std::set<uint32_t> values;
    for (auto& e : elems) values.insert(e.value());
    CHECK(values.size() == 9);

    auto again = enumerate_elements(F);
    for (size_t i = 0; i < elems.size(); ++i) CHECK(elems[i].value() == again[i].value());

    auto g3 = field_new(3, 1);
    auto small = enumerate_elements(g3);
    REQUIRE(small.size() == 3);
    CHECK(small[0].value() == 0);
    CHECK(small[1].value() == 1);
    CHECK(small[2].value() == 2);
}

TEST_CASE("coordinate round trip") {
    auto F = field_new(5, 2);
    for (uint32_t x = 0; x < F->q(); ++x) {
        auto c = F->to_coords(x);
        REQUIRE(c.size() == 2);
        CHECK(c[0] < 5);
        CHECK(c[1] < 5);
        CHECK(F->from_coords(c) == x);
    }
}

TEST_CASE("contexts with equal (p,k) are interchangeable") {
    auto a = field_new(3, 2);
    auto b = field_new(3, 2);
    CHECK(a->modulus() == b->modulus());
    FieldElement x(a, 5), y(b, 7);
    CHECK((x + y).value() == a->add(5, 7));
}
