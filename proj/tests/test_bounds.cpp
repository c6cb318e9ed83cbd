#include "crithg/bounds.hpp"

#include "crithg/errors.hpp"
#include "crithg/generators.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace crithg;

TEST_CASE("de Caen bound, exact rationals") {
    CHECK(de_caen_bound(5, 3) == BigRat(10));
    CHECK(de_caen_bound(7, 3) == BigRat(7, 2)); // 21/6
    CHECK(de_caen_ceil(7, 3) == 4);
    for (int r = 2; r <= 6; ++r) // denominator C(r-1, r-1) = 1 at n = 2r-1
        CHECK(de_caen_bound(2 * r - 1, r) == BigRat(binomial(2 * r - 1, r)));
    CHECK(de_caen_bound(12, 4) == BigRat(220, 56));
    CHECK_THROWS_AS(de_caen_bound(4, 3), DomainError);
}

TEST_CASE("refined lower bound and its range gate") {
    CHECK(prop_lower_bound(12, 4) == BigRat(33, 14));
    CHECK(prop_lower_bound(8, 3) == BigRat(112, 75));
    CHECK_THROWS_AS(prop_lower_bound(9, 3), DomainError); // n = r^2 is out of range
    CHECK_THROWS_AS(prop_lower_bound(16, 4), DomainError);
    // Consistency: exactly (n/5r) * de_caen.
    for (auto [n, r] : {std::pair{5, 3}, {7, 3}, {8, 3}, {12, 4}, {15, 4}})
        CHECK(prop_lower_bound(n, r) == BigRat(n, 5 * r) * de_caen_bound(n, r));
}

TEST_CASE("t-parameterized counting bound") {
    // t = 1 recovers de Caen exactly, as rationals.
    for (auto [n, r] : {std::pair{5, 3}, {7, 3}, {9, 4}, {12, 4}, {11, 5}})
        CHECK(counting_lower_bound_general(n, r, 1) == de_caen_bound(n, r));

    CHECK(counting_lower_bound_general(12, 4, 3) == BigRat(9, 2)); // 3*12/8

    BigRat best(0);
    for (int t = 1; t <= 3; ++t) {
        const BigRat v = counting_lower_bound_general(12, 4, t);
        if (v > best) best = v;
    }
    CHECK(best >= counting_lower_bound_general(12, 4, 1));

    CHECK_THROWS_AS(counting_lower_bound_general(12, 4, 0), DomainError);
    CHECK_THROWS_AS(counting_lower_bound_general(12, 4, 4), DomainError);
}

TEST_CASE("greedy covering upper estimate") {
    // Frozen values, re-derived here with long doubles: ceil(p^{-1} ln C(n,r-1)).
    auto reference = [](int n, int r) {
        const long double inv_p = static_cast<long double>(testutil::pascal(n, r)) /
                                  static_cast<long double>(testutil::pascal(n - r + 1, r));
        return static_cast<long long>(
            std::ceil(inv_p * std::log(static_cast<long double>(testutil::pascal(n, r - 1)))));
    };
    CHECK(greedy_upper_estimate_U(7, 3) == 11);
    CHECK(greedy_upper_estimate_U(5, 3) == 24);
    CHECK(greedy_upper_estimate_U(9, 3) == 9);
    for (auto [n, r] : {std::pair{7, 3}, {5, 3}, {9, 3}, {9, 4}, {11, 4}, {16, 4}})
        CHECK(greedy_upper_estimate_U(n, r) == BigInt(reference(n, r)));
}

TEST_CASE("closed-form covering reference and its validity window") {
    CHECK(sidorenko_reference(16, 4) == BigInt(4)); // 12 - floor(32/4)
    CHECK(sidorenko_reference(9, 3) == BigInt(3));  // 9 - floor(12/2)
    CHECK_FALSE(sidorenko_reference(7, 3).has_value());
    CHECK(sidorenko_reference(4, 2) == BigInt(2));
    CHECK_FALSE(sidorenko_reference(17, 4).has_value()); // above n = r^2
    CHECK(sidorenko_reference(12, 4) == BigInt(6));
    // At n = r^2 the value is r.
    for (int r = 2; r <= 7; ++r) CHECK(sidorenko_reference(r * r, r) == BigInt(r));
}

TEST_CASE("complement within the complete hypergraph") {
    const Hypergraph k53 = complete_uniform(5, 3);
    CHECK(complement_duality(k53).edge_count() == 0);
    CHECK(complement_duality(Hypergraph(5, {}, 3)) == k53);

    for (std::uint32_t seed : {70u, 71u}) {
        const Hypergraph h = testutil::random_uniform(7, 3, 11, seed);
        const Hypergraph hc = complement_duality(h);
        CHECK(BigInt(h.edge_count() + hc.edge_count()) == binomial(7, 3));
        CHECK(complement_duality(hc) == h);
    }
    CHECK_THROWS_AS(complement_duality(Hypergraph(50, {}, 10), /*edge_cap=*/100), CapExceededError);
}

TEST_CASE("bounds report assembles the pieces") {
    const BoundsReport rep = bounds_report(12, 4);
    CHECK(rep.de_caen == BigRat(55, 14));
    CHECK(rep.de_caen_ceil == 4);
    REQUIRE(rep.prop_lower.has_value());
    CHECK(*rep.prop_lower == BigRat(33, 14));
    REQUIRE(rep.sidorenko_U.has_value());
    CHECK(*rep.sidorenko_U == 6);
    CHECK(rep.trivial_upper_complete == BigInt(35));

    const BoundsReport rep2 = bounds_report(17, 4);
    CHECK_FALSE(rep2.prop_lower.has_value());
    CHECK_FALSE(rep2.sidorenko_U.has_value());
}

TEST_CASE("covering sandwich check") {
    // U = r at these sizes (disjoint edges); n >= 5r makes the window apply.
    CHECK(covering_sandwich_holds(10, 2, BigInt(2)));
    CHECK(covering_sandwich_holds(15, 3, BigInt(3)));
    CHECK(covering_sandwich_holds(12, 2, BigInt(2)));
    // A wildly large "U" violates the strict upper side.
    CHECK_FALSE(covering_sandwich_holds(10, 2, BigInt(1000)));
    // Zero violates the lower side.
    CHECK_FALSE(covering_sandwich_holds(10, 2, BigInt(0)));
}
