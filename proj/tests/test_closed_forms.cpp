#include <doctest.h>

#include <vector>

#include "rado/closed_forms.hpp"
#include "rado/errors.hpp"

using namespace rado;

TEST_CASE("lower_bound_thm21") {
    CHECK(lower_bound_thm21(1, 2, 2) == 11);
    CHECK(lower_bound_thm21(1, 1, 1) == 5);
    CHECK(lower_bound_thm21(2, 4, 3) == 63);
    CHECK_THROWS_AS(lower_bound_thm21(1, 2, 3), PreconditionError);
    CHECK_THROWS_AS(lower_bound_thm21(0, 2, 1), PreconditionError);
}

TEST_CASE("lower_bound_thm22") {
    CHECK(lower_bound_thm22(2, 4, 3) == 66);
    CHECK(lower_bound_thm22(3, 6, 4) == 201);
    CHECK(lower_bound_thm22(2, 3, 2) == 42); // the published table says 43
    CHECK_THROWS_AS(lower_bound_thm22(2, 4, 1), PreconditionError);
}

TEST_CASE("exact_rr1") {
    CHECK(exact_rr1(1, 1) == 5);
    CHECK(exact_rr1(5, 1) == 17);
    CHECK(exact_rr1(2, 2) == 11);
    CHECK_THROWS_AS(exact_rr1(2, 3), PreconditionError);
    CHECK_THROWS_AS(exact_rr1(2, 0), PreconditionError);
}

TEST_CASE("exact_multivar_rr1") {
    std::vector<Int> a1{2, 1}, b1{1};
    CHECK(exact_multivar_rr1(a1, b1) == 11);
    std::vector<Int> a2{1, 1, 1}, b2{1, 1};
    CHECK(exact_multivar_rr1(a2, b2) == 14);
    std::vector<Int> a3{1}, b3{1};
    CHECK(exact_multivar_rr1(a3, b3) == 5);
    std::vector<Int> small{1}, big{2, 2};
    CHECK_THROWS_AS(exact_multivar_rr1(small, big), PreconditionError);
}

TEST_CASE("diagonal_exact") {
    CHECK(diagonal_exact(1, 2) == 11);
    CHECK(diagonal_exact(2, 3) == 53);
    CHECK(diagonal_exact(2, 2) == 34);
    CHECK(diagonal_exact(3, 3) == 111);
}

TEST_CASE("lower_bound_anomalous") {
    CHECK(lower_bound_anomalous(3) == 192);
    CHECK(lower_bound_anomalous(4) == 432);
    CHECK(lower_bound_anomalous(5) == 820);
    CHECK_THROWS_AS(lower_bound_anomalous(2), PreconditionError);
}

TEST_CASE("relations between the formulas") {
    for (Int t = 1; t <= 4; ++t)
        for (Int s = t; s <= 8; ++s)
            for (Int q = s; q <= 8; ++q)
                CHECK(lower_bound_thm22(t, q, s) >= lower_bound_thm21(t, q, s));

    for (Int s = 2; s <= 8; ++s)
        for (Int q = s; q <= 8; ++q)
            CHECK(exact_rr1(q, s) == lower_bound_thm21(1, q, s));

    for (Int q = 2; q <= 10; ++q)
        CHECK(diagonal_exact(1, q) == exact_rr1(q, q));

    for (Int t : {3, 4, 5})
        CHECK(lower_bound_anomalous(t) > lower_bound_thm22(t, 2 * t + 1, t));
}
