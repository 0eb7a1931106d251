#include <doctest.h>

#include <random>

#include "rado/equation.hpp"
#include "rado/errors.hpp"

using namespace rado;

namespace {

LinearEquation eq(std::initializer_list<Int> coeffs) {
    return LinearEquation(std::vector<Int>(coeffs));
}

} // namespace

TEST_CASE("parse and render equations") {
    CHECK(parse_equation("2,3,-1").coeffs() == std::vector<Int>{2, 3, -1});
    CHECK(parse_equation("1,2,1,-1").coeffs() == std::vector<Int>{1, 2, 1, -1});
    CHECK(render_equation(eq({2, 3, -1})) == "2,3,-1");

    CHECK_THROWS_AS(parse_equation("0,1,-1"), ParseError);
    CHECK_THROWS_AS(parse_equation(""), ParseError);
    CHECK_THROWS_AS(parse_equation("1,x,-1"), ParseError);
    CHECK_THROWS_AS(parse_equation("1, 2,-1"), ParseError); // no whitespace allowed
    CHECK_THROWS_AS(parse_equation("5"), PreconditionError); // too few coefficients

    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> coeffs;
        for (int i = 0; i < 2 + trial % 4; ++i) {
            Int c = coeff(rng);
            coeffs.push_back(c == 0 ? 1 : c);
        }
        LinearEquation original(coeffs);
        CHECK(parse_equation(render_equation(original)) == original);
    }
}

TEST_CASE("mixed_sign_3var flag") {
    CHECK(eq({1, 1, -1}).mixed_sign_3var());
    CHECK_FALSE(eq({1, -1}).mixed_sign_3var());
    CHECK_FALSE(eq({1, 1, 1}).mixed_sign_3var());
}

TEST_CASE("normalize to ax+by=cz") {
    CHECK(normalize(eq({1, 1, -1})) == CanonicalForm{1, 1, 1});
    CHECK(normalize(eq({2, 3, 3, -1, -1})) == CanonicalForm{5, 3, 2});
    CHECK(normalize(eq({-1, 2, 2})) == CanonicalForm{2, 2, 1});

    CHECK_THROWS_AS(normalize(eq({1, -1})), PreconditionError);
    CHECK_THROWS_AS(normalize(eq({1, 1, 2})), PreconditionError);
}

TEST_CASE("normalize lift: canonical solutions lift to the source equation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Int> coeff(1, 6);
    std::uniform_int_distribution<Int> val(1, 40);
    for (int trial = 0; trial < 100; ++trial) {
        // k positive coefficients followed by l negative ones.
        int k = 2 + static_cast<int>(trial % 3);
        int l = 1 + static_cast<int>(trial % 2);
        std::vector<Int> coeffs;
        for (int i = 0; i < k; ++i)
            coeffs.push_back(coeff(rng));
        for (int i = 0; i < l; ++i)
            coeffs.push_back(-coeff(rng));
        LinearEquation source(coeffs);
        CanonicalForm canon = normalize(source);
        Int x = val(rng), y = val(rng);
        Int lhs = canon.a * x + canon.b * y;
        if (lhs % canon.c != 0)
            continue;
        Int z = lhs / canon.c;
        // Duplicate: x for the first k-1 positives, y for the last, z for
        // every negative slot.
        std::vector<Int> lifted;
        for (int i = 0; i < k - 1; ++i)
            lifted.push_back(x);
        lifted.push_back(y);
        for (int i = 0; i < l; ++i)
            lifted.push_back(z);
        CHECK(source.eval(lifted) == 0);
    }
}

TEST_CASE("enumerate_solutions examples") {
    auto schur4 = enumerate_solutions(eq({1, 1, -1}), 4);
    std::vector<SolutionTuple> expected = {{1, 1, 2}, {1, 2, 3}, {1, 3, 4},
                                           {2, 1, 3}, {2, 2, 4}, {3, 1, 4}};
    std::sort(expected.begin(), expected.end());
    CHECK(schur4 == expected); // already lexicographic

    CHECK(enumerate_solutions(eq({1, 1, -1}), 1).empty());
    auto bounded = enumerate_solutions(eq({2, 3, -1}), 11);
    std::vector<SolutionTuple> expected11 = {{1, 1, 5}, {1, 2, 8}, {1, 3, 11}, {2, 1, 7},
                                             {2, 2, 10}, {3, 1, 9}, {4, 1, 11}};
    CHECK(bounded == expected11);
}

TEST_CASE("enumerate_solutions is lexicographic and exact") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<Int> coeff(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> coeffs;
        for (int i = 0; i < 3; ++i) {
            Int c = coeff(rng);
            coeffs.push_back(c == 0 ? -1 : c);
        }
        LinearEquation e(coeffs);
        auto sols = enumerate_solutions(e, 12);
        CHECK(std::is_sorted(sols.begin(), sols.end()));
        CHECK(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
        for (const auto& sol : sols) {
            CHECK(e.eval(sol) == 0);
            for (Int v : sol) {
                CHECK(v >= 1);
                CHECK(v <= 12);
            }
        }
        // Cross-check against the full grid.
        std::size_t count = 0;
        for (Int x = 1; x <= 12; ++x)
            for (Int y = 1; y <= 12; ++y)
                for (Int z = 1; z <= 12; ++z)
                    if (e.eval(std::vector<Int>{x, y, z}) == 0)
                        ++count;
        CHECK(sols.size() == count);
    }
}

TEST_CASE("Schur solution count is N(N-1)/2") {
    for (Int n = 1; n <= 50; ++n) {
        auto sols = enumerate_solutions(eq({1, 1, -1}), n);
        CHECK(static_cast<Int>(sols.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("solutions_involving filters the enumeration") {
    auto touching4 = solutions_involving(eq({1, 1, -1}), 4, 4);
    CHECK(touching4 == std::vector<SolutionTuple>{{1, 3, 4}, {2, 2, 4}, {3, 1, 4}});
    auto touching1 = solutions_involving(eq({1, 1, -1}), 4, 1);
    CHECK(touching1 ==
          std::vector<SolutionTuple>{{1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {2, 1, 3}, {3, 1, 4}});
    CHECK(solutions_involving(eq({2, 3, -1}), 5, 5) == std::vector<SolutionTuple>{{1, 1, 5}});

    CHECK_THROWS_AS(solutions_involving(eq({1, 1, -1}), 4, 5), PreconditionError);
}

TEST_CASE("incremental enumeration: new tuples are exactly those touching N") {
    LinearEquation e = eq({2, 3, -1});
    for (Int n = 2; n <= 30; ++n) {
        auto prev = enumerate_solutions(e, n - 1);
        auto added = solutions_involving(e, n, n);
        auto full = enumerate_solutions(e, n);
        std::vector<SolutionTuple> merged = prev;
        merged.insert(merged.end(), added.begin(), added.end());
        std::sort(merged.begin(), merged.end());
        CHECK(merged == full);
    }
}

TEST_CASE("enumeration refuses oversized requests") {
    EnumerationLimits tiny{.max_tuples = 100};
    CHECK_THROWS_AS(enumerate_solutions(eq({1, 1, -1}), 1000, tiny), ResourceLimitError);
}

TEST_CASE("F-form round-trips through LinearEquation") {
    FForm f(2, 5);
    LinearEquation e = f.to_equation();
    CHECK(e.coeffs() == std::vector<Int>{2, 5, -1});
    auto back = FForm::from_equation(e);
    REQUIRE(back);
    CHECK(back->t == 2);
    CHECK(back->j == 5);
    CHECK_FALSE(FForm::from_equation(eq({1, 1, -2})));
    CHECK_THROWS_AS(FForm(0, 1), PreconditionError);
}
