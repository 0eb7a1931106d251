#include <doctest.h>

#include <algorithm>
#include <random>

#include "rado/closed_forms.hpp"
#include "rado/errors.hpp"
#include "rado/oracle.hpp"
#include "rado/solver.hpp"

using namespace rado;

namespace {

LinearEquation eq(std::initializer_list<Int> coeffs) {
    return LinearEquation(std::vector<Int>(coeffs));
}

bool has_clause(const std::vector<Clause>& clauses, Color demanded,
                std::initializer_list<Int> members) {
    return std::find(clauses.begin(), clauses.end(),
                     Clause{demanded, std::vector<Int>(members)}) != clauses.end();
}

} // namespace

TEST_CASE("build_clauses merges permuted tuples by value-set") {
    auto clauses = build_clauses(eq({1, 1, -1}), eq({1, 1, -1}), 4);
    CHECK(clauses.size() == 8);
    for (Color demanded : {Color::Blue, Color::Red}) {
        CHECK(has_clause(clauses, demanded, {1, 2}));
        CHECK(has_clause(clauses, demanded, {1, 2, 3}));
        CHECK(has_clause(clauses, demanded, {1, 3, 4}));
        CHECK(has_clause(clauses, demanded, {2, 4}));
    }
}

TEST_CASE("build_clauses demands Blue for e0 and Red for e1") {
    auto clauses = build_clauses(eq({1, 3, -1}), eq({1, 1, -1}), 4);
    CHECK(clauses.size() == 5);
    CHECK(has_clause(clauses, Color::Blue, {1, 4}));
    CHECK(has_clause(clauses, Color::Red, {1, 2}));
    CHECK(has_clause(clauses, Color::Red, {1, 2, 3}));
    CHECK(has_clause(clauses, Color::Red, {1, 3, 4}));
    CHECK(has_clause(clauses, Color::Red, {2, 4}));
}

TEST_CASE("build_clauses is empty below the smallest solution") {
    CHECK(build_clauses(eq({2, 3, -1}), eq({2, 2, -1}), 1).empty());
    CHECK(build_clauses(eq({1, 1, -1}), eq({1, 1, -1}), 1).empty());
}

TEST_CASE("clause prefixes track the interval") {
    ClauseSet cs(eq({1, 1, -1}), eq({1, 1, -1}));
    cs.extend_to(4);
    CHECK(cs.clauses().size() == 8);
    CHECK(cs.active_count(4) == 8);
    CHECK(cs.active_count(3) == 4); // {1,2} and {1,2,3} per demand
    cs.extend_to(5);
    CHECK(cs.active_count(4) == 8);
    CHECK(cs.active_count(5) == cs.clauses().size());
}

TEST_CASE("propagate reaches the hand-computed fixpoint") {
    auto out = propagate_fixpoint(eq({1, 1, -1}), eq({1, 1, -1}), 4, {1, 4}, {});
    CHECK_FALSE(out.conflict);
    std::vector<std::pair<Int, Color>> forced = out.forced;
    std::sort(forced.begin(), forced.end());
    CHECK(forced == std::vector<std::pair<Int, Color>>{{2, Color::Blue}, {3, Color::Blue}});
}

TEST_CASE("propagate reports a fully violated clause as conflict") {
    auto out = propagate_fixpoint(eq({1, 1, -1}), eq({1, 1, -1}), 4, {1, 2}, {});
    CHECK(out.conflict);
}

TEST_CASE("propagate on an empty assignment is an immediate fixpoint") {
    auto out = propagate_fixpoint(eq({1, 1, -1}), eq({1, 1, -1}), 4, {}, {});
    CHECK_FALSE(out.conflict);
    CHECK(out.forced.empty());
}

TEST_CASE("schaal_force literal rule examples") {
    {
        auto round = schaal_force(1, 2, 1, {1}, {}, 9);
        CHECK_FALSE(round.contradiction);
        CHECK(round.forced_red.empty());
        CHECK(round.forced_blue.empty());
    }
    {
        auto round = schaal_force(1, 2, 1, {1, 3}, {}, 9);
        REQUIRE(round.contradiction);
        CHECK(*round.contradiction == 1);
    }
    {
        auto round = schaal_force(1, 1, 1, {}, {1, 2}, 5);
        REQUIRE(round.contradiction);
        CHECK(*round.contradiction == 1);
    }
    CHECK_THROWS_AS(schaal_force(1, 1, 1, {1}, {1}, 5), PreconditionError);
}

TEST_CASE("schaal fixpoint agrees with pair-restricted propagation") {
    std::mt19937 rng(101);
    for (auto [t, q, s] : {std::array<Int, 3>{1, 2, 1}, {2, 3, 2}, {1, 3, 2}}) {
        Int n = t * q * s + t * t * q + (t * t + 1) * s + t * t * t;
        LinearEquation e0 = FForm(t, q).to_equation();
        LinearEquation e1 = FForm(t, s).to_equation();
        for (int trial = 0; trial < 20; ++trial) {
            std::set<Int> red, blue;
            std::uniform_int_distribution<int> pick(0, 9);
            for (Int v = 1; v <= n; ++v) {
                int roll = pick(rng);
                if (roll == 0)
                    red.insert(v);
                else if (roll == 1)
                    blue.insert(v);
            }
            auto fix = schaal_fixpoint(t, q, s, red, blue, n);
            auto prop = propagate_fixpoint(e0, e1, n, {red.begin(), red.end()},
                                           {blue.begin(), blue.end()}, true);
            CHECK(fix.contradiction == prop.conflict);
            if (fix.contradiction)
                continue;
            std::set<Int> prop_red = red, prop_blue = blue;
            for (auto [pos, color] : prop.forced)
                (color == Color::Red ? prop_red : prop_blue).insert(pos);
            CHECK(fix.red == prop_red);
            CHECK(fix.blue == prop_blue);
        }
    }
}

TEST_CASE("solve matches the classical Schur facts") {
    auto sat = solve(eq({1, 1, -1}), eq({1, 1, -1}), 4);
    CHECK(sat.verdict == Verdict::Satisfiable);
    REQUIRE(sat.witness);
    CHECK(check_valid(*sat.witness, eq({1, 1, -1}), eq({1, 1, -1})).valid);

    CHECK(solve(eq({1, 1, -1}), eq({1, 1, -1}), 5).verdict == Verdict::Unsatisfiable);
    CHECK(solve(eq({1, 3, -1}), eq({1, 1, -1}), 10).verdict == Verdict::Satisfiable);
}

TEST_CASE("solve agrees with the exhaustive oracle on small intervals") {
    for (auto [t, q, s] : {std::array<Int, 3>{1, 1, 1}, {1, 2, 1}, {1, 2, 2}}) {
        LinearEquation e0 = FForm(t, q).to_equation();
        LinearEquation e1 = FForm(t, s).to_equation();
        for (Int n = 1; n <= 12; ++n) {
            bool oracle_sat = exhaustive_sat(e0, e1, n).has_value();
            CHECK(solve(e0, e1, n).verdict ==
                  (oracle_sat ? Verdict::Satisfiable : Verdict::Unsatisfiable));
        }
    }
}

TEST_CASE("compute_rr small exact values") {
    auto outcome = compute_rr(FForm(1, 2).to_equation(), FForm(1, 2).to_equation(), 2);
    REQUIRE(outcome.result);
    CHECK(outcome.result->value == 11);
    REQUIRE(outcome.result->witness);
    CHECK(outcome.result->witness->domain_size() == 10);

    // A deliberately high hint must not change the answer.
    auto hinted = compute_rr(FForm(1, 2).to_equation(), FForm(1, 2).to_equation(), 30);
    REQUIRE(hinted.result);
    CHECK(hinted.result->value == 11);

    auto multivar = compute_rr(eq({1, 2, 1, -1}), eq({1, 1, -1}), 2);
    REQUIRE(multivar.result);
    CHECK(multivar.result->value == 11);
}

TEST_CASE("compute_rr is symmetric under swapping the pair") {
    for (auto [q, s] : {std::array<Int, 2>{2, 1}, {3, 2}}) {
        auto fwd = compute_rr(FForm(1, q).to_equation(), FForm(1, s).to_equation(), 2);
        auto rev = compute_rr(FForm(1, s).to_equation(), FForm(1, q).to_equation(), 2);
        REQUIRE(fwd.result);
        REQUIRE(rev.result);
        CHECK(fwd.result->value == rev.result->value);
    }
}

TEST_CASE("solve timeout yields Indeterminate, not a wrong verdict") {
    SolveOptions options;
    options.budget = std::chrono::milliseconds(0);
    auto r = solve(eq({2, 9, -1}), eq({2, 8, -1}), 150, options);
    CHECK(r.verdict == Verdict::Indeterminate);
}

TEST_CASE("computed values dominate the closed-form lower bounds") {
    for (Int s = 1; s <= 3; ++s)
        for (Int q = s; q <= 3; ++q) {
            auto outcome = compute_rr(FForm(1, q).to_equation(), FForm(1, s).to_equation(), 2);
            REQUIRE(outcome.result);
            CHECK(outcome.result->value >= lower_bound_thm21(1, q, s));
            CHECK(outcome.result->value == exact_rr1(q, s));
        }
}
