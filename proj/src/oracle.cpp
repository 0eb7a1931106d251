#include "rado/oracle.hpp"

#include <algorithm>

#include "rado/errors.hpp"

namespace rado {

namespace {

constexpr std::size_t kMaxViolations = 16;

void collect_monochromatic(const Coloring& col, const LinearEquation& eq, Color mono,
                           std::vector<SolutionTuple>& out, const EnumerationLimits& limits) {
    for (const SolutionTuple& sol : enumerate_solutions(eq, col.domain_size(), limits)) {
        bool all = std::all_of(sol.begin(), sol.end(),
                               [&](Int v) { return col.at(v) == mono; });
        if (all) {
            out.push_back(sol);
            if (out.size() >= kMaxViolations)
                return;
        }
    }
}

// Value-sets of all solutions, grouped by their maximum element.
std::vector<std::vector<std::vector<Int>>> sets_by_max(const LinearEquation& eq, Int n) {
    std::vector<std::vector<std::vector<Int>>> by_max(static_cast<std::size_t>(n + 1));
    for (const SolutionTuple& sol : enumerate_solutions(eq, n)) {
        std::vector<Int> set = sol;
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        auto& bucket = by_max[static_cast<std::size_t>(set.back())];
        if (std::find(bucket.begin(), bucket.end(), set) == bucket.end())
            bucket.push_back(set);
    }
    return by_max;
}

} // namespace

ValidityReport check_valid(const Coloring& col, const LinearEquation& e0,
                           const LinearEquation& e1, const EnumerationLimits& limits) {
    ValidityReport report;
    collect_monochromatic(col, e0, Color::Red, report.red_violations, limits);
    collect_monochromatic(col, e1, Color::Blue, report.blue_violations, limits);
    report.valid = report.red_violations.empty() && report.blue_violations.empty();
    return report;
}

std::optional<Coloring> exhaustive_sat(const LinearEquation& e0, const LinearEquation& e1, Int n,
                                       const OracleLimits& limits) {
    if (n < 1)
        throw PreconditionError("exhaustive_sat requires N >= 1");
    if (n > limits.max_n)
        throw ResourceLimitError("exhaustive_sat N exceeds cap");
    auto red_sets = sets_by_max(e0, n);  // must not be all Red
    auto blue_sets = sets_by_max(e1, n); // must not be all Blue

    PartialColoring partial(n);
    // Depth-first in lexicographic order, Red branch first. A prefix is
    // pruned once a constraint whose maximum element is assigned fails, so
    // the first leaf reached is the lexicographically least valid coloring.
    auto consistent = [&](Int pos) {
        for (const auto& set : red_sets[static_cast<std::size_t>(pos)])
            if (std::all_of(set.begin(), set.end(),
                            [&](Int v) { return partial.at(v) == Color::Red; }))
                return false;
        for (const auto& set : blue_sets[static_cast<std::size_t>(pos)])
            if (std::all_of(set.begin(), set.end(),
                            [&](Int v) { return partial.at(v) == Color::Blue; }))
                return false;
        return true;
    };
    auto search = [&](auto&& self, Int pos) -> bool {
        if (pos > n)
            return true;
        for (Color c : {Color::Red, Color::Blue}) {
            partial.set(pos, c);
            if (consistent(pos) && self(self, pos + 1))
                return true;
        }
        partial.unset(pos);
        return false;
    };
    if (search(search, 1))
        return partial.to_coloring();
    return std::nullopt;
}

std::optional<Int> exhaustive_rr(const LinearEquation& e0, const LinearEquation& e1, Int cap,
                                 const OracleLimits& limits) {
    if (cap < 1 || cap > limits.max_n)
        throw ResourceLimitError("exhaustive_rr cap out of range");
    for (Int n = 1; n <= cap; ++n)
        if (!exhaustive_sat(e0, e1, n, limits))
            return n;
    return std::nullopt;
}

} // namespace rado
