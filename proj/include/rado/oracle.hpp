#ifndef RADO_ORACLE_HPP
#define RADO_ORACLE_HPP

#include <optional>

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

struct ValidityReport {
    bool valid = false;
    std::vector<SolutionTuple> red_violations;  // all-Red solutions of e0, at most 16
    std::vector<SolutionTuple> blue_violations; // all-Blue solutions of e1, at most 16
};

/// Ground truth for the off-diagonal condition: valid iff no solution of e0
/// inside [1, col.N] is entirely Red and none of e1 is entirely Blue.
ValidityReport check_valid(const Coloring& col, const LinearEquation& e0,
                           const LinearEquation& e1, const EnumerationLimits& limits = {});

struct OracleLimits {
    Int max_n = 25;
};

/// Brute force over all 2^N colorings; returns the lexicographically first
/// valid one (Red < Blue, position 1 most significant), or nothing.
std::optional<Coloring> exhaustive_sat(const LinearEquation& e0, const LinearEquation& e1, Int n,
                                       const OracleLimits& limits = {});

/// The least N <= cap with no valid coloring, if one exists.
std::optional<Int> exhaustive_rr(const LinearEquation& e0, const LinearEquation& e1, Int cap,
                                 const OracleLimits& limits = {});

} // namespace rado

#endif
