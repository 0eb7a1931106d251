#ifndef RADO_EQUATION_HPP
#define RADO_EQUATION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rado/checked.hpp"

namespace rado {

/// A linear homogeneous equation sum(a_i * x_i) = 0 over positive integers.
/// Coefficients are nonzero and there are at least two of them.
class LinearEquation {
  public:
    explicit LinearEquation(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    std::size_t arity() const { return coeffs_.size(); }

    /// True iff the equation has >= 3 variables and coefficients of both
    /// signs (the hypothesis under which 2-colorability is guaranteed).
    bool mixed_sign_3var() const { return mixed_sign_3var_; }

    /// Substitutes values (one per variable) with checked arithmetic.
    Int eval(std::span<const Int> values) const;

    bool operator==(const LinearEquation&) const = default;

  private:
    std::vector<Int> coeffs_;
    bool mixed_sign_3var_ = false;
};

/// tx + jy = z, the two-coefficient family the exact results concern.
struct FForm {
    Int t;
    Int j;

    FForm(Int t_, Int j_);

    LinearEquation to_equation() const;
    static std::optional<FForm> from_equation(const LinearEquation& eq);
};

/// ax + by = cz with a, b, c positive.
struct CanonicalForm {
    Int a;
    Int b;
    Int c;
    bool operator==(const CanonicalForm&) const = default;
};

/// One solution of an equation: positive values, one per variable, in
/// variable order. Repeated values are permitted.
using SolutionTuple = std::vector<Int>;

/// Reduces a mixed-sign equation with >= 3 variables to ax + by = cz by
/// identifying variables. Orients signs so the positive side has at least
/// two terms.
CanonicalForm normalize(const LinearEquation& eq);

struct EnumerationLimits {
    Int max_tuples = 100'000'000; // predicted-count refusal threshold
};

/// All solutions of eq inside [1,N]^n, in lexicographic order, no duplicates.
std::vector<SolutionTuple> enumerate_solutions(const LinearEquation& eq, Int n,
                                               const EnumerationLimits& limits = {});

/// The subset of enumerate_solutions(eq, n) whose value-set contains v.
std::vector<SolutionTuple> solutions_involving(const LinearEquation& eq, Int n, Int v,
                                               const EnumerationLimits& limits = {});

/// Parses "2,3,-1" style coefficient lists. parse(render(eq)) == eq.
LinearEquation parse_equation(std::string_view text);
std::string render_equation(const LinearEquation& eq);

} // namespace rado

#endif
