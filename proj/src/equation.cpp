#include "rado/equation.hpp"

#include <algorithm>
#include <charconv>

namespace rado {

LinearEquation::LinearEquation(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
        throw PreconditionError("equation needs at least 2 coefficients");
    bool has_pos = false, has_neg = false;
    for (Int c : coeffs_) {
        if (c == 0)
            throw PreconditionError("zero coefficient in equation");
        (c > 0 ? has_pos : has_neg) = true;
    }
    mixed_sign_3var_ = coeffs_.size() >= 3 && has_pos && has_neg;
}

Int LinearEquation::eval(std::span<const Int> values) const {
    if (values.size() != coeffs_.size())
        throw PreconditionError("value count does not match equation arity");
    Int sum = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum = checked_add(sum, checked_mul(coeffs_[i], values[i]));
    return sum;
}

FForm::FForm(Int t_, Int j_) : t(t_), j(j_) {
    if (t < 1 || j < 1)
        throw PreconditionError("F-form requires t >= 1 and j >= 1");
}

LinearEquation FForm::to_equation() const { return LinearEquation({t, j, -1}); }

std::optional<FForm> FForm::from_equation(const LinearEquation& eq) {
    const auto& c = eq.coeffs();
    if (c.size() == 3 && c[0] >= 1 && c[1] >= 1 && c[2] == -1)
        return FForm(c[0], c[1]);
    return std::nullopt;
}

CanonicalForm normalize(const LinearEquation& eq) {
    if (!eq.mixed_sign_3var())
        throw PreconditionError(
            "normalize requires >= 3 variables with both positive and negative coefficients");
    std::vector<Int> c = eq.coeffs();
    auto positives = [&] { return std::count_if(c.begin(), c.end(), [](Int x) { return x > 0; }); };
    if (positives() < 2)
        for (Int& x : c)
            x = -x;
    std::vector<Int> alpha, beta;
    for (Int x : c)
        (x > 0 ? alpha : beta).push_back(x > 0 ? x : -x);
    Int a = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        a = checked_add(a, alpha[i]);
    Int cc = 0;
    for (Int b : beta)
        cc = checked_add(cc, b);
    return CanonicalForm{a, alpha.back(), cc};
}

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

struct Enumerator {
    const std::vector<Int>& coeffs;
    Int n;
    Int cap;
    std::optional<Int> must_contain;
    std::vector<Int> suff_min, suff_max; // achievable sum of the suffix
    std::vector<Int> current;
    std::vector<SolutionTuple> out;

    Enumerator(const LinearEquation& eq, Int n_, const EnumerationLimits& limits,
               std::optional<Int> v)
        : coeffs(eq.coeffs()), n(n_), cap(limits.max_tuples), must_contain(v) {
        if (n < 1)
            throw PreconditionError("enumeration interval must be nonempty");
        // Predicted worst case: one variable is determined by the others.
        Int predicted = 1;
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
            predicted = checked_mul(predicted, n);
            if (predicted > cap)
                throw ResourceLimitError("predicted solution count exceeds cap");
        }
        std::size_t k = coeffs.size();
        suff_min.assign(k + 1, 0);
        suff_max.assign(k + 1, 0);
        for (std::size_t i = k; i-- > 0;) {
            Int lo = coeffs[i] > 0 ? coeffs[i] : checked_mul(coeffs[i], n);
            Int hi = coeffs[i] > 0 ? checked_mul(coeffs[i], n) : coeffs[i];
            suff_min[i] = checked_add(suff_min[i + 1], lo);
            suff_max[i] = checked_add(suff_max[i + 1], hi);
        }
        current.resize(k);
    }

    void run() { recurse(0, 0); }

    void emit() {
        if (must_contain &&
            std::find(current.begin(), current.end(), *must_contain) == current.end())
            return;
        if (static_cast<Int>(out.size()) >= cap)
            throw ResourceLimitError("solution count exceeds cap");
        out.push_back(current);
    }

    void recurse(std::size_t i, Int partial) {
        Int a = coeffs[i];
        if (i + 1 == coeffs.size()) {
            // a * x = -partial
            Int target = checked_sub(0, partial);
            if (target % a == 0) {
                Int x = target / a;
                if (x >= 1 && x <= n) {
                    current[i] = x;
                    emit();
                }
            }
            return;
        }
        // Feasibility window: partial + a*x + [suff_min, suff_max](i+1) must straddle 0.
        Int lo = 1, hi = n;
        Int need_lo = checked_sub(checked_sub(0, partial), suff_max[i + 1]);
        Int need_hi = checked_sub(checked_sub(0, partial), suff_min[i + 1]);
        if (a > 0) {
            lo = std::max<Int>(lo, ceil_div(need_lo, a));
            hi = std::min<Int>(hi, floor_div(need_hi, a));
        } else {
            lo = std::max<Int>(lo, ceil_div(need_hi, a));
            hi = std::min<Int>(hi, floor_div(need_lo, a));
        }
        for (Int x = lo; x <= hi; ++x) {
            current[i] = x;
            recurse(i + 1, checked_add(partial, checked_mul(a, x)));
        }
    }
};

} // namespace

std::vector<SolutionTuple> enumerate_solutions(const LinearEquation& eq, Int n,
                                               const EnumerationLimits& limits) {
    Enumerator e(eq, n, limits, std::nullopt);
    e.run();
    return std::move(e.out);
}

std::vector<SolutionTuple> solutions_involving(const LinearEquation& eq, Int n, Int v,
                                               const EnumerationLimits& limits) {
    if (v < 1 || v > n)
        throw PreconditionError("solutions_involving requires 1 <= v <= N");
    Enumerator e(eq, n, limits, v);
    e.run();
    return std::move(e.out);
}

LinearEquation parse_equation(std::string_view text) {
    if (text.empty())
        throw ParseError("empty coefficient list");
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        Int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("non-integer coefficient token: '" + std::string(tok) + "'");
        if (value == 0)
            throw ParseError("zero coefficient");
        coeffs.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return LinearEquation(std::move(coeffs));
}

std::string render_equation(const LinearEquation& eq) {
    std::string out;
    for (std::size_t i = 0; i < eq.coeffs().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(eq.coeffs()[i]);
    }
    return out;
}

} // namespace rado
