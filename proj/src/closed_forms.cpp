#include "rado/closed_forms.hpp"

#include <numeric>

#include "rado/errors.hpp"

namespace rado {

Int lower_bound_thm21(Int t, Int q, Int s) {
    if (t < 1)
        throw PreconditionError("lower_bound_thm21 requires t >= 1");
    if (s < 1)
        throw PreconditionError("lower_bound_thm21 requires s >= 1");
    if (q < s)
        throw PreconditionError("lower_bound_thm21 requires q >= s");
    return checked_add(checked_mul(checked_mul(t, t + q), t + s), s);
}

Int lower_bound_thm22(Int t, Int q, Int s) {
    if (t < 1)
        throw PreconditionError("lower_bound_thm22 requires t >= 1");
    if (s < t)
        throw PreconditionError("lower_bound_thm22 requires s >= t");
    if (q < s)
        throw PreconditionError("lower_bound_thm22 requires q >= s");
    Int m = std::gcd(t, q) / std::gcd(std::gcd(t, q), s);
    return checked_add(checked_mul(checked_mul(t, t + q), t + s), checked_mul(m, s));
}

Int exact_rr1(Int q, Int s) {
    if (s < 1 || q < s)
        throw PreconditionError("exact_rr1 requires 1 <= s <= q");
    if (s == 1)
        return checked_add(checked_mul(2, q), checked_add(checked_mul(2, (q + 1) / 2), 1));
    return checked_add(checked_mul(q + 1, s + 1), s);
}

Int exact_multivar_rr1(std::span<const Int> a, std::span<const Int> b) {
    Int big = 0, small = 0;
    for (Int x : a) {
        if (x < 1)
            throw PreconditionError("exact_multivar_rr1 coefficients must be positive");
        big = checked_add(big, x);
    }
    for (Int x : b) {
        if (x < 1)
            throw PreconditionError("exact_multivar_rr1 coefficients must be positive");
        small = checked_add(small, x);
    }
    if (small < 1 || big < small)
        throw PreconditionError("exact_multivar_rr1 requires sum(a) >= sum(b) >= 1");
    return exact_rr1(big, small);
}

Int diagonal_exact(Int t, Int q) {
    if (t < 1 || q < 1)
        throw PreconditionError("diagonal_exact requires t, q >= 1");
    Int t2 = checked_mul(t, t);
    return checked_add(checked_add(checked_mul(t, checked_mul(q, q)),
                                   checked_mul(checked_add(checked_mul(2, t2), 1), q)),
                       checked_mul(t2, t));
}

Int lower_bound_anomalous(Int t) {
    if (t < 3)
        throw PreconditionError("lower_bound_anomalous requires t >= 3");
    Int t2 = checked_mul(t, t);
    return checked_add(checked_add(checked_mul(6, checked_mul(t2, t)), checked_mul(2, t2)),
                       checked_mul(4, t));
}

} // namespace rado
