#ifndef RADO_CLOSED_FORMS_HPP
#define RADO_CLOSED_FORMS_HPP

#include <span>

#include "rado/checked.hpp"

namespace rado {

/// t(t+q)(t+s)+s, a lower bound for RR(tx+qy=z, tx+sy=z). q >= s >= 1, t >= 1.
Int lower_bound_thm21(Int t, Int q, Int s);

/// t(t+q)(t+s)+ms with m = gcd(t,q)/gcd(t,q,s). q >= s >= t >= 1.
Int lower_bound_thm22(Int t, Int q, Int s);

/// Exact RR(x+qy=z, x+sy=z) for 1 <= s <= q:
/// 2q+2*floor((q+1)/2)+1 when s = 1, else (q+1)(s+1)+s.
Int exact_rr1(Int q, Int s);

/// Exact value for the pair (x+sum a_i y_i=z, x+sum b_i y_i=z), which
/// depends only on Q = sum(a), S = sum(b); requires Q >= S >= 1.
Int exact_multivar_rr1(std::span<const Int> a, std::span<const Int> b);

/// Exact diagonal value RR(tx+qy=z, tx+qy=z) = tq^2+(2t^2+1)q+t^3.
Int diagonal_exact(Int t, Int q);

/// 6t^3+2t^2+4t, a lower bound for RR(tx+(2t+1)y=z, tx+ty=z), t >= 3.
Int lower_bound_anomalous(Int t);

} // namespace rado

#endif
