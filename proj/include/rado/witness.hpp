#ifndef RADO_WITNESS_HPP
#define RADO_WITNESS_HPP

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

/// A constructed lower-bound certificate: the coloring avoids all-Red
/// solutions to e0 and all-Blue solutions to e1 on its whole domain.
struct WitnessCertificate {
    Coloring coloring;
    LinearEquation e0; // Red-avoided equation
    LinearEquation e1; // Blue-avoided equation
};

/// Interval construction certifying RR(tx+qy=z, tx+sy=z) >= t(t+q)(t+s)+s.
/// Domain [1, t(t+q)(t+s)+s-1]; requires q >= s >= 1, t >= 1.
WitnessCertificate witness_thm21(Int t, Int q, Int s);

/// Refinement adding m-1 extra Red points, m = gcd(t,q)/gcd(t,q,s);
/// certifies RR >= t(t+q)(t+s)+ms. Requires q >= s >= t >= 1.
WitnessCertificate witness_thm22(Int t, Int q, Int s);

/// Alternating-ends coloring certifying RR(x+qy=z, x+y=z) >= 2q+2*floor((q+1)/2)+1.
WitnessCertificate witness_gamma_s1(Int q);

/// Certifies RR(tx+(2t+1)y=z, tx+ty=z) >= 6t^3+2t^2+4t for t >= 3.
WitnessCertificate witness_anomalous(Int t);

/// The explicit coloring of [1,1392] for 6x+13y=z vs 6x+6y=z.
WitnessCertificate witness_remark_t6();

} // namespace rado

#endif
