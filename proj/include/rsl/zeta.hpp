#ifndef RSL_ZETA_HPP
#define RSL_ZETA_HPP

#include "rsl/numeric.hpp"

namespace rsl {

/// log Gamma(z) for Re z > 0 (Lanczos, ~1e-13 relative).
cplx log_gamma(cplx z);

/// zeta(s) by Euler-Maclaurin; accurate to ~1e-12 for |Im s| <= 600.
cplx zeta_em(cplx s);

/// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double rs_theta(double t);

/// Hardy's rotated function Z(t) = e^{i theta(t)} zeta(1/2 + it), real-valued.
double hardy_z(double t);

} // namespace rsl

#endif
