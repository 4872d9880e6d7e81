#ifndef RSL_COEFFS_HPP
#define RSL_COEFFS_HPP

#include <vector>

#include "rsl/representation.hpp"

namespace rsl {

/// lambda(p^k) for k = 0..k_max from the Satake parameters: complete
/// homogeneous symmetric sums h_k(alpha_1..alpha_n), computed through
/// Newton's identities on the power sums (stable for unit-modulus inputs).
std::vector<cplx> local_standard_coeffs(const satake_local& loc, int k_max);

/// Same recursion for an arbitrary parameter multiset.
std::vector<cplx> homogeneous_sums(const std::vector<cplx>& alphas, int k_max);

/// Rankin-Selberg Satake parameters {alpha_j conj(alpha_j')} at an
/// unramified prime.  Throws ramified_prime otherwise.
rs_local rs_satake(const satake_local& loc);

/// Curated ramified convention: GL(1) with a zero parameter gives the empty
/// product set (local RS factor identically 1).  Throws unsupported for
/// n >= 2.
rs_local ramified_rs_satake(const satake_local& loc);

/// Either of the above depending on loc.ramified.
rs_local rs_local_of(const satake_local& loc);

/// lambda_{pi x pi~}(p^k), k = 0..k_max, realified.  Throws
/// non_real_coefficient if the self-duality residue exceeds 1e-6.
std::vector<double> rs_local_coeffs(const rs_local& rs, int k_max);

/// Lambda_{pi x pi~}(p^k) = (sum alpha^k) log N(p), k >= 1.
double rs_vonmangoldt(const rs_local& rs, int k);

/// Max coefficient mismatch in the formal identity
///   exp(sum_k Lambda(p^k) X^k / (k log Np)) = 1 + sum_k lambda(p^k) X^k
/// over k <= k_max.
double exp_identity_check(const rs_local& rs, int k_max);

} // namespace rsl

#endif
