#ifndef RSL_SIEVE_HPP
#define RSL_SIEVE_HPP

#include <vector>

#include "rsl/ideals.hpp"
#include "rsl/stream.hpp"

namespace rsl {

/// The fixed C-infinity bump: 1 on [0,1], smooth exponential transitions on
/// [-1,0] and [1,2], zero outside (-1,2) (support inside (-2,2)).
double bump_phi(double y);

/// check-transform  Phi^(s) = integral Phi(y) e^{sy} dy, adaptive quadrature
/// to 1e-10 absolute (plateau piece in closed form).
cplx phi_check(cplx s);

/// g(d) = prod_{p | d} (1 - L(1, pi_p x pi~_p)^{-1}) for a squarefree ideal
/// given as distinct local factors; g(unit) = 1.
double g_factor(const representation& rep, const std::vector<satake_local>& divisor_primes);

struct g_strip_point {
    double t;
    double observed;  // |g_d(1 - 1/(2 n^2 dF) + it)|
    double budget;    // C^{1/(8 n^2 dF)} Nd^{1/4}
    bool pass;
};

std::vector<g_strip_point> g_strip_bound_check(const representation& rep,
                                               const std::vector<satake_local>& divisor_primes,
                                               const std::vector<double>& t_grid);

struct local_density_report {
    std::string instance;
    double x = 0, T = 0;
    std::int64_t d_norm = 1;
    double lhs = 0;        // sum_{d | n} lambda(n) Phi(T log(Nn/x))
    double main = 0;       // kappa g(d) (x/T) Phi^(1/T)
    double kappa = 0;
    double difference = 0;
    double budget = 0;     // x^{1-1/(2n^2 dF)} T^{3/8} C^{1/(2n^2 dF)} Nd^{1/4}
    double ratio = 0;      // difference / budget
};

/// Weighted local-density lemma check.  divisor_primes name the squarefree
/// ideal d (by prime-ideal index into the instance table).  Throws
/// kappa_unavailable when the residue is unknown and no estimator is set.
local_density_report weighted_divisor_sum(const representation& rep,
                                          const std::vector<std::size_t>& divisor_prime_indices,
                                          double x, double T);

struct sieve_report {
    std::string instance;
    double x = 0, T = 0, z = 0;
    double lhs = 0;        // z-rough weighted sum
    double main = 0;       // 3x/(T log z) Phi^(1/T)
    double error_budget = 0;
    double margin = 0;     // main + |budget| - lhs
    bool pass = false;
};

sieve_report selberg_upper(const representation& rep, double x, double T, double z);

struct bt_report {
    std::string instance;
    double x = 0, T = 0;
    double sum = 0;     // sum_{x < Nn <= x e^{1/T}} Lambda(n)
    double budget = 0;  // n^2 [F:Q] x / T
    double ratio = 0;
    bool in_paper_range = true; // T <= x^{1/(16 n^2 [F:Q])}
};

bt_report brun_titchmarsh(const representation& rep, double x, double T);

/// Empirical residue estimator kappa^ for instances without a closed form:
/// main-term inversion of the local-density lemma at d = unit, cross-checked
/// against a truncated Euler product.  Cached per instance label.
double empirical_kappa(const representation& rep);
double kappa_of(const representation& rep);

/// Truncated Euler-product estimate of kappa (cross-check path):
/// prod_{Np <= P} (1 - 1/Np) L_p(1).
double kappa_euler_estimate(const representation& rep, std::int64_t P);

} // namespace rsl

#endif
