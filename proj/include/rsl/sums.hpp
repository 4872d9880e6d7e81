#ifndef RSL_SUMS_HPP
#define RSL_SUMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rsl/stream.hpp"

namespace rsl {

/// psi_{pi x pi~}(x) = sum_{Nn <= x} Lambda_{pi x pi~}(n).
double psi_rs(const representation& rep, double x);
double psi_rs(const coeff_stream& st, double x);

struct interval_sum_report {
    std::string instance;
    double x = 0, h = 0;
    double raw = 0;        // sum over x < Nn <= x+h
    double main = 0;       // h (no curated instance has an exceptional zero)
    double ratio = 0;
};

interval_sum_report short_interval(const representation& rep, double x, double h);
interval_sum_report short_interval(const coeff_stream& st, const std::string& label,
                                   double x, double h);

/// Prime-only sum  sum_{x < Np <= x+h} |lambda_pi(p)|^2 log Np.
double grc_prime_interval(const representation& rep, double x, double h);
double grc_prime_interval(const coeff_stream& st, double x, double h);

struct composite_tail_report {
    std::string instance;
    double x = 0;
    double tail = 0;       // sum over composite n (ideal exponent >= 2) in [x, 2x]
    double bound = 0;      // n^2 x^{1 - 1/(2(n^2+1))} (log x)^3
    double ratio = 0;
    bool entry_bound_ok = true; // per-entry |Lambda| <= n^2 Nn^{1-2/(n^2+1)} log Np cross-check
};

composite_tail_report composite_tail(const representation& rep, double x);

/// Partial sums of Hypothesis H: sum_{Np <= X} |Lambda_pi(p^k)|^2 Np^{-k},
/// with the running value after each dyadic block for trend inspection.
struct hyp_h_report {
    std::string instance;
    int k = 2;
    double X = 0;
    double value = 0;
    std::vector<double> block_upper;      // dyadic block right endpoints
    std::vector<double> block_increment;  // contribution of each block
};

hyp_h_report hypothesis_h_partial(const representation& rep, int k, double X);

struct mertens_report {
    std::string instance;
    double eta = 0, X = 0;
    double partial_sum = 0;
    double budget = 0;  // 1/eta + (1/2) log C(pi x pi~) + 10 n^2 [F:Q]
    bool pass = false;
};

mertens_report mertens_check(const representation& rep, double eta, double X);

struct brumley_report {
    std::string instance;
    double eps = 0, X = 0;
    double product = 1.0;
    bool pass = true;
};

/// prod_{Np <= X} (1 - max_j |alpha_j|^2 Np^{-(1+eps)})^{-1}; throws
/// divergent_local_factor if a geometric ratio reaches 1.
brumley_report brumley_max_product(const representation& rep, double eps, double X);

} // namespace rsl

#endif
