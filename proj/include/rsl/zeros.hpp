#ifndef RSL_ZEROS_HPP
#define RSL_ZEROS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsl/representation.hpp"

namespace rsl {

struct zero {
    double beta = 0.5;
    double gamma = 0.0;
    int multiplicity = 1;
    std::string source;
};

/// gamma-sorted, conjugate-closed set of nontrivial zeros up to height
/// T_max.  `complete` is set only when the count passed the independent
/// counting-formula certification.
struct zero_set {
    std::vector<zero> zeros;
    double t_max = 0.0;
    bool complete = false;
    std::optional<double> exceptional; // beta_1, when the experiment plants one

    void add_conjugate_closed(double beta, double gamma, int mult, const std::string& src);
    void sort_by_gamma();
    bool conjugate_closed(double tol = 1e-12) const;
};

/// Critical-line zeros of zeta with 0 < gamma <= t_max located by sign
/// changes of Z(t) (scan step 0.01, bisection to 1e-12), certified against
/// the Riemann-von Mangoldt count; a mismatch > 2 triggers a rescan at
/// step/10 and then count_mismatch.  t_max <= 500.
zero_set find_zeta_zeros(double t_max);

/// N(sigma, T): zeros with beta >= sigma, |gamma| <= T, excluding the
/// exceptional zero; conjugates both count.  Throws incomplete_set.
std::int64_t zero_count(const zero_set& zs, double sigma, double T);

struct density_row {
    double sigma;
    std::int64_t count;
    double log_bound;  // log of n^2 [F:Q] (C T^{[F:Q]})^{1e7 n^2 (1-sigma)}
    bool pass;
};

/// N(sigma,T) against the log-free density bound with implied constant 1,
/// compared in logs (the bound overflows binary64 for sigma away from 1).
std::vector<density_row> density_bound_compare(const zero_set& zs, const representation& rep,
                                               double T, const std::vector<double>& sigmas);

struct counting_report {
    double T;
    std::int64_t count;     // zeros with 0 < gamma <= T
    double main_term;       // max(0, (T/2pi) log(T/2pi) - T/2pi + 7/8)
    double difference;
};

counting_report counting_formula_check(const zero_set& zs, double T);

/// Zeros (other than the tagged exceptional one) inside the standard
/// zero-free region Re s >= 1 - c1 / log(C (|Im s|+e)^{n^2 [F:Q]}).
std::vector<zero> zfr_check(const zero_set& zs, const representation& rep, double c1);

/// Same for the Deuring-Heilbronn widened region; throws degenerate_region
/// when the log argument drops below 1 somewhere on the set.
std::vector<zero> repulsion_region_check(const zero_set& zs, const representation& rep,
                                         double beta1, double c4, double c5);

struct siegel_report {
    double beta1;
    double bound;  // 1 - C(pi x pi~)^{-c}
    bool pass;
};

siegel_report siegel_bound_check(const representation& rep, double beta1, double c);

struct power_sum_trace {
    int j;
    double sum;        // sum_n Re(z_n^j)
    double budget;     // c j (1 - beta1) with c = 1 for reporting
};

struct power_sum_config {
    double beta1, beta_prime, gamma_prime;
    std::vector<cplx> z;   // modulus-descending
    double L;              // |z_1|^{-1} sum |z_n|
    std::vector<power_sum_trace> trace;
    double observed_c;     // max_j sum / (j (1-beta1))
    std::optional<int> witness; // j_1 from turan_witness
};

/// The section-5.3 power-sum experiment: z_n = {(2-w)^{-2}, (2+i gamma'-w)^{-2}}
/// over zeros w != beta_1 of the set.
power_sum_config power_sum_experiment(const zero_set& zs, double beta1,
                                      double beta_prime, double gamma_prime, int j_max);

/// Smallest 1 <= j1 <= ceil(24 L) with 8 sum Re(z_n^{j1}) >= |z_1|^{j1}.
/// Throws exhausted_range if none exists (would falsify the power-sum
/// theorem on valid input).
int turan_witness(std::vector<cplx> z);

/// CSV round trip (beta, gamma, multiplicity, source).
std::string zero_set_to_csv(const zero_set& zs);
zero_set zero_set_from_csv(const std::string& text, bool assume_complete);

} // namespace rsl

#endif
