#ifndef RSL_EXPLICIT_FORMULA_HPP
#define RSL_EXPLICIT_FORMULA_HPP

#include <vector>

#include "rsl/sums.hpp"
#include "rsl/zeros.hpp"

namespace rsl {

/// sum over zeros with 0 < beta < 1, |gamma| <= T of x^rho / rho, conjugate
/// pairs summed jointly.  Throws incomplete_set.
cplx zero_sum(const zero_set& zs, double x, double T);

struct ef_report {
    double x = 0, T = 0;
    double psi = 0;          // direct sum
    double main = 0;         // x
    cplx zsum;               // truncated zero sum
    double residual = 0;     // |psi - (x - Re zsum)|
    double budget = 0;       // x (log x)^2 / sqrt(T)
};

/// Truncated explicit formula on the zeta substrate.
ef_report explicit_formula_residual(const representation& rep, const zero_set& zs,
                                    double x, double T);

struct interval_zero_report {
    cplx term;                       // sum over pairs ((x+h)^rho - x^rho)/rho
    std::vector<double> per_zero;    // |((x+h)^rho - x^rho)/rho| per zero
    std::vector<double> per_zero_bound; // min{h x^{beta-1}, 3 x^beta/|gamma|}
    bool bounds_hold = true;         // per-zero term <= bound + 1e-12
};

interval_zero_report interval_zero_term(const zero_set& zs, double x, double h, double T);

struct dyadic_bound_report {
    double window = 0;    // x log x / h
    double near_sum = 0;  // sum' over |gamma| <= window of x^{beta-1}
    double sup_term = 0;  // (x log x/h) sup_M M^{-1} sum'_{|gamma|<=M} x^{beta-1}
    double tail = 0;      // x (log x)^2 / (h sqrt T)
    double total = 0;
};

/// Right side of the dyadic zero-sum bound with explicit constants 1; the
/// sup runs over the dyadic grid M = e^j intersected with [window, T].
dyadic_bound_report dyadic_zero_bound(const zero_set& zs, double x, double h, double T);

struct xi_solution {
    double xi = 0;
    double factor = 0;    // 1 - xi^{beta1 - 1}
    double residual = 0;  // defining-equation residual
};

/// Mean-value point: (x+h)^{b} - x^{b} = b h xi^{b-1}, xi in [x, x+h],
/// by monotone bisection to 1e-12 relative.
xi_solution xi_solve(double x, double h, double beta1);

struct choices_plan_result {
    double t_exponent = 0;   // T = x^{1/(4 A n^2 dF)}
    double delta = 0;        // 1/(16 A n^2 dF log(e n dF))
    double box = 0;          // 1/(16 A n^2), the admissibility box edge
    bool theta_ok = true;
    bool delta_ok = true;
    bool a_below_recommended = false; // A < 1e7 warning flag
};

/// Parameter plan of the main theorem; throws inadmissible_parameters naming
/// the violated constraint.
choices_plan_result choices_plan(double A, int n, int dF, double theta);

} // namespace rsl

#endif
