#include "rsl/explicit_formula.hpp"

#include <algorithm>
#include <cmath>

#include "rsl/errors.hpp"

namespace rsl {

cplx zero_sum(const zero_set& zs, double x, double T) {
    if (!zs.complete) throw error(errc::incomplete_set, "zero_sum needs a certified set");
    if (T > zs.t_max + 1e-12) throw error(errc::unsupported, "T exceeds the set height bound");
    if (x < 1.0) throw error(errc::bad_spec, "zero_sum needs x >= 1");
    double lx = std::log(x);
    comp_sum re, im;
    // conjugate pairs are summed jointly: each gamma > 0 zero contributes
    // 2 Re(x^rho / rho); real zeros contribute singly
    for (const auto& z : zs.zeros) {
        if (z.beta <= 0.0 || z.beta >= 1.0) continue;
        if (std::abs(z.gamma) > T) continue;
        if (z.gamma < 0.0) continue;
        cplx rho{z.beta, z.gamma};
        cplx term = std::exp(rho * lx) / rho * double(z.multiplicity);
        if (z.gamma > 0.0) {
            re.add(2.0 * term.real());
        } else {
            re.add(term.real());
            im.add(term.imag());
        }
    }
    return {re.value(), im.value()};
}

ef_report explicit_formula_residual(const representation& rep, const zero_set& zs, double x,
                                    double T) {
    ef_report r;
    r.x = x;
    r.T = T;
    r.psi = psi_rs(rep, x);
    r.main = x;
    r.zsum = zero_sum(zs, x, T);
    r.residual = std::abs(r.psi - (x - r.zsum.real()));
    r.budget = x * std::pow(std::log(x), 2) / std::sqrt(std::max(T, 1.0));
    return r;
}

interval_zero_report interval_zero_term(const zero_set& zs, double x, double h, double T) {
    if (!zs.complete) throw error(errc::incomplete_set, "interval_zero_term needs a certified set");
    if (!(h >= 2 && h <= x)) throw error(errc::bad_spec, "need 2 <= h <= x");
    interval_zero_report r;
    double lx = std::log(x), lxh = std::log(x + h);
    comp_sum re;
    for (const auto& z : zs.zeros) {
        if (z.beta <= 0.0 || z.beta >= 1.0 || std::abs(z.gamma) > T) continue;
        cplx rho{z.beta, z.gamma};
        cplx term = (std::exp(rho * lxh) - std::exp(rho * lx)) / rho * double(z.multiplicity);
        double mag = std::abs(term) / z.multiplicity;
        double bound = h * std::pow(x, z.beta - 1.0);
        if (z.gamma != 0.0)
            bound = std::min(bound, 3.0 * std::pow(x, z.beta) / std::abs(z.gamma));
        r.per_zero.push_back(mag);
        r.per_zero_bound.push_back(bound);
        if (mag > bound + 1e-12) r.bounds_hold = false;
        if (z.gamma > 0.0)
            re.add(2.0 * term.real());
        else if (z.gamma == 0.0)
            re.add(term.real());
    }
    r.term = cplx{re.value(), 0.0};
    return r;
}

dyadic_bound_report dyadic_zero_bound(const zero_set& zs, double x, double h, double T) {
    if (!zs.complete) throw error(errc::incomplete_set, "dyadic_zero_bound needs a certified set");
    dyadic_bound_report r;
    double lx = std::log(x);
    r.window = x * lx / h;

    auto sum_below = [&](double M) {
        comp_sum s;
        for (const auto& z : zs.zeros) {
            if (z.beta <= 0.0 || z.beta >= 1.0) continue;
            if (zs.exceptional && z.gamma == 0.0 && std::abs(z.beta - *zs.exceptional) < 1e-12)
                continue;
            if (std::abs(z.gamma) <= M) s.add(std::pow(x, z.beta - 1.0) * z.multiplicity);
        }
        return s.value();
    };

    r.near_sum = sum_below(std::min(r.window, T));
    // sup over the dyadic grid M = e^j in [window, T]
    double sup = 0.0;
    if (r.window <= T) {
        int j0 = int(std::floor(std::log(std::max(r.window, 1.0))));
        for (int j = j0;; ++j) {
            double M = std::exp(double(j));
            if (M < r.window) continue;
            double Mc = std::min(M, T);
            sup = std::max(sup, sum_below(Mc) / Mc);
            if (M >= T) break;
        }
    }
    r.sup_term = r.window * sup;
    r.tail = x * lx * lx / (h * std::sqrt(std::max(T, 1.0)));
    r.total = r.near_sum + r.sup_term + r.tail;
    return r;
}

xi_solution xi_solve(double x, double h, double beta1) {
    if (!(beta1 > 0.0 && beta1 < 1.0)) throw error(errc::bad_spec, "need 0 < beta1 < 1");
    if (!(h >= 2 && h <= x)) throw error(errc::bad_spec, "need 2 <= h <= x");
    double target = (std::pow(x + h, beta1) - std::pow(x, beta1)) / beta1;
    // f(xi) = h xi^{beta1-1} is decreasing; bracket [x, x+h] is guaranteed by
    // the mean value theorem
    double lo = x, hi = x + h;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (h * std::pow(mid, beta1 - 1.0) > target)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) / x < 1e-14) break;
    }
    xi_solution s;
    s.xi = 0.5 * (lo + hi);
    s.factor = 1.0 - std::pow(s.xi, beta1 - 1.0);
    s.residual = std::abs(std::pow(x + h, beta1) - std::pow(x, beta1) -
                          beta1 * h * std::pow(s.xi, beta1 - 1.0));
    return s;
}

choices_plan_result choices_plan(double A, int n, int dF, double theta) {
    if (A <= 0 || n < 1 || dF < 1 || theta < 0)
        throw error(errc::inadmissible_parameters, "A, n, dF must be positive and theta >= 0");
    choices_plan_result r;
    double n2 = double(n) * n;
    r.t_exponent = 1.0 / (4.0 * A * n2 * dF);
    r.delta = 1.0 / (16.0 * A * n2 * dF * std::log(std::exp(1.0) * n * dF));
    r.box = 1.0 / (16.0 * A * n2);
    r.a_below_recommended = A < 1e7;
    r.theta_ok = theta <= r.box;
    r.delta_ok = r.delta * dF <= r.box;
    if (!r.theta_ok)
        throw error(errc::inadmissible_parameters,
                    "theta = " + std::to_string(theta) + " exceeds 1/(16 A n^2) = " +
                        std::to_string(r.box));
    if (!r.delta_ok)
        throw error(errc::inadmissible_parameters, "delta dF exceeds 1/(16 A n^2)");
    return r;
}

} // namespace rsl
