#include "rsl/conductor.hpp"

#include <cmath>

namespace rsl {

namespace {

const double kE = std::exp(1.0);

double arch_product(const std::vector<arch_factor>& factors, double t) {
    double prod = 1.0;
    for (const auto& f : factors) {
        double mag = std::abs(cplx{0.0, t} + f.mu);
        prod *= kE + std::pow(mag, f.dv);
    }
    return prod;
}

} // namespace

double analytic_conductor(const representation& rep, double t) {
    double disc = std::pow(double(rep.field.discriminant), rep.n);
    return disc * double(rep.conductor_norm) * arch_product(rep.arch, t);
}

double rs_analytic_conductor(const representation& rep, double t) {
    double disc = std::pow(double(rep.field.discriminant), double(rep.n) * rep.n);
    return disc * double(rep.rs_conductor_norm) * arch_product(rep.rs_arch, t);
}

bh_report bh_conductor_check(const representation& rep, const std::vector<double>& t_grid) {
    bh_report rep_out;
    double c0 = rs_analytic_conductor(rep, 0.0);
    double expo = double(rep.degree_f()) * rep.n * rep.n;
    for (double t : t_grid) {
        bh_point p;
        p.t = t;
        p.lhs = rs_analytic_conductor(rep, t);
        p.rhs = c0 * std::pow(kE + std::abs(t), expo);
        p.ratio = p.lhs / p.rhs;
        p.pass = p.lhs <= p.rhs * (1 + 1e-12);
        rep_out.all_pass = rep_out.all_pass && p.pass;
        rep_out.points.push_back(p);
    }
    return rep_out; // empty grid: vacuous pass
}

} // namespace rsl
