#ifndef RSL_CONDUCTOR_HPP
#define RSL_CONDUCTOR_HPP

#include <vector>

#include "rsl/representation.hpp"

namespace rsl {

/// Analytic conductor C(pi,t) = D_F^n Nq_pi prod_v prod_j (e + |it + mu|^{d(v)}).
double analytic_conductor(const representation& rep, double t = 0.0);

/// C(pi x pi~, t) with the n^2 RS parameters and the instance RS conductor.
double rs_analytic_conductor(const representation& rep, double t = 0.0);

struct bh_point {
    double t;
    double lhs;   // C(pi x pi~, t)
    double rhs;   // C(pi x pi~) (e+|t|)^{[F:Q] n^2}
    double ratio; // lhs/rhs
    bool pass;
};

struct bh_report {
    std::vector<bh_point> points;
    bool all_pass = true;
};

/// Conductor growth check on a grid: C(pi x pi~, t) <= C(pi x pi~)(e+|t|)^{dF n^2}.
bh_report bh_conductor_check(const representation& rep, const std::vector<double>& t_grid);

} // namespace rsl

#endif
