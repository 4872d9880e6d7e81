#include "rsl/sums.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "rsl/errors.hpp"
#include "rsl/conductor.hpp"

namespace rsl {

double psi_rs(const coeff_stream& st, double x) {
    if (x > double(st.cutoff)) throw error(errc::stream_too_short, "psi_rs beyond stream cutoff");
    comp_sum s;
    for (const auto& e : st.entries) {
        if (double(e.norm) > x) break;
        s.add(e.vonmangoldt);
    }
    return s.value();
}

double psi_rs(const representation& rep, double x) {
    if (x < 2) return 0.0;
    return psi_rs(*shared_stream(rep, std::int64_t(std::ceil(x))), x);
}

interval_sum_report short_interval(const coeff_stream& st, const std::string& label, double x,
                                   double h) {
    if (h < 2 || h > x) throw error(errc::bad_spec, "short_interval needs 2 <= h <= x");
    if (x + h > double(st.cutoff))
        throw error(errc::stream_too_short, "short_interval beyond stream cutoff");
    interval_sum_report r;
    r.instance = label;
    r.x = x;
    r.h = h;
    comp_sum s;
    for (const auto& e : st.entries) {
        if (double(e.norm) <= x) continue;
        if (double(e.norm) > x + h) break;
        s.add(e.vonmangoldt);
    }
    r.raw = s.value();
    r.main = h;
    r.ratio = r.raw / h;
    return r;
}

interval_sum_report short_interval(const representation& rep, double x, double h) {
    return short_interval(*shared_stream(rep, std::int64_t(std::ceil(x + h))), rep.label, x, h);
}

double grc_prime_interval(const coeff_stream& st, double x, double h) {
    if (x + h > double(st.cutoff))
        throw error(errc::stream_too_short, "grc_prime_interval beyond stream cutoff");
    comp_sum s;
    for (const auto& e : st.entries) {
        if (double(e.norm) <= x || e.k != 1) continue;
        if (double(e.norm) > x + h) break;
        s.add(e.std_lambda_sq * std::log(double(e.norm)));
    }
    return s.value();
}

double grc_prime_interval(const representation& rep, double x, double h) {
    return grc_prime_interval(*shared_stream(rep, std::int64_t(std::ceil(x + h))), x, h);
}

composite_tail_report composite_tail(const representation& rep, double x) {
    if (x < 4) throw error(errc::bad_spec, "composite_tail needs x >= 4");
    auto stp = shared_stream(rep, std::int64_t(std::ceil(2 * x)));
    const auto& st = *stp;
    composite_tail_report r;
    r.instance = rep.label;
    r.x = x;
    comp_sum s;
    double n2 = double(rep.n) * rep.n;
    for (const auto& e : st.entries) {
        if (double(e.norm) < x || e.k < 2) continue;
        if (double(e.norm) > 2 * x) break;
        s.add(e.vonmangoldt);
        double entry_cap = n2 * std::pow(double(e.norm), 1.0 - 2.0 / (n2 + 1.0)) *
                           std::log(double(e.pnorm));
        if (std::abs(e.vonmangoldt) > entry_cap + 1e-9) r.entry_bound_ok = false;
    }
    r.tail = s.value();
    r.bound = n2 * std::pow(x, 1.0 - 1.0 / (2.0 * (n2 + 1.0))) * std::pow(std::log(x), 3);
    r.ratio = r.tail / r.bound;
    return r;
}

hyp_h_report hypothesis_h_partial(const representation& rep, int k, double X) {
    if (k < 2) throw error(errc::bad_spec, "hypothesis H concerns k >= 2");
    hyp_h_report r;
    r.instance = rep.label;
    r.k = k;
    r.X = X;
    if (X < 2) return r;
    require_cutoff(rep, std::int64_t(X));
    comp_sum total;
    double block_hi = 2.0;
    comp_sum block;
    for (const auto& [pnorm, locs] : rep.satake) {
        if (double(pnorm) > X) break;
        while (double(pnorm) > block_hi) {
            r.block_upper.push_back(block_hi);
            r.block_increment.push_back(block.value());
            block = comp_sum{};
            block_hi *= 2.0;
        }
        for (const auto& loc : locs) {
            cplx pk{0, 0};
            for (const cplx& a : loc.alphas) pk += std::pow(a, k);
            double lam_std = std::abs(pk) * std::log(double(pnorm)); // |Lambda_pi(p^k)|
            double term = lam_std * lam_std / std::pow(double(pnorm), k);
            total.add(term);
            block.add(term);
        }
    }
    r.block_upper.push_back(block_hi);
    r.block_increment.push_back(block.value());
    r.value = total.value();
    return r;
}

mertens_report mertens_check(const representation& rep, double eta, double X) {
    if (eta <= 0) throw error(errc::bad_spec, "mertens_check needs eta > 0");
    mertens_report r;
    r.instance = rep.label;
    r.eta = eta;
    r.X = X;
    if (X >= 2) {
        auto stp = shared_stream(rep, std::int64_t(X));
        const auto& st = *stp;
        comp_sum s;
        for (const auto& e : st.entries) {
            if (double(e.norm) > X) break;
            s.add(e.vonmangoldt * std::pow(double(e.norm), -1.0 - eta));
        }
        r.partial_sum = s.value();
    }
    double n2df = double(rep.n) * rep.n * rep.degree_f();
    r.budget = 1.0 / eta + 0.5 * std::log(rs_analytic_conductor(rep)) + 10.0 * n2df;
    r.pass = r.partial_sum <= r.budget;
    return r;
}

brumley_report brumley_max_product(const representation& rep, double eps, double X) {
    if (eps <= 0) throw error(errc::bad_spec, "brumley_max_product needs eps > 0");
    brumley_report r;
    r.instance = rep.label;
    r.eps = eps;
    r.X = X;
    if (X < 2) return r;
    require_cutoff(rep, std::int64_t(X));
    comp_sum logs;
    for (const auto& [pnorm, locs] : rep.satake) {
        if (double(pnorm) > X) break;
        for (const auto& loc : locs) {
            double m = 0.0;
            for (const cplx& a : loc.alphas) m = std::max(m, std::norm(a));
            double ratio = m * std::pow(double(pnorm), -1.0 - eps);
            if (ratio >= 1.0)
                throw error(errc::divergent_local_factor,
                            "geometric ratio >= 1 at Np=" + std::to_string(pnorm));
            logs.add(-std::log1p(-ratio));
        }
    }
    r.product = std::exp(logs.value());
    return r;
}

} // namespace rsl
