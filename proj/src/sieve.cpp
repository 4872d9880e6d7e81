#include "rsl/sieve.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "rsl/conductor.hpp"
#include "rsl/errors.hpp"
#include "rsl/coeffs.hpp"
#include "rsl/instances.hpp"

namespace rsl {

namespace {

double transition(double u) {
    // g(u)/(g(u)+g(1-u)) with g(u) = exp(-1/u): C-infinity step from 0 to 1
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double a = std::exp(-1.0 / u);
    double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

} // namespace

double bump_phi(double y) {
    if (y <= -1.0 || y >= 2.0) return 0.0;
    if (y >= 0.0 && y <= 1.0) return 1.0;
    if (y < 0.0) return transition(y + 1.0);
    return transition(2.0 - y);
}

namespace {

cplx simpson(const std::function<cplx(double)>& f, double a, double m, double b, cplx fa, cplx fm,
             cplx fb, cplx whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    cplx flm = f(lm), frm = f(rm);
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson(f, a, lm, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, rm, b, fm, frm, fb, right, tol / 2, depth - 1);
}

cplx integrate(const std::function<cplx(double)>& f, double a, double b, double tol) {
    // pre-split proportionally to the oscillation scale so adaptive Simpson
    // starts resolved
    int panels = 8;
    cplx total{0, 0};
    double w = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * w, x1 = x0 + w, xm = 0.5 * (x0 + x1);
        cplx f0 = f(x0), fm = f(xm), f1 = f(x1);
        cplx whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += simpson(f, x0, xm, x1, f0, fm, f1, whole, tol / panels, 40);
    }
    return total;
}

} // namespace

cplx phi_check(cplx s) {
    double osc = std::abs(s.imag());
    double tol = 1e-11;
    auto rise = [&](double y) { return transition(y + 1.0) * std::exp(s * y); };
    auto fall = [&](double y) { return transition(2.0 - y) * std::exp(s * y); };
    cplx plateau;
    if (std::abs(s) < 1e-8) {
        // (e^s - 1)/s by series to avoid cancellation
        plateau = 1.0 + s / 2.0 + s * s / 6.0;
    } else {
        plateau = (std::exp(s) - 1.0) / s;
    }
    // extra panels once e^{i Im(s) y} oscillates inside a unit interval
    int extra = int(osc / 4.0);
    cplx r{0, 0}, fpiece{0, 0};
    if (extra == 0) {
        r = integrate(rise, -1.0, 0.0, tol);
        fpiece = integrate(fall, 1.0, 2.0, tol);
    } else {
        int panels = 1 + extra;
        for (int i = 0; i < panels; ++i) {
            double a0 = -1.0 + double(i) / panels, b0 = -1.0 + double(i + 1) / panels;
            r += integrate(rise, a0, b0, tol / panels);
            a0 = 1.0 + double(i) / panels;
            b0 = 1.0 + double(i + 1) / panels;
            fpiece += integrate(fall, a0, b0, tol / panels);
        }
    }
    return r + plateau + fpiece;
}

namespace {

cplx local_rs_factor(const satake_local& loc, cplx s) {
    // L(s, pi_p x pi~_p) = prod (1 - alpha Np^{-s})^{-1}
    rs_local rs = rs_local_of(loc);
    cplx nps = std::exp(-s * std::log(double(loc.norm)));
    cplx denom{1.0, 0.0};
    for (const cplx& a : rs.rs_alphas) denom *= (1.0 - a * nps);
    return 1.0 / denom;
}

} // namespace

double g_factor(const representation& rep, const std::vector<satake_local>& divisor_primes) {
    (void)rep;
    double g = 1.0;
    for (const auto& loc : divisor_primes) {
        cplx lp = local_rs_factor(loc, cplx{1.0, 0.0});
        g *= (1.0 - 1.0 / lp).real();
    }
    return g;
}

std::vector<g_strip_point> g_strip_bound_check(const representation& rep,
                                               const std::vector<satake_local>& divisor_primes,
                                               const std::vector<double>& t_grid) {
    double n2df = double(rep.n) * rep.n * rep.degree_f();
    double sigma = 1.0 - 1.0 / (2.0 * n2df);
    double dnorm = 1.0;
    for (const auto& loc : divisor_primes) dnorm *= double(loc.norm);
    double budget = std::pow(rs_analytic_conductor(rep), 1.0 / (8.0 * n2df)) *
                    std::pow(dnorm, 0.25);
    std::vector<g_strip_point> out;
    for (double t : t_grid) {
        cplx g{1.0, 0.0};
        for (const auto& loc : divisor_primes)
            g *= (1.0 - 1.0 / local_rs_factor(loc, cplx{sigma, t}));
        out.push_back({t, std::abs(g), budget, std::abs(g) <= budget});
    }
    return out;
}

namespace {

// Weighted sums over ideals: sum lambda(n) Phi(T log(Nn/x)) with optional
// divisor and roughness constraints.
double weighted_ideal_sum(const representation& rep,
                          const std::vector<std::pair<std::size_t, int>>& forced,
                          const std::function<bool(std::size_t)>& include_prime, double x,
                          double T) {
    std::int64_t X = std::int64_t(std::ceil(x * std::exp(2.0 / T))) + 1;
    auto table = instance_ideal_table(rep, X);
    auto lam = rs_lambda_powers(rep, table, X);
    comp_sum s;
    enumerate_ideals(table, X, include_prime, forced,
                     [&](std::int64_t norm, const std::vector<ideal_factor>& factors) {
                         double w = bump_phi(T * std::log(double(norm) / x));
                         if (w == 0.0) return;
                         double v = 1.0;
                         for (const auto& f : factors) v *= lam[f.prime_index][std::size_t(f.exponent)];
                         s.add(v * w);
                     });
    return s.value();
}

std::mutex g_kappa_mu;
std::map<std::string, double> g_kappa_cache;

} // namespace

double kappa_euler_estimate(const representation& rep, std::int64_t P) {
    require_cutoff(rep, P);
    comp_sum logs;
    for (const auto& [pnorm, locs] : rep.satake) {
        if (pnorm > P) break;
        for (const auto& loc : locs) {
            double lp = local_rs_factor(loc, cplx{1.0, 0.0}).real();
            logs.add(std::log1p(-1.0 / double(pnorm)) + std::log(lp));
        }
    }
    return std::exp(logs.value());
}

double empirical_kappa(const representation& rep) {
    {
        std::lock_guard<std::mutex> lk(g_kappa_mu);
        auto it = g_kappa_cache.find(rep.label);
        if (it != g_kappa_cache.end()) return it->second;
    }
    // main-term inversion at d = unit, T = 1; x capped by the instance's
    // own Satake reach
    double cap = double(rep.satake_cutoff);
    double x = std::min(2.0e5, cap / std::exp(2.0) * 0.99);
    if (x < 100.0)
        throw error(errc::kappa_unavailable,
                    "residue estimator needs Satake data past " +
                        std::to_string(std::int64_t(100 * std::exp(2.0))));
    double lhs = weighted_ideal_sum(rep, {}, nullptr, x, 1.0);
    double k = lhs / (x * phi_check(cplx{1.0, 0.0}).real());
    std::lock_guard<std::mutex> lk(g_kappa_mu);
    g_kappa_cache[rep.label] = k;
    return k;
}

double kappa_of(const representation& rep) {
    if (auto k = known_kappa(rep)) return *k;
    return empirical_kappa(rep);
}

local_density_report weighted_divisor_sum(const representation& rep,
                                          const std::vector<std::size_t>& divisor_prime_indices,
                                          double x, double T) {
    if (x < 1 || T < 1) throw error(errc::bad_spec, "need x, T >= 1");
    local_density_report r;
    r.instance = rep.label;
    r.x = x;
    r.T = T;

    std::int64_t X = std::int64_t(std::ceil(x * std::exp(2.0 / T))) + 1;
    auto table = instance_ideal_table(rep, X);
    std::vector<std::pair<std::size_t, int>> forced;
    std::vector<satake_local> dlocs;
    for (auto idx : divisor_prime_indices) {
        forced.push_back({idx, 1});
        const auto& id = table.ideals.at(idx);
        std::size_t which = 0;
        for (std::size_t j = 0; j < idx; ++j)
            if (table.ideals[j].norm == id.norm) ++which;
        dlocs.push_back(rep.satake.at(id.norm).at(which));
        r.d_norm *= id.norm;
    }

    r.lhs = weighted_ideal_sum(rep, forced, nullptr, x, T);
    r.kappa = kappa_of(rep);
    double g = g_factor(rep, dlocs);
    r.main = r.kappa * g * (x / T) * phi_check(cplx{1.0 / T, 0.0}).real();
    r.difference = std::abs(r.lhs - r.main);
    double n2df = double(rep.n) * rep.n * rep.degree_f();
    r.budget = std::pow(x, 1.0 - 1.0 / (2.0 * n2df)) * std::pow(T, 3.0 / 8.0) *
               std::pow(rs_analytic_conductor(rep), 1.0 / (2.0 * n2df)) *
               std::pow(double(r.d_norm), 0.25);
    r.ratio = r.difference / r.budget;
    return r;
}

sieve_report selberg_upper(const representation& rep, double x, double T, double z) {
    if (z < 2) throw error(errc::bad_spec, "selberg_upper needs z >= 2");
    sieve_report r;
    r.instance = rep.label;
    r.x = x;
    r.T = T;
    r.z = z;
    std::int64_t X = std::int64_t(std::ceil(x * std::exp(2.0 / T))) + 1;
    auto table = instance_ideal_table(rep, X);
    auto rough = [&table, z](std::size_t i) { return double(table.ideals[i].norm) > z; };
    r.lhs = weighted_ideal_sum(rep, {}, rough, x, T);
    r.main = 3.0 * x / (T * std::log(z)) * phi_check(cplx{1.0 / T, 0.0}).real();
    double n2df = double(rep.n) * rep.n * rep.degree_f();
    r.error_budget = std::pow(x, 1.0 - 1.0 / (2.0 * n2df)) * std::pow(T, 3.0 / 8.0) *
                     std::pow(rs_analytic_conductor(rep), 1.0 / (2.0 * n2df)) * std::pow(z, 5.0);
    r.margin = r.main + std::abs(r.error_budget) - r.lhs;
    r.pass = r.lhs <= r.main + 10.0 * std::abs(r.error_budget);
    return r;
}

bt_report brun_titchmarsh(const representation& rep, double x, double T) {
    if (T < 1) throw error(errc::bad_spec, "brun_titchmarsh needs T >= 1");
    bt_report r;
    r.instance = rep.label;
    r.x = x;
    r.T = T;
    double hi = x * std::exp(1.0 / T);
    auto st = shared_stream(rep, std::int64_t(std::ceil(hi)) + 1);
    comp_sum s;
    for (const auto& e : st->entries) {
        if (double(e.norm) <= x) continue;
        if (double(e.norm) > hi) break;
        s.add(e.vonmangoldt);
    }
    r.sum = s.value();
    double n2df = double(rep.n) * rep.n * rep.degree_f();
    r.budget = n2df * x / T;
    r.ratio = r.sum / r.budget;
    r.in_paper_range = T <= std::pow(x, 1.0 / (16.0 * n2df));
    return r;
}

} // namespace rsl
