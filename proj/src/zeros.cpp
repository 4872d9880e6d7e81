#include "rsl/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rsl/conductor.hpp"
#include "rsl/errors.hpp"
#include "rsl/zeta.hpp"

namespace rsl {

void zero_set::add_conjugate_closed(double beta, double gamma, int mult, const std::string& src) {
    zeros.push_back({beta, gamma, mult, src});
    if (gamma != 0.0) zeros.push_back({beta, -gamma, mult, src});
}

void zero_set::sort_by_gamma() {
    std::sort(zeros.begin(), zeros.end(), [](const zero& a, const zero& b) {
        return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
    });
}

bool zero_set::conjugate_closed(double tol) const {
    for (const auto& z : zeros) {
        if (z.gamma == 0.0) continue;
        bool found = false;
        for (const auto& w : zeros)
            if (std::abs(w.gamma + z.gamma) <= tol && std::abs(w.beta - z.beta) <= tol &&
                w.multiplicity == z.multiplicity) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

double bisect_z(double lo, double hi, double flo) {
    for (int i = 0; i < 64 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = hardy_z(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) == (fm < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_ordinates(double t_max, double step) {
    double t0 = 0.1;
    std::int64_t npts = std::int64_t(std::ceil((t_max - t0) / step)) + 1;
    std::vector<double> z(static_cast<std::size_t>(npts), 0.0);
    parallel_for(0, npts, [&](std::int64_t i) {
        double t = std::min(t_max, t0 + double(i) * step);
        z[std::size_t(i)] = hardy_z(t);
    }, max_threads());
    std::vector<double> roots;
    for (std::int64_t i = 0; i + 1 < npts; ++i) {
        double a = t0 + double(i) * step;
        double b = std::min(t_max, a + step);
        double za = z[std::size_t(i)], zb = z[std::size_t(i + 1)];
        if (za == 0.0) {
            roots.push_back(a);
        } else if (za * zb < 0.0) {
            roots.push_back(bisect_z(a, b, za));
        }
    }
    return roots;
}

double rvm_estimate(double T) {
    return rs_theta(T) / std::numbers::pi + 1.0;
}

} // namespace

zero_set find_zeta_zeros(double t_max) {
    if (t_max > 500.0)
        throw error(errc::unsupported, "zero finder is desk-scale: t_max <= 500");
    zero_set zs;
    zs.t_max = t_max;
    if (t_max < 14.0) {
        zs.complete = true; // no zeros below the first ordinate
        return zs;
    }
    auto roots = scan_ordinates(t_max, 0.01);
    double expected = rvm_estimate(t_max);
    if (std::abs(double(roots.size()) - expected) > 2.0) {
        roots = scan_ordinates(t_max, 0.001);
        if (std::abs(double(roots.size()) - expected) > 2.0)
            throw error(errc::count_mismatch,
                        "found " + std::to_string(roots.size()) + " zeros vs expected " +
                            std::to_string(expected));
    }
    for (double g : roots) zs.add_conjugate_closed(0.5, g, 1, "z-scan");
    zs.sort_by_gamma();
    zs.complete = true;
    return zs;
}

std::int64_t zero_count(const zero_set& zs, double sigma, double T) {
    if (!zs.complete) throw error(errc::incomplete_set, "zero_count needs a certified set");
    if (T > zs.t_max + 1e-12) throw error(errc::unsupported, "T exceeds the set height bound");
    std::int64_t c = 0;
    for (const auto& z : zs.zeros) {
        if (zs.exceptional && z.gamma == 0.0 && std::abs(z.beta - *zs.exceptional) < 1e-12)
            continue;
        if (z.beta >= sigma && std::abs(z.gamma) <= T) c += z.multiplicity;
    }
    return c;
}

std::vector<density_row> density_bound_compare(const zero_set& zs, const representation& rep,
                                               double T, const std::vector<double>& sigmas) {
    double n2 = double(rep.n) * rep.n;
    double df = rep.degree_f();
    double logC = std::log(rs_analytic_conductor(rep));
    std::vector<density_row> rows;
    for (double sigma : sigmas) {
        density_row r;
        r.sigma = sigma;
        r.count = zero_count(zs, sigma, T);
        r.log_bound = std::log(n2 * df) + 1e7 * n2 * (1.0 - sigma) * (logC + df * std::log(T));
        double log_count = r.count > 0 ? std::log(double(r.count)) : -1e300;
        r.pass = log_count <= r.log_bound;
        rows.push_back(r);
    }
    return rows;
}

counting_report counting_formula_check(const zero_set& zs, double T) {
    if (T > zs.t_max + 1e-12) throw error(errc::unsupported, "T exceeds the set height bound");
    counting_report r;
    r.T = T;
    std::int64_t c = 0;
    for (const auto& z : zs.zeros)
        if (z.gamma > 0 && z.gamma <= T) c += z.multiplicity;
    r.count = c;
    if (T > 0) {
        double u = T / (2.0 * std::numbers::pi);
        r.main_term = std::max(0.0, u * std::log(u) - u + 7.0 / 8.0);
    } else {
        r.main_term = 0.0;
    }
    r.difference = std::abs(double(r.count) - r.main_term);
    return r;
}

namespace {

double region_log(const representation& rep, double gamma) {
    double n2df = double(rep.n) * rep.n * rep.degree_f();
    return std::log(rs_analytic_conductor(rep)) +
           n2df * std::log(std::abs(gamma) + std::exp(1.0));
}

bool is_exceptional(const zero& z, const std::optional<double>& beta1) {
    return beta1 && z.gamma == 0.0 && std::abs(z.beta - *beta1) < 1e-12;
}

} // namespace

std::vector<zero> zfr_check(const zero_set& zs, const representation& rep, double c1) {
    std::vector<zero> bad;
    for (const auto& z : zs.zeros) {
        if (is_exceptional(z, zs.exceptional)) continue;
        double boundary = 1.0 - c1 / region_log(rep, z.gamma);
        if (z.beta >= boundary) bad.push_back(z);
    }
    return bad;
}

std::vector<zero> repulsion_region_check(const zero_set& zs, const representation& rep,
                                         double beta1, double c4, double c5) {
    if (!(beta1 > 0.0 && beta1 < 1.0))
        throw error(errc::bad_spec, "repulsion needs 0 < beta1 < 1");
    std::vector<zero> bad;
    for (const auto& z : zs.zeros) {
        double ell = region_log(rep, z.gamma);
        double arg = c4 / ((1.0 - beta1) * ell);
        if (arg <= 1.0)
            throw error(errc::degenerate_region,
                        "log argument " + std::to_string(arg) + " <= 1 at gamma=" +
                            std::to_string(z.gamma) + " (region is empty)");
        if (z.gamma == 0.0 && std::abs(z.beta - beta1) < 1e-12) continue;
        double boundary = 1.0 - c5 * std::log(arg) / ell;
        if (z.beta >= boundary) bad.push_back(z);
    }
    return bad;
}

siegel_report siegel_bound_check(const representation& rep, double beta1, double c) {
    if (!(beta1 > 0.0 && beta1 < 1.0) || c <= 0)
        throw error(errc::bad_spec, "siegel check needs 0 < beta1 < 1, c > 0");
    siegel_report r;
    r.beta1 = beta1;
    r.bound = 1.0 - std::pow(rs_analytic_conductor(rep), -c);
    r.pass = beta1 <= r.bound;
    return r;
}

power_sum_config power_sum_experiment(const zero_set& zs, double beta1, double beta_prime,
                                      double gamma_prime, int j_max) {
    if (!(beta1 > 0.0 && beta1 < 1.0))
        throw error(errc::bad_spec, "power sums need 0 < beta1 < 1");
    bool member = false;
    for (const auto& z : zs.zeros)
        if (std::abs(z.beta - beta_prime) < 1e-9 && std::abs(z.gamma - gamma_prime) < 1e-9)
            member = true;
    if (!member)
        throw error(errc::bad_spec, "beta' + i gamma' must be a zero of the set");

    power_sum_config cfg;
    cfg.beta1 = beta1;
    cfg.beta_prime = beta_prime;
    cfg.gamma_prime = gamma_prime;
    for (const auto& z : zs.zeros) {
        if (z.gamma == 0.0 && std::abs(z.beta - beta1) < 1e-12) continue;
        cplx w{z.beta, z.gamma};
        for (int m = 0; m < z.multiplicity; ++m) {
            cfg.z.push_back(1.0 / ((2.0 - w) * (2.0 - w)));
            cplx u = cplx{2.0, gamma_prime} - w;
            cfg.z.push_back(1.0 / (u * u));
        }
    }
    std::sort(cfg.z.begin(), cfg.z.end(),
              [](const cplx& a, const cplx& b) { return std::abs(a) > std::abs(b); });
    if (cfg.z.empty()) return cfg;
    double z1 = std::abs(cfg.z.front());
    double total = 0;
    for (const auto& v : cfg.z) total += std::abs(v);
    cfg.L = total / z1;

    std::vector<cplx> pw = cfg.z;
    cfg.observed_c = 0.0;
    for (int j = 1; j <= j_max; ++j) {
        comp_sum s;
        for (auto& v : pw) s.add(v.real());
        power_sum_trace tr;
        tr.j = j;
        tr.sum = s.value();
        tr.budget = double(j) * (1.0 - beta1);
        cfg.observed_c = std::max(cfg.observed_c, tr.sum / tr.budget);
        cfg.trace.push_back(tr);
        for (std::size_t i = 0; i < pw.size(); ++i) pw[i] *= cfg.z[i];
    }
    try {
        cfg.witness = turan_witness(cfg.z);
    } catch (const error&) {
        cfg.witness.reset();
    }
    return cfg;
}

int turan_witness(std::vector<cplx> z) {
    if (z.empty()) throw error(errc::bad_spec, "turan_witness needs a nonempty list");
    std::sort(z.begin(), z.end(),
              [](const cplx& a, const cplx& b) { return std::abs(a) > std::abs(b); });
    double z1 = std::abs(z.front());
    double total = 0;
    for (const auto& v : z) total += std::abs(v);
    double L = total / z1;
    int j_cap = int(std::ceil(24.0 * L));
    std::vector<cplx> pw = z;
    double z1pow = z1;
    for (int j = 1; j <= j_cap; ++j) {
        comp_sum s;
        for (const auto& v : pw) s.add(v.real());
        if (z1pow > 1e-300 && 8.0 * s.value() >= z1pow) return j;
        for (std::size_t i = 0; i < pw.size(); ++i) pw[i] *= z[i];
        z1pow *= z1;
    }
    throw error(errc::exhausted_range,
                "no power-sum witness j1 <= 24L = " + std::to_string(j_cap));
}

std::string zero_set_to_csv(const zero_set& zs) {
    std::ostringstream os;
    os << "beta,gamma,multiplicity,source\n";
    os.precision(17);
    for (const auto& z : zs.zeros)
        os << z.beta << "," << z.gamma << "," << z.multiplicity << "," << z.source << "\n";
    return os.str();
}

zero_set zero_set_from_csv(const std::string& text, bool assume_complete) {
    zero_set zs;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string f;
        zero z;
        std::getline(ls, f, ',');
        z.beta = std::stod(f);
        std::getline(ls, f, ',');
        z.gamma = std::stod(f);
        std::getline(ls, f, ',');
        z.multiplicity = std::stoi(f);
        std::getline(ls, z.source, ',');
        zs.zeros.push_back(z);
        zs.t_max = std::max(zs.t_max, std::abs(z.gamma));
    }
    zs.sort_by_gamma();
    zs.complete = assume_complete;
    return zs;
}

} // namespace rsl
