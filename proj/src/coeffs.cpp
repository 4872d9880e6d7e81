#include "rsl/coeffs.hpp"

#include <cmath>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

std::vector<cplx> power_sums(const std::vector<cplx>& alphas, int k_max) {
    std::vector<cplx> p(std::size_t(k_max) + 1, cplx{0.0, 0.0});
    std::vector<cplx> pw(alphas.size(), cplx{1.0, 0.0});
    for (int k = 1; k <= k_max; ++k) {
        cplx s{0.0, 0.0};
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            pw[j] *= alphas[j];
            s += pw[j];
        }
        p[std::size_t(k)] = s;
    }
    return p;
}

} // namespace

std::vector<cplx> homogeneous_sums(const std::vector<cplx>& alphas, int k_max) {
    // Newton's identities: k h_k = sum_{i=1..k} p_i h_{k-i}
    auto p = power_sums(alphas, k_max);
    std::vector<cplx> h(std::size_t(k_max) + 1, cplx{0.0, 0.0});
    h[0] = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        cplx acc{0.0, 0.0};
        for (int i = 1; i <= k; ++i) acc += p[std::size_t(i)] * h[std::size_t(k - i)];
        h[std::size_t(k)] = acc / double(k);
    }
    return h;
}

std::vector<cplx> local_standard_coeffs(const satake_local& loc, int k_max) {
    return homogeneous_sums(loc.alphas, k_max);
}

rs_local rs_satake(const satake_local& loc) {
    if (loc.ramified)
        throw error(errc::ramified_prime,
                    "rs_satake needs an unramified local factor (use ramified_rs_satake)");
    rs_local out;
    out.norm = loc.norm;
    out.rs_alphas.reserve(loc.alphas.size() * loc.alphas.size());
    for (const cplx& a : loc.alphas)
        for (const cplx& b : loc.alphas) out.rs_alphas.push_back(a * std::conj(b));
    return out;
}

rs_local ramified_rs_satake(const satake_local& loc) {
    if (!loc.ramified) throw error(errc::unsupported, "local factor is not ramified");
    if (loc.alphas.size() != 1)
        throw error(errc::unsupported,
                    "ramified RS parameters are only curated for GL(1) (zero Satake parameter)");
    // GL(1) with alpha = 0 at p | q: the local RS factor is identically 1.
    rs_local out;
    out.norm = loc.norm;
    return out;
}

rs_local rs_local_of(const satake_local& loc) {
    return loc.ramified ? ramified_rs_satake(loc) : rs_satake(loc);
}

std::vector<double> rs_local_coeffs(const rs_local& rs, int k_max) {
    auto h = homogeneous_sums(rs.rs_alphas, k_max);
    std::vector<double> out(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (std::abs(h[k].imag()) > 1e-6)
            throw error(errc::non_real_coefficient,
                        "self-dual coefficient has imaginary residue " +
                            std::to_string(h[k].imag()) + " at Np=" + std::to_string(rs.norm));
        out[k] = h[k].real();
    }
    return out;
}

double rs_vonmangoldt(const rs_local& rs, int k) {
    if (k < 1) throw error(errc::unsupported, "rs_vonmangoldt needs k >= 1");
    cplx s{0.0, 0.0};
    for (const cplx& a : rs.rs_alphas) s += std::pow(a, k);
    if (std::abs(s.imag()) > 1e-6)
        throw error(errc::non_real_coefficient,
                    "power sum has imaginary residue at Np=" + std::to_string(rs.norm));
    return s.real() * std::log(double(rs.norm));
}

double exp_identity_check(const rs_local& rs, int k_max) {
    // c_k = Lambda(p^k)/(k log Np); exp(sum c_k X^k) via m E_m = sum i c_i E_{m-i}
    double logp = std::log(double(rs.norm));
    std::vector<double> c(std::size_t(k_max) + 1, 0.0);
    for (int k = 1; k <= k_max; ++k) c[std::size_t(k)] = rs_vonmangoldt(rs, k) / (k * logp);
    std::vector<double> e(std::size_t(k_max) + 1, 0.0);
    e[0] = 1.0;
    for (int m = 1; m <= k_max; ++m) {
        double acc = 0.0;
        for (int i = 1; i <= m; ++i) acc += i * c[std::size_t(i)] * e[std::size_t(m - i)];
        e[std::size_t(m)] = acc / double(m);
    }
    auto lam = rs_local_coeffs(rs, k_max);
    double worst = 0.0;
    for (int k = 0; k <= k_max; ++k)
        worst = std::max(worst, std::abs(e[std::size_t(k)] - lam[std::size_t(k)]));
    return worst;
}

} // namespace rsl
