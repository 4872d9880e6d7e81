// Test-side oracles, deliberately independent of the library's computation
// paths: brute-force series products, alternating-series zeta, lattice
// counts, monomial-expansion symmetric functions.
#ifndef RSL_TEST_ORACLES_HPP
#define RSL_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Coefficients of q prod_{m>=1} (1-q^m)^24 up to q^cutoff by direct repeated
// polynomial multiplication (int64; fine for cutoff <= ~40).
inline std::vector<std::int64_t> tau_bruteforce(int cutoff) {
    std::vector<std::int64_t> poly(std::size_t(cutoff) + 1, 0);
    poly[0] = 1;
    for (int m = 1; m <= cutoff; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (int i = cutoff; i >= m; --i) poly[std::size_t(i)] -= poly[std::size_t(i - m)];
    // tau(n) = coefficient of q^{n-1} in the product
    std::vector<std::int64_t> tau(std::size_t(cutoff) + 1, 0);
    for (int n = 1; n <= cutoff; ++n) tau[std::size_t(n)] = poly[std::size_t(n - 1)];
    return tau;
}

// Complete homogeneous symmetric sum h_k by direct enumeration of weakly
// increasing index tuples (exponential in k; fine for k <= 6, n <= 4).
inline cplx homogeneous_direct(const std::vector<cplx>& z, int k) {
    if (k == 0) return {1.0, 0.0};
    cplx total{0.0, 0.0};
    std::vector<std::size_t> idx(std::size_t(k), 0);
    for (;;) {
        cplx prod{1.0, 0.0};
        for (auto i : idx) prod *= z[i];
        total += prod;
        int pos = k - 1;
        while (pos >= 0 && idx[std::size_t(pos)] == z.size() - 1) --pos;
        if (pos < 0) break;
        ++idx[std::size_t(pos)];
        for (int j = pos + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(pos)];
    }
    return total;
}

// Power-series coefficients of prod (1 - z_i X)^{-1} via explicit polynomial
// expansion of the denominator followed by series inversion.
inline std::vector<cplx> euler_factor_series(const std::vector<cplx>& z, int k_max) {
    std::vector<cplx> denom(std::size_t(k_max) + 1, cplx{0, 0});
    denom[0] = 1.0;
    std::size_t deg = 0;
    for (const auto& a : z) {
        deg = std::min<std::size_t>(deg + 1, std::size_t(k_max));
        for (std::size_t i = deg; i >= 1; --i) denom[i] -= a * denom[i - 1];
    }
    std::vector<cplx> inv(std::size_t(k_max) + 1, cplx{0, 0});
    inv[0] = 1.0;
    for (std::size_t m = 1; m <= std::size_t(k_max); ++m) {
        cplx acc{0, 0};
        for (std::size_t i = 1; i <= m; ++i) acc += denom[i] * inv[m - i];
        inv[m] = -acc;
    }
    return inv;
}

// zeta(s) on Re(s) = 1/2 via the Cohen-Villegas-Zagier accelerated
// alternating series for eta(s) = (1 - 2^{1-s}) zeta(s).
inline cplx zeta_cvz(cplx s, int n = 0) {
    if (n == 0) n = 60 + int(3.0 * std::abs(s.imag()));
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d;
    cplx sum{0, 0};
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log(double(k + 1)));
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    cplx eta = sum / d;
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// #nonzero ideals of Z[i] with norm <= z by direct lattice enumeration
// (each ideal has exactly 4 generators).
inline std::int64_t gaussian_ideal_count(std::int64_t z) {
    std::int64_t r = std::int64_t(std::sqrt(double(z))) + 1;
    std::int64_t pts = 0;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            if ((a != 0 || b != 0) && a * a + b * b <= z) ++pts;
    return pts / 4;
}

// Splitting of p in Q(i) by factoring x^2 + 1 mod p.
inline int x2p1_roots_mod(std::int64_t p) {
    int roots = 0;
    for (std::int64_t x = 0; x < p; ++x)
        if ((x * x + 1) % p == 0) ++roots;
    return roots;
}

} // namespace oracle

#endif
