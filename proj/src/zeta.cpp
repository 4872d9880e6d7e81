#include "rsl/zeta.hpp"

#include <cmath>
#include <numbers>

namespace rsl {

namespace {

// Lanczos approximation (g = 607/128, 15 terms).  The composition below is
// branch-safe on Re z > 0: both log arguments stay in the right half-plane,
// so the imaginary part is the continuous one (no principal-value wrap).
const double kLanczosG = 607.0 / 128.0;
const double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// B_{2k}/(2k)! for the Euler-Maclaurin correction terms, k = 1..13.
double b2k_over_fact(int k) {
    static const double b2k[] = {
        1.0 / 6,        -1.0 / 30,       1.0 / 42,         -1.0 / 30,      5.0 / 66,
        -691.0 / 2730,  7.0 / 6,         -3617.0 / 510,    43867.0 / 798,  -174611.0 / 330,
        854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6,
    };
    double fact = 1.0;
    for (int i = 2; i <= 2 * k; ++i) fact *= i;
    return b2k[k - 1] / fact;
}

} // namespace

cplx log_gamma(cplx z) {
    cplx a = kLanczos[0];
    for (int k = 1; k < 15; ++k) a += kLanczos[k] / (z - 1.0 + double(k));
    cplx t = z + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z - 0.5) * std::log(t) - t + std::log(a);
}

cplx zeta_em(cplx s) {
    double t = std::abs(s.imag());
    int N = std::max(16, int(std::ceil(0.6 * t)) + 8);
    const int K = 13;
    cplx sum{0, 0};
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
    cplx Ns = std::exp(-s * std::log(double(N)));
    sum += Ns * double(N) / (s - 1.0); // N^{1-s}/(s-1)
    sum += 0.5 * Ns;
    // correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cplx rising = s;             // s(s+1)...(s+2k-2), one factor at k = 1
    cplx npow = Ns / double(N);  // N^{-s-2k+1}, k = 1
    for (int k = 1; k <= K; ++k) {
        sum += b2k_over_fact(k) * rising * npow;
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        npow /= double(N) * double(N);
    }
    return sum;
}

double rs_theta(double t) {
    cplx lg = log_gamma(cplx{0.25, t / 2.0});
    return lg.imag() - 0.5 * t * std::log(std::numbers::pi);
}

double hardy_z(double t) {
    cplx rot = std::exp(cplx{0.0, rs_theta(t)});
    cplx z = zeta_em(cplx{0.5, t});
    return (rot * z).real();
}

} // namespace rsl
