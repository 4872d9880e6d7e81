#include <doctest.h>

#include <random>

#include "rsl/errors.hpp"
#include "rsl/conductor.hpp"
#include "rsl/instances.hpp"
#include "rsl/zeros.hpp"
#include "rsl/zeta.hpp"

#include "oracles.hpp"

using namespace rsl;

TEST_CASE("Euler-Maclaurin zeta against the alternating-series oracle") {
    // the accelerated alternating series is reliable to t ~ 100 in binary64
    for (double t : {0.0, 3.7, 14.0, 25.0, 49.5, 88.1}) {
        cplx s{0.5, t};
        cplx ours = zeta_em(s);
        cplx ref = oracle::zeta_cvz(s);
        CHECK(std::abs(ours - ref) < 1e-10 * (1.0 + std::abs(ref)));
    }
    CHECK(zeta_em(cplx{0.5, 0.0}).real() == doctest::Approx(-1.4603545088095868).epsilon(1e-11));
    CHECK(zeta_em(cplx{2.0, 0.0}).real() == doctest::Approx(1.6449340668482264).epsilon(1e-11));
}

TEST_CASE("Euler-Maclaurin zeta against tabulated values higher up") {
    // reference values to 20 digits (arbitrary-precision tables)
    struct row { double t, re, im; };
    const row rows[] = {
        {120.3, 1.8140213706513242502, -1.8236899889880378144},
        {333.0, 1.1930911234326387726, -1.5881882041973929612},
        {499.7, 1.0508227600655319686, -2.6007346851618901436},
    };
    for (const auto& r : rows) {
        cplx v = zeta_em(cplx{0.5, r.t});
        CHECK(std::abs(v - cplx{r.re, r.im}) < 1e-9);
    }
}

TEST_CASE("theta function against its asymptotic series") {
    for (double t : {12.0, 50.0, 100.0, 400.0}) {
        double asym = 0.5 * t * std::log(t / (2 * std::numbers::pi)) - 0.5 * t -
                      std::numbers::pi / 8 + 1.0 / (48 * t) + 7.0 / (5760 * t * t * t);
        CHECK(rs_theta(t) == doctest::Approx(asym).epsilon(1e-9));
    }
}

TEST_CASE("zero finder: first ordinates and the T=100 count") {
    auto zs = find_zeta_zeros(25.0);
    REQUIRE(zs.complete);
    std::vector<double> pos;
    for (const auto& z : zs.zeros)
        if (z.gamma > 0) pos.push_back(z.gamma);
    REQUIRE(pos.size() == 2);
    CHECK(pos[0] == doctest::Approx(14.134725).epsilon(1e-7));
    CHECK(pos[1] == doctest::Approx(21.022040).epsilon(1e-7));

    auto zs100 = find_zeta_zeros(100.0);
    std::int64_t positive = 0;
    for (const auto& z : zs100.zeros)
        if (z.gamma > 0) ++positive;
    CHECK(positive == 29);
    CHECK(zero_count(zs100, 0.0, 100.0) == 58);
    CHECK(zero_count(zs100, 0.9, 100.0) == 0);
    CHECK(zs100.conjugate_closed());
}

TEST_CASE("zero_count monotonicity and completeness contract") {
    auto zs = find_zeta_zeros(60.0);
    CHECK(zero_count(zs, 0.0, 30.0) <= zero_count(zs, 0.0, 60.0));
    CHECK(zero_count(zs, 0.6, 50.0) <= zero_count(zs, 0.4, 50.0));
    zero_set incomplete = zs;
    incomplete.complete = false;
    CHECK_THROWS_AS(zero_count(incomplete, 0.0, 10.0), error);
    CHECK(zero_count(zero_set{{}, 10.0, true, {}}, 0.0, 10.0) == 0);
}

TEST_CASE("counting formula differences stay below 2 up to T = 500") {
    auto zs = find_zeta_zeros(500.0);
    for (double T : {50.0, 100.0, 200.0, 500.0}) {
        auto r = counting_formula_check(zs, T);
        CHECK(r.difference <= 2.0);
    }
    auto r14 = counting_formula_check(zs, 14.0);
    CHECK(r14.count == 0);
    CHECK(r14.difference <= 1.0);
    auto r0 = counting_formula_check(zs, 0.0);
    CHECK(r0.count == 0);
    CHECK(r0.main_term == doctest::Approx(0.0)); // clip convention
}

TEST_CASE("density bound comparison") {
    auto rep = make_instance("zeta", 100);
    auto zs = find_zeta_zeros(100.0);
    auto rows = density_bound_compare(zs, rep, 100.0, {0.0, 0.75, 1.0});
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.pass);
    // sigma = 1: exponent vanishes, bound = n^2 [F:Q] = 1, N = 0
    CHECK(rows[2].count == 0);
    CHECK(rows[2].log_bound == doctest::Approx(0.0).epsilon(1e-12));

    auto rows50 = density_bound_compare(zs, rep, 50.0, {0.75});
    CHECK(rows50[0].pass);
}

TEST_CASE("zero-free region checker: real data and synthetic violators") {
    auto rep = make_instance("zeta", 100);
    auto zs = find_zeta_zeros(50.0);
    CHECK(zfr_check(zs, rep, 0.05).empty());
    // the boundary exceeds 1/2 at every zero for desk conductors
    double c1 = 0.05;
    for (const auto& z : zs.zeros) {
        double ell = std::log(rs_analytic_conductor(rep)) +
                     std::log(std::abs(z.gamma) + std::exp(1.0));
        CHECK(1.0 - c1 / ell > 0.5);
    }

    zero_set planted = zs;
    planted.add_conjugate_closed(0.999, 1.0, 1, "synthetic");
    auto bad = zfr_check(planted, rep, 0.05);
    CHECK(bad.size() == 2);

    CHECK(zfr_check(zero_set{{}, 10, true, {}}, rep, 0.05).empty());
}

TEST_CASE("repulsion region: wide for beta1 near 1, degenerate at beta1 = 1/2") {
    auto rep = make_instance("zeta", 100);
    auto zs = find_zeta_zeros(50.0);
    auto bad = repulsion_region_check(zs, rep, 1.0 - 1e-8, 1.0, 0.1);
    CHECK(bad.empty());
    CHECK_THROWS_AS(repulsion_region_check(zs, rep, 0.5, 1.0, 0.1), error);

    zero_set planted = zs;
    planted.add_conjugate_closed(0.999, 1.0, 1, "synthetic");
    CHECK(!repulsion_region_check(planted, rep, 1.0 - 1e-8, 1.0, 0.1).empty());

    CHECK(repulsion_region_check(zero_set{{}, 10, true, {}}, rep, 1.0 - 1e-8, 1.0, 0.1).empty());
}

TEST_CASE("siegel bound check") {
    auto rep = make_instance("zeta", 100); // C(pi x pi~) = e
    auto r = siegel_bound_check(rep, 0.9, 3.0);
    CHECK(r.bound == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-12));
    CHECK(r.pass);
    CHECK(!siegel_bound_check(rep, 0.99, 3.0).pass);
    CHECK(siegel_bound_check(rep, 1e-9, 3.0).pass);
}

TEST_CASE("power sum experiment: trivial single-zero configuration") {
    zero_set zs;
    zs.zeros.push_back({0.5, 0.0, 1, "synthetic"});
    zs.t_max = 1.0;
    zs.complete = true;
    auto cfg = power_sum_experiment(zs, 0.9, 0.5, 0.0, 3);
    REQUIRE(cfg.z.size() == 2);
    CHECK(cfg.trace[0].sum == doctest::Approx(2.0 / 2.25).epsilon(1e-12));
    CHECK(cfg.witness.has_value());
}

TEST_CASE("power sum experiment on the zeta set") {
    auto zs = find_zeta_zeros(30.0);
    double g1 = 0;
    for (const auto& z : zs.zeros)
        if (z.gamma > 0) { g1 = z.gamma; break; }
    auto cfg = power_sum_experiment(zs, 1.0 - 1e-6, 0.5, g1, 12);
    CHECK(cfg.L >= 1.0);
    CHECK(std::abs(cfg.z.front()) >= 1.0 / (1.5 * 1.5) - 1e-12); // |z1| >= (2-beta')^{-2}
    REQUIRE(cfg.witness.has_value());
    CHECK(*cfg.witness <= std::ceil(24 * cfg.L));
    REQUIRE(cfg.trace.size() == 12);
}

TEST_CASE("turan witness basics") {
    CHECK(turan_witness({cplx{1.0, 0.0}}) == 1);
    int j = turan_witness({cplx{1.0, 0.0}, cplx{-0.9, 0.0}});
    CHECK(j >= 1);
    CHECK(j <= 48); // L = 1.9
    CHECK_THROWS_AS(turan_witness({}), error);
}

TEST_CASE("turan witness never exhausts over seeded zero-set configurations") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> beta_d(0.1, 0.95);
    std::uniform_real_distribution<double> gamma_d(0.5, 60.0);
    std::uniform_int_distribution<int> count_d(1, 25);
    for (int trial = 0; trial < 120; ++trial) {
        zero_set zs;
        int m = count_d(rng);
        for (int i = 0; i < m; ++i) zs.add_conjugate_closed(beta_d(rng), gamma_d(rng), 1, "seed");
        double beta_prime = beta_d(rng);
        double gamma_prime = gamma_d(rng);
        zs.add_conjugate_closed(beta_prime, gamma_prime, 1, "seed");
        zs.t_max = 100;
        zs.complete = true;
        auto cfg = power_sum_experiment(zs, 0.999, beta_prime, gamma_prime, 4);
        REQUIRE(cfg.witness.has_value());
        CHECK(*cfg.witness <= int(std::ceil(24 * cfg.L)));
        CHECK(std::abs(cfg.z.front()) >= std::pow(2.0 - beta_prime, -2.0) - 1e-12);
    }
}

TEST_CASE("zero set CSV round trip") {
    auto zs = find_zeta_zeros(30.0);
    auto text = zero_set_to_csv(zs);
    auto back = zero_set_from_csv(text, true);
    REQUIRE(back.zeros.size() == zs.zeros.size());
    for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
        CHECK(back.zeros[i].gamma == zs.zeros[i].gamma); // %.17g is lossless
        CHECK(back.zeros[i].beta == zs.zeros[i].beta);
    }
    CHECK(back.complete);
}
