#include <doctest.h>

#include <random>

#include "rsl/coeffs.hpp"
#include "rsl/conductor.hpp"
#include "rsl/errors.hpp"
#include "rsl/instances.hpp"

#include <json.hpp>

#include "oracles.hpp"

using namespace rsl;

namespace {

satake_local delta_at_2() {
    auto rep = make_instance("holomorphic:12", 10);
    return rep.satake.at(2)[0];
}

} // namespace

TEST_CASE("standard coefficients: geometric and alternating GL(1) rows") {
    satake_local zeta_loc{2, 1, false, {cplx{1, 0}}};
    auto h = local_standard_coeffs(zeta_loc, 3);
    for (int k = 0; k <= 3; ++k) CHECK(h[std::size_t(k)].real() == doctest::Approx(1.0));

    satake_local chi4_at_3{3, 1, false, {cplx{-1, 0}}};
    auto a = local_standard_coeffs(chi4_at_3, 3);
    CHECK(a[0].real() == doctest::Approx(1.0));
    CHECK(a[1].real() == doctest::Approx(-1.0));
    CHECK(a[2].real() == doctest::Approx(1.0));
    CHECK(a[3].real() == doctest::Approx(-1.0));
}

TEST_CASE("standard coefficients at Delta: tau(2) and the Hecke recursion") {
    auto tau = oracle::tau_bruteforce(8);
    CHECK(tau[2] == -24);
    double lam2 = double(tau[2]) / std::pow(2.0, 5.5);
    CHECK(lam2 == doctest::Approx(-0.53033009).epsilon(1e-7));

    auto h = local_standard_coeffs(delta_at_2(), 2);
    CHECK(h[1].real() == doctest::Approx(lam2).epsilon(1e-11));
    // lambda(4) = lambda(2)^2 - 1 (Hecke recursion oracle); = -0.71875 exactly
    CHECK(h[2].real() == doctest::Approx(lam2 * lam2 - 1.0).epsilon(1e-11));
    CHECK(h[2].real() == doctest::Approx(-0.71875).epsilon(1e-9));
}

TEST_CASE("rs_satake products") {
    satake_local triv{2, 1, false, {cplx{1, 0}}};
    auto rs = rs_satake(triv);
    REQUIRE(rs.rs_alphas.size() == 1);
    CHECK(std::abs(rs.rs_alphas[0] - cplx{1, 0}) < 1e-15);

    satake_local im{5, 1, false, {cplx{0, 1}}};
    auto rs_i = rs_satake(im);
    CHECK(std::abs(rs_i.rs_alphas[0] - cplx{1, 0}) < 1e-15);

    auto rs_d = rs_satake(delta_at_2());
    REQUIRE(rs_d.rs_alphas.size() == 4);
    cplx sum{0, 0};
    for (auto& a : rs_d.rs_alphas) sum += a;
    // sum of the four products is lambda(2)^2 = 576/2048 = 0.28125
    CHECK(sum.real() == doctest::Approx(0.28125).epsilon(1e-10));
    CHECK(std::abs(sum.imag()) < 1e-12);
}

TEST_CASE("ramified RS convention and its error paths") {
    satake_local ram4{2, 1, true, {cplx{0, 0}}};
    auto rs = ramified_rs_satake(ram4);
    CHECK(rs.rs_alphas.empty());
    auto lam = rs_local_coeffs(rs, 3);
    CHECK(lam[0] == doctest::Approx(1.0));
    CHECK(lam[1] == doctest::Approx(0.0));
    CHECK(rs_vonmangoldt(rs, 2) == doctest::Approx(0.0));

    satake_local ram_gl2{2, 1, true, {cplx{0, 0}, cplx{0.5, 0}}};
    CHECK_THROWS_AS(ramified_rs_satake(ram_gl2), error);
    CHECK_THROWS_AS(rs_satake(ram4), error);
}

TEST_CASE("rs_local_coeffs against the direct symmetric-function oracle") {
    auto rs = rs_satake(delta_at_2());
    auto lam = rs_local_coeffs(rs, 4);
    CHECK(lam[1] == doctest::Approx(0.28125).epsilon(1e-10));
    for (int k = 2; k <= 4; ++k) {
        cplx direct = oracle::homogeneous_direct(rs.rs_alphas, k);
        CHECK(lam[std::size_t(k)] == doctest::Approx(direct.real()).epsilon(1e-9));
        CHECK(std::abs(direct.imag()) < 1e-9);
    }
}

TEST_CASE("rs_vonmangoldt values") {
    satake_local triv{2, 1, false, {cplx{1, 0}}};
    CHECK(rs_vonmangoldt(rs_satake(triv), 1) == doctest::Approx(std::log(2.0)));

    auto rs_d = rs_satake(delta_at_2());
    CHECK(rs_vonmangoldt(rs_d, 1) == doctest::Approx(0.28125 * std::log(2.0)).epsilon(1e-9));
    // Lambda(p) = lambda(p) log Np
    auto lam = rs_local_coeffs(rs_d, 1);
    CHECK(rs_vonmangoldt(rs_d, 1) == doctest::Approx(lam[1] * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("exp identity: trivial, Delta, and seeded unit-modulus triples") {
    satake_local triv{2, 1, false, {cplx{1, 0}}};
    CHECK(exp_identity_check(rs_satake(triv), 10) < 1e-12);

    CHECK(exp_identity_check(rs_satake(delta_at_2()), 10) < 1e-9);

    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> alphas;
        for (int j = 0; j < 3; ++j) {
            double th = angle(rng);
            alphas.push_back({std::cos(th), std::sin(th)});
        }
        satake_local loc{7, 1, false, alphas};
        CHECK(exp_identity_check(rs_satake(loc), 8) < 1e-9);
    }
}

TEST_CASE("exp-identity series against the independent expansion oracle") {
    auto rs = rs_satake(delta_at_2());
    auto lam = rs_local_coeffs(rs, 8);
    auto series = oracle::euler_factor_series(rs.rs_alphas, 8);
    for (int k = 0; k <= 8; ++k)
        CHECK(lam[std::size_t(k)] == doctest::Approx(series[std::size_t(k)].real()).epsilon(1e-9));
}

TEST_CASE("analytic conductors") {
    auto zeta = make_instance("zeta", 10);
    CHECK(analytic_conductor(zeta, 0.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-9));
    CHECK(analytic_conductor(zeta, 1.0) == doctest::Approx(std::exp(1.0) + 1.0).epsilon(1e-9));

    auto chi4 = make_instance("dirichlet:4:1", 10);
    CHECK(analytic_conductor(chi4, 0.0) ==
          doctest::Approx(4.0 * (std::exp(1.0) + 1.0)).epsilon(1e-9));
}

TEST_CASE("conductor growth check") {
    auto zeta = make_instance("zeta", 10);
    auto r = bh_conductor_check(zeta, {0.0, 1.0, 10.0});
    CHECK(r.all_pass);
    auto chi4 = make_instance("dirichlet:4:1", 10);
    CHECK(bh_conductor_check(chi4, {0.0, 5.0}).all_pass);
    CHECK(bh_conductor_check(chi4, {}).all_pass); // vacuous
}

TEST_CASE("lambda_rs(p) = |lambda(p)|^2 at unramified primes") {
    for (const auto& name : {"zeta", "dirichlet:5:1", "holomorphic:12"}) {
        auto rep = make_instance(name, 200);
        for (const auto* loc : rep.locals_by_norm()) {
            if (loc->ramified) continue;
            cplx lam_std{0, 0};
            for (auto& a : loc->alphas) lam_std += a;
            auto lam_rs = rs_local_coeffs(rs_satake(*loc), 1);
            CHECK(std::abs(lam_rs[1] - std::norm(lam_std)) < 1e-12);
        }
    }
}

TEST_CASE("representation JSON round trip") {
    auto rep = make_instance("dirichlet:5:1", 50);
    auto text = to_json(rep);
    auto back = representation_from_json(text);
    CHECK(back.label == rep.label);
    CHECK(back.n == rep.n);
    CHECK(back.conductor_norm == rep.conductor_norm);
    CHECK(back.satake_cutoff == rep.satake_cutoff);
    CHECK(analytic_conductor(back) == doctest::Approx(analytic_conductor(rep)).epsilon(1e-14));
    CHECK(rs_analytic_conductor(back) ==
          doctest::Approx(rs_analytic_conductor(rep)).epsilon(1e-14));
    for (const auto& [norm, locs] : rep.satake) {
        const auto& b = back.satake.at(norm);
        REQUIRE(b.size() == locs.size());
        for (std::size_t i = 0; i < locs.size(); ++i)
            for (std::size_t j = 0; j < locs[i].alphas.size(); ++j)
                CHECK(std::abs(b[i].alphas[j] - locs[i].alphas[j]) < 1e-15);
    }
}

TEST_CASE("holomorphic JSON round trip keeps the Gamma_C convention") {
    auto rep = make_instance("holomorphic:12", 50);
    auto back = representation_from_json(to_json(rep));
    CHECK(rs_analytic_conductor(back) ==
          doctest::Approx(rs_analytic_conductor(rep)).epsilon(1e-14));
    REQUIRE(back.arch.size() == 1);
    CHECK(back.arch[0].dv == 2);
}

TEST_CASE("self-duality residue stays within 1e-9 on curated instances") {
    for (const auto& spec : curated_instances()) {
        auto rep = make_instance(spec, 1000);
        for (const auto* loc : rep.locals_by_norm()) {
            auto rs = rs_local_of(*loc);
            auto h = homogeneous_sums(rs.rs_alphas, 6);
            for (const auto& v : h) CHECK(std::abs(v.imag()) <= 1e-9);
        }
    }
}

TEST_CASE("corrupted Satake data raises the non-real coefficient error") {
    rs_local bad;
    bad.norm = 2;
    bad.rs_alphas = {cplx{0.0, 1.0}}; // not closed under conjugation
    CHECK_THROWS_AS(rs_local_coeffs(bad, 2), error);
}

TEST_CASE("serialized representation carries exactly the fixed schema fields") {
    auto rep = make_instance("dedekind:-1", 30);
    auto j = nlohmann::ordered_json::parse(to_json(rep));
    for (const char* key : {"label", "n", "field", "conductor", "arch", "satake"})
        CHECK(j.contains(key));
    CHECK(j["field"].contains("kind"));
    CHECK(j["field"].contains("d"));
    REQUIRE(!j["satake"].empty());
    for (const char* key : {"norm", "degree", "ramified", "alphas"})
        CHECK(j["satake"][0].contains(key));
}
