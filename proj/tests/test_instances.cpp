#include <doctest.h>

#include "rsl/characters.hpp"
#include "rsl/errors.hpp"
#include "rsl/hecke.hpp"
#include "rsl/ideals.hpp"
#include "rsl/instances.hpp"
#include "rsl/primes.hpp"

#include "oracles.hpp"

using namespace rsl;

TEST_CASE("prime ideal enumeration over Q") {
    auto t = enumerate_prime_ideals(field_descriptor::rationals(), 10);
    REQUIRE(t.ideals.size() == 4);
    CHECK(t.ideals[0].norm == 2);
    CHECK(t.ideals[3].norm == 7);
}

TEST_CASE("prime ideal enumeration over Q(i) matches the x^2+1 factoring oracle") {
    auto t = enumerate_prime_ideals(field_descriptor::quadratic(-1), 10);
    // 2 ramified, 5 splits (two ideals), 3 inert (norm 9): 4 ideals
    REQUIRE(t.ideals.size() == 4);
    CHECK(t.ideals[0].norm == 2);
    CHECK(t.ideals[0].field_ramified);
    CHECK(t.ideals[1].norm == 5);
    CHECK(t.ideals[2].norm == 5);
    CHECK(t.ideals[3].norm == 9);
    CHECK(t.ideals[3].residue_degree == 2);

    for (auto p : primes_up_to(50)) {
        int roots = oracle::x2p1_roots_mod(p);
        int chi = kronecker(-4, p);
        if (p == 2) CHECK(chi == 0);
        else if (roots == 2) CHECK(chi == 1);
        else CHECK(chi == -1);
    }

    CHECK(enumerate_prime_ideals(field_descriptor::quadratic(-1), 1).ideals.empty());
}

TEST_CASE("splitting completeness: residue degrees above each p sum to 2") {
    for (auto d : {-1LL, -3LL, 5LL, 8LL}) {
        auto f = field_descriptor::quadratic(d);
        auto t = enumerate_prime_ideals(f, 200 * 200);
        std::map<std::int64_t, int> degsum;
        for (const auto& id : t.ideals) {
            if (id.p > 200) continue;
            degsum[id.p] += id.field_ramified ? 2 : id.residue_degree;
        }
        for (auto p : primes_up_to(200)) CHECK(degsum[p] == 2);
    }
}

TEST_CASE("ideal counts against the Weiss bound and the lattice oracle") {
    auto rq = ideal_count(field_descriptor::rationals(), 100, 0.5);
    CHECK(rq.count == 100);
    CHECK(rq.bound == doctest::Approx(4.0 * 1000.0));
    CHECK(rq.pass);

    auto ri = ideal_count(field_descriptor::quadratic(-1), 25, 0.5);
    CHECK(ri.count == oracle::gaussian_ideal_count(25));
    CHECK(ri.pass);

    auto r0 = ideal_count(field_descriptor::quadratic(-1), 0.5, 0.5);
    CHECK(r0.count == 0);
    CHECK(r0.pass);
}

TEST_CASE("prime divisor count bound") {
    auto t = enumerate_prime_ideals(field_descriptor::rationals(), 10);
    auto r = prime_divisor_count_check({t.ideals[0], t.ideals[1], t.ideals[2]}, 0.25, 1);
    CHECK(r.omega == 3);
    CHECK(r.pass);

    CHECK(prime_divisor_count_check({}, 0.25, 1).pass);

    auto ti = enumerate_prime_ideals(field_descriptor::quadratic(-1), 1000);
    std::vector<prime_ideal> first100(ti.ideals.begin(), ti.ideals.begin() + 100);
    CHECK(prime_divisor_count_check(first100, 0.1, 2).pass);
}

TEST_CASE("tau expansion matches the brute-force product") {
    auto tau = tau_expansion(30);
    auto brute = oracle::tau_bruteforce(30);
    for (int n = 1; n <= 30; ++n) CHECK(tau[std::size_t(n)] == std::to_string(brute[n]));
    CHECK(tau[2] == "-24");
    CHECK(tau[3] == "252");
    CHECK(tau[5] == "4830");
    CHECK_THROWS_AS(tau_expansion(20000), error);
}

TEST_CASE("eigenform expansions are Hecke-multiplicative at the first coefficients") {
    for (int w : {16, 18, 20, 22, 26}) {
        auto a = eigenform_expansion(w, 30);
        CHECK(a[1] == "1");
        // a(6) = a(2) a(3);  a(4) = a(2)^2 - 2^{w-1}
        long double a2 = std::stold(a[2]), a3 = std::stold(a[3]);
        CHECK(std::stold(a[6]) == doctest::Approx(double(a2 * a3)));
        CHECK(std::stold(a[4]) == doctest::Approx(double(a2 * a2 - std::pow(2.0L, w - 1))));
    }
}

TEST_CASE("weight-12 long stream agrees with the exact expansion to 1e4") {
    const auto& t = hecke_eigenvalues(12, 10'000);
    auto exact = tau_expansion(10'000);
    for (std::size_t i = 0; i < t.prime.size(); ++i) {
        double lam_exact = std::stod(exact[std::size_t(t.prime[i])]) /
                           std::pow(double(t.prime[i]), 5.5);
        CHECK(t.lambda[i] == doctest::Approx(lam_exact).epsilon(1e-9));
    }
}

TEST_CASE("Deligne bound at every curated weight for p <= 1e4") {
    for (int w : {12, 16, 18, 20, 22, 26}) {
        const auto& t = hecke_eigenvalues(w, 10'000);
        for (double lam : t.lambda) CHECK(std::abs(lam) <= 2.0 + 1e-9);
    }
}

TEST_CASE("character table: orthogonality, parity, primitivity") {
    dirichlet_group g4(4);
    CHECK(g4.order() == 2);
    CHECK(g4.chi(1, 5).real() == doctest::Approx(1.0));  // chi mod 4 at 5 = chi(1)
    CHECK(g4.chi(1, 3).real() == doctest::Approx(-1.0));
    CHECK(g4.is_odd(1));
    CHECK(g4.is_primitive(1));

    for (std::int64_t q : {3, 4, 5, 7, 8, 9, 12, 100}) {
        dirichlet_group g(q);
        for (std::int64_t j = 1; j < g.order(); ++j) {
            cplx sum{0, 0};
            for (std::int64_t a = 0; a < q; ++a) sum += g.chi(j, a);
            CHECK(std::abs(sum) < 1e-10); // nontrivial character sums vanish
        }
    }

    dirichlet_group g12(12);
    // mod 12 the quadratic character with conductor 3 is imprimitive
    bool found_imprimitive = false;
    for (std::int64_t j = 1; j < g12.order(); ++j)
        if (!g12.is_primitive(j)) found_imprimitive = true;
    CHECK(found_imprimitive);
}

TEST_CASE("make_instance contracts") {
    auto z = make_instance("zeta", 100);
    CHECK(z.n == 1);
    CHECK(z.satake.at(97)[0].alphas[0].real() == doctest::Approx(1.0));

    auto h12 = make_instance("holomorphic:12", 100);
    auto& loc2 = h12.satake.at(2)[0];
    cplx s = loc2.alphas[0] + loc2.alphas[1];
    CHECK(s.real() == doctest::Approx(-0.53033009).epsilon(1e-7));
    CHECK(std::abs(std::abs(loc2.alphas[0]) - 1.0) < 1e-9); // unramified GRC witness

    auto chi4 = make_instance("dirichlet:4:1", 100);
    CHECK(chi4.satake.at(5)[0].alphas[0].real() == doctest::Approx(1.0));
    CHECK(chi4.satake.at(2)[0].ramified);

    CHECK_THROWS_AS(make_instance("dirichlet:12:x", 100), error);
    CHECK_THROWS_AS(make_instance("holomorphic:13", 100), error);
    CHECK_THROWS_AS(make_instance("nonsense", 100), error);
}

TEST_CASE("imprimitive character selectors are rejected") {
    dirichlet_group g12(12);
    std::int64_t bad = -1;
    for (std::int64_t j = 1; j < g12.order(); ++j)
        if (!g12.is_primitive(j)) bad = j;
    REQUIRE(bad >= 1);
    CHECK_THROWS_AS(make_instance("dirichlet:12:" + std::to_string(bad), 100), error);
}

TEST_CASE("GRC witness across curated GL(2) instances at p <= 1000") {
    for (int w : {12, 16, 18, 20, 22, 26}) {
        auto rep = make_instance("holomorphic:" + std::to_string(w), 1000);
        for (const auto* loc : rep.locals_by_norm())
            for (const auto& a : loc->alphas) CHECK(std::abs(std::abs(a) - 1.0) < 1e-9);
    }
}

TEST_CASE("quadratic field descriptor accepts radicands and fundamental discriminants") {
    auto f1 = field_descriptor::quadratic(-1);
    CHECK(f1.discriminant == 4);
    auto f8 = field_descriptor::quadratic(8); // Q(sqrt 2), D = 8
    CHECK(f8.d == 2);
    CHECK(f8.discriminant == 8);
    auto f5 = field_descriptor::quadratic(5);
    CHECK(f5.discriminant == 5);
    CHECK(field_descriptor::quadratic(12).d == 3); // D = 12 is fundamental for Q(sqrt 3)
    CHECK_THROWS_AS(field_descriptor::quadratic(9), error);
    CHECK_THROWS_AS(field_descriptor::quadratic(20), error); // 20/4 = 5 = 1 mod 4: not fundamental
}

TEST_CASE("ideal counting: sieve, DFS enumeration, and lattice agree on Q(i)") {
    auto f = field_descriptor::quadratic(-1);
    auto sieve_count = ideal_count(f, 200, 0.5).count;
    auto table = enumerate_prime_ideals(f, 200);
    std::int64_t dfs = 0;
    enumerate_ideals(table, 200, nullptr, {},
                     [&](std::int64_t, const std::vector<ideal_factor>&) { ++dfs; });
    // both conventions include the unit ideal (norm 1)
    CHECK(dfs == sieve_count);
    CHECK(sieve_count == oracle::gaussian_ideal_count(200));
}

TEST_CASE("first eigenvalues match the classical tables") {
    struct row { int w; const char* a2; const char* a3; };
    const row rows[] = {
        {16, "216", "-3348"}, {18, "-528", "-4284"}, {20, "456", "50652"},
        {22, "-288", "-128844"}, {26, "-48", "-195804"},
    };
    for (const auto& r : rows) {
        auto a = eigenform_expansion(r.w, 4);
        CHECK(a[2] == r.a2);
        CHECK(a[3] == r.a3);
    }
}
