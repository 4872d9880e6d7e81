#include "rsl/instances.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rsl/characters.hpp"
#include "rsl/errors.hpp"
#include "rsl/hecke.hpp"
#include "rsl/ideals.hpp"
#include "rsl/primes.hpp"

namespace rsl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

std::int64_t to_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw error(errc::bad_spec, "bad integer '" + s + "' in instance spec");
    }
}

} // namespace

instance_spec instance_spec::parse(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.empty()) throw error(errc::bad_spec, "empty instance spec");
    instance_spec s;
    if (parts[0] == "zeta") {
        if (parts.size() != 1) throw error(errc::bad_spec, "zeta takes no parameters");
        s.kind = instance_kind::zeta;
    } else if (parts[0] == "dirichlet") {
        if (parts.size() != 3) throw error(errc::bad_spec, "expected dirichlet:q:index");
        s.kind = instance_kind::dirichlet;
        s.q = to_int(parts[1]);
        s.index = to_int(parts[2]);
    } else if (parts[0] == "dedekind") {
        if (parts.size() != 2) throw error(errc::bad_spec, "expected dedekind:d");
        s.kind = instance_kind::dedekind_quadratic;
        s.d = to_int(parts[1]);
    } else if (parts[0] == "holomorphic") {
        if (parts.size() != 2) throw error(errc::bad_spec, "expected holomorphic:weight");
        s.kind = instance_kind::holomorphic;
        s.weight = int(to_int(parts[1]));
    } else {
        throw error(errc::bad_spec, "unknown instance kind '" + parts[0] + "'");
    }
    return s;
}

std::string instance_spec::label() const {
    switch (kind) {
        case instance_kind::zeta: return "zeta";
        case instance_kind::dirichlet:
            return "dirichlet:" + std::to_string(q) + ":" + std::to_string(index);
        case instance_kind::dedekind_quadratic: return "dedekind:" + std::to_string(d);
        case instance_kind::holomorphic: return "holomorphic:" + std::to_string(weight);
    }
    return "?";
}

namespace {

representation make_zeta(std::int64_t cutoff) {
    representation rep;
    rep.label = "zeta";
    rep.n = 1;
    rep.field = field_descriptor::rationals();
    rep.conductor_norm = 1;
    rep.arch = {{1, cplx{0, 0}}};
    rep.rs_arch = {{1, cplx{0, 0}}};
    rep.rs_conductor_norm = 1;
    for (auto p : primes_up_to(cutoff))
        rep.satake[p] = {satake_local{p, 1, false, {cplx{1, 0}}}};
    rep.satake_cutoff = cutoff;
    return rep;
}

representation make_dirichlet(const instance_spec& spec, std::int64_t cutoff) {
    if (spec.q < 3) throw error(errc::bad_spec, "need modulus q >= 3 for a nontrivial character");
    dirichlet_group grp(spec.q);
    if (spec.index <= 0 || spec.index >= grp.order())
        throw error(errc::bad_spec, "character index must be in [1, phi(q))");
    if (!grp.is_primitive(spec.index))
        throw error(errc::bad_spec, "character " + spec.label() + " is imprimitive (conductor " +
                                        std::to_string(grp.conductor(spec.index)) + ")");
    representation rep;
    rep.label = spec.label();
    rep.n = 1;
    rep.field = field_descriptor::rationals();
    rep.conductor_norm = spec.q;
    double parity = grp.is_odd(spec.index) ? 1.0 : 0.0;
    rep.arch = {{1, cplx{parity, 0}}};
    // chi x chi~ is the principal character induced from conductor 1
    rep.rs_conductor_norm = 1;
    rep.rs_arch = {{1, cplx{2 * parity, 0}}};
    for (auto p : primes_up_to(cutoff)) {
        bool ram = spec.q % p == 0;
        cplx a = ram ? cplx{0, 0} : grp.chi(spec.index, p);
        rep.satake[p] = {satake_local{p, 1, ram, {a}}};
    }
    rep.satake_cutoff = cutoff;
    return rep;
}

representation make_dedekind(const instance_spec& spec, std::int64_t cutoff) {
    representation rep;
    rep.label = spec.label();
    rep.n = 1;
    rep.field = field_descriptor::quadratic(spec.d);
    rep.conductor_norm = 1;
    for (const auto& v : rep.field.places) {
        rep.arch.push_back({v.d(), cplx{0, 0}});
        rep.rs_arch.push_back({v.d(), cplx{0, 0}});
    }
    rep.rs_conductor_norm = 1;
    auto table = enumerate_prime_ideals(rep.field, cutoff);
    for (const auto& id : table.ideals)
        rep.satake[id.norm].push_back(
            satake_local{id.norm, id.residue_degree, false, {cplx{1, 0}}});
    rep.satake_cutoff = cutoff;
    return rep;
}

representation make_holomorphic(const instance_spec& spec, std::int64_t cutoff) {
    const auto& table = hecke_eigenvalues(spec.weight, cutoff);
    representation rep;
    rep.label = spec.label();
    rep.n = 2;
    rep.field = field_descriptor::rationals();
    rep.conductor_norm = 1;
    // Gamma_C(s + (k-1)/2) recorded as a single complex-place parameter;
    // its tensor square decomposes as Gamma_C(s) Gamma_C(s + k - 1).
    double half = (spec.weight - 1) / 2.0;
    rep.arch = {{2, cplx{half, 0}}};
    rep.rs_arch = {{2, cplx{0, 0}}, {2, cplx{double(spec.weight - 1), 0}}};
    rep.rs_conductor_norm = 1;
    for (std::size_t i = 0; i < table.prime.size(); ++i) {
        std::int64_t p = table.prime[i];
        double lam = table.lambda[i];
        // alpha + 1/alpha = lambda(p), |alpha| = 1 under Deligne
        cplx alpha = 0.5 * (cplx{lam, 0} + std::sqrt(cplx{lam * lam - 4.0, 0}));
        rep.satake[p] = {satake_local{p, 1, false, {alpha, cplx{lam, 0} - alpha}}};
    }
    rep.satake_cutoff = cutoff;
    return rep;
}

} // namespace

representation make_instance(const instance_spec& spec, std::int64_t cutoff) {
    if (cutoff < 2) throw error(errc::bad_spec, "cutoff must be >= 2");
    switch (spec.kind) {
        case instance_kind::zeta: return make_zeta(cutoff);
        case instance_kind::dirichlet: return make_dirichlet(spec, cutoff);
        case instance_kind::dedekind_quadratic: return make_dedekind(spec, cutoff);
        case instance_kind::holomorphic: return make_holomorphic(spec, cutoff);
    }
    throw error(errc::bad_spec, "unreachable instance kind");
}

representation make_instance(const std::string& spec, std::int64_t cutoff) {
    return make_instance(instance_spec::parse(spec), cutoff);
}

std::vector<instance_spec> curated_instances() {
    std::vector<std::string> names = {
        "zeta",
        "dirichlet:3:1",  // odd real
        "dirichlet:4:1",  // odd real
        "dirichlet:5:1",  // order 4, complex
        "dirichlet:5:2",  // even real
        "dirichlet:8:2",  // even real, conductor 8
        "dedekind:-1", "dedekind:-3", "dedekind:5", "dedekind:8",
        "holomorphic:12", "holomorphic:16", "holomorphic:18",
        "holomorphic:20", "holomorphic:22", "holomorphic:26",
    };
    std::vector<instance_spec> out;
    for (const auto& s : names) out.push_back(instance_spec::parse(s));
    return out;
}

std::optional<double> known_kappa(const representation& rep) {
    instance_spec spec;
    try {
        spec = instance_spec::parse(rep.label);
    } catch (const error&) {
        return std::nullopt; // external representation: empirical path only
    }
    switch (spec.kind) {
        case instance_kind::zeta:
            return 1.0;
        case instance_kind::dirichlet: {
            // L(s, chi x chi~) = zeta(s) prod_{p | q} (1 - p^{-s})
            double k = 1.0;
            for (std::int64_t p = 2; p <= spec.q; ++p)
                if (is_prime(p) && spec.q % p == 0) k *= 1.0 - 1.0 / double(p);
            return k;
        }
        case instance_kind::dedekind_quadratic: {
            // class number formula residues of zeta_F for the curated fields
            if (spec.d == -1) return std::numbers::pi / 4.0;
            if (spec.d == -3) return std::numbers::pi / (3.0 * std::sqrt(3.0));
            if (spec.d == 5) return 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::sqrt(5.0);
            if (spec.d == 8 || spec.d == 2)
                return 2.0 * std::log(1.0 + std::sqrt(2.0)) / std::sqrt(8.0);
            return std::nullopt;
        }
        case instance_kind::holomorphic:
            return std::nullopt; // empirical estimator only
    }
    return std::nullopt;
}

void require_cutoff(const representation& rep, std::int64_t needed) {
    if (rep.satake_cutoff < needed)
        throw error(errc::stream_too_short,
                    rep.label + " has Satake data to " + std::to_string(rep.satake_cutoff) +
                        " but the operation needs " + std::to_string(needed));
}

} // namespace rsl
