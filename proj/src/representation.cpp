#include "rsl/representation.hpp"

#include <json.hpp>

#include "rsl/errors.hpp"

namespace rsl {

std::vector<const satake_local*> representation::locals_by_norm() const {
    std::vector<const satake_local*> out;
    for (const auto& [norm, vec] : satake)
        for (const auto& loc : vec) out.push_back(&loc);
    return out;
}

std::vector<arch_factor> rs_arch_sum_rule(const representation& rep) {
    // Pairwise sums mu_j + conj(mu_j') within each place.  Arch factors are
    // stored as a flat list; group them by runs of n per place.
    std::vector<arch_factor> out;
    std::size_t per_place = std::size_t(rep.n);
    for (std::size_t base = 0; base + per_place <= rep.arch.size(); base += per_place) {
        for (std::size_t j = 0; j < per_place; ++j)
            for (std::size_t j2 = 0; j2 < per_place; ++j2) {
                arch_factor f;
                f.dv = rep.arch[base + j].dv;
                f.mu = rep.arch[base + j].mu + std::conj(rep.arch[base + j2].mu);
                out.push_back(f);
            }
    }
    return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json cplx_to_json(const cplx& z) { return ordered_json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const ordered_json& j) {
    return cplx{j.at(0).get<double>(), j.at(1).get<double>()};
}

} // namespace

std::string to_json(const representation& rep, int indent) {
    ordered_json j;
    j["label"] = rep.label;
    j["n"] = rep.n;
    j["field"]["kind"] = rep.field.is_rational() ? "rationals" : "quadratic";
    j["field"]["d"] = rep.field.d;
    j["conductor"] = rep.conductor_norm;
    j["arch"] = ordered_json::array();
    for (const auto& f : rep.arch) j["arch"].push_back(cplx_to_json(f.mu));
    j["satake"] = ordered_json::array();
    for (const auto* loc : rep.locals_by_norm()) {
        ordered_json e;
        e["norm"] = loc->norm;
        e["degree"] = loc->residue_degree;
        e["ramified"] = loc->ramified;
        e["alphas"] = ordered_json::array();
        for (const auto& a : loc->alphas) e["alphas"].push_back(cplx_to_json(a));
        j["satake"].push_back(e);
    }
    // extension block: instance RS conductor data (the fixed schema has no
    // slot for it; absent on load we fall back to derived defaults)
    ordered_json rs;
    rs["conductor"] = rep.rs_conductor_norm;
    rs["arch"] = ordered_json::array();
    for (const auto& f : rep.rs_arch)
        rs["arch"].push_back(ordered_json{{"d", f.dv}, {"mu", cplx_to_json(f.mu)}});
    j["rs"] = rs;
    j["satake_cutoff"] = rep.satake_cutoff;
    return j.dump(indent);
}

representation representation_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    representation rep;
    rep.label = j.at("label").get<std::string>();
    rep.n = j.at("n").get<int>();
    std::string kind = j.at("field").at("kind").get<std::string>();
    if (kind == "rationals")
        rep.field = field_descriptor::rationals();
    else if (kind == "quadratic")
        rep.field = field_descriptor::quadratic(j.at("field").at("d").get<std::int64_t>());
    else
        throw error(errc::bad_spec, "unknown field kind '" + kind + "'");
    rep.conductor_norm = j.at("conductor").get<std::int64_t>();

    // d(v) inference for the flat arch list: quadratic fields take their
    // place signature; on Q, n = 2 entries are Gamma_C-convention (d = 2).
    int dv = 1;
    if (!rep.field.is_rational() && rep.field.d < 0) dv = 2;
    if (rep.field.is_rational() && rep.n == 2) dv = 2;
    for (const auto& a : j.at("arch")) rep.arch.push_back({dv, cplx_from_json(a)});

    std::int64_t cutoff = 0;
    for (const auto& e : j.at("satake")) {
        satake_local loc;
        loc.norm = e.at("norm").get<std::int64_t>();
        loc.residue_degree = e.at("degree").get<int>();
        loc.ramified = e.at("ramified").get<bool>();
        for (const auto& a : e.at("alphas")) loc.alphas.push_back(cplx_from_json(a));
        rep.satake[loc.norm].push_back(loc);
        cutoff = std::max(cutoff, loc.norm);
    }
    rep.satake_cutoff = j.contains("satake_cutoff")
                            ? j["satake_cutoff"].get<std::int64_t>()
                            : cutoff;

    if (j.contains("rs")) {
        rep.rs_conductor_norm = j["rs"].at("conductor").get<std::int64_t>();
        for (const auto& f : j["rs"].at("arch"))
            rep.rs_arch.push_back({f.at("d").get<int>(), cplx_from_json(f.at("mu"))});
    } else {
        rep.rs_arch = rs_arch_sum_rule(rep);
        // Bushnell-Henniart divisibility as a conservative default
        std::int64_t q = 1;
        for (int i = 0; i < 2 * rep.n - 1; ++i) q *= rep.conductor_norm;
        rep.rs_conductor_norm = q;
    }
    return rep;
}

} // namespace rsl
