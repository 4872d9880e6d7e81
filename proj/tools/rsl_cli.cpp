// Command-line front end: instance selection, experiment execution, report
// emission, reproducible run manifests.
//
// Exit codes: 0 pass, 2 bound violation, 1 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rsl/conductor.hpp"
#include "rsl/coeffs.hpp"
#include "rsl/errors.hpp"
#include "rsl/explicit_formula.hpp"
#include "rsl/instances.hpp"
#include "rsl/report.hpp"
#include "rsl/sieve.hpp"
#include "rsl/sums.hpp"
#include "rsl/zeros.hpp"

using namespace rsl;

namespace {

struct common_opts {
    std::string instance = "zeta";
    std::string out_root = "out";
    std::string tag;
    int threads = 0;
    std::uint64_t seed = 0;
};

std::string run_dir(const common_opts& c, const std::string& command) {
    std::string leaf = c.tag;
    if (leaf.empty()) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        leaf = std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(now).count());
    }
    std::string inst = c.instance;
    for (auto& ch : inst)
        if (ch == ':') ch = '_';
    return c.out_root + "/" + command + "/" + inst + "/" + leaf;
}

int finish(const common_opts& c, const std::string& command, const json& report,
           const std::vector<std::pair<std::string, std::string>>& extra_files, bool pass) {
    run_manifest m;
    m.command = command;
    m.instance = c.instance;
    m.params = report.contains("params") ? report["params"] : json::object();
    m.seed = c.seed;
    std::string dir = run_dir(c, command);
    emit_file(m, dir, "report.json", report.dump(2) + "\n");
    for (const auto& [name, bytes] : extra_files) emit_file(m, dir, name, bytes);
    emit_file(m, dir, "manifest.json", m.to_json().dump(2) + "\n");
    std::cout << command << " " << c.instance << ": " << (pass ? "pass" : "BOUND VIOLATION")
              << "  (" << dir << "/report.json)\n";
    return pass ? 0 : 2;
}

std::string csv_join(const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) os << r[i] << (i + 1 < r.size() ? "," : "\n");
    return os.str();
}

// --config file: JSON object whose keys are long-option names; command-line
// flags win over config values
void apply_config(std::vector<std::string>& args, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::usage, "cannot open config file " + path);
    json cfg = json::parse(in);
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        std::string flag = "--" + it.key();
        bool present = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (present) continue;
        std::string val = it.value().is_string() ? it.value().get<std::string>()
                                                 : it.value().dump();
        args.push_back(flag);
        args.push_back(val);
    }
}

representation instance_for(const common_opts& c, std::int64_t cutoff) {
    return make_instance(c.instance, cutoff);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stod(part));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rankin-Selberg numerical laboratory"};
    app.require_subcommand(1);

    common_opts c;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (same keys as flags)");

    app.set_help_flag("--help", "print help"); // frees -h for the paper symbol --h

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--config", config_path, "JSON config file (same keys as flags)");
        sub->add_option("--instance", c.instance, "zeta | dirichlet:q:j | dedekind:d | holomorphic:k");
        sub->add_option("--out", c.out_root, "output root directory");
        sub->add_option("--tag", c.tag, "fixed run directory name (default: timestamp)");
        sub->add_option("--threads", c.threads, "worker cap (0 = hardware)");
        sub->add_option("--seed", c.seed, "seed recorded in the manifest");
    };

    // per-command parameters (paper-symbol flag names)
    double x = 1e5, h = 1e3, T = 100, z = 10, sigma = 0.75, beta1 = 0.999, eps = 0.5, eta = 0.1;
    double A = 1e7, theta = 0, c1 = 0.05, c4 = 1.0, c5 = 0.1, cS = 3.0, X = 1e5;
    double tmax = 100, beta_prime = 0.5, gamma_prime = -1;
    int n = 1, dF = 1, k = 2, jmax = 40, kmax = 12;
    double pmax = 1000;
    std::string dlist, tgrid = "0,1,10", sgrid = "0,0.5,0.75,1", zeros_file;
    double plant_beta = 0, plant_gamma = 1;

    auto* sc_coeffs = app.add_subcommand("coeffs", "coefficient identities at primes <= pmax");
    sc_coeffs->add_option("--pmax", pmax);
    sc_coeffs->add_option("--kmax", kmax);
    add_common(sc_coeffs);

    auto* sc_conductor = app.add_subcommand("conductor", "analytic conductors and the growth check");
    sc_conductor->add_option("--t-grid", tgrid);
    add_common(sc_conductor);

    auto* sc_interval = app.add_subcommand("interval", "short-interval Lambda sum");
    sc_interval->add_option("--x", x);
    sc_interval->add_option("--h", h);
    add_common(sc_interval);

    auto* sc_tail = app.add_subcommand("composite-tail", "composite prime-power tail in [x,2x]");
    sc_tail->add_option("--x", x);
    add_common(sc_tail);

    auto* sc_hyph = app.add_subcommand("hyp-h", "Hypothesis H partial sums");
    sc_hyph->add_option("--k", k);
    sc_hyph->add_option("--X", X);
    add_common(sc_hyph);

    auto* sc_mertens = app.add_subcommand("mertens", "Mertens-type partial sum vs budget");
    sc_mertens->add_option("--eta", eta);
    sc_mertens->add_option("--X", X);
    add_common(sc_mertens);

    auto* sc_brumley = app.add_subcommand("brumley", "max-Euler partial product");
    sc_brumley->add_option("--eps", eps);
    sc_brumley->add_option("--X", X);
    add_common(sc_brumley);

    auto* sc_zeros = app.add_subcommand("zeros", "zeta critical-line zeros to tmax");
    sc_zeros->add_option("--tmax", tmax);
    add_common(sc_zeros);

    auto* sc_density = app.add_subcommand("density", "N(sigma,T) vs the log-free bound");
    sc_density->add_option("--tmax", tmax);
    sc_density->add_option("--T", T);
    sc_density->add_option("--sigma-grid", sgrid);
    add_common(sc_density);

    auto* sc_zfr = app.add_subcommand("zfr", "zero-free-region membership");
    sc_zfr->add_option("--tmax", tmax);
    sc_zfr->add_option("--c1", c1);
    sc_zfr->add_option("--zeros-file", zeros_file);
    sc_zfr->add_option("--plant-beta", plant_beta, "add a synthetic zero (testing the checker)");
    sc_zfr->add_option("--plant-gamma", plant_gamma);
    add_common(sc_zfr);

    auto* sc_rep = app.add_subcommand("repulsion", "Deuring-Heilbronn widened region");
    sc_rep->add_option("--tmax", tmax);
    sc_rep->add_option("--beta1", beta1);
    sc_rep->add_option("--c4", c4);
    sc_rep->add_option("--c5", c5);
    sc_rep->add_option("--c", cS, "Siegel bound exponent");
    sc_rep->add_option("--zeros-file", zeros_file);
    add_common(sc_rep);

    auto* sc_power = app.add_subcommand("powersum", "Turan power-sum experiment");
    sc_power->add_option("--tmax", tmax);
    sc_power->add_option("--beta1", beta1);
    sc_power->add_option("--beta-prime", beta_prime);
    sc_power->add_option("--gamma-prime", gamma_prime, "default: first ordinate");
    sc_power->add_option("--jmax", jmax);
    add_common(sc_power);

    auto* sc_ef = app.add_subcommand("ef", "truncated explicit formula residual");
    sc_ef->add_option("--x", x);
    sc_ef->add_option("--T-grid", tgrid, "comma list of truncation heights");
    double ef_h = 0;
    sc_ef->add_option("--h", ef_h, "also evaluate the interval zero term and dyadic bound");
    add_common(sc_ef);

    auto* sc_slocal = app.add_subcommand("sieve-local", "weighted local-density lemma");
    sc_slocal->add_option("--x", x);
    sc_slocal->add_option("--T", T);
    sc_slocal->add_option("--d", dlist, "comma list of divisor prime norms");
    add_common(sc_slocal);

    auto* sc_supper = app.add_subcommand("sieve-upper", "Selberg sieve upper bound");
    sc_supper->add_option("--x", x);
    sc_supper->add_option("--T", T);
    sc_supper->add_option("--z", z);
    add_common(sc_supper);

    auto* sc_bt = app.add_subcommand("bt", "Brun-Titchmarsh ratio");
    sc_bt->add_option("--x", x);
    sc_bt->add_option("--T", T);
    add_common(sc_bt);

    auto* sc_xi = app.add_subcommand("xi", "mean-value point of the main term");
    sc_xi->add_option("--x", x);
    sc_xi->add_option("--h", h);
    sc_xi->add_option("--beta1", beta1);
    add_common(sc_xi);

    auto* sc_plan = app.add_subcommand("plan", "parameter plan (T exponent, delta)");
    sc_plan->add_option("--A", A);
    sc_plan->add_option("--n", n);
    sc_plan->add_option("--dF", dF);
    sc_plan->add_option("--theta", theta);
    add_common(sc_plan);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] == "--config") apply_config(args, args[i + 1]);
        std::vector<const char*> cargs{argv[0]};
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    set_max_threads(c.threads);

    try {
        if (*sc_coeffs) {
            auto rep = instance_for(c, std::int64_t(pmax));
            double worst_exp = 0, min_vm = 0;
            std::vector<std::vector<double>> rows;
            for (const auto* loc : rep.locals_by_norm()) {
                rs_local rs = rs_local_of(*loc);
                worst_exp = std::max(worst_exp, exp_identity_check(rs, kmax));
                auto lam = rs_local_coeffs(rs, kmax);
                for (int kk = 1; kk <= kmax; ++kk) {
                    double vm = rs_vonmangoldt(rs, kk);
                    min_vm = std::min(min_vm, vm);
                    if (kk <= 3)
                        rows.push_back({double(loc->norm), double(kk), lam[std::size_t(kk)], vm});
                }
            }
            json params{{"pmax", pmax}, {"kmax", kmax}};
            bool pass = worst_exp <= 1e-9 && min_vm >= -1e-9;
            json rep_json = make_report("coeffs", c.instance, params, worst_exp, 1e-9,
                                        worst_exp / 1e-9, pass);
            rep_json["min_vonmangoldt"] = min_vm;
            auto table = instance_ideal_table(rep, std::int64_t(pmax));
            std::vector<std::vector<double>> trows;
            for (const auto& id : table.ideals)
                trows.push_back({double(id.norm), double(id.residue_degree),
                                 id.field_ramified ? 1.0 : 0.0, double(id.p)});
            return finish(c, "coeffs", rep_json,
                          {{"coeffs.csv", csv_join({"norm", "k", "lambda", "vonmangoldt"}, rows)},
                           {"ideals.csv", csv_join({"norm", "degree", "ramified", "p"}, trows)}},
                          pass);
        }
        if (*sc_conductor) {
            auto rep = instance_for(c, 100);
            auto grid = parse_list(tgrid);
            auto bh = bh_conductor_check(rep, grid);
            json params{{"t_grid", tgrid}};
            json rj = make_report("conductor", c.instance, params, analytic_conductor(rep),
                                  rs_analytic_conductor(rep), 0.0, bh.all_pass);
            rj["C_pi"] = analytic_conductor(rep);
            rj["C_rs"] = rs_analytic_conductor(rep);
            std::vector<std::vector<double>> rows;
            for (const auto& p : bh.points) rows.push_back({p.t, p.lhs, p.rhs, p.ratio});
            return finish(c, "conductor", rj,
                          {{"bh.csv", csv_join({"t", "lhs", "rhs", "ratio"}, rows)}}, bh.all_pass);
        }
        if (*sc_interval) {
            auto rep = instance_for(c, std::int64_t(std::ceil(x + h)) + 1);
            auto r = short_interval(rep, x, h);
            double grc = grc_prime_interval(rep, x, h);
            json params{{"x", x}, {"h", h}};
            json rj = make_report("interval", c.instance, params, r.raw, r.main, r.ratio, true);
            rj["grc_prime_sum"] = grc;
            rj["psi_x"] = psi_rs(rep, x);
            rj["psi_x_plus_h"] = psi_rs(rep, x + h);
            return finish(c, "interval", rj, {}, true);
        }
        if (*sc_tail) {
            auto rep = instance_for(c, std::int64_t(2 * x) + 1);
            auto r = composite_tail(rep, x);
            json params{{"x", x}};
            bool pass = r.ratio <= 10.0;
            json rj = make_report("composite-tail", c.instance, params, r.tail, r.bound, r.ratio, pass);
            return finish(c, "composite-tail", rj, {}, pass);
        }
        if (*sc_hyph) {
            auto rep = instance_for(c, std::int64_t(X) + 1);
            auto r = hypothesis_h_partial(rep, k, X);
            json params{{"k", k}, {"X", X}};
            json rj = make_report("hyp-h", c.instance, params, r.value, 0.0, 0.0, true);
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < r.block_upper.size(); ++i)
                rows.push_back({r.block_upper[i], r.block_increment[i]});
            return finish(c, "hyp-h", rj,
                          {{"blocks.csv", csv_join({"block_upper", "increment"}, rows)}}, true);
        }
        if (*sc_mertens) {
            auto rep = instance_for(c, std::int64_t(X) + 1);
            auto r = mertens_check(rep, eta, X);
            json params{{"eta", eta}, {"X", X}};
            json rj = make_report("mertens", c.instance, params, r.partial_sum, r.budget,
                                  r.partial_sum / r.budget, r.pass);
            return finish(c, "mertens", rj, {}, r.pass);
        }
        if (*sc_brumley) {
            auto rep = instance_for(c, std::int64_t(X) + 1);
            auto r = brumley_max_product(rep, eps, X);
            json params{{"eps", eps}, {"X", X}};
            json rj = make_report("brumley", c.instance, params, r.product, 0.0, 0.0, r.pass);
            return finish(c, "brumley", rj, {}, r.pass);
        }
        if (*sc_zeros) {
            auto zs = find_zeta_zeros(tmax);
            auto cf = counting_formula_check(zs, tmax);
            json params{{"tmax", tmax}};
            bool pass = cf.difference <= 2.0;
            json rj = make_report("zeros", "zeta", params, double(cf.count), cf.main_term,
                                  cf.difference, pass);
            std::int64_t positive = 0;
            for (const auto& zz : zs.zeros)
                if (zz.gamma > 0) ++positive;
            rj["count_positive"] = positive;
            if (!zs.zeros.empty()) rj["gamma1"] = zs.zeros[zs.zeros.size() / 2].gamma;
            return finish(c, "zeros", rj, {{"zeros.csv", zero_set_to_csv(zs)}}, pass);
        }
        if (*sc_density) {
            auto rep = instance_for(c, 100);
            auto zs = find_zeta_zeros(tmax);
            auto rows = density_bound_compare(zs, rep, T, parse_list(sgrid));
            bool pass = true;
            std::vector<std::vector<double>> csv;
            for (const auto& r : rows) {
                pass = pass && r.pass;
                csv.push_back({r.sigma, double(r.count), r.log_bound, r.pass ? 1.0 : 0.0});
            }
            json params{{"tmax", tmax}, {"T", T}, {"sigma_grid", sgrid}};
            json rj = make_report("density", c.instance, params, 0.0, 0.0, 0.0, pass);
            return finish(c, "density", rj,
                          {{"density.csv",
                            csv_join({"sigma", "count", "log_bound", "pass"}, csv)}},
                          pass);
        }
        if (*sc_zfr) {
            auto rep = instance_for(c, 100);
            zero_set zs;
            if (!zeros_file.empty()) {
                std::ifstream in(zeros_file);
                std::stringstream ss;
                ss << in.rdbuf();
                zs = zero_set_from_csv(ss.str(), true);
            } else {
                zs = find_zeta_zeros(tmax);
            }
            if (plant_beta > 0) zs.add_conjugate_closed(plant_beta, plant_gamma, 1, "synthetic");
            auto bad = zfr_check(zs, rep, c1);
            json params{{"tmax", tmax}, {"c1", c1}};
            bool pass = bad.empty() == (plant_beta <= 0);
            json rj = make_report("zfr", c.instance, params, double(bad.size()), 0.0, 0.0, pass);
            json v = json::array();
            for (const auto& zz : bad) v.push_back({{"beta", zz.beta}, {"gamma", zz.gamma}});
            rj["violations"] = v;
            return finish(c, "zfr", rj, {}, pass);
        }
        if (*sc_rep) {
            auto rep = instance_for(c, 100);
            zero_set zs;
            if (!zeros_file.empty()) {
                std::ifstream in(zeros_file);
                std::stringstream ss;
                ss << in.rdbuf();
                zs = zero_set_from_csv(ss.str(), true);
            } else {
                zs = find_zeta_zeros(tmax);
            }
            json params{{"tmax", tmax}, {"beta1", beta1}, {"c4", c4}, {"c5", c5}};
            auto sg = siegel_bound_check(rep, beta1, cS);
            try {
                auto bad = repulsion_region_check(zs, rep, beta1, c4, c5);
                bool pass = bad.empty() && sg.pass;
                json rj = make_report("repulsion", c.instance, params, double(bad.size()), 0.0,
                                      0.0, pass);
                json v = json::array();
                for (const auto& zz : bad) v.push_back({{"beta", zz.beta}, {"gamma", zz.gamma}});
                rj["violations"] = v;
                rj["siegel_bound"] = sg.bound;
                rj["siegel_pass"] = sg.pass;
                return finish(c, "repulsion", rj, {}, pass);
            } catch (const error& e) {
                if (e.kind() != errc::degenerate_region) throw;
                json rj = make_report("repulsion", c.instance, params, 0.0, 0.0, 0.0, sg.pass);
                rj["degenerate_region"] = e.what();
                rj["siegel_bound"] = sg.bound;
                rj["siegel_pass"] = sg.pass;
                return finish(c, "repulsion", rj, {}, sg.pass);
            }
        }
        if (*sc_power) {
            auto zs = find_zeta_zeros(tmax);
            double gp = gamma_prime;
            if (gp < 0) {
                for (const auto& zz : zs.zeros)
                    if (zz.gamma > 0) { gp = zz.gamma; break; }
            }
            auto cfg = power_sum_experiment(zs, beta1, beta_prime, gp, jmax);
            json params{{"tmax", tmax}, {"beta1", beta1}, {"beta_prime", beta_prime},
                        {"gamma_prime", gp}, {"jmax", jmax}};
            bool pass = cfg.witness.has_value();
            json rj = make_report("powersum", "zeta", params, cfg.observed_c, 0.0, 0.0, pass);
            rj["L"] = cfg.L;
            rj["witness_j1"] = cfg.witness ? *cfg.witness : -1;
            std::vector<std::vector<double>> rows;
            for (const auto& tr : cfg.trace) rows.push_back({double(tr.j), tr.sum, tr.budget});
            return finish(c, "powersum", rj,
                          {{"trace.csv", csv_join({"j", "sum", "budget"}, rows)}}, pass);
        }
        if (*sc_ef) {
            auto grid = parse_list(tgrid);
            double tm = 0;
            for (double t : grid) tm = std::max(tm, t);
            auto rep = instance_for(c, std::int64_t(x) + 1);
            auto zs = find_zeta_zeros(std::max(tm, 50.0));
            std::vector<std::vector<double>> rows;
            double last_res = 0;
            for (double t : grid) {
                auto r = explicit_formula_residual(rep, zs, x, t);
                rows.push_back({t, r.residual, r.budget});
                last_res = r.residual;
            }
            json params{{"x", x}, {"T_grid", tgrid}};
            json rj = make_report("ef", c.instance, params, last_res, 0.0, 0.0, true);
            bool pass = true;
            if (ef_h >= 2) {
                double tm2 = grid.empty() ? 50.0 : grid.back();
                auto it = interval_zero_term(zs, x, ef_h, tm2);
                auto db = dyadic_zero_bound(zs, x, ef_h, tm2);
                rj["interval_zero_term"] = it.term.real();
                rj["per_zero_bounds_hold"] = it.bounds_hold;
                rj["dyadic_bound"] = db.total;
                pass = it.bounds_hold && std::abs(it.term) / ef_h <= db.total;
                rj["pass"] = pass;
            }
            return finish(c, "ef", rj,
                          {{"sweep.csv", csv_join({"T", "residual", "budget"}, rows)}}, pass);
        }
        if (*sc_slocal) {
            std::int64_t X2 = std::int64_t(std::ceil(x * std::exp(2.0 / T))) + 1;
            auto rep = instance_for(c, X2);
            auto table = instance_ideal_table(rep, X2);
            std::vector<std::size_t> didx;
            if (!dlist.empty())
                for (double pn : parse_list(dlist)) {
                    bool found = false;
                    for (std::size_t i = 0; i < table.ideals.size() && !found; ++i)
                        if (table.ideals[i].norm == std::int64_t(pn)) {
                            didx.push_back(i);
                            found = true;
                        }
                    if (!found)
                        throw error(errc::usage, "no prime ideal of norm " + std::to_string(pn));
                }
            auto r = weighted_divisor_sum(rep, didx, x, T);
            json params{{"x", x}, {"T", T}, {"d", dlist}};
            bool pass = r.ratio <= 10.0;
            json rj = make_report("sieve-local", c.instance, params, r.lhs, r.main, r.ratio, pass);
            rj["kappa"] = r.kappa;
            rj["difference"] = r.difference;
            rj["budget"] = r.budget;
            rj["phi_check_1_over_T"] = phi_check(cplx{1.0 / T, 0.0}).real();
            std::vector<prime_ideal> dprimes;
            std::vector<satake_local> dlocs2;
            for (auto idx : didx) {
                dprimes.push_back(table.ideals[idx]);
                dlocs2.push_back(rep.satake.at(table.ideals[idx].norm)[0]);
            }
            auto om = prime_divisor_count_check(dprimes, 0.25, rep.degree_f());
            rj["omega"] = om.omega;
            rj["omega_bound"] = om.bound;
            rj["omega_pass"] = om.pass;
            auto strip = g_strip_bound_check(rep, dlocs2, {0.0, 1.0});
            json sj = json::array();
            for (const auto& p : strip)
                sj.push_back({{"t", p.t}, {"observed", p.observed}, {"budget", p.budget},
                              {"pass", p.pass}});
            rj["g_strip"] = sj;
            return finish(c, "sieve-local", rj, {}, pass && om.pass);
        }
        if (*sc_supper) {
            std::int64_t X2 = std::int64_t(std::ceil(x * std::exp(2.0 / T))) + 1;
            auto rep = instance_for(c, X2);
            auto r = selberg_upper(rep, x, T, z);
            json params{{"x", x}, {"T", T}, {"z", z}};
            json rj = make_report("sieve-upper", c.instance, params, r.lhs, r.main,
                                  r.main > 0 ? r.lhs / r.main : 0.0, r.pass);
            rj["error_budget"] = r.error_budget;
            rj["margin"] = r.margin;
            return finish(c, "sieve-upper", rj, {}, r.pass);
        }
        if (*sc_bt) {
            auto rep = instance_for(c, std::int64_t(std::ceil(x * std::exp(1.0 / T))) + 1);
            auto r = brun_titchmarsh(rep, x, T);
            json params{{"x", x}, {"T", T}};
            bool pass = r.ratio <= 5.0;
            json rj = make_report("bt", c.instance, params, r.sum, r.budget, r.ratio, pass);
            rj["in_paper_range"] = r.in_paper_range;
            return finish(c, "bt", rj, {}, pass);
        }
        if (*sc_xi) {
            c.instance = "-";
            auto s = xi_solve(x, h, beta1);
            json params{{"x", x}, {"h", h}, {"beta1", beta1}};
            bool pass = s.residual <= 1e-10 * std::pow(x, beta1);
            json rj = make_report("xi", "-", params, s.xi, 0.0, 0.0, pass);
            rj["factor"] = s.factor;
            rj["residual"] = s.residual;
            return finish(c, "xi", rj, {}, pass);
        }
        if (*sc_plan) {
            c.instance = "-";
            auto r = choices_plan(A, n, dF, theta);
            json params{{"A", A}, {"n", n}, {"dF", dF}, {"theta", theta}};
            json rj = make_report("plan", "-", params, r.delta, r.box, r.delta * dF / r.box, true);
            rj["t_exponent"] = r.t_exponent;
            rj["A_below_recommended"] = r.a_below_recommended;
            return finish(c, "plan", rj, {}, true);
        }
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand\n";
    return 1;
}
