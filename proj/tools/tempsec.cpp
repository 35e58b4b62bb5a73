// tempsec: run online algorithms on random instances, verify the analytic
// bounds, sweep parameter grids. Exit codes: 0 success, 1 assertion or
// runtime failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempsec/harness.hpp"
#include "tempsec/online.hpp"
#include "tempsec/randgraph.hpp"
#include "tempsec/suites.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 4242424242ull;

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
    if (seed_given) return seed_flag;
    if (const char* env = std::getenv("TEMPSEC_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return kDefaultSeed;
}

bool parse_prior(const std::string& text, tempsec::Prior& out, std::string& err) {
    if (text == "uniform") {
        out = tempsec::Prior::uniform();
        return true;
    }
    if (text.rfind("power:", 0) == 0) {
        try {
            const double a = std::stod(text.substr(6));
            if (a > 0.0) {
                out = tempsec::Prior::power(a);
                return true;
            }
        } catch (...) {
        }
    }
    err = "invalid --prior '" + text + "' (expected uniform or power:<alpha>)";
    return false;
}

bool parse_values(const std::string& text, tempsec::ValueSpec& out, std::string& err) {
    if (text == "unit") {
        out = tempsec::ValueSpec::unit();
        return true;
    }
    if (text == "ranks") {
        out = tempsec::ValueSpec::ranks();
        return true;
    }
    auto tail = [&](const char* prefix) -> double {
        return std::stod(text.substr(std::string(prefix).size()));
    };
    try {
        if (text.rfind("pareto:", 0) == 0) {
            const double a = tail("pareto:");
            if (a > 0.0) {
                out = tempsec::ValueSpec::pareto(a);
                return true;
            }
        } else if (text.rfind("one-big:", 0) == 0) {
            const double m = tail("one-big:");
            if (m > 0.0) {
                out = tempsec::ValueSpec::one_big(m);
                return true;
            }
        }
    } catch (...) {
    }
    err = "invalid --values '" + text +
          "' (expected unit, ranks, pareto:<alpha>, or one-big:<M>)";
    return false;
}

int write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 1;
    }
    f << text;
    return 0;
}

json config_json(const tempsec::InstanceSpec& spec, const std::string& alg,
                 long trials, std::uint64_t seed, const std::string& prior_text,
                 const std::string& values_text) {
    return {{"alg", alg},          {"n", spec.n},
            {"gamma", spec.gamma}, {"k", spec.budget_k},
            {"d", spec.capacity_d}, {"trials", trials},
            {"seed", seed},        {"prior", prior_text},
            {"values", values_text}};
}

// Analytic companions for a ratio row: a floor for the chosen algorithm and
// the universal 1/2 + gamma/2 ceiling.
void ratio_bounds(const std::string& alg, double gamma, int k,
                  double& lower, double& upper) {
    upper = 0.5 + gamma / 2.0;
    lower = 0.0;
    if (alg == "slice") {
        lower = 0.18393972058572117; // 1/(2e)
    } else if (alg == "charter" || alg == "charter_star" || alg == "kleinberg") {
        tempsec::BoundParams params;
        lower = tempsec::charter_lower_bound(std::max(gamma, 1e-12), k, params);
    } else if (alg == "oracle") {
        lower = 1.0;
        upper = 1.0;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temp secretary simulation laboratory"};
    app.require_subcommand(1);

    std::string alg = "charter";
    int n = 100, k = 1, d = 1;
    double gamma = 0.05;
    long trials = 1000;
    std::uint64_t seed_flag = 0;
    bool seed_given = false;
    std::string prior_text = "uniform", values_text = "unit";
    std::string out_path, format = "json";
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto add_common = [&](CLI::App* cmd, bool with_instance) {
        if (with_instance) {
            cmd->add_option("--alg", alg, "algorithm name");
            cmd->add_option("--prior", prior_text, "arrival prior: uniform | power:<alpha>");
            cmd->add_option("--values", values_text,
                            "value generator: unit | ranks | pareto:<alpha> | one-big:<M>");
        }
        cmd->add_option("--trials", trials, "Monte Carlo trials");
        cmd->add_option("--seed", seed_flag, "master seed")->each([&](const std::string&) {
            seed_given = true;
        });
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--workers", workers, "worker thread cap");
    };

    CLI::App* run = app.add_subcommand("run", "estimate a competitive ratio");
    run->add_option("--n", n, "items per trial");
    run->add_option("--gamma", gamma, "rental duration");
    run->add_option("--k", k, "budget");
    run->add_option("--d", d, "capacity");
    run->add_option("--format", format, "json");
    add_common(run, true);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")->required();
    long trials_override = 0;
    verify->add_option("--trials", trials_override, "override the suite's trial count");
    verify->add_option("--seed", seed_flag, "master seed")->each([&](const std::string&) {
        seed_given = true;
    });
    verify->add_option("--out", out_path, "output file (default stdout)");
    verify->add_option("--workers", workers, "worker thread cap");

    CLI::App* sweep = app.add_subcommand("sweep", "ratio estimates over a parameter grid");
    std::vector<double> sweep_gammas;
    std::vector<int> sweep_ns{100}, sweep_ks{0}, sweep_ds{1};
    sweep->add_option("--gamma", sweep_gammas, "gamma grid")->expected(-1);
    sweep->add_option("--n", sweep_ns, "n grid")->expected(-1);
    sweep->add_option("--k", sweep_ks, "budget grid (0 = ceil(1/gamma))")->expected(-1);
    sweep->add_option("--d", sweep_ds, "capacity grid")->expected(-1);
    std::string sweep_format = "csv";
    sweep->add_option("--format", sweep_format, "csv | json");
    add_common(sweep, true);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the analytic bound formulas");
    tempsec::BoundParams bparams;
    bounds->add_option("--n", n, "items");
    bounds->add_option("--gamma", gamma, "rental duration");
    bounds->add_option("--k", k, "budget");
    bounds->add_option("--d", d, "capacity");
    bounds->add_option("--alpha-c", bparams.alpha_c, "independent-set bound multiplier");
    bounds->add_option("--gamma-up", bparams.gamma_up, "admissible-gamma ceiling");
    bounds->add_option("--beta-c", bparams.beta_c, "charter bound gamma multiplier");
    bounds->add_option("--e2", bparams.e2, "charter bound k-term multiplier");
    bounds->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::uint64_t seed = resolve_seed(seed_given, seed_flag);
    if (workers < 1) workers = 1;

    try {
        if (run->parsed()) {
            std::string err;
            tempsec::InstanceSpec spec;
            if (!parse_prior(prior_text, spec.prior, err) ||
                !parse_values(values_text, spec.values, err)) {
                std::cerr << "error: " << err << "\n";
                return 2;
            }
            spec.n = n;
            spec.gamma = gamma;
            spec.budget_k = k;
            spec.capacity_d = d;
            if (!tempsec::is_known_algorithm(alg)) {
                std::cerr << "error: unknown algorithm '" << alg << "'\n";
                return 2;
            }
            if (alg == "slice" && !(gamma > 0.0 && gamma <= 0.5)) {
                std::cerr << "error: slice requires 0 < gamma <= 1/2\n";
                return 2;
            }
            if (trials < 100 || n < 1 || k < 1 || d < 1 || gamma < 0.0 || gamma > 1.0) {
                std::cerr << "error: invalid run configuration\n";
                return 2;
            }
            if (format != "json") {
                std::cerr << "error: run supports --format json only\n";
                return 2;
            }
            tempsec::RatioEstimate est =
                tempsec::estimate_competitive_ratio(spec, alg, trials, seed, workers);
            json doc = {{"command", "run"},
                        {"config", config_json(spec, alg, trials, seed, prior_text, values_text)},
                        {"estimate",
                         {{"alg_mean", est.alg_mean},
                          {"opt_mean", est.opt_mean},
                          {"ratio", est.ratio},
                          {"ci_half_width", est.ci_half_width},
                          {"trials", est.trials},
                          {"seed", est.seed}}}};
            return write_output(out_path, doc.dump() + "\n");
        }

        if (verify->parsed()) {
            tempsec::SuiteResult result;
            if (!tempsec::run_named_suite(suite, seed, workers, trials_override, result)) {
                std::cerr << "error: unknown suite '" << suite << "'; known:";
                for (const auto& name : tempsec::suite_names()) std::cerr << " " << name;
                std::cerr << "\n";
                return 2;
            }
            json doc = {{"experiment", result.name},
                        {"params", {{"seed", seed}, {"trials_override", trials_override}}},
                        {"report", result.details},
                        {"pass", result.pass},
                        {"seed", seed}};
            const int wcode = write_output(out_path, doc.dump(2) + "\n");
            if (wcode != 0) return wcode;
            return result.pass ? 0 : 1;
        }

        if (sweep->parsed()) {
            std::string err;
            tempsec::Prior prior;
            tempsec::ValueSpec values;
            if (!parse_prior(prior_text, prior, err) || !parse_values(values_text, values, err)) {
                std::cerr << "error: " << err << "\n";
                return 2;
            }
            if (!tempsec::is_known_algorithm(alg)) {
                std::cerr << "error: unknown algorithm '" << alg << "'\n";
                return 2;
            }
            if (sweep_gammas.empty() || sweep_ns.empty() || sweep_ks.empty() ||
                sweep_ds.empty() || trials < 100) {
                std::cerr << "error: sweep needs a non-empty grid and trials >= 100\n";
                return 2;
            }
            if (sweep_format != "csv" && sweep_format != "json") {
                std::cerr << "error: sweep supports --format csv or json\n";
                return 2;
            }
            std::ostringstream csv;
            csv << "n,gamma,d,trials,mean,stderr,bound_lower,bound_upper,seed\n";
            json rows = json::array();
            std::uint64_t cell = 0;
            for (double g : sweep_gammas) {
                for (int kk : sweep_ks) {
                    for (int dd : sweep_ds) {
                        for (int nn : sweep_ns) {
                            const int kcell = kk > 0 ? kk : static_cast<int>(std::ceil(1.0 / g));
                            tempsec::InstanceSpec spec;
                            spec.n = nn;
                            spec.gamma = g;
                            spec.budget_k = kcell;
                            spec.capacity_d = dd;
                            spec.prior = prior;
                            spec.values = values;
                            const std::uint64_t cell_seed = tempsec::Rng::derive(seed, cell++);
                            tempsec::RatioEstimate est = tempsec::estimate_competitive_ratio(
                                spec, alg, trials, cell_seed, workers);
                            double lo = 0.0, hi = 1.0;
                            ratio_bounds(alg, g, kcell, lo, hi);
                            csv << nn << "," << g << "," << dd << "," << trials << ","
                                << est.ratio << "," << est.ci_half_width / 1.96 << ","
                                << lo << "," << hi << "," << cell_seed << "\n";
                            rows.push_back({{"n", nn},
                                            {"gamma", g},
                                            {"k", kcell},
                                            {"d", dd},
                                            {"trials", trials},
                                            {"mean", est.ratio},
                                            {"stderr", est.ci_half_width / 1.96},
                                            {"bound_lower", lo},
                                            {"bound_upper", hi},
                                            {"seed", cell_seed}});
                        }
                    }
                }
            }
            if (sweep_format == "csv") return write_output(out_path, csv.str());
            json doc = {{"command", "sweep"},
                        {"config",
                         {{"alg", alg},
                          {"trials", trials},
                          {"seed", seed},
                          {"prior", prior_text},
                          {"values", values_text}}},
                        {"rows", rows}};
            return write_output(out_path, doc.dump() + "\n");
        }

        if (bounds->parsed()) {
            json doc = {{"command", "bounds"},
                        {"config",
                         {{"n", n},
                          {"gamma", gamma},
                          {"k", k},
                          {"d", d},
                          {"alpha_c", bparams.alpha_c},
                          {"gamma_up", bparams.gamma_up},
                          {"beta_c", bparams.beta_c},
                          {"e2", bparams.e2}}}};
            doc["half_lower_bound"] = tempsec::half_lower_bound(n, gamma, bparams);
            doc["charter_lower_bound"] = tempsec::charter_lower_bound(gamma, k, bparams);
            if (d >= 2) doc["dwidth_lower_bound"] = tempsec::dwidth_lower_bound(n, gamma, d);
            return write_output(out_path, doc.dump(2) + "\n");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
