#include "tempsec/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tempsec/harness.hpp"
#include "tempsec/offline.hpp"
#include "tempsec/online.hpp"
#include "tempsec/randgraph.hpp"

namespace tempsec {

namespace {

constexpr double kHalfInvE = 0.18393972058572117; // 1/(2e)

nlohmann::json estimate_json(const RatioEstimate& est) {
    return {{"alg_mean", est.alg_mean},
            {"opt_mean", est.opt_mean},
            {"ratio", est.ratio},
            {"ci_half_width", est.ci_half_width},
            {"trials", est.trials},
            {"seed", est.seed}};
}

} // namespace

SuiteResult suite_slice_floor(long trials, std::uint64_t seed, int workers) {
    InstanceSpec spec;
    spec.n = 200;
    spec.values = ValueSpec::one_big(100.0);
    spec.gamma = 0.05;
    spec.budget_k = 20; // ceil(1/gamma): enough slots to never bind the optimum
    spec.capacity_d = 1;
    RatioEstimate est = estimate_competitive_ratio(spec, "slice", trials, seed, workers);
    const double floor = kHalfInvE - 2.0 * est.ci_half_width;
    SuiteResult res;
    res.name = "theorem1";
    res.pass = est.ratio >= floor;
    res.details = {{"estimate", estimate_json(est)},
                   {"bound", kHalfInvE},
                   {"threshold", floor}};
    return res;
}

SuiteResult suite_adversarial_ceiling(long trials, std::uint64_t seed, int workers) {
    const double gamma = 0.05;
    const int k = 20; // ceil(1/gamma)
    auto [small, big] = adversarial_pair(1000, 1e6);
    small.gamma = big.gamma = gamma;
    small.budget_k = big.budget_k = k;
    RatioEstimate es = estimate_competitive_ratio(small, "charter", trials, seed, workers);
    RatioEstimate eb = estimate_competitive_ratio(big, "charter", trials, seed + 1, workers);
    const RatioEstimate& worst = es.ratio <= eb.ratio ? es : eb;
    const double ceiling = 0.5 + gamma / 2.0 + 3.0 * worst.ci_half_width;
    SuiteResult res;
    res.name = "theorem4";
    res.pass = worst.ratio <= ceiling;
    res.details = {{"unit_instance", estimate_json(es)},
                   {"big_instance", estimate_json(eb)},
                   {"min_ratio", worst.ratio},
                   {"bound", 0.5 + gamma / 2.0},
                   {"threshold", ceiling}};
    return res;
}

SuiteResult suite_ksecretary(long trials, std::uint64_t seed, int workers) {
    InstanceSpec spec;
    spec.n = 1000;
    spec.values = ValueSpec::ranks();
    spec.gamma = 0.0;
    spec.budget_k = 100;
    spec.capacity_d = 1;
    RatioEstimate est = estimate_competitive_ratio(spec, "charter", trials, seed, workers);
    // gamma = 0 makes the optimum the deterministic top-k sum, so the ratio
    // is mean value / T_k and the guarantee is 1 - 5/sqrt(k) = 0.5.
    const double target = 1.0 - 5.0 / std::sqrt(100.0);
    const double floor = target - 2.0 * est.ci_half_width / 1.96;
    SuiteResult res;
    res.name = "ksecretary";
    res.pass = est.ratio >= floor;
    res.details = {{"estimate", estimate_json(est)},
                   {"bound", target},
                   {"threshold", floor}};
    return res;
}

SuiteResult suite_indep_grid(long trials, std::uint64_t seed) {
    const int ns[] = {10, 100, 1000};
    const double gammas[] = {0.001, 0.01, 0.032};
    BoundParams params;
    SuiteResult res;
    res.name = "theorem3";
    res.pass = true;
    res.details["cells"] = nlohmann::json::array();
    std::uint64_t cell = 0;
    for (int n : ns) {
        for (double gamma : gammas) {
            Rng rng(Rng::derive(seed, cell++));
            IndepSetSample s = sample_m(n, gamma, trials, rng);
            const double bound = half_lower_bound(n, gamma, params);
            bool ok = s.mean >= bound - 3.0 * s.stderr_mean;
            nlohmann::json c = {{"n", n},
                               {"gamma", gamma},
                               {"mean", s.mean},
                               {"stderr", s.stderr_mean},
                               {"bound_lower", bound}};
            if (std::abs(n * gamma - 1.0) < 1e-12) {
                const double target = n / (1.0 + n * gamma);
                c["target"] = target;
                ok = ok && std::abs(s.mean - target) <= 0.10 * target;
            }
            c["pass"] = ok;
            res.pass = res.pass && ok;
            res.details["cells"].push_back(c);
        }
    }
    return res;
}

SuiteResult suite_capacity_grid(long trials, std::uint64_t seed) {
    const int ds[] = {9, 25, 100};
    SuiteResult res;
    res.name = "theorem6";
    res.pass = true;
    res.details["cells"] = nlohmann::json::array();
    std::uint64_t cell = 0;
    for (int d : ds) {
        const double gamma = 1.0 / (4.0 * d);
        const int n = 4 * d * d; // d / gamma
        Rng rng(Rng::derive(seed, cell++));
        IndepSetSample s = sample_m_d(n, gamma, d, trials, rng);
        const double bound = dwidth_lower_bound(n, gamma, d);
        const double deficit = (n - s.mean) * std::sqrt(static_cast<double>(d)) / n;
        const bool ok = s.mean >= bound - 3.0 * s.stderr_mean && deficit >= 0.1;
        res.pass = res.pass && ok;
        res.details["cells"].push_back({{"d", d},
                                        {"gamma", gamma},
                                        {"n", n},
                                        {"mean", s.mean},
                                        {"stderr", s.stderr_mean},
                                        {"bound_lower", bound},
                                        {"deficit", deficit},
                                        {"pass", ok}});
    }
    return res;
}

SuiteResult suite_oracles(long instances, std::uint64_t seed) {
    const double gammas[] = {0.0, 0.05, 0.2, 1.0};
    long dp_checked = 0, dp_equal = 0;
    long greedy_checked = 0, greedy_equal = 0;

    for (long i = 0; i < instances; ++i) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
        const int n = 1 + static_cast<int>(rng.next_u64() % 12);
        const double gamma = gammas[rng.next_u64() % 4];
        const int k = 1 + static_cast<int>(rng.next_u64() % 5);
        // Integer values keep every sum exact in any addition order, so the
        // equality below can be bitwise.
        std::vector<Item> items(n);
        for (int j = 0; j < n; ++j)
            items[j] = {j, static_cast<double>(1 + rng.next_u64() % 100)};
        ArrivalSchedule schedule;
        for (int j = 0; j < n; ++j)
            schedule.times.push_back({j, rng.uniform()});
        Selection dp = optimal_budgeted(items, schedule, gamma, k);
        Selection bf = brute_force_optimal(items, schedule, gamma, k, 1);
        ++dp_checked;
        if (dp.total_value() == bf.total_value()) ++dp_equal;
    }

    for (long i = 0; i < instances; ++i) {
        Rng rng(Rng::derive(seed ^ 0x9e3779b97f4a7c15ull, static_cast<std::uint64_t>(i)));
        const int n = 1 + static_cast<int>(rng.next_u64() % 12);
        const double gamma = rng.uniform();
        const int d = 1 + static_cast<int>(rng.next_u64() % 3);
        std::vector<double> ts(n);
        for (double& t : ts) t = rng.uniform();
        std::sort(ts.begin(), ts.end());
        ++greedy_checked;
        const int want = brute_force_max_cardinality(ts, gamma, d);
        const int got = d == 1 ? static_cast<int>(greedy_independent(ts, gamma).size())
                               : static_cast<int>(greedy_capacity_d(ts, gamma, d).size());
        if (got == want) ++greedy_equal;
    }

    SuiteResult res;
    res.name = "oracles";
    res.pass = dp_equal == dp_checked && greedy_equal == greedy_checked;
    res.details = {{"dp_vs_brute", {{"checked", dp_checked}, {"equal", dp_equal}}},
                   {"greedy_vs_brute", {{"checked", greedy_checked}, {"equal", greedy_equal}}}};
    return res;
}

SuiteResult suite_q_geometric(long trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "lemma-q";
    res.pass = true;
    res.details["exact"] = nlohmann::json::array();
    for (int tau = 1; tau <= 3; ++tau) {
        QGeometricReport rep = verify_q_geometric_exact(12, 2 * tau);
        res.pass = res.pass && rep.pass;
        res.details["exact"].push_back(
            {{"n", rep.n}, {"tau", rep.tau}, {"max_abs_dev", rep.max_abs_dev}, {"pass", rep.pass}});
    }
    QGeometricReport mc = verify_q_geometric(60, 20, trials, seed);
    res.pass = res.pass && mc.pass;
    res.details["monte_carlo"] = {{"n", mc.n},
                                  {"tau", mc.tau},
                                  {"trials", trials},
                                  {"max_abs_dev", mc.max_abs_dev},
                                  {"chi_square", mc.chi_square},
                                  {"pass", mc.pass}};
    return res;
}

SuiteResult suite_subset_topk(long sets, std::uint64_t seed) {
    long pairs_checked = 0, pairs_ok = 0;
    double worst_margin = 1e300;
    for (long i = 0; i < sets; ++i) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
        const int n = 3 + static_cast<int>(rng.next_u64() % 10);
        std::vector<double> values(n);
        for (double& v : values) v = rng.uniform();
        for (int k = 1; k <= n; ++k) {
            for (int t = 1; t <= k; ++t) {
                auto [lhs, rhs] = verify_random_subset_topk(values, t, k);
                ++pairs_checked;
                worst_margin = std::min(worst_margin, lhs - rhs);
                if (lhs >= rhs - 1e-12) ++pairs_ok;
            }
        }
    }
    SuiteResult res;
    res.name = "lemma-subsets";
    res.pass = pairs_ok == pairs_checked;
    res.details = {{"sets", sets},
                   {"pairs_checked", pairs_checked},
                   {"pairs_ok", pairs_ok},
                   {"worst_margin", worst_margin}};
    return res;
}

SuiteResult suite_truncated_binomial() {
    long checked = 0, bracketed = 0;
    double worst_low = 1e300, worst_high = 1e300;
    for (int num = 1; num <= 9; ++num) {
        const double p = num / 10.0;
        const int step = 10 / std::gcd(num, 10);
        for (int n = step; n <= 10000; n += step) {
            TruncatedBinomialBounds b = min_bin_expectation(n, p);
            ++checked;
            worst_low = std::min(worst_low, b.exact - b.lower);
            worst_high = std::min(worst_high, b.upper - b.exact);
            if (b.lower <= b.exact && b.exact <= b.upper) ++bracketed;
        }
    }
    SuiteResult res;
    res.name = "lemma-binmid";
    res.pass = bracketed == checked;
    res.details = {{"checked", checked},
                   {"bracketed", bracketed},
                   {"min_exact_minus_lower", worst_low},
                   {"min_upper_minus_exact", worst_high}};
    return res;
}

SuiteResult suite_quartiles(long trials, std::uint64_t seed) {
    QuartileReport rep = verify_quartile_symmetry(40, 0.02, trials, seed);
    SuiteResult res;
    res.name = "quartiles";
    res.pass = rep.pass;
    res.details = {{"n", 40},
                   {"gamma", 0.02},
                   {"trials", trials},
                   {"means", rep.means},
                   {"stderrs", rep.stderrs},
                   {"max_pair_diff", rep.max_pair_diff},
                   {"pooled_stderr", rep.pooled_stderr}};
    return res;
}

SuiteResult suite_dominance(long trials, std::uint64_t seed) {
    const int n = 30, k = 6;
    const double gamma = 0.05;
    double sum = 0.0, sumsq = 0.0;
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        auto items = generate_values(n, ValueSpec::ranks(), rng);
        auto schedule = sample_schedule(items, Prior::uniform(), rng);
        auto stream = make_stream(items, schedule);
        const double plain = charter(stream, k, gamma).total_value();
        const double star = charter_star(stream, k, gamma, rng).total_value();
        const double diff = plain - star;
        sum += diff;
        sumsq += diff * diff;
    }
    const double mean = sum / trials;
    const double var = (sumsq - trials * mean * mean) / (trials - 1);
    const double se = std::sqrt(std::max(0.0, var) / trials);
    SuiteResult res;
    res.name = "dominance";
    res.pass = mean >= -2.0 * se;
    res.details = {{"n", n},
                   {"k", k},
                   {"gamma", gamma},
                   {"trials", trials},
                   {"mean_diff", mean},
                   {"paired_stderr", se}};
    return res;
}

std::vector<std::string> suite_names() {
    return {"theorem1", "theorem3", "theorem4", "theorem6", "lemma-q",
            "lemma-subsets", "lemma-binmid", "quartiles", "oracles"};
}

bool run_named_suite(const std::string& name, std::uint64_t seed, int workers,
                     long trials_override, SuiteResult& out) {
    const long t = trials_override;
    if (name == "theorem1") out = suite_slice_floor(t > 0 ? t : 10000, seed, workers);
    else if (name == "theorem3") out = suite_indep_grid(t > 0 ? t : 10000, seed);
    else if (name == "theorem4") out = suite_adversarial_ceiling(t > 0 ? t : 10000, seed, workers);
    else if (name == "theorem6") out = suite_capacity_grid(t > 0 ? t : 1000, seed);
    else if (name == "lemma-q") out = suite_q_geometric(t > 0 ? t : 100000, seed);
    else if (name == "lemma-subsets") out = suite_subset_topk(t > 0 ? t : 100, seed);
    else if (name == "lemma-binmid") out = suite_truncated_binomial();
    else if (name == "quartiles") out = suite_quartiles(t > 0 ? t : 100000, seed);
    else if (name == "oracles") out = suite_oracles(t > 0 ? t : 10000, seed);
    else return false;
    return true;
}

} // namespace tempsec
