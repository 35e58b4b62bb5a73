#include "tempsec/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "tempsec/offline.hpp"
#include "tempsec/online.hpp"

namespace tempsec {

namespace {

unsigned long long binom_ull(int n, int r) {
    if (r < 0 || r > n) return 0;
    unsigned long long out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * (n - r + i) / i;
    return out;
}

double sample_stderr(double sum, double sumsq, long n) {
    if (n < 2) return 0.0;
    const double mean = sum / n;
    const double var = (sumsq - n * mean * mean) / (n - 1);
    return std::sqrt(std::max(0.0, var) / n);
}

} // namespace

std::vector<Item> generate_values(int n, const ValueSpec& spec, Rng& rng) {
    if (n < 1) throw std::invalid_argument("generate_values: n must be positive");
    std::vector<Item> items(n);
    for (int i = 0; i < n; ++i) items[i].id = i;
    switch (spec.kind) {
    case ValueSpec::Kind::Unit:
        for (auto& it : items) it.value = 1.0;
        break;
    case ValueSpec::Kind::Ranks:
        for (int i = 0; i < n; ++i) items[i].value = i + 1;
        break;
    case ValueSpec::Kind::Pareto:
        if (!(spec.param > 0.0))
            throw std::invalid_argument("generate_values: pareto exponent must be positive");
        for (auto& it : items)
            it.value = std::pow(1.0 - rng.uniform(), -1.0 / spec.param);
        break;
    case ValueSpec::Kind::OneBig:
        for (int i = 0; i + 1 < n; ++i) items[i].value = 1.0;
        items[n - 1].value = spec.param;
        break;
    }
    return items;
}

std::pair<InstanceSpec, InstanceSpec> adversarial_pair(int n, double big_m) {
    if (n < 2) throw std::invalid_argument("adversarial_pair: n must be >= 2");
    InstanceSpec small;
    small.n = n - 1;
    small.values = ValueSpec::unit();
    InstanceSpec big;
    big.n = n;
    big.values = ValueSpec::one_big(big_m);
    return {small, big};
}

void RatioAccumulator::add(double a, double o) {
    ++count;
    sum_a += a;
    sum_o += o;
    sum_aa += a * a;
    sum_oo += o * o;
    sum_ao += a * o;
}

double RatioAccumulator::alg_mean() const { return count ? sum_a / count : 0.0; }
double RatioAccumulator::opt_mean() const { return count ? sum_o / count : 0.0; }
double RatioAccumulator::ratio() const { return alg_mean() / opt_mean(); }

double RatioAccumulator::ci_half_width() const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    const double ma = alg_mean();
    const double mo = opt_mean();
    const double var_a = (sum_aa - n * ma * ma) / (n - 1);
    const double var_o = (sum_oo - n * mo * mo) / (n - 1);
    const double cov = (sum_ao - n * ma * mo) / (n - 1);
    // First-order variance of the ratio of sample means.
    const double var_r = (var_a / (mo * mo) + ma * ma * var_o / (mo * mo * mo * mo) -
                          2.0 * ma * cov / (mo * mo * mo)) / n;
    return 1.96 * std::sqrt(std::max(0.0, var_r));
}

RatioEstimate estimate_competitive_ratio(const InstanceSpec& spec,
                                         const std::string& algorithm,
                                         long trials, std::uint64_t seed,
                                         int workers) {
    if (!is_known_algorithm(algorithm))
        throw std::invalid_argument("estimate_competitive_ratio: unknown algorithm " + algorithm);
    if (trials < 100)
        throw std::invalid_argument("estimate_competitive_ratio: trials must be >= 100");
    if (spec.n < 1 || spec.budget_k < 1 || spec.capacity_d < 1 ||
        spec.gamma < 0.0 || spec.gamma > 1.0)
        throw std::invalid_argument("estimate_competitive_ratio: invalid instance spec");

    // Per-trial results land in preallocated slots so the merge below is the
    // same regardless of worker count.
    std::vector<double> alg_vals(trials), opt_vals(trials);
    auto run_trial = [&](long t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        auto items = generate_values(spec.n, spec.values, rng);
        auto schedule = sample_schedule(items, spec.prior, rng);
        auto stream = make_stream(items, schedule);
        Selection opt = optimal_budgeted(items, schedule, spec.gamma, spec.budget_k);
        double a = 0.0;
        if (algorithm == "none") {
            a = 0.0;
        } else if (algorithm == "oracle") {
            a = opt.total_value();
        } else if (algorithm == "continuous") {
            a = continuous_secretary(stream).total_value();
        } else if (algorithm == "slice") {
            a = slice_gamma(stream, spec.prior, spec.gamma, spec.capacity_d, rng).total_value();
        } else if (algorithm == "charter") {
            a = charter(stream, spec.budget_k, spec.gamma).total_value();
        } else if (algorithm == "charter_star") {
            a = charter_star(stream, spec.budget_k, spec.gamma, rng).total_value();
        } else { // kleinberg
            a = charter(stream, spec.budget_k, 0.0).total_value();
        }
        alg_vals[t] = a;
        opt_vals[t] = opt.total_value();
    };

    const int nworkers = static_cast<int>(std::max<long>(1, std::min<long>(workers, trials)));
    if (nworkers == 1) {
        for (long t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w)
            pool.emplace_back([&, w] {
                for (long t = w; t < trials; t += nworkers) run_trial(t);
            });
        for (auto& th : pool) th.join();
    }

    RatioAccumulator acc;
    for (long t = 0; t < trials; ++t) acc.add(alg_vals[t], opt_vals[t]);
    if (!(acc.opt_mean() > 0.0))
        throw std::runtime_error("estimate_competitive_ratio: degenerate instance, optimum mean is zero");

    RatioEstimate est;
    est.alg_mean = acc.alg_mean();
    est.opt_mean = acc.opt_mean();
    est.ratio = acc.ratio();
    est.ci_half_width = acc.ci_half_width();
    est.trials = trials;
    est.seed = seed;
    return est;
}

namespace {

// Q for one half-assignment of n distinct ranked items: bit i of mask set
// means item of rank i (0 = largest) arrives in the second half.
int q_of_mask(std::uint32_t mask, int n, int tau) {
    int left_seen = 0, q = 0;
    for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
            ++q;
        } else if (++left_seen == tau) {
            return q; // items past the tau-th largest left item never count
        }
    }
    return q; // fewer than tau left items: every right item counts
}

void fill_predicted(QGeometricReport& rep) {
    const int qmax = rep.n - rep.tau;
    rep.predicted.resize(qmax + 1);
    for (int q = 0; q <= qmax; ++q)
        rep.predicted[q] = static_cast<double>(binom_ull(rep.tau + q - 1, q)) *
                           std::ldexp(1.0, -(rep.tau + q));
}

void score_report(QGeometricReport& rep, double cell_tolerance_scale, long trials) {
    rep.max_abs_dev = 0.0;
    rep.chi_square = 0.0;
    bool ok = true;
    for (std::size_t q = 0; q < rep.predicted.size(); ++q) {
        const double p = rep.predicted[q];
        const double dev = std::abs(rep.observed[q] - p);
        rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
        if (p > 0.0 && trials > 0)
            rep.chi_square += trials * dev * dev / p;
        const double tol = trials > 0
            ? cell_tolerance_scale * std::sqrt(p * (1.0 - p) / trials)
            : 0.0;
        if (dev > tol) ok = false;
    }
    rep.pass = ok;
}

} // namespace

QGeometricReport verify_q_geometric_exact(int n, int k) {
    if (n > 20) throw std::invalid_argument("verify_q_geometric_exact: n > 20");
    const int tau = (k + 1) / 2;
    if (n < 3 * tau)
        throw std::invalid_argument("verify_q_geometric_exact: requires n >= 3*ceil(k/2)");
    QGeometricReport rep;
    rep.n = n;
    rep.tau = tau;
    rep.exact = true;
    fill_predicted(rep);

    const int qmax = n - tau;
    std::vector<unsigned long long> counts(n + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        ++counts[q_of_mask(mask, n, tau)];

    rep.observed.resize(qmax + 1);
    bool ok = true;
    for (int q = 0; q <= qmax; ++q) {
        rep.observed[q] = std::ldexp(static_cast<double>(counts[q]), -n);
        // Dyadic identity: counts[q] / 2^n == C(tau+q-1, q) / 2^(tau+q).
        if (counts[q] != binom_ull(tau + q - 1, q) << (n - tau - q)) ok = false;
        rep.max_abs_dev = std::max(rep.max_abs_dev, std::abs(rep.observed[q] - rep.predicted[q]));
    }
    rep.pass = ok;
    return rep;
}

QGeometricReport verify_q_geometric(int n, int k, long trials, std::uint64_t seed) {
    const int tau = (k + 1) / 2;
    if (n < 3 * tau)
        throw std::invalid_argument("verify_q_geometric: requires n >= 3*ceil(k/2)");
    if (trials < 1)
        throw std::invalid_argument("verify_q_geometric: trials must be >= 1");
    QGeometricReport rep;
    rep.n = n;
    rep.tau = tau;
    rep.exact = false;
    fill_predicted(rep);

    Rng rng(seed);
    std::vector<long> counts(n + 1, 0);
    for (long t = 0; t < trials; ++t) {
        // Walk the items in decreasing rank, assigning halves on the fly.
        int left_seen = 0, q = 0;
        for (int i = 0; i < n; ++i) {
            if (rng.coin()) {
                ++q;
            } else if (++left_seen == tau) {
                break;
            }
        }
        ++counts[q];
    }
    rep.observed.resize(rep.predicted.size());
    for (std::size_t q = 0; q < rep.observed.size(); ++q)
        rep.observed[q] = static_cast<double>(counts[q]) / trials;
    score_report(rep, 4.0, trials);
    return rep;
}

std::pair<double, double> verify_random_subset_topk(std::vector<double> values,
                                                    int t, int k) {
    const int n = static_cast<int>(values.size());
    if (n > 20) throw std::invalid_argument("verify_random_subset_topk: n > 20");
    if (t < 1 || k < t || k > n)
        throw std::invalid_argument("verify_random_subset_topk: need 1 <= t <= k <= n");
    std::sort(values.begin(), values.end(), std::greater<>());

    double lhs_total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double top = 0.0;
        int taken = 0;
        for (int i = 0; i < n && taken < t; ++i) {
            if (mask >> i & 1u) {
                top += values[i];
                ++taken;
            }
        }
        lhs_total += top;
    }
    const double lhs = std::ldexp(lhs_total, -n);

    double top_k = 0.0;
    for (int i = 0; i < k; ++i) top_k += values[i];
    double factor = 0.0;
    for (int r = 1; r <= k; ++r)
        factor += static_cast<double>(binom_ull(k, r)) * std::ldexp(1.0, -k) *
                  std::min(r, t) / static_cast<double>(k);
    return {lhs, top_k * factor};
}

QuartileReport verify_quartile_symmetry(int n, double gamma, long trials,
                                        std::uint64_t seed) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("verify_quartile_symmetry: n must be a positive multiple of 4");
    if (trials < 2) throw std::invalid_argument("verify_quartile_symmetry: trials must be >= 2");
    const int block = n / 4;
    Rng rng(seed);
    double sum[4] = {0, 0, 0, 0}, sumsq[4] = {0, 0, 0, 0};
    std::vector<double> ts(n);
    for (long t = 0; t < trials; ++t) {
        for (double& x : ts) x = rng.uniform();
        std::sort(ts.begin(), ts.end());
        for (int q = 0; q < 4; ++q) {
            std::span<const double> part(ts.data() + q * block, block);
            const double m = static_cast<double>(greedy_independent(part, gamma).size());
            sum[q] += m;
            sumsq[q] += m * m;
        }
    }
    QuartileReport rep;
    rep.means.resize(4);
    rep.stderrs.resize(4);
    for (int q = 0; q < 4; ++q) {
        rep.means[q] = sum[q] / trials;
        rep.stderrs[q] = sample_stderr(sum[q], sumsq[q], trials);
    }
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double diff = std::abs(rep.means[i] - rep.means[j]);
            const double pooled = std::sqrt(rep.stderrs[i] * rep.stderrs[i] +
                                            rep.stderrs[j] * rep.stderrs[j]);
            if (diff > rep.max_pair_diff) {
                rep.max_pair_diff = diff;
                rep.pooled_stderr = pooled;
            }
            if (diff > 4.0 * pooled) ok = false;
        }
    }
    rep.pass = ok;
    return rep;
}

} // namespace tempsec
