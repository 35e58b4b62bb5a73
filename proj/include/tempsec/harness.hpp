#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tempsec/core.hpp"

namespace tempsec {

// Deterministic-from-seed value generators.
struct ValueSpec {
    enum class Kind { Unit, Ranks, Pareto, OneBig };
    Kind kind = Kind::Unit;
    double param = 0.0; // Pareto tail exponent, or the big-item magnitude

    static ValueSpec unit() { return {Kind::Unit, 0.0}; }
    static ValueSpec ranks() { return {Kind::Ranks, 0.0}; }
    static ValueSpec pareto(double alpha) { return {Kind::Pareto, alpha}; }
    static ValueSpec one_big(double m) { return {Kind::OneBig, m}; }
};

std::vector<Item> generate_values(int n, const ValueSpec& spec, Rng& rng);

// Everything needed to expand one random trial.
struct InstanceSpec {
    int n = 1;
    ValueSpec values;
    double gamma = 0.0;
    int budget_k = 1;
    int capacity_d = 1;
    Prior prior;
};

// The pair of inputs behind the 1/2 + gamma/2 ceiling: n-1 unit items, and
// the same plus one item of huge value M. Caller sets gamma/k/d afterwards.
std::pair<InstanceSpec, InstanceSpec> adversarial_pair(int n, double big_m);

// Streaming moments for the ratio-of-means estimator. Merging is
// order-sensitive only through floating point, so callers merge per-trial
// results in trial order to stay bit-reproducible.
struct RatioAccumulator {
    long count = 0;
    double sum_a = 0.0, sum_o = 0.0;
    double sum_aa = 0.0, sum_oo = 0.0, sum_ao = 0.0;

    void add(double alg_value, double opt_value);
    double alg_mean() const;
    double opt_mean() const;
    double ratio() const; // of means, not mean of ratios
    double ci_half_width() const; // 95%, delta method
};

struct RatioEstimate {
    double alg_mean = 0.0;
    double opt_mean = 0.0;
    double ratio = 0.0;
    double ci_half_width = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of E[alg value] / E[optimum value] with common random
// numbers (algorithm and optimum see the same schedule each trial).
// Algorithm names: continuous, slice, charter, charter_star, kleinberg,
// oracle (replays the optimum), none (accepts nothing).
// Throws std::invalid_argument on unknown algorithm or trials < 100, and
// std::runtime_error if the optimum mean is zero.
RatioEstimate estimate_competitive_ratio(const InstanceSpec& spec,
                                         const std::string& algorithm,
                                         long trials, std::uint64_t seed,
                                         int workers = 1);

// Distribution of Q, the number of second-half arrivals exceeding the tau-th
// largest first-half arrival (every second-half arrival counts when fewer
// than tau landed in the first half), against the negative binomial
// P[Q=q] = C(tau+q-1, q) * (1/2)^(tau+q) for q <= n - tau.
struct QGeometricReport {
    int n = 0;
    int tau = 0;
    bool exact = false;
    std::vector<double> observed;   // P[Q=q], q = 0..n-tau
    std::vector<double> predicted;
    double max_abs_dev = 0.0;
    double chi_square = 0.0;
    bool pass = false;
};

// Exact mode enumerates all 2^n half-assignments (n <= 20) and demands zero
// deviation in dyadic integer arithmetic.
QGeometricReport verify_q_geometric_exact(int n, int k);

// Monte Carlo mode; passes when every cell deviates by at most
// 4 * sqrt(p(1-p)/trials).
QGeometricReport verify_q_geometric(int n, int k, long trials, std::uint64_t seed);

// lhs = E[top-t value of a uniformly random subset], by enumeration of all
// 2^n subsets; rhs = T_k(S) * sum_r C(k,r) 2^-k min(r,t)/k. Rejects n > 20.
std::pair<double, double> verify_random_subset_topk(std::vector<double> values,
                                                    int t, int k);

// E[greedy independent-set size] of the four order-statistic quartiles of n
// uniform points; the four means must agree within 4 pooled standard errors.
struct QuartileReport {
    std::vector<double> means;    // size 4
    std::vector<double> stderrs;  // size 4
    double max_pair_diff = 0.0;
    double pooled_stderr = 0.0;
    bool pass = false;
};

QuartileReport verify_quartile_symmetry(int n, double gamma, long trials,
                                        std::uint64_t seed);

} // namespace tempsec
