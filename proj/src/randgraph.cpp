#include "tempsec/randgraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tempsec/offline.hpp"

namespace tempsec {

namespace {

void finish_stats(IndepSetSample& s) {
    const double trials = static_cast<double>(s.sizes.size());
    double sum = 0.0;
    for (int v : s.sizes) sum += v;
    s.mean = sum / trials;
    double ss = 0.0;
    for (int v : s.sizes) {
        const double d = v - s.mean;
        ss += d * d;
    }
    if (trials > 1.0) s.stderr_mean = std::sqrt(ss / (trials - 1.0) / trials);
}

std::vector<double> draw_sorted_uniform(int n, Rng& rng) {
    std::vector<double> ts(n);
    for (double& t : ts) t = rng.uniform();
    std::sort(ts.begin(), ts.end());
    return ts;
}

} // namespace

IndepSetSample sample_m(int n, double gamma, long trials, Rng& rng) {
    if (n < 1 || trials < 1 || !(gamma > 0.0))
        throw std::invalid_argument("sample_m: need n >= 1, trials >= 1, gamma > 0");
    IndepSetSample s;
    s.n = n;
    s.gamma = gamma;
    s.d = 1;
    s.sizes.reserve(trials);
    for (long t = 0; t < trials; ++t) {
        auto ts = draw_sorted_uniform(n, rng);
        s.sizes.push_back(static_cast<int>(greedy_independent(ts, gamma).size()));
    }
    finish_stats(s);
    return s;
}

IndepSetSample sample_m_d(int n, double gamma, int d, long trials, Rng& rng) {
    if (n < 1 || trials < 1 || !(gamma > 0.0))
        throw std::invalid_argument("sample_m_d: need n >= 1, trials >= 1, gamma > 0");
    if (d < 1) throw std::invalid_argument("sample_m_d: d must be positive");
    const double recip = 1.0 / gamma;
    if (recip < 2.0 || std::abs(recip - std::round(recip)) > 1e-9)
        throw std::invalid_argument("sample_m_d: 1/gamma must be an integer >= 2");
    if (d == 1) return sample_m(n, gamma, trials, rng); // identical draw sequence

    IndepSetSample s;
    s.n = n;
    s.gamma = gamma;
    s.d = d;
    s.sizes.reserve(trials);
    for (long t = 0; t < trials; ++t) {
        auto ts = draw_sorted_uniform(n, rng);
        s.sizes.push_back(static_cast<int>(greedy_capacity_d(ts, gamma, d).size()));
    }
    finish_stats(s);
    return s;
}

double half_lower_bound(int n, double gamma, const BoundParams& params) {
    const double alpha = params.alpha_c * std::sqrt(gamma * std::log(1.0 / gamma));
    return (1.0 - alpha) * n / (1.0 + n * gamma);
}

double dwidth_lower_bound(int n, double gamma, int d) {
    if (d < 2) throw std::invalid_argument("dwidth_lower_bound: d must be >= 2");
    const double width = std::min(static_cast<double>(n), d / gamma);
    return width * (1.0 - std::sqrt(3.0 * std::log(d)) / std::sqrt(d) - 1.0 / d);
}

double charter_lower_bound(double gamma, int k, const BoundParams& params) {
    if (k < 1) throw std::invalid_argument("charter_lower_bound: k must be positive");
    const double beta = params.beta_c * std::sqrt(gamma * std::log(1.0 / gamma)) +
                        params.e2 / std::sqrt(static_cast<double>(k));
    return (1.0 - beta) / (1.0 + k * gamma);
}

TruncatedBinomialBounds min_bin_expectation(int n, double p) {
    if (n < 1 || !(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("min_bin_expectation: need n >= 1 and p in (0,1)");
    const double mu_real = n * p;
    const double mu_round = std::round(mu_real);
    if (std::abs(mu_real - mu_round) > 1e-9 * std::max(1.0, mu_real) || mu_round < 1.0)
        throw std::invalid_argument("min_bin_expectation: n*p must be a positive integer");
    const long mu = static_cast<long>(mu_round);

    // E[min(X, mu)] = sum_k min(k, mu) pmf(k); pmf tracked in log space so
    // large n stays finite.
    double logpmf = n * std::log1p(-p); // pmf(0)
    double expect = 0.0;
    for (long k = 0; k <= n; ++k) {
        if (k > 0)
            logpmf += std::log((n - k + 1) * p / (k * (1.0 - p)));
        expect += std::min<double>(k, mu) * std::exp(logpmf);
    }

    const double e = std::exp(1.0);
    const double pi = 3.14159265358979323846;
    const double spread = std::sqrt(1.0 - p) / std::sqrt(static_cast<double>(mu));
    TruncatedBinomialBounds out;
    out.exact = expect;
    out.lower = mu * (1.0 - e / (2.0 * pi) * spread);
    out.upper = mu * (1.0 - std::sqrt(2.0 * pi) / (e * e) * spread);
    return out;
}

} // namespace tempsec
