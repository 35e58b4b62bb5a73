#pragma once

#include <cstdint>
#include <vector>

#include "tempsec/rng.hpp"

namespace tempsec {

// Free constants of the analytic lower bounds. The defaults are the smallest
// round values consistent with the derivation chains; every bound assertion
// takes them as parameters.
struct BoundParams {
    double alpha_c = 3.0;       // multiplier inside alpha(gamma) = c*sqrt(gamma*ln(1/gamma))
    double gamma_up = 0.032704; // admissible-gamma ceiling for bound assertions
    double beta_c = 7.5;        // gamma-term multiplier of the charter bound
    double e2 = 5.0;            // k-term multiplier of the charter bound
};

// Observed sizes of (capacity-d) gamma-independent sets over random trials.
struct IndepSetSample {
    int n = 0;
    double gamma = 0.0;
    int d = 1;
    std::vector<int> sizes;
    double mean = 0.0;
    double stderr_mean = 0.0;
};

// Greedy gamma-independent set sizes of n uniform points, over `trials`
// independent draws.
IndepSetSample sample_m(int n, double gamma, long trials, Rng& rng);

// Capacity-d variant. Requires 1/gamma to be an integer >= 2.
IndepSetSample sample_m_d(int n, double gamma, int d, long trials, Rng& rng);

// (1 - alpha_c*sqrt(gamma*ln(1/gamma))) * n / (1 + n*gamma). May be negative.
double half_lower_bound(int n, double gamma, const BoundParams& params);

// min(n, d/gamma) * (1 - sqrt(3*ln d)/sqrt(d) - 1/d). Requires d >= 2.
double dwidth_lower_bound(int n, double gamma, int d);

// Parametric charter guarantee: (1 - beta_c*sqrt(gamma*ln(1/gamma)) -
// e2/sqrt(k)) / (1 + k*gamma). Vacuous (non-positive) for small k.
double charter_lower_bound(double gamma, int k, const BoundParams& params);

struct TruncatedBinomialBounds {
    double exact = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

// E[min(Bin(n,p), mu)] with mu = n*p an integer, by direct summation,
// bracketed by mu*(1 - (e/2pi)*sqrt(1-p)/sqrt(mu)) from below and
// mu*(1 - (sqrt(2pi)/e^2)*sqrt(1-p)/sqrt(mu)) from above.
TruncatedBinomialBounds min_bin_expectation(int n, double p);

} // namespace tempsec
