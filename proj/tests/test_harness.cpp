#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tempsec/harness.hpp"

using namespace tempsec;

TEST_CASE("generate_values kinds") {
    Rng rng(1);
    auto unit = generate_values(5, ValueSpec::unit(), rng);
    for (const auto& it : unit) CHECK(it.value == 1.0);

    auto ranks = generate_values(3, ValueSpec::ranks(), rng);
    CHECK(ranks[0].value == 1.0);
    CHECK(ranks[2].value == 3.0);

    auto big = generate_values(10, ValueSpec::one_big(100.0), rng);
    double top = 0.0;
    for (const auto& it : big) top = std::max(top, it.value);
    CHECK(top == 100.0);
    CHECK(big[0].value == 1.0);

    auto pareto = generate_values(100, ValueSpec::pareto(2.0), rng);
    for (const auto& it : pareto) CHECK(it.value >= 1.0);
}

TEST_CASE("adversarial pair construction") {
    auto [small, big] = adversarial_pair(3, 1000.0);
    CHECK(small.n == 2);
    CHECK(big.n == 3);
    CHECK(big.values.kind == ValueSpec::Kind::OneBig);
    CHECK(big.values.param == 1000.0);
    CHECK_THROWS_AS(adversarial_pair(1, 10.0), std::invalid_argument);
}

TEST_CASE("ratio accumulator reports ratio of means, not mean of ratios") {
    // alternating trials: (1, 10) and (9, 10). Mean-of-ratios would be 0.5;
    // ratio-of-means is 5/10.  Then skew the optimum instead: (5, 1), (5, 100)
    // gives mean-of-ratios ~2.52 while ratio-of-means stays 5/50.5.
    RatioAccumulator a;
    for (int i = 0; i < 50; ++i) {
        a.add(1.0, 10.0);
        a.add(9.0, 10.0);
    }
    CHECK(a.ratio() == doctest::Approx(0.5));

    RatioAccumulator b;
    for (int i = 0; i < 50; ++i) {
        b.add(5.0, 1.0);
        b.add(5.0, 100.0);
    }
    CHECK(b.ratio() == doctest::Approx(5.0 / 50.5).epsilon(1e-12));
    CHECK(b.ci_half_width() > 0.0);
}

TEST_CASE("oracle baseline gives ratio exactly one, none gives zero") {
    InstanceSpec spec;
    spec.n = 20;
    spec.values = ValueSpec::ranks();
    spec.gamma = 0.1;
    spec.budget_k = 5;
    RatioEstimate oracle = estimate_competitive_ratio(spec, "oracle", 200, 11);
    CHECK(oracle.ratio == 1.0);
    CHECK(oracle.ci_half_width == doctest::Approx(0.0));
    RatioEstimate none = estimate_competitive_ratio(spec, "none", 200, 11);
    CHECK(none.ratio == 0.0);
    CHECK(none.opt_mean == oracle.opt_mean);
}

TEST_CASE("estimates are reproducible and worker-count independent") {
    InstanceSpec spec;
    spec.n = 40;
    spec.values = ValueSpec::pareto(1.5);
    spec.gamma = 0.05;
    spec.budget_k = 10;
    RatioEstimate a = estimate_competitive_ratio(spec, "charter", 300, 123, 1);
    RatioEstimate b = estimate_competitive_ratio(spec, "charter", 300, 123, 1);
    RatioEstimate c = estimate_competitive_ratio(spec, "charter", 300, 123, 4);
    CHECK(a.ratio == b.ratio);
    CHECK(a.ratio == c.ratio);
    CHECK(a.ci_half_width == c.ci_half_width);
    RatioEstimate d = estimate_competitive_ratio(spec, "charter", 300, 124, 1);
    CHECK(a.ratio != d.ratio); // different seed, different sample
}

TEST_CASE("estimate validates inputs") {
    InstanceSpec spec;
    spec.n = 10;
    CHECK_THROWS_AS(estimate_competitive_ratio(spec, "charter", 50, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_competitive_ratio(spec, "bogus", 200, 1), std::invalid_argument);
}

TEST_CASE("algorithm never beats the offline optimum") {
    for (const char* alg : {"continuous", "slice", "charter", "charter_star", "kleinberg"}) {
        InstanceSpec spec;
        spec.n = 30;
        spec.values = ValueSpec::ranks();
        spec.gamma = 0.1;
        spec.budget_k = 5;
        RatioEstimate est = estimate_competitive_ratio(spec, alg, 200, 7);
        CHECK(est.ratio >= 0.0);
        CHECK(est.ratio <= 1.0 + 3.0 * est.ci_half_width);
    }
}

TEST_CASE("q distribution exact tiny case") {
    // tau = 1, n = 3: P[Q=q] = (1/2)^(q+1) for q <= 2
    QGeometricReport rep = verify_q_geometric_exact(3, 2);
    REQUIRE(rep.pass);
    CHECK(rep.observed[0] == 0.5);
    CHECK(rep.observed[1] == 0.25);
    CHECK(rep.observed[2] == 0.125);
    CHECK(rep.max_abs_dev == 0.0);
}

TEST_CASE("q distribution exact larger taus") {
    for (int k : {3, 4, 5, 6}) {
        QGeometricReport rep = verify_q_geometric_exact(12, k);
        CHECK(rep.pass);
        CHECK(rep.max_abs_dev == 0.0);
    }
}

TEST_CASE("q distribution monte carlo stays inside sampling noise") {
    QGeometricReport rep = verify_q_geometric(9, 2, 100000, 42);
    CHECK(rep.pass);
    CHECK(rep.tau == 1);
    // the tau=1 marginal is Geometric(1/2)
    CHECK(rep.predicted[0] == doctest::Approx(0.5));
    CHECK(rep.predicted[3] == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("q distribution rejects too-small n") {
    CHECK_THROWS_AS(verify_q_geometric_exact(5, 4), std::invalid_argument);
}

TEST_CASE("random subset top-k frozen example") {
    auto [lhs, rhs] = verify_random_subset_topk({3.0, 2.0, 1.0}, 1, 1);
    CHECK(lhs == doctest::Approx(2.125).epsilon(1e-14));
    CHECK(rhs == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(lhs >= rhs);
}

TEST_CASE("random subset top-k with t = k = n halves the total") {
    std::vector<double> values{4.0, 3.0, 2.0, 1.0};
    auto [lhs, rhs] = verify_random_subset_topk(values, 4, 4);
    CHECK(lhs == doctest::Approx(5.0).epsilon(1e-14)); // half of 10
}

TEST_CASE("random subset top-k inequality on random sets") {
    Rng rng(500);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 8);
        std::vector<double> values(n);
        for (double& v : values) v = rng.uniform();
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= k; ++t) {
                auto [lhs, rhs] = verify_random_subset_topk(values, t, k);
                CHECK(lhs >= rhs - 1e-12);
            }
    }
}

TEST_CASE("quartile symmetry trivial and sampled") {
    QuartileReport trivial = verify_quartile_symmetry(4, 0.0, 100, 5);
    for (double m : trivial.means) CHECK(m == 1.0);
    CHECK(trivial.pass);

    QuartileReport rep = verify_quartile_symmetry(40, 0.02, 20000, 6);
    CHECK(rep.pass);
    CHECK(rep.means.size() == 4);
    CHECK(rep.max_pair_diff <= 4.0 * rep.pooled_stderr + 1e-12);
}

TEST_CASE("quartile symmetry validates n") {
    CHECK_THROWS_AS(verify_quartile_symmetry(6, 0.1, 100, 1), std::invalid_argument);
}
