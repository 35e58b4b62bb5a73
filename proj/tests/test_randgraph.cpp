#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tempsec/randgraph.hpp"

using namespace tempsec;

TEST_CASE("sample_m degenerate cases") {
    Rng rng(1);
    IndepSetSample one = sample_m(1, 0.5, 200, rng);
    for (int v : one.sizes) CHECK(v == 1);
    CHECK(one.mean == 1.0);
    CHECK(one.stderr_mean == 0.0);

    IndepSetSample wide = sample_m(30, 1.0, 200, rng);
    for (int v : wide.sizes) CHECK(v == 1); // gamma = 1 leaves room for one point
}

TEST_CASE("sample_m sizes stay within the geometric ceiling") {
    Rng rng(2);
    IndepSetSample s = sample_m(200, 0.07, 300, rng);
    const int ceiling = static_cast<int>(std::ceil(1.0 / 0.07));
    for (int v : s.sizes) {
        CHECK(v >= 1);
        CHECK(v <= ceiling);
    }
    CHECK(s.sizes.size() == 300);
}

TEST_CASE("sample_m mean near n/(1+n*gamma) at n*gamma = 1") {
    Rng rng(3);
    IndepSetSample s = sample_m(100, 0.01, 10000, rng);
    const double target = 100.0 / 2.0;
    CHECK(std::abs(s.mean - target) < 0.10 * target);
    BoundParams params;
    CHECK(s.mean >= half_lower_bound(100, 0.01, params) - 3.0 * s.stderr_mean);
}

TEST_CASE("sample_m_d validates gamma and matches sample_m at d=1") {
    Rng rng(4);
    CHECK_THROWS_AS(sample_m_d(10, 0.3, 2, 10, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_m_d(10, 0.7, 2, 10, rng), std::invalid_argument);
    Rng r1(9), r2(9);
    IndepSetSample a = sample_m_d(50, 0.125, 1, 100, r1);
    IndepSetSample b = sample_m(50, 0.125, 100, r2);
    CHECK(a.sizes == b.sizes);
}

TEST_CASE("sample_m_d with d >= n keeps everything") {
    Rng rng(5);
    IndepSetSample s = sample_m_d(8, 0.25, 8, 100, rng);
    for (int v : s.sizes) CHECK(v == 8);
}

TEST_CASE("sample_m_d sizes bounded by min(n, d * ceil(1/gamma))") {
    Rng rng(6);
    IndepSetSample s = sample_m_d(60, 0.125, 3, 200, rng);
    for (int v : s.sizes) CHECK(v <= 3 * 8);
}

TEST_CASE("half_lower_bound frozen value and limits") {
    BoundParams params; // alpha_c = 3
    CHECK(half_lower_bound(100, 0.01, params) ==
          doctest::Approx(17.810509605659792).epsilon(1e-13));
    // alpha >= 1 turns the bound vacuous
    BoundParams big;
    big.alpha_c = 30.0;
    CHECK(half_lower_bound(100, 0.01, big) < 0.0);
    // large n limit approaches (1 - alpha)/gamma
    const double limit = half_lower_bound(100000000, 0.01, params);
    const double alpha = 3.0 * std::sqrt(0.01 * std::log(100.0));
    CHECK(limit == doctest::Approx((1.0 - alpha) / 0.01).epsilon(1e-5));
}

TEST_CASE("dwidth_lower_bound frozen values") {
    CHECK(dwidth_lower_bound(625, 0.04, 25) ==
          doctest::Approx(211.5610674884701).epsilon(1e-13));
    CHECK(dwidth_lower_bound(324, 1.0 / 36.0, 9) ==
          doctest::Approx(10.718045285761571).epsilon(1e-12));
    CHECK(dwidth_lower_bound(40000, 1.0 / 400.0, 100) ==
          doctest::Approx(24732.311244600645).epsilon(1e-13));
    CHECK_THROWS_AS(dwidth_lower_bound(10, 0.1, 1), std::invalid_argument);
    // small d makes the bound vacuous, n < d/gamma scales with n
    CHECK(dwidth_lower_bound(1000, 0.5, 2) < 0.0);
    CHECK(dwidth_lower_bound(100, 0.01, 25) < dwidth_lower_bound(2500, 0.01, 25));
}

TEST_CASE("charter_lower_bound shape") {
    BoundParams params;
    // vacuous at tiny k, improving as k grows with k*gamma held moderate
    CHECK(charter_lower_bound(0.001, 4, params) < 0.0);
    const double mid = charter_lower_bound(0.001, 1000, params);
    CHECK(mid > 0.0);
    CHECK(mid < 0.5);
    CHECK_THROWS_AS(charter_lower_bound(0.001, 0, params), std::invalid_argument);
}

TEST_CASE("min_bin_expectation frozen small case") {
    TruncatedBinomialBounds b = min_bin_expectation(2, 0.5);
    CHECK(b.exact == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(b.lower == doctest::Approx(0.6940858147406187).epsilon(1e-13));
    CHECK(b.upper == doctest::Approx(0.7601244560638771).epsilon(1e-13));
    CHECK(b.lower <= b.exact);
    CHECK(b.exact <= b.upper);
}

TEST_CASE("min_bin_expectation brackets at larger n") {
    for (int n : {10, 100, 1000, 10000}) {
        TruncatedBinomialBounds b = min_bin_expectation(n, 0.5);
        CHECK(b.lower <= b.exact);
        CHECK(b.exact <= b.upper);
        CHECK(b.exact < n * 0.5); // truncation always loses something
    }
}

TEST_CASE("min_bin_expectation rejects non-integer mean") {
    CHECK_THROWS_AS(min_bin_expectation(3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(min_bin_expectation(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(min_bin_expectation(10, 0.0), std::invalid_argument);
}
