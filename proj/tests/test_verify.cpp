#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pearson4/verify.hpp"

using namespace pearson4;

TEST_CASE("one-sample KS statistic on hand-computable inputs") {
    // single observation at the median: D = 1/2
    const KsResult one = ks_one_sample({0.0}, [](double) { return 0.5; });
    CHECK(one.statistic == doctest::Approx(0.5).epsilon(1e-15));
    // points placed at quantiles (i - 1/2)/n give D = 1/(2n)
    const std::size_t n = 64;
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = (i + 0.5) / n;
    const KsResult r = ks_one_sample(q, [](double x) { return x; });
    CHECK(r.statistic == doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-12));
    CHECK(r.threshold == doctest::Approx(2.2 / std::sqrt(double(n))).epsilon(1e-12));
    CHECK(r.pass);
    CHECK_THROWS_AS((void)ks_one_sample({}, [](double) { return 0.5; }),
                    std::domain_error);
}

TEST_CASE("two-sample KS on degenerate inputs") {
    std::vector<double> a(100), b(100);
    for (int i = 0; i < 100; ++i) a[i] = b[i] = i;
    CHECK(ks_two_sample(a, b).statistic <= 0.01 + 1e-12);
    for (int i = 0; i < 100; ++i) b[i] = 1000.0 + i;
    const KsResult r = ks_two_sample(a, b);
    CHECK(r.statistic == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(r.pass);
}

TEST_CASE("moment check flags a shifted sample") {
    std::vector<double> s(10000);
    RngState r(5);
    for (auto& v : s) v = r.normal();
    CHECK(moment_check(s, 0.0, 1.0).pass);
    CHECK_FALSE(moment_check(s, 0.2, 1.0).pass);
    CHECK_THROWS_AS((void)moment_check(s, 0.0, 0.0), std::domain_error);
}

TEST_CASE("CDF table is monotone with correct range") {
    for (auto pr : {std::pair{0.6, 0.5}, {1.0, 4.0}, {3.0, -2.0}, {50.0, 10.0}}) {
        const PearsonParams p(pr.first, pr.second);
        const NumericCdf cdf = NumericCdf::pearson(p);
        CHECK(cdf(-1e18) == 0.0);
        CHECK(cdf(1e18) == 1.0);
        double prev = 0.0;
        for (int k = -200; k <= 200; ++k) {
            const double x = std::tan(1.5707 * k / 200.0);
            const double f = cdf(x);
            CHECK(f >= prev - 1e-15);
            prev = f;
        }
    }
}

TEST_CASE("table agrees with direct quadrature, including singular tails") {
    // regression: for a < 1 the outer cells carry mass like (pi/2-|y|)^{2a-1};
    // a uniform node layout once misplaced ~0.1 of cumulative mass out here
    const PearsonParams p(0.6, 0.5);
    const NumericCdf cdf = NumericCdf::pearson(p);
    for (double x : {-1e5, -100.0, -1.0, 0.0, 1.0, 100.0, 9815.97, 1e5}) {
        CHECK(cdf(x) == doctest::Approx(pearson_cdf_quadrature(p, x)).epsilon(2e-6));
    }
    CHECK(cdf(9815.97) == doctest::Approx(0.8755374299).epsilon(1e-6));
    for (double x : {-20.0, -2.0, 0.0, 0.5, 30.0}) {
        const PearsonParams q(2.5, 3.0);
        const NumericCdf c2 = NumericCdf::pearson(q);
        CHECK(c2(x) == doctest::Approx(pearson_cdf_quadrature(q, x)).epsilon(1e-7));
    }
}

TEST_CASE("frozen CDF value for the symmetric a = 3/2 law") {
    // F(1) = 1/2 + 1/(2 sqrt 2) in closed form
    const NumericCdf cdf = NumericCdf::pearson(PearsonParams(1.5, 0.0));
    CHECK(cdf(1.0) ==
          doctest::Approx(0.5 + 0.5 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(cdf(0.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("generic table construction from a log-density") {
    // standard normal truncated to [-8, 8]
    const NumericCdf cdf = NumericCdf::from_log_density(
        [](double x) { return -0.5 * x * x; }, -8.0, 8.0);
    CHECK(cdf(0.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(cdf(1.0) == doctest::Approx(0.841344746068543).epsilon(1e-8));
    CHECK(cdf(-2.0) == doctest::Approx(0.0227501319481792).epsilon(1e-7));
}

TEST_CASE("iteration statistics") {
    SampleReport rep{std::vector<double>(5, 0.0),
                     {1, 1, 2, 3, 40},
                     AlgorithmId::Auto,
                     PearsonParams(1.0, 0.0),
                     0};
    const IterationStats st = iteration_stats(rep);
    CHECK(st.mean == doctest::Approx(47.0 / 5.0));
    CHECK(st.max == 40);
    CHECK(st.histogram[0] == 2);
    CHECK(st.histogram[1] == 1);
    CHECK(st.histogram[2] == 1);
    CHECK(st.histogram.back() == 1);
}
