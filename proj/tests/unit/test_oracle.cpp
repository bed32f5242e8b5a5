#include "gsr/error.hpp"
#include "gsr/oracle.hpp"
#include "gsr/parallel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace gsr;

TEST(Oracle, SplitMixReferenceOutput) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
}

TEST(Oracle, UniformOpenInterval) {
    SplitMix64 rng(42);
    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Oracle, StreamsDiffer) {
    auto a = SplitMix64::for_stream(1, 0);
    auto b = SplitMix64::for_stream(1, 1);
    auto c = SplitMix64::for_stream(2, 0);
    auto a2 = SplitMix64::for_stream(1, 0);
    std::uint64_t x = a.next();
    EXPECT_NE(x, b.next());
    EXPECT_NE(x, c.next());
    EXPECT_EQ(x, a2.next());
}

TEST(Oracle, NormalMoments) {
    SplitMix64 rng(9);
    const int n = 400000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = standard_normal(rng);
        s += z;
        s2 += z * z;
    }
    EXPECT_NEAR(s / n, 0.0, 4.0 / std::sqrt(n));
    EXPECT_NEAR(s2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
}

TEST(Oracle, PairwiseSum) {
    std::vector<double> v(1000, 0.1);
    EXPECT_NEAR(pairwise_sum(v), 100.0, 1e-12);
    EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(Oracle, ZeroThresholdStopsAtOne) {
    SimulationOptions opt;
    opt.paths = 2000;
    auto res = simulate_run_length(ChangePointModel::gsr(0.7), 0.0, 0.0, opt);
    EXPECT_EQ(res.arl.estimate, 1.0);
    EXPECT_EQ(res.arl.std_error, 0.0);
    EXPECT_EQ(res.stddev.estimate, 0.0);
}

TEST(Oracle, HugeHeadstartStopsAtOne) {
    SimulationOptions opt;
    opt.paths = 10000;
    auto res = simulate_run_length(ChangePointModel::gsr(0.01), 99.2, 1e4, opt);
    EXPECT_EQ(res.arl.estimate, 1.0);
    EXPECT_EQ(res.stddev.estimate, 0.0);
}

TEST(Oracle, Deterministic) {
    SimulationOptions opt;
    opt.paths = 5000;
    opt.seed = 77;
    opt.survival_horizon = 10;
    opt.pfa_windows = {{5, 5}};
    auto m = ChangePointModel::gsr(1.0);
    int before = thread_count();
    set_thread_count(1);
    auto a = simulate_run_length(m, 20.0, 0.0, opt);
    set_thread_count(std::max(before, 3));
    auto b = simulate_run_length(m, 20.0, 0.0, opt);
    set_thread_count(before);
    EXPECT_EQ(a.arl.estimate, b.arl.estimate);
    EXPECT_EQ(a.stddev.estimate, b.stddev.estimate);
    EXPECT_EQ(a.survival.back().estimate, b.survival.back().estimate);
    EXPECT_EQ(a.pfa.front().estimate, b.pfa.front().estimate);
    opt.seed = 78;
    auto c = simulate_run_length(m, 20.0, 0.0, opt);
    EXPECT_NE(a.arl.estimate, c.arl.estimate);
}

TEST(Oracle, EstimateMetadata) {
    SimulationOptions opt;
    opt.paths = 1000;
    opt.seed = 5;
    opt.survival_horizon = 3;
    auto res = simulate_run_length(ChangePointModel::gsr(1.0), 10.0, 0.0, opt);
    EXPECT_EQ(res.arl.paths, 1000u);
    EXPECT_EQ(res.arl.seed, 5u);
    EXPECT_EQ(res.arl.cap, default_path_cap(10.0));
    ASSERT_EQ(res.survival.size(), 3u);
    for (const auto& e : res.survival) {
        EXPECT_GE(e.std_error, 0.0);
        EXPECT_EQ(e.quantity, Quantity::Survival);
    }
    EXPECT_EQ(res.survival[1].k, 2u);
}

TEST(Oracle, CapFlagsUnreliable) {
    SimulationOptions opt;
    opt.paths = 1000;
    opt.cap = 5;
    auto res = simulate_run_length(ChangePointModel::gsr(0.5), 74.76, 0.0, opt);
    EXPECT_GT(res.capped_fraction, 0.01);
    EXPECT_TRUE(res.unreliable);
    EXPECT_LE(res.arl.estimate, 5.0);
}

TEST(Oracle, Histogram) {
    SimulationOptions opt;
    opt.paths = 3000;
    opt.keep_histogram = true;
    auto res = simulate_run_length(ChangePointModel::gsr(1.0), 10.0, 0.0, opt);
    std::size_t total = 0;
    double mean = 0.0;
    for (std::size_t n = 0; n < res.histogram.size(); ++n) {
        total += res.histogram[n];
        mean += static_cast<double>(n * res.histogram[n]);
    }
    EXPECT_EQ(total, 3000u);
    EXPECT_EQ(res.histogram[0], 0u);
    EXPECT_NEAR(mean / 3000.0, res.arl.estimate, 1e-9);
}

TEST(Oracle, MartingaleHasZeroMean) {
    std::vector<std::size_t> steps = {1, 10, 50};
    for (double theta : {0.1, 0.5}) {
        auto est = simulate_martingale(ChangePointModel::gsr(theta), 0.0, steps, 200000, 3);
        ASSERT_EQ(est.size(), 3u);
        for (const auto& e : est) {
            EXPECT_EQ(e.quantity, Quantity::MartingaleMean);
            EXPECT_LE(std::abs(e.estimate), 3.0 * e.std_error) << "theta=" << theta << " n=" << e.k;
        }
    }
}

TEST(Oracle, MartingaleWithHeadstart) {
    std::vector<std::size_t> steps = {1, 10, 50};
    auto est = simulate_martingale(ChangePointModel::gsr(0.5), 5.0, steps, 200000, 8);
    for (const auto& e : est) EXPECT_LE(std::abs(e.estimate), 3.0 * e.std_error) << e.k;
}
