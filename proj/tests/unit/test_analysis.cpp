#include "gsr/analysis.hpp"
#include "gsr/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gsr;

TEST(Analysis, ProbeGridIncludesEndpoints) {
    auto g = probe_grid(74.76);
    ASSERT_EQ(g.size(), kDefaultProbePoints);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 74.76);
}

TEST(Analysis, RichardsonSyntheticQuadratic) {
    // errors c / N^2 at N/2, N, 2N: differences 3c/N^2 and 3c/(4N^2)
    const double c = 7.0, n = 64.0;
    double coarse = c / (n / 2 * n / 2) - c / (n * n);
    double fine = c / (n * n) - c / (4 * n * n);
    auto r = richardson_rate(coarse, fine);
    ASSERT_TRUE(r.rate.has_value());
    EXPECT_NEAR(*r.rate, 2.0, 1e-12);
    EXPECT_NEAR(*r.error_estimate, coarse / 4.0, 1e-15);
}

TEST(Analysis, RichardsonUndefinedOnZeroDenominator) {
    auto r = richardson_rate(0.0, 0.0);
    EXPECT_FALSE(r.rate.has_value());
    EXPECT_FALSE(r.error_estimate.has_value());
}

TEST(Analysis, RateTableFour) {
    auto m = ChangePointModel::gsr(1.0);
    std::vector<std::size_t> sizes = {8, 16, 32};
    auto rep = convergence_study(m, 56.0, 0.0, sizes, Method::CollocationHat);
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_FALSE(rep.rows[0].rate.has_value());
    ASSERT_TRUE(rep.rows[1].rate.has_value());
    EXPECT_NEAR(*rep.rows[1].rate, 2.04648, 0.1);
    EXPECT_FALSE(rep.rows[2].rate.has_value());
}

TEST(Analysis, RateLargeThreshold) {
    auto m = ChangePointModel::gsr(0.5);
    std::vector<std::size_t> sizes = {256, 512, 1024};
    auto rep = convergence_study(m, 747.62, 0.0, sizes, Method::CollocationHat);
    ASSERT_TRUE(rep.rows[1].rate.has_value());
    EXPECT_NEAR(*rep.rows[1].rate, 2.0, 0.05);
}

TEST(Analysis, RatesApproachTwo) {
    struct Case {
        double theta, a;
    };
    for (Case c : {Case{0.1, 94.34}, Case{0.1, 943.41}, Case{0.5, 74.76}, Case{0.5, 747.62},
                   Case{1.0, 56.0}, Case{1.0, 560.0}}) {
        std::vector<std::size_t> sizes = {32, 64, 128, 256};
        auto rep = convergence_study(ChangePointModel::gsr(c.theta), c.a, 0.0, sizes, Method::CollocationHat);
        for (std::size_t i : {1u, 2u}) {
            ASSERT_TRUE(rep.rows[i].rate.has_value());
            EXPECT_NEAR(*rep.rows[i].rate, 2.0, 0.1) << c.theta << " " << c.a << " N=" << rep.rows[i].n;
        }
    }
}

TEST(Analysis, RatesOnlyForDoublings) {
    std::vector<std::size_t> sizes = {8, 12, 24, 48};
    auto rep = convergence_study(ChangePointModel::gsr(1.0), 56.0, 0.0, sizes, Method::CollocationHat);
    EXPECT_FALSE(rep.rows[1].rate.has_value());
    EXPECT_TRUE(rep.rows[2].rate.has_value());
}

TEST(Analysis, TripleNeedsMatchingThreshold) {
    auto m = ChangePointModel::gsr(1.0);
    auto a = solve_arl(assemble(m, Method::CollocationHat, 8, 56.0));
    auto b = solve_arl(assemble(m, Method::CollocationHat, 16, 56.0));
    auto c = solve_arl(assemble(m, Method::CollocationHat, 32, 50.0));
    EXPECT_THROW(richardson_rate(a, b, c), Error);
}

TEST(Analysis, CalibrationTableHeaders) {
    struct Case {
        double theta, gamma, a, tol;
        std::size_t n;
    };
    for (Case c : {Case{1.0, 1000.0, 560.0, 0.5, 512}, Case{0.01, 100.0, 99.2, 0.1, 64}}) {
        auto res = calibrate_threshold(ChangePointModel::gsr(c.theta), c.gamma, 0.0, c.n);
        EXPECT_NEAR(res.threshold, c.a, c.tol) << c.theta;
        EXPECT_LE(std::abs(res.achieved - c.gamma), kDefaultCalibrationTolerance * c.gamma);
        EXPECT_TRUE(res.history_monotone());
        EXPECT_GE(res.iterations, 1u);
    }
}

TEST(Analysis, CalibrationRespectsArlLowerBound) {
    // the martingale bound ARL >= A means the calibrated threshold cannot exceed gamma
    auto res = calibrate_threshold(ChangePointModel::gsr(0.5), 300.0, 0.0, 128);
    EXPECT_LE(res.threshold, 300.0);
    EXPECT_THROW(calibrate_threshold(ChangePointModel::gsr(0.5), 0.5, 0.0, 16), Error);
}

TEST(Analysis, CompareOrderingAtSmallN) {
    std::vector<std::size_t> sizes = {16, 32, 64};
    auto cmp = compare_methods(ChangePointModel::gsr(0.1), 94.34, 0.0, sizes);
    const auto& row = cmp.rows[1];
    ASSERT_EQ(row.n, 32u);
    EXPECT_NEAR(row.first_value, 100.31, 0.05);
    EXPECT_GT(row.second_error, row.first_error);
    EXPECT_EQ(cmp.rows.back().first_error, 0.0);
}

TEST(Analysis, SelfComparisonIsZero) {
    std::vector<std::size_t> sizes = {8, 16};
    auto cmp = compare_methods(ChangePointModel::gsr(1.0), 56.0, 0.0, sizes, Method::CollocationHat,
                               Method::CollocationHat);
    for (const auto& row : cmp.rows) {
        EXPECT_EQ(row.gap, 0.0);
        EXPECT_EQ(row.first_error, row.second_error);
    }
}

TEST(Analysis, ErrorWithinInterpolationBound) {
    auto m = ChangePointModel::gsr(0.5);
    const double a = 74.76;
    auto reference = solve_arl(assemble(m, Method::CollocationHat, 2048, a));
    auto probe = probe_grid(a);
    auto ref_values = sample(reference, probe);
    for (std::size_t n : {8u, 32u, 128u}) {
        auto k = assemble(m, Method::CollocationHat, n, a);
        auto sol = solve_arl(k);
        double measured = sup_distance(sample(sol, probe), ref_values);
        double bound = interpolation_error_bound(reference, k->partition().max_step());
        EXPECT_LT(measured, bound) << n;
    }
}
