#include "gsr/error.hpp"
#include "gsr/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace gsr;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no gsr::Error thrown";
    return ErrorKind::Undefined;
}

KernelMatrixPtr hat(double theta, double a, std::size_t n) {
    return assemble(ChangePointModel::gsr(theta), Method::CollocationHat, n, a);
}

}  // namespace

TEST(Solver, ArlResidualAndShape) {
    auto k = hat(0.5, 74.76, 128);
    auto sys = factorize(k);
    auto arl = solve_arl(sys);
    Eigen::Map<const Eigen::VectorXd> u(arl.coeffs().data(), static_cast<Eigen::Index>(arl.coeffs().size()));
    Eigen::VectorXd residual = u - k->entries() * u - Eigen::VectorXd::Ones(u.size());
    EXPECT_LE(residual.lpNorm<Eigen::Infinity>(), 1e-10 * u.lpNorm<Eigen::Infinity>());
    for (std::size_t j = 0; j < arl.coeffs().size(); ++j) {
        EXPECT_GE(arl.coeffs()[j], 1.0);
        if (j > 0) EXPECT_LE(arl.coeffs()[j], arl.coeffs()[j - 1]);
    }
    EXPECT_EQ(arl.kind(), SolutionKind::ARL);
}

TEST(Solver, TableValuesModerateN) {
    EXPECT_NEAR(evaluate_iterated(solve_arl(hat(0.5, 74.76, 64)), 0.0), 100.45288, 5e-6);
    EXPECT_NEAR(evaluate_iterated(solve_arl(hat(0.5, 74.76, 512)), 0.0), 100.44501, 5e-6);
    EXPECT_NEAR(evaluate_iterated(solve_arl(hat(0.01, 99.2, 16)), 0.0), 100.22051, 5e-6);
}

TEST(Solver, TinyThresholdStopsImmediately) {
    auto arl = solve_arl(hat(0.5, 1e-12, 2));
    for (double x : {0.0, 1e-12, 5.0}) EXPECT_NEAR(evaluate_iterated(arl, x), 1.0, 1e-12);
}

TEST(Solver, IteratedExactAtNodes) {
    auto arl = solve_arl(hat(0.5, 74.76, 64));
    auto nodes = arl.matrix().collocation_points();
    for (std::size_t j = 0; j < nodes.size(); ++j) EXPECT_EQ(evaluate_iterated(arl, nodes[j]), arl.coeffs()[j]);
}

TEST(Solver, IteratedBetweenEnds) {
    auto arl = solve_arl(hat(0.5, 74.76, 64));
    double mid = arl(74.76 / 2);
    EXPECT_LT(mid, arl(0.0));
    EXPECT_GT(mid, arl(74.76));
    EXPECT_EQ(kind_of([&] { arl(-1.5); }), ErrorKind::Domain);
    EXPECT_NO_THROW(arl(-1.0));
}

TEST(Solver, OffGridHeadstartAboveThreshold) {
    auto arl = solve_arl(hat(0.1, 94.34, 2048));
    EXPECT_NEAR(arl(100.0), 4.13, 0.05);
}

TEST(Solver, SecondMomentFarHeadstart) {
    auto k = hat(0.01, 99.2, 64);
    auto arl = solve_arl(k);
    auto mu2 = solve_second_moment(arl, k);
    EXPECT_NEAR(arl(1000.0), 1.0, 1e-6);
    EXPECT_NEAR(standard_deviation(arl, mu2, 1000.0), 0.0, 1e-6);
}

TEST(Solver, SecondMomentVarianceNonnegative) {
    auto k = hat(1.0, 56.0, 256);
    auto arl = solve_arl(k);
    auto mu2 = solve_second_moment(arl);
    EXPECT_EQ(mu2.kind(), SolutionKind::SecondMoment);
    for (std::size_t j = 0; j < k->size(); ++j) {
        double l = arl.coeffs()[j];
        EXPECT_GE(mu2.coeffs()[j], l * l * (1 - 1e-9));
    }
    EXPECT_NEAR(standard_deviation(arl, mu2, 0.0), 95.72, 0.1);
}

TEST(Solver, SecondMomentNeedsSameMatrix) {
    auto arl = solve_arl(hat(1.0, 56.0, 16));
    EXPECT_EQ(kind_of([&] { solve_second_moment(arl, hat(1.0, 56.0, 16)); }), ErrorKind::Argument);
}

TEST(Solver, GenericRenewalMatchesArl) {
    auto sys = factorize(hat(0.5, 20.0, 32));
    auto a = solve_arl(sys);
    auto b = solve_renewal(sys, [](double) { return 1.0; });
    EXPECT_EQ(b.kind(), SolutionKind::Generic);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) EXPECT_NEAR(a.coeffs()[j], b.coeffs()[j], 1e-12);
}

TEST(Solver, SurvivalBasics) {
    auto m = ChangePointModel::gsr(1.0);
    auto k = hat(1.0, 56.0, 128);
    for (double r : {0.0, 3.3, 20.0, 100.0, -1.0}) {
        auto s = survival_series(k, r, 1e-12, 1000);
        ASSERT_GE(s.rho.size(), 2u);
        EXPECT_EQ(s.rho[0], 1.0);
        EXPECT_NEAR(s.rho[1], lr_cdf(m, 56.0 / (1.0 + r), Measure::PreChange), 1e-12) << r;
        auto p = pmf(s);
        EXPECT_NEAR(p[1], 1.0 - s.rho[1], 1e-12);
        double total = std::accumulate(p.begin(), p.end(), 0.0) + s.rho.back();
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Solver, SurvivalTermination) {
    auto k = hat(1.0, 5.0, 32);
    auto s = survival_series(k, 0.0, 1e-6, 100000);
    EXPECT_EQ(s.terminated_by, SeriesTermination::TailBelowEpsilon);
    EXPECT_LT(s.rho.back(), 1e-6);
    auto capped = survival_series(k, 0.0, 1e-12, 10);
    EXPECT_EQ(capped.terminated_by, SeriesTermination::HorizonReached);
    EXPECT_EQ(capped.horizon(), 10u);
    EXPECT_THROW(survival_series(k, 0.0, 0.0, 10), Error);
    EXPECT_THROW(survival_series(k, 0.0, 1e-3, 0), Error);
}

TEST(Solver, NeumannMatchesLinearSolve) {
    auto k = hat(1.0, 560.0, 512);
    auto arl = solve_arl(k);
    auto s = survival_series(k, 0.0, kDefaultEpsilonTail, default_survival_horizon(arl(0.0)));
    EXPECT_NEAR(neumann_arl(s) / 1000.12629, 1.0, 5e-3);
    EXPECT_NEAR(neumann_arl(s) / arl(0.0), 1.0, 5e-3);
}

TEST(Solver, DefaultHorizon) {
    EXPECT_EQ(default_survival_horizon(100.0), 1000000u);
    EXPECT_EQ(default_survival_horizon(1e5), 5000000u);
}

TEST(Solver, ConditionalPfa) {
    auto k = hat(1.0, 56.0, 128);
    auto s = survival_series(k, 0.0, 1e-300, 200);
    EXPECT_NEAR(conditional_pfa(s, 0, 1), 1.0 - s.rho[1], 1e-15);
    double p = conditional_pfa(s, 50, 50);
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
    EXPECT_EQ(kind_of([&] { conditional_pfa(s, 10, 0); }), ErrorKind::Argument);
    EXPECT_EQ(kind_of([&] { conditional_pfa(s, 150, 51); }), ErrorKind::Argument);
}

TEST(Solver, ConditionalPfaUndefinedWhenSurvivalVanishes) {
    // a huge headstart stops every path at n = 1, so rho_1 underflows to 0
    auto k = hat(1.0, 5.0, 8);
    auto s = survival_series(k, 1e30, 1e-300, 5);
    ASSERT_EQ(s.rho[1], 0.0);
    SurvivalSeries padded = s;
    padded.rho = {1.0, 0.0, 0.0, 0.0};
    EXPECT_EQ(kind_of([&] { conditional_pfa(padded, 1, 1); }), ErrorKind::Undefined);
}

TEST(Solver, InverseNormEqualsMaxArl) {
    auto k = hat(0.5, 74.76, 256);
    auto sys = factorize(k);
    auto arl = solve_arl(sys);
    double max_l = *std::max_element(arl.coeffs().begin(), arl.coeffs().end());
    EXPECT_NEAR(sys->inverse_norm() / max_l, 1.0, 5e-3);
}
