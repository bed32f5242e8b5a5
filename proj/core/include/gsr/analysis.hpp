#pragma once

#include "gsr/kernel.hpp"
#include "gsr/solver.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gsr {

constexpr std::size_t kDefaultProbePoints = 1000;

/// `points` equispaced values on [0, A], endpoints included.
std::vector<double> probe_grid(double threshold, std::size_t points = kDefaultProbePoints);

/// Iterated-solution values of `solution` at every probe point.
std::vector<double> sample(const RunLengthSolution& solution, std::span<const double> probe);

double sup_distance(std::span<const double> a, std::span<const double> b);

struct RateEstimate {
    std::optional<double> rate;            // p(N); empty when the coarse difference is zero
    std::optional<double> error_estimate;  // 2^{-p} ||l_N - l_{N/2}||
    double coarse_difference = 0.0;        // ||l_N - l_{N/2}||
    double fine_difference = 0.0;          // ||l_{2N} - l_N||
};

/// Richardson estimate from the two successive sup-norm differences:
///   p = -log2(||l_{2N} - l_N|| / ||l_N - l_{N/2}||).
RateEstimate richardson_rate(double coarse_difference, double fine_difference);

/// Same estimate for three solutions at N/2, N, 2N, compared through their
/// iterated values on the default probe grid of [0, A].
RateEstimate richardson_rate(const RunLengthSolution& half, const RunLengthSolution& full,
                             const RunLengthSolution& twice,
                             std::size_t probe_points = kDefaultProbePoints);

struct ConvergenceRow {
    std::size_t n = 0;
    double value = 0.0;  // l_N(headstart)
    std::optional<double> rate;
    std::optional<double> error_estimate;
};

struct ConvergenceReport {
    Method method = Method::CollocationHat;
    double threshold = 0.0;
    double headstart = 0.0;
    std::vector<ConvergenceRow> rows;
};

/// Solves the ARL equation for every N in `sizes` (in order). Rates are filled
/// where a row has doubling neighbours on both sides.
ConvergenceReport convergence_study(const ChangePointModel& model, double threshold,
                                    double headstart, std::span<const std::size_t> sizes,
                                    Method method, std::size_t probe_points = kDefaultProbePoints);

struct CalibrationStep {
    double threshold = 0.0;
    double arl = 0.0;
};

struct CalibrationResult {
    double target = 0.0;
    double headstart = 0.0;
    double threshold = 0.0;
    double achieved = 0.0;
    std::size_t iterations = 0;
    std::vector<CalibrationStep> history;

    /// True when ARL increases with A across every evaluated threshold.
    bool history_monotone() const;
};

constexpr double kDefaultCalibrationTolerance = 1e-4;

/// Finds A with |l_N(r; A) - gamma| <= rel_tol * gamma. The bracket starts at
/// [max(0.3 gamma, 1), 1.5 gamma], grows geometrically until it straddles the
/// target and is then bisected.
CalibrationResult calibrate_threshold(const ChangePointModel& model, double gamma,
                                      double headstart, std::size_t n,
                                      double rel_tol = kDefaultCalibrationTolerance,
                                      Method method = Method::CollocationHat);

struct ComparisonRow {
    std::size_t n = 0;
    double first_value = 0.0;
    double second_value = 0.0;
    double first_error = 0.0;   // |first - reference|
    double second_error = 0.0;  // |second - reference|
    double gap = 0.0;           // |first - second|
};

struct MethodComparison {
    double reference = 0.0;  // first method at the largest N
    ConvergenceReport first;
    ConvergenceReport second;
    std::vector<ComparisonRow> rows;
};

MethodComparison compare_methods(const ChangePointModel& model, double threshold,
                                 double headstart, std::span<const std::size_t> sizes,
                                 Method first = Method::CollocationHat,
                                 Method second = Method::Midpoint,
                                 std::size_t probe_points = kDefaultProbePoints);

/// ||l||_inf * ||l_xx||_inf * h^2 / 8, with both norms estimated from a
/// (well-resolved) reference solution on a uniform probe grid; l_xx by
/// second differences.
double interpolation_error_bound(const RunLengthSolution& reference, double max_step,
                                 std::size_t probe_points = 4 * kDefaultProbePoints);

}  // namespace gsr
