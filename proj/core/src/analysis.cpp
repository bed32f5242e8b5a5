#include "gsr/analysis.hpp"

#include "gsr/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gsr {
namespace {

constexpr const char* kModule = "analysis";
constexpr std::size_t kMaxBisections = 200;

double arl_at(const ChangePointModel& model, double threshold, double headstart, std::size_t n,
              Method method) {
    return evaluate_iterated(solve_arl(assemble(model, method, n, threshold)), headstart);
}

}  // namespace

std::vector<double> probe_grid(double threshold, std::size_t points) {
    if (points < 2) throw Error(ErrorKind::Argument, kModule, "probe grid needs at least two points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = threshold * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    grid.back() = threshold;
    return grid;
}

std::vector<double> sample(const RunLengthSolution& solution, std::span<const double> probe) {
    std::vector<double> out(probe.size());
    for (std::size_t i = 0; i < probe.size(); ++i) out[i] = evaluate_iterated(solution, probe[i]);
    return out;
}

double sup_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::Argument, kModule, "sample sizes differ");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

RateEstimate richardson_rate(double coarse_difference, double fine_difference) {
    RateEstimate est;
    est.coarse_difference = coarse_difference;
    est.fine_difference = fine_difference;
    if (!(coarse_difference > 0.0) || !(fine_difference > 0.0)) return est;
    double p = -std::log2(fine_difference / coarse_difference);
    est.rate = p;
    est.error_estimate = std::exp2(-p) * coarse_difference;
    return est;
}

RateEstimate richardson_rate(const RunLengthSolution& half, const RunLengthSolution& full,
                             const RunLengthSolution& twice, std::size_t probe_points) {
    double a = half.matrix().threshold();
    if (full.matrix().threshold() != a || twice.matrix().threshold() != a) {
        throw Error(ErrorKind::Argument, kModule, "Richardson triple must share the threshold");
    }
    auto probe = probe_grid(a, probe_points);
    auto s_half = sample(half, probe);
    auto s_full = sample(full, probe);
    auto s_twice = sample(twice, probe);
    return richardson_rate(sup_distance(s_full, s_half), sup_distance(s_twice, s_full));
}

ConvergenceReport convergence_study(const ChangePointModel& model, double threshold,
                                    double headstart, std::span<const std::size_t> sizes,
                                    Method method, std::size_t probe_points) {
    ConvergenceReport report;
    report.method = method;
    report.threshold = threshold;
    report.headstart = headstart;
    auto probe = probe_grid(threshold, probe_points);
    std::vector<std::vector<double>> samples;
    samples.reserve(sizes.size());
    for (std::size_t n : sizes) {
        auto solution = solve_arl(assemble(model, method, n, threshold));
        report.rows.push_back({n, evaluate_iterated(solution, headstart), {}, {}});
        samples.push_back(sample(solution, probe));
    }
    for (std::size_t i = 1; i + 1 < sizes.size(); ++i) {
        if (sizes[i] != 2 * sizes[i - 1] || sizes[i + 1] != 2 * sizes[i]) continue;
        auto est = richardson_rate(sup_distance(samples[i], samples[i - 1]),
                                   sup_distance(samples[i + 1], samples[i]));
        report.rows[i].rate = est.rate;
        report.rows[i].error_estimate = est.error_estimate;
    }
    return report;
}

bool CalibrationResult::history_monotone() const {
    auto steps = history;
    std::sort(steps.begin(), steps.end(),
              [](const CalibrationStep& a, const CalibrationStep& b) { return a.threshold < b.threshold; });
    for (std::size_t i = 1; i < steps.size(); ++i) {
        if (steps[i].threshold > steps[i - 1].threshold && !(steps[i].arl > steps[i - 1].arl)) {
            return false;
        }
    }
    return true;
}

CalibrationResult calibrate_threshold(const ChangePointModel& model, double gamma,
                                      double headstart, std::size_t n, double rel_tol,
                                      Method method) {
    if (!(gamma > 1.0) || !std::isfinite(gamma)) {
        throw Error(ErrorKind::Argument, kModule, "target ARL gamma must exceed 1");
    }
    if (!(rel_tol > 0.0)) throw Error(ErrorKind::Argument, kModule, "rel_tol must be positive");
    if (!(headstart >= 0.0)) throw Error(ErrorKind::Argument, kModule, "headstart must be >= 0");

    CalibrationResult result;
    result.target = gamma;
    result.headstart = headstart;
    const double tol = rel_tol * gamma;

    auto eval = [&](double a) {
        double v = arl_at(model, a, headstart, n, method);
        result.history.push_back({a, v});
        ++result.iterations;
        return v;
    };
    auto finish = [&](double a, double v) {
        result.threshold = a;
        result.achieved = v;
        return result;
    };

    double lo = std::max(0.3 * gamma, 1.0);
    double hi = 1.5 * gamma;
    double f_lo = eval(lo);
    if (std::abs(f_lo - gamma) <= tol) return finish(lo, f_lo);
    while (f_lo > gamma) {
        // l(r; A) -> 1 < gamma as A -> 0, so this terminates
        hi = lo;
        lo *= 0.5;
        f_lo = eval(lo);
        if (std::abs(f_lo - gamma) <= tol) return finish(lo, f_lo);
    }
    double f_hi = eval(hi);
    if (std::abs(f_hi - gamma) <= tol) return finish(hi, f_hi);
    while (f_hi < gamma) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6 * gamma) {
            std::ostringstream msg;
            msg << "could not bracket target ARL " << gamma << " below A = " << 1e6 * gamma;
            throw Error(ErrorKind::Calibration, kModule, msg.str());
        }
        f_hi = eval(hi);
        if (std::abs(f_hi - gamma) <= tol) return finish(hi, f_hi);
    }

    for (std::size_t it = 0; it < kMaxBisections; ++it) {
        double mid = 0.5 * (lo + hi);
        double f_mid = eval(mid);
        if (std::abs(f_mid - gamma) <= tol) return finish(mid, f_mid);
        if (f_mid < gamma) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * hi) break;
    }
    std::ostringstream msg;
    msg << "bisection stalled at A in [" << lo << ", " << hi << "] without reaching |ARL - "
        << gamma << "| <= " << tol;
    throw Error(ErrorKind::Calibration, kModule, msg.str());
}

MethodComparison compare_methods(const ChangePointModel& model, double threshold,
                                 double headstart, std::span<const std::size_t> sizes,
                                 Method first, Method second, std::size_t probe_points) {
    if (sizes.empty()) throw Error(ErrorKind::Argument, kModule, "no partition sizes given");
    MethodComparison cmp;
    cmp.first = convergence_study(model, threshold, headstart, sizes, first, probe_points);
    cmp.second = first == second
                     ? cmp.first
                     : convergence_study(model, threshold, headstart, sizes, second, probe_points);

    auto largest = std::max_element(sizes.begin(), sizes.end()) - sizes.begin();
    cmp.reference = cmp.first.rows[static_cast<std::size_t>(largest)].value;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double a = cmp.first.rows[i].value;
        double b = cmp.second.rows[i].value;
        cmp.rows.push_back({sizes[i], a, b, std::abs(a - cmp.reference),
                            std::abs(b - cmp.reference), std::abs(a - b)});
    }
    return cmp;
}

double interpolation_error_bound(const RunLengthSolution& reference, double max_step,
                                 std::size_t probe_points) {
    auto probe = probe_grid(reference.matrix().threshold(), probe_points);
    auto values = sample(reference, probe);
    const double dx = probe[1] - probe[0];
    double sup_l = 0.0;
    double sup_lxx = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sup_l = std::max(sup_l, std::abs(values[i]));
        if (i > 0 && i + 1 < values.size()) {
            double second = (values[i + 1] - 2.0 * values[i] + values[i - 1]) / (dx * dx);
            sup_lxx = std::max(sup_lxx, std::abs(second));
        }
    }
    return sup_l * sup_lxx * max_step * max_step / 8.0;
}

}  // namespace gsr
