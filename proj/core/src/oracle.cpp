#include "gsr/oracle.hpp"

#include "gsr/error.hpp"
#include "gsr/parallel.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gsr {
namespace {

constexpr const char* kModule = "oracle";
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct PathStats {
    double mean = 0.0;
    double stddev = 0.0;
    double stddev_se = 0.0;
    double mean_se = 0.0;
};

PathStats summarize(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    PathStats s;
    s.mean = pairwise_sum(values) / n;
    std::vector<double> dev2(values.size());
    std::vector<double> dev4(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double d = values[i] - s.mean;
        dev2[i] = d * d;
        dev4[i] = dev2[i] * dev2[i];
    }
    if (values.size() < 2) return s;
    double m2 = pairwise_sum(dev2) / n;
    double m4 = pairwise_sum(dev4) / n;
    double var = m2 * n / (n - 1.0);
    s.stddev = std::sqrt(var);
    s.mean_se = std::sqrt(var / n);
    if (s.stddev > 0.0) {
        // delta method: Var(s) ~ (m4 - m2^2) / (4 n m2)
        s.stddev_se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / (4.0 * n * m2));
    }
    return s;
}

MonteCarloEstimate make(Quantity q, double est, double se, std::size_t paths,
                        const SimulationOptions& opt, std::size_t cap) {
    MonteCarloEstimate e;
    e.quantity = q;
    e.estimate = est;
    e.std_error = se;
    e.paths = paths;
    e.seed = opt.seed;
    e.cap = cap;
    return e;
}

}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return SplitMix64(mix(seed ^ mix(stream + kGolden)));
}

std::uint64_t SplitMix64::next() noexcept {
    state_ += kGolden;
    return mix(state_);
}

double SplitMix64::uniform() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(SplitMix64& rng) {
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * rng.uniform());
}

std::size_t default_path_cap(double threshold) {
    return static_cast<std::size_t>(std::ceil(100.0 * std::max(threshold, 1.0)));
}

SimulationResult simulate_run_length(const ChangePointModel& model, double threshold,
                                     double headstart, const SimulationOptions& options) {
    if (options.paths < 1) throw Error(ErrorKind::Argument, kModule, "need at least one path");
    if (!(threshold >= 0.0)) throw Error(ErrorKind::Argument, kModule, "threshold must be >= 0");
    if (!(headstart >= -1.0)) throw Error(ErrorKind::Domain, kModule, "headstart must be >= -1");
    const std::size_t cap = options.cap > 0 ? options.cap : default_path_cap(threshold);
    const double theta = model.theta();
    const double drift = 0.5 * theta * theta;
    const bool gsr = model.psi_kind() == PsiKind::GSR;
    // psi is validated once up front; an invalid custom psi would otherwise throw inside the parallel loop
    (void)model.psi(headstart);

    const auto paths = static_cast<long>(options.paths);
    std::vector<std::size_t> run_length(options.paths);
    const int threads = thread_count();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long p = 0; p < paths; ++p) {
        SplitMix64 rng = SplitMix64::for_stream(options.seed, static_cast<std::uint64_t>(p));
        double v = headstart;
        std::size_t n = 0;
        do {
            ++n;
            double lr = std::exp(theta * standard_normal(rng) - drift);
            v = (gsr ? 1.0 + v : model.psi(v)) * lr;
        } while (v < threshold && n < cap);
        run_length[static_cast<std::size_t>(p)] = n;
    }

    SimulationResult result;
    std::vector<double> t(run_length.begin(), run_length.end());
    PathStats stats = summarize(t);
    result.arl = make(Quantity::ARL, stats.mean, stats.mean_se, options.paths, options, cap);
    result.stddev = make(Quantity::StdDev, stats.stddev, stats.stddev_se, options.paths, options, cap);

    std::size_t longest = *std::max_element(run_length.begin(), run_length.end());
    std::vector<std::size_t> hist(longest + 1, 0);
    for (std::size_t n : run_length) ++hist[n];
    for (std::size_t n : run_length) {
        if (n >= cap) ++result.capped_paths;
    }
    // a path that stopped exactly at the cap is indistinguishable from a capped one
    result.capped_fraction = static_cast<double>(result.capped_paths) / static_cast<double>(options.paths);
    result.unreliable = result.capped_fraction > 0.01;

    // survivors[k] = #{T > k}
    const std::size_t horizon = std::max<std::size_t>(options.survival_horizon, 1);
    std::size_t need = horizon;
    for (auto [k, m] : options.pfa_windows) need = std::max(need, k + m);
    std::vector<std::size_t> survivors(need + 1, 0);
    {
        std::size_t alive = options.paths;
        for (std::size_t k = 0; k <= need; ++k) {
            if (k < hist.size()) alive -= hist[k];
            survivors[k] = alive;
        }
    }
    const auto total = static_cast<double>(options.paths);
    for (std::size_t k = 1; k <= options.survival_horizon; ++k) {
        double p = static_cast<double>(survivors[k]) / total;
        auto e = make(Quantity::Survival, p, std::sqrt(p * (1.0 - p) / total), options.paths, options, cap);
        e.k = k;
        result.survival.push_back(e);
    }
    for (auto [k, m] : options.pfa_windows) {
        if (m == 0) throw Error(ErrorKind::Argument, kModule, "PFA window length must be >= 1");
        std::size_t at_risk = survivors[k];
        if (at_risk == 0) {
            throw Error(ErrorKind::Undefined, kModule, "no simulated path survived to the window start");
        }
        double p = static_cast<double>(at_risk - survivors[k + m]) / static_cast<double>(at_risk);
        auto e = make(Quantity::PFA, p, std::sqrt(p * (1.0 - p) / static_cast<double>(at_risk)),
                      at_risk, options, cap);
        e.k = k;
        e.m = m;
        result.pfa.push_back(e);
    }
    if (options.keep_histogram) result.histogram = std::move(hist);
    return result;
}

std::vector<MonteCarloEstimate> simulate_martingale(const ChangePointModel& model, double headstart,
                                                    std::span<const std::size_t> steps,
                                                    std::size_t paths, std::uint64_t seed) {
    if (paths < 2) throw Error(ErrorKind::Argument, kModule, "need at least two paths");
    if (steps.empty()) return {};
    const std::size_t horizon = *std::max_element(steps.begin(), steps.end());
    const double theta = model.theta();
    const double drift = 0.5 * theta * theta;
    (void)model.psi(headstart);

    // centered[s][p] = R_{steps[s]} - steps[s] - r on path p
    std::vector<std::vector<double>> centered(steps.size(), std::vector<double>(paths));
    const auto np = static_cast<long>(paths);
    const int threads = thread_count();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long p = 0; p < np; ++p) {
        SplitMix64 rng = SplitMix64::for_stream(seed, static_cast<std::uint64_t>(p));
        double v = headstart;
        for (std::size_t n = 1; n <= horizon; ++n) {
            v = model.psi(v) * std::exp(theta * standard_normal(rng) - drift);
            for (std::size_t s = 0; s < steps.size(); ++s) {
                if (steps[s] == n) {
                    centered[s][static_cast<std::size_t>(p)] =
                        v - static_cast<double>(n) - headstart;
                }
            }
        }
    }

    std::vector<MonteCarloEstimate> out;
    SimulationOptions opt;
    opt.seed = seed;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        PathStats st = summarize(centered[s]);
        auto e = make(Quantity::MartingaleMean, st.mean, st.mean_se, paths, opt, horizon);
        e.k = steps[s];
        out.push_back(e);
    }
    return out;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 64) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace gsr
