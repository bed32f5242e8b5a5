#pragma once

// Monte Carlo simulation of V_n = psi(V_{n-1}) * Lambda_n under the
// pre-change measure. Used as an independent check on the integral-equation
// solutions; nothing here touches the kernel or solver code paths.

#include "gsr/model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gsr {

/// SplitMix64 stream. Each path gets its own stream whose starting state is a
/// hash of (seed, path index), so results do not depend on scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static std::uint64_t mix(std::uint64_t z) noexcept;
    static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on the open interval (0, 1).
    double uniform() noexcept;

private:
    std::uint64_t state_;
};

/// Inverse-cdf standard normal variate from one uniform draw.
double standard_normal(SplitMix64& rng);

enum class Quantity { ARL, StdDev, Survival, PFA, MartingaleMean };

struct MonteCarloEstimate {
    Quantity quantity = Quantity::ARL;
    std::size_t k = 0;  // Survival(k), PFA(k, m), MartingaleMean at step k
    std::size_t m = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t paths = 0;
    std::uint64_t seed = 0;
    std::size_t cap = 0;
};

struct SimulationOptions {
    std::size_t paths = 100000;
    std::uint64_t seed = 1;
    std::size_t cap = 0;               // 0 selects default_path_cap(A)
    std::size_t survival_horizon = 0;  // empirical rho_k for k = 1..horizon
    std::vector<std::pair<std::size_t, std::size_t>> pfa_windows;  // (k, m)
    bool keep_histogram = false;
};

struct SimulationResult {
    MonteCarloEstimate arl;
    MonteCarloEstimate stddev;
    std::vector<MonteCarloEstimate> survival;
    std::vector<MonteCarloEstimate> pfa;
    std::size_t capped_paths = 0;
    double capped_fraction = 0.0;
    /// More than 1% of paths hit the cap; capped paths enter as T = cap, so
    /// moments are biased low.
    bool unreliable = false;
    std::vector<std::size_t> histogram;  // histogram[n] = paths stopping at n (if requested)
};

/// 100 * max(A, 1) steps.
std::size_t default_path_cap(double threshold);

SimulationResult simulate_run_length(const ChangePointModel& model, double threshold,
                                     double headstart, const SimulationOptions& options);

/// Estimates E_inf[R_n - n - r] at each requested n with no stopping
/// boundary. Zero for the GSR statistic.
std::vector<MonteCarloEstimate> simulate_martingale(const ChangePointModel& model, double headstart,
                                                    std::span<const std::size_t> steps,
                                                    std::size_t paths, std::uint64_t seed);

/// Fixed-order pairwise summation.
double pairwise_sum(std::span<const double> values);

}  // namespace gsr
