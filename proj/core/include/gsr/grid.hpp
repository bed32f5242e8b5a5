#pragma once

#include <span>
#include <vector>

namespace gsr {

class ChangePointModel;

enum class PartitionScheme { ChebyshevShifted, Uniform };

/// Ordered node set 0 = x_0 < x_1 < ... < x_{N-1} = A on [0, A].
class Partition {
public:
    /// Validates ordering and endpoints; throws an argument error otherwise.
    Partition(double threshold, std::vector<double> nodes, PartitionScheme scheme);

    double threshold() const noexcept { return threshold_; }
    PartitionScheme scheme() const noexcept { return scheme_; }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    double operator[](std::size_t i) const noexcept { return nodes_[i]; }

    /// Largest subinterval length.
    double max_step() const noexcept;

    /// Index i of the subinterval [x_i, x_{i+1}] containing x (x in [0, A]).
    std::size_t locate(double x) const;

private:
    double threshold_;
    std::vector<double> nodes_;
    PartitionScheme scheme_;
};

/// N shifted Chebyshev nodes on [0, A]; both endpoints are hit exactly.
Partition chebyshev_partition(std::size_t n, double threshold);

/// Uniform partition with `intervals` subintervals (intervals + 1 breakpoints).
Partition uniform_partition(std::size_t intervals, double threshold);

/// Returns a copy with `x` added as a node (no-op if already present or outside (0, A)).
Partition with_breakpoint(const Partition& partition, double x);

/// Default collocation partition for a model: Chebyshev, plus a breakpoint at
/// x = 1 for CUSUM, where psi(x) = max(1, x) has its kink.
Partition collocation_partition(const ChangePointModel& model, std::size_t n, double threshold);

/// Piecewise-linear "hat" basis attached to a partition.
class HatBasis {
public:
    explicit HatBasis(const Partition& partition) : partition_(&partition) {}

    const Partition& partition() const noexcept { return *partition_; }
    std::size_t size() const noexcept { return partition_->size(); }

    /// phi_j(x); zero outside the support [x_{j-1}, x_{j+1}].
    double operator()(std::size_t j, double x) const;

    /// sum_j coeffs[j] * phi_j(x) for x in [0, A].
    double interpolate(std::span<const double> coeffs, double x) const;

private:
    const Partition* partition_;
};

double hat_eval(const HatBasis& basis, std::size_t j, double x);
double interpolate(const HatBasis& basis, std::span<const double> coeffs, double x);

}  // namespace gsr
