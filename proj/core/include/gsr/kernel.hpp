#pragma once

// Discretizations of the integral operator
//     (K u)(x) = int_0^A K_inf(x, y) u(y) dy.
//
// CollocationHat: hat basis on a partition, collocation at the nodes. Entries
// int_0^A K_inf(x_i, y) phi_j(y) dy are closed-form: the linear factor y in
// the hat integrand is absorbed by the change-of-measure identity
//     psi(x) K_0(x, y) = y K_inf(x, y),
// so only likelihood-ratio cdf differences under both measures are needed.
//
// Midpoint: piecewise-constant basis on a uniform partition, collocation at
// cell midpoints (the classical Markov-chain approximation).

#include "gsr/grid.hpp"
#include "gsr/model.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

namespace gsr {

enum class Method { CollocationHat, Midpoint };

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class KernelMatrix {
public:
    KernelMatrix(RowMatrix entries, Method method, Partition partition,
                 std::vector<double> collocation_points, ChangePointModel model);

    const RowMatrix& entries() const noexcept { return entries_; }
    Method method() const noexcept { return method_; }
    const Partition& partition() const noexcept { return partition_; }
    const ChangePointModel& model() const noexcept { return model_; }
    std::span<const double> collocation_points() const noexcept { return points_; }
    double threshold() const noexcept { return partition_.threshold(); }

    /// Number of basis functions (= number of unknowns).
    std::size_t size() const noexcept { return points_.size(); }

    double row_sum(std::size_t i) const { return entries_.row(static_cast<Eigen::Index>(i)).sum(); }
    double max_row_sum() const;
    /// Certificate 1 - sum_j K_ij = 1 - P_inf(A / psi(x_i)), taken from the
    /// upper tail. Stays positive when the row sum itself rounds to 1.
    double row_deficit(std::size_t i) const { return deficits_[i]; }
    double min_row_deficit() const;

private:
    RowMatrix entries_;
    Method method_;
    Partition partition_;
    std::vector<double> points_;
    ChangePointModel model_;
    std::vector<double> deficits_;
};

using KernelMatrixPtr = std::shared_ptr<const KernelMatrix>;

/// Exact hat-collocation matrix. Rows are assembled concurrently; each row is
/// a pure function of its collocation point, so the result does not depend on
/// the thread count.
KernelMatrixPtr assemble_collocation(const ChangePointModel& model, const Partition& partition);

/// Midpoint/Markov-chain matrix on a uniform partition with N + 1 breakpoints.
KernelMatrixPtr assemble_midpoint(const ChangePointModel& model, const Partition& partition);

/// Builds the default partition for `method` with `n` unknowns and assembles.
KernelMatrixPtr assemble(const ChangePointModel& model, Method method, std::size_t n,
                         double threshold);

/// Fills `out[j] = int_0^A K_inf(x, y) phi_j(y) dy` for an arbitrary point
/// x >= -1 using the same closed forms as assembly. At a collocation point
/// this is the corresponding matrix row.
void operator_row(const ChangePointModel& model, const Partition& partition, Method method,
                  double x, std::span<double> out);
std::vector<double> operator_row(const KernelMatrix& matrix, double x);

/// Row-major CSV, 17 significant digits.
void write_matrix_csv(const KernelMatrix& matrix, std::ostream& out);
void write_matrix_csv(const KernelMatrix& matrix, const std::filesystem::path& path);

}  // namespace gsr
