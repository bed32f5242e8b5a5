#pragma once

// Renewal-type equations u(x) = v(x) + int_0^A K_inf(x, y) u(y) dy:
//   v = 1           -> ARL to false alarm, l(x) = E_inf[T | R_0 = x]
//   v = 2 l - 1     -> second moment E_inf[T^2 | R_0 = x]
// together with the survival recurrence rho_{k+1} = K rho_k, the run-length
// pmf and the conditional probability of false alarm.

#include "gsr/kernel.hpp"

#include <Eigen/LU>

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace gsr {

/// LU factorization (partial pivoting) of I - K, shared by every right-hand
/// side solved on the same matrix.
class RenewalSystem {
public:
    explicit RenewalSystem(KernelMatrixPtr matrix);
    RenewalSystem(const RenewalSystem&) = delete;
    RenewalSystem& operator=(const RenewalSystem&) = delete;

    const KernelMatrix& matrix() const noexcept { return *matrix_; }
    const KernelMatrixPtr& matrix_ptr() const noexcept { return matrix_; }

    /// Solves (I - K) u = rhs and checks the residual.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

    /// ||(I - K)^{-1}||_inf, from the explicit inverse. O(N^3).
    double inverse_norm() const;

private:
    KernelMatrixPtr matrix_;
    Eigen::MatrixXd storage_;
    Eigen::PartialPivLU<Eigen::Ref<Eigen::MatrixXd>> lu_;
};

using RenewalSystemPtr = std::shared_ptr<const RenewalSystem>;

RenewalSystemPtr factorize(KernelMatrixPtr matrix);

enum class SolutionKind { ARL, SecondMoment, Generic };

class RunLengthSolution {
public:
    using Forcing = std::function<double(double)>;

    RunLengthSolution(RenewalSystemPtr system, std::vector<double> coeffs, SolutionKind kind,
                      Forcing forcing);

    SolutionKind kind() const noexcept { return kind_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    const KernelMatrix& matrix() const noexcept { return system_->matrix(); }
    const RenewalSystemPtr& system() const noexcept { return system_; }
    double forcing(double x) const { return forcing_(x); }

    /// Iterated solution at any x >= -1 (see evaluate_iterated).
    double operator()(double x) const;

private:
    RenewalSystemPtr system_;
    std::vector<double> coeffs_;
    SolutionKind kind_;
    Forcing forcing_;
};

/// Solves (I - K) u = 1. Residual is checked to 1e-10 relative.
RunLengthSolution solve_arl(const KernelMatrixPtr& matrix);
RunLengthSolution solve_arl(const RenewalSystemPtr& system);

/// Solves (I - K) u = 2 l - 1 reusing the ARL factorization. `matrix` must be
/// the matrix the ARL was solved on.
RunLengthSolution solve_second_moment(const RunLengthSolution& arl, const KernelMatrixPtr& matrix);
RunLengthSolution solve_second_moment(const RunLengthSolution& arl);

/// Generic right-hand side v(x).
RunLengthSolution solve_renewal(const RenewalSystemPtr& system, RunLengthSolution::Forcing forcing);

/// u~(x) = v(x) + sum_j u_j int K_inf(x, y) phi_j(y) dy. Returns the nodal
/// coefficient itself when x is a collocation point.
double evaluate_iterated(const RunLengthSolution& solution, double x);

/// sqrt(mu2(x) - l(x)^2). Throws a numeric error when the variance is
/// negative beyond 1e-9 * mu2.
double standard_deviation(const RunLengthSolution& arl, const RunLengthSolution& second_moment,
                          double x);

enum class SeriesTermination { TailBelowEpsilon, HorizonReached };

struct SurvivalSeries {
    double headstart = 0.0;
    std::vector<double> rho;  // rho[k] = P_inf(T > k | R_0 = headstart), rho[0] = 1
    double epsilon_tail = 0.0;
    std::size_t k_max = 0;
    SeriesTermination terminated_by = SeriesTermination::HorizonReached;

    /// Last computed index K.
    std::size_t horizon() const noexcept { return rho.empty() ? 0 : rho.size() - 1; }
};

constexpr double kDefaultEpsilonTail = 1e-12;

/// max(10^6, 50 * arl0).
std::size_t default_survival_horizon(double arl0);

/// rho_k(r) for k = 0..K. Nodal vectors are propagated by the matrix; the
/// headstart enters through one precomputed operator row w(r), with
/// rho_k(r) = w(r) . rho^{(k-1)} for k >= 1. Stops once rho_k(r) < epsilon_tail
/// or k = k_max.
SurvivalSeries survival_series(const KernelMatrixPtr& matrix, double headstart,
                               double epsilon_tail, std::size_t k_max);

/// pmf[k] = rho_{k-1} - rho_k for k = 1..K; pmf[0] = 0 since T >= 1.
std::vector<double> pmf(const SurvivalSeries& series);

/// P_inf(k < T <= k + m | T > k) = 1 - rho_{k+m} / rho_k.
double conditional_pfa(const SurvivalSeries& series, std::size_t k, std::size_t m);

/// sum_{k<=K} rho_k plus the geometric tail extrapolated from the last ratio.
double neumann_arl(const SurvivalSeries& series);

}  // namespace gsr
