#include "gsr/solver.hpp"

#include "gsr/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gsr {
namespace {

constexpr const char* kModule = "solver";
constexpr double kResidualTolerance = 1e-10;
constexpr double kVarianceTolerance = 1e-9;
constexpr double kPmfTolerance = 1e-15;

Eigen::MatrixXd identity_minus(const RowMatrix& k) {
    Eigen::MatrixXd m = -k;
    m.diagonal().array() += 1.0;
    return m;
}

// index of a collocation point equal to x, or npos
std::size_t find_point(std::span<const double> points, double x) {
    auto it = std::lower_bound(points.begin(), points.end(), x);
    if (it != points.end() && *it == x) return static_cast<std::size_t>(it - points.begin());
    return static_cast<std::size_t>(-1);
}

std::vector<double> to_vector(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

}  // namespace

RenewalSystem::RenewalSystem(KernelMatrixPtr matrix)
    : matrix_(std::move(matrix)),
      storage_(identity_minus(matrix_->entries())),
      lu_(storage_) {
    // Row sums are P_inf(A / psi(x_i)) <= 1; equality can only come from rounding
    // at very large A, where the factorization still succeeds.
    if (matrix_->max_row_sum() > 1.0 + 1e-12) {
        throw Error(ErrorKind::Numeric, kModule, "kernel matrix has a row sum above one");
    }
    double rcond = lu_.rcond();
    if (!(rcond > 1e-15)) {
        std::ostringstream msg;
        msg << "I - K is singular to working precision (rcond = " << rcond << ")";
        throw Error(ErrorKind::Numeric, kModule, msg.str());
    }
}

Eigen::VectorXd RenewalSystem::solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd u = lu_.solve(rhs);
    Eigen::VectorXd residual = u - matrix_->entries() * u - rhs;
    double scale = u.cwiseAbs().maxCoeff();
    double res = residual.cwiseAbs().maxCoeff();
    if (!std::isfinite(res) || res > kResidualTolerance * std::max(scale, 1.0)) {
        std::ostringstream msg;
        msg << "linear solve residual " << res << " exceeds tolerance for solution scale " << scale;
        throw Error(ErrorKind::Numeric, kModule, msg.str());
    }
    return u;
}

double RenewalSystem::inverse_norm() const {
    Eigen::MatrixXd inv = lu_.inverse();
    return inv.cwiseAbs().rowwise().sum().maxCoeff();
}

RenewalSystemPtr factorize(KernelMatrixPtr matrix) {
    return std::make_shared<const RenewalSystem>(std::move(matrix));
}

RunLengthSolution::RunLengthSolution(RenewalSystemPtr system, std::vector<double> coeffs,
                                     SolutionKind kind, Forcing forcing)
    : system_(std::move(system)), coeffs_(std::move(coeffs)), kind_(kind), forcing_(std::move(forcing)) {
    if (coeffs_.size() != system_->matrix().size()) {
        throw Error(ErrorKind::Argument, kModule, "coefficient count must match the matrix size");
    }
}

double RunLengthSolution::operator()(double x) const { return evaluate_iterated(*this, x); }

RunLengthSolution solve_arl(const KernelMatrixPtr& matrix) { return solve_arl(factorize(matrix)); }

RunLengthSolution solve_arl(const RenewalSystemPtr& system) {
    const auto n = static_cast<Eigen::Index>(system->matrix().size());
    Eigen::VectorXd u = system->solve(Eigen::VectorXd::Ones(n));
    if (u.minCoeff() < 1.0 - 1e-9) {
        throw Error(ErrorKind::Numeric, kModule, "ARL solution dropped below one");
    }
    return RunLengthSolution(system, to_vector(u), SolutionKind::ARL, [](double) { return 1.0; });
}

RunLengthSolution solve_second_moment(const RunLengthSolution& arl, const KernelMatrixPtr& matrix) {
    if (matrix.get() != &arl.matrix()) {
        throw Error(ErrorKind::Argument, kModule,
                    "second moment must be solved on the ARL's own matrix");
    }
    return solve_second_moment(arl);
}

RunLengthSolution solve_second_moment(const RunLengthSolution& arl) {
    if (arl.kind() != SolutionKind::ARL) {
        throw Error(ErrorKind::Argument, kModule, "second moment needs an ARL solution");
    }
    auto l = arl.coeffs();
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(l.size()));
    for (std::size_t j = 0; j < l.size(); ++j) rhs[static_cast<Eigen::Index>(j)] = 2.0 * l[j] - 1.0;
    Eigen::VectorXd mu2 = arl.system()->solve(rhs);
    for (std::size_t j = 0; j < l.size(); ++j) {
        double m = mu2[static_cast<Eigen::Index>(j)];
        if (m - l[j] * l[j] < -kVarianceTolerance * m) {
            std::ostringstream msg;
            msg << "negative variance at collocation point " << j << ": mu2 = " << m
                << ", l^2 = " << l[j] * l[j];
            throw Error(ErrorKind::Numeric, kModule, msg.str());
        }
    }
    auto base = std::make_shared<const RunLengthSolution>(arl);
    return RunLengthSolution(arl.system(), to_vector(mu2), SolutionKind::SecondMoment,
                             [base](double x) { return 2.0 * evaluate_iterated(*base, x) - 1.0; });
}

RunLengthSolution solve_renewal(const RenewalSystemPtr& system, RunLengthSolution::Forcing forcing) {
    auto points = system->matrix().collocation_points();
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) rhs[static_cast<Eigen::Index>(j)] = forcing(points[j]);
    Eigen::VectorXd u = system->solve(rhs);
    return RunLengthSolution(system, to_vector(u), SolutionKind::Generic, std::move(forcing));
}

double evaluate_iterated(const RunLengthSolution& solution, double x) {
    if (!(x >= -1.0)) throw Error(ErrorKind::Domain, kModule, "headstart must be >= -1");
    const auto& m = solution.matrix();
    std::size_t idx = find_point(m.collocation_points(), x);
    if (idx != static_cast<std::size_t>(-1)) return solution.coeffs()[idx];
    std::vector<double> row = operator_row(m, x);
    auto c = solution.coeffs();
    double acc = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * c[j];
    return solution.forcing(x) + acc;
}

double standard_deviation(const RunLengthSolution& arl, const RunLengthSolution& second_moment,
                          double x) {
    double l = evaluate_iterated(arl, x);
    double mu2 = evaluate_iterated(second_moment, x);
    double var = mu2 - l * l;
    if (var < -kVarianceTolerance * std::abs(mu2)) {
        std::ostringstream msg;
        msg << "negative variance " << var << " at x = " << x;
        throw Error(ErrorKind::Numeric, kModule, msg.str());
    }
    return std::sqrt(std::max(var, 0.0));
}

std::size_t default_survival_horizon(double arl0) {
    double h = std::max(1e6, 50.0 * arl0);
    return static_cast<std::size_t>(std::ceil(h));
}

SurvivalSeries survival_series(const KernelMatrixPtr& matrix, double headstart,
                               double epsilon_tail, std::size_t k_max) {
    if (!(epsilon_tail > 0.0 && epsilon_tail < 1.0)) {
        throw Error(ErrorKind::Argument, kModule, "epsilon_tail must lie in (0, 1)");
    }
    if (k_max < 1) throw Error(ErrorKind::Argument, kModule, "k_max must be at least 1");
    if (!(headstart >= -1.0)) throw Error(ErrorKind::Domain, kModule, "headstart must be >= -1");

    std::vector<double> w_row = operator_row(*matrix, headstart);
    Eigen::Map<const Eigen::VectorXd> w(w_row.data(), static_cast<Eigen::Index>(w_row.size()));
    const auto& k = matrix->entries();
    const auto n = static_cast<Eigen::Index>(matrix->size());

    SurvivalSeries series;
    series.headstart = headstart;
    series.epsilon_tail = epsilon_tail;
    series.k_max = k_max;
    series.rho.reserve(std::min<std::size_t>(k_max + 1, 1 << 20));
    series.rho.push_back(1.0);

    // While rho >= 1/2 the complement F = 1 - rho is propagated instead:
    // F_k = d + K F_{k-1} with d the row deficits. Every term is nonnegative and
    // the summation order is fixed, so F stays nondecreasing in floating point
    // and rho never exceeds 1. Below 1/2 the direct recursion takes over.
    double head_deficit = 0.0;
    if (double s = matrix->model().psi(headstart); s > 0.0) {
        auto p = lr_cdf_split(matrix->model(), matrix->threshold() / s, Measure::PreChange);
        head_deficit = p.upper ? p.tail : 1.0 - p.tail;
    }
    Eigen::VectorXd deficit(n);
    for (Eigen::Index i = 0; i < n; ++i) deficit[i] = matrix->row_deficit(static_cast<std::size_t>(i));

    Eigen::VectorXd nodal = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd comp = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd next(n);
    bool upper = true;
    for (std::size_t step = 1; step <= k_max; ++step) {
        double value = 0.0;
        if (upper) {
            double f = head_deficit + w.dot(comp);
            if (f <= 0.5) {
                value = 1.0 - f;
            } else {
                upper = false;
            }
        }
        if (!upper) value = w.dot(nodal);
        series.rho.push_back(value);
        if (value < epsilon_tail) {
            series.terminated_by = SeriesTermination::TailBelowEpsilon;
            return series;
        }
        if (step == k_max) break;
        if (upper) {
            next.noalias() = k * comp;
            next += deficit;
            comp.swap(next);
        }
        next.noalias() = k * nodal;
        nodal.swap(next);
    }
    series.terminated_by = SeriesTermination::HorizonReached;
    return series;
}

std::vector<double> pmf(const SurvivalSeries& series) {
    if (series.rho.size() < 2) throw Error(ErrorKind::Argument, kModule, "series has no steps");
    std::vector<double> p(series.rho.size(), 0.0);
    for (std::size_t k = 1; k < series.rho.size(); ++k) {
        double d = series.rho[k - 1] - series.rho[k];
        if (d < 0.0) {
            if (d < -kPmfTolerance) {
                std::ostringstream msg;
                msg << "survival function increased at k = " << k << " by " << -d;
                throw Error(ErrorKind::Numeric, kModule, msg.str());
            }
            d = 0.0;
        }
        p[k] = d;
    }
    return p;
}

double conditional_pfa(const SurvivalSeries& series, std::size_t k, std::size_t m) {
    if (m == 0) throw Error(ErrorKind::Argument, kModule, "PFA window length m must be >= 1");
    if (k + m > series.horizon()) {
        std::ostringstream msg;
        msg << "window end k + m = " << k + m << " exceeds series horizon " << series.horizon();
        throw Error(ErrorKind::Argument, kModule, msg.str());
    }
    double rho_k = series.rho[k];
    if (!(rho_k > 0.0)) {
        throw Error(ErrorKind::Undefined, kModule, "conditioning event T > k has zero probability");
    }
    return std::clamp(1.0 - series.rho[k + m] / rho_k, 0.0, 1.0);
}

double neumann_arl(const SurvivalSeries& series) {
    double sum = 0.0;
    for (double r : series.rho) sum += r;
    const std::size_t n = series.rho.size();
    if (n >= 2 && series.rho[n - 2] > 0.0) {
        double q = series.rho[n - 1] / series.rho[n - 2];
        if (q < 1.0) sum += series.rho[n - 1] * q / (1.0 - q);
    }
    return sum;
}

}  // namespace gsr
