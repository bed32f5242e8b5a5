#include "gsr/kernel.hpp"

#include "gsr/error.hpp"
#include "gsr/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace gsr {
namespace {

constexpr const char* kModule = "kernel";

void check_point(double x) {
    if (!(x >= -1.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::Domain, kModule, "operator row requires x >= -1");
    }
}

// out[j] = int K_inf(x, y) phi_j(y) dy for the hat basis on `nodes`.
void hat_row(const ChangePointModel& model, std::span<const double> nodes, double x,
             std::span<double> out, std::vector<SplitProbability>& pre,
             std::vector<SplitProbability>& post) {
    const std::size_t n = nodes.size();
    const double s = model.psi(x);
    std::fill(out.begin(), out.end(), 0.0);
    if (s == 0.0) {
        // the statistic restarts at exactly 0, where only phi_0 is nonzero
        out[0] = 1.0;
        return;
    }
    pre.resize(n);
    post.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double t = nodes[j] / s;
        pre[j] = lr_cdf_split(model, t, Measure::PreChange);
        post[j] = lr_cdf_split(model, t, Measure::PostChange);
    }
    for (std::size_t j = 0; j < n; ++j) {
        double v = 0.0;
        if (j > 0) {
            // rising half on [x_{j-1}, x_j]: (y - x_{j-1}) / h
            const double a = nodes[j - 1];
            const double h = nodes[j] - a;
            v += (s * increment(post[j - 1], post[j]) - a * increment(pre[j - 1], pre[j])) / h;
        }
        if (j + 1 < n) {
            // falling half on [x_j, x_{j+1}]: (x_{j+1} - y) / h
            const double b = nodes[j + 1];
            const double h = b - nodes[j];
            v += (b * increment(pre[j], pre[j + 1]) - s * increment(post[j], post[j + 1])) / h;
        }
        // the two terms are a nonnegative integral; only cancellation roundoff can go below 0
        out[j] = std::max(v, 0.0);
    }
}

// out[j] = P_inf(x_{j+1}/psi(x)) - P_inf(x_j/psi(x)) for cells [x_j, x_{j+1}].
void midpoint_row(const ChangePointModel& model, std::span<const double> breaks, double x,
                  std::span<double> out, std::vector<SplitProbability>& pre) {
    const std::size_t cells = breaks.size() - 1;
    const double s = model.psi(x);
    std::fill(out.begin(), out.end(), 0.0);
    if (s == 0.0) {
        out[0] = 1.0;
        return;
    }
    pre.resize(breaks.size());
    for (std::size_t j = 0; j < breaks.size(); ++j) {
        pre[j] = lr_cdf_split(model, breaks[j] / s, Measure::PreChange);
    }
    for (std::size_t j = 0; j < cells; ++j) out[j] = std::max(increment(pre[j], pre[j + 1]), 0.0);
}

std::size_t unknowns(const Partition& partition, Method method) {
    return method == Method::CollocationHat ? partition.size() : partition.size() - 1;
}

std::vector<double> collocation_points_for(const Partition& partition, Method method) {
    auto nodes = partition.nodes();
    if (method == Method::CollocationHat) return {nodes.begin(), nodes.end()};
    std::vector<double> mids(nodes.size() - 1);
    for (std::size_t i = 0; i < mids.size(); ++i) mids[i] = 0.5 * (nodes[i] + nodes[i + 1]);
    return mids;
}

KernelMatrixPtr assemble_rows(const ChangePointModel& model, const Partition& partition,
                              Method method) {
    std::vector<double> points = collocation_points_for(partition, method);
    const std::size_t n = points.size();
    RowMatrix entries(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    auto nodes = partition.nodes();
    const auto rows = static_cast<long>(n);
    const int threads = thread_count();

    // exceptions cannot cross an OpenMP region; psi is the only thing that can throw
    for (double z : points) (void)model.psi(z);

#pragma omp parallel num_threads(threads)
    {
        std::vector<SplitProbability> pre;
        std::vector<SplitProbability> post;
#pragma omp for schedule(static)
        for (long i = 0; i < rows; ++i) {
            std::span<double> row(entries.data() + i * rows, n);
            if (method == Method::CollocationHat) {
                hat_row(model, nodes, points[static_cast<std::size_t>(i)], row, pre, post);
            } else {
                midpoint_row(model, nodes, points[static_cast<std::size_t>(i)], row, pre);
            }
        }
    }
    return std::make_shared<const KernelMatrix>(std::move(entries), method, partition,
                                                std::move(points), model);
}

}  // namespace

KernelMatrix::KernelMatrix(RowMatrix entries, Method method, Partition partition,
                           std::vector<double> collocation_points, ChangePointModel model)
    : entries_(std::move(entries)),
      method_(method),
      partition_(std::move(partition)),
      points_(std::move(collocation_points)),
      model_(std::move(model)) {
    if (entries_.rows() != entries_.cols() ||
        static_cast<std::size_t>(entries_.rows()) != points_.size()) {
        throw Error(ErrorKind::Argument, kModule, "matrix shape does not match collocation points");
    }
    // both discretizations telescope to P_inf(A / psi(point)) per row
    deficits_.reserve(points_.size());
    for (double x : points_) {
        double s = model_.psi(x);
        if (s == 0.0) {
            deficits_.push_back(0.0);
            continue;
        }
        auto p = lr_cdf_split(model_, partition_.threshold() / s, Measure::PreChange);
        deficits_.push_back(p.upper ? p.tail : 1.0 - p.tail);
    }
}

double KernelMatrix::max_row_sum() const {
    return entries_.rowwise().sum().maxCoeff();
}

double KernelMatrix::min_row_deficit() const {
    return *std::min_element(deficits_.begin(), deficits_.end());
}

KernelMatrixPtr assemble_collocation(const ChangePointModel& model, const Partition& partition) {
    return assemble_rows(model, partition, Method::CollocationHat);
}

KernelMatrixPtr assemble_midpoint(const ChangePointModel& model, const Partition& partition) {
    if (partition.scheme() != PartitionScheme::Uniform) {
        throw Error(ErrorKind::Argument, kModule, "midpoint assembly requires a uniform partition");
    }
    return assemble_rows(model, partition, Method::Midpoint);
}

KernelMatrixPtr assemble(const ChangePointModel& model, Method method, std::size_t n,
                         double threshold) {
    if (method == Method::CollocationHat) {
        return assemble_collocation(model, collocation_partition(model, n, threshold));
    }
    return assemble_midpoint(model, uniform_partition(n, threshold));
}

void operator_row(const ChangePointModel& model, const Partition& partition, Method method,
                  double x, std::span<double> out) {
    check_point(x);
    if (out.size() != unknowns(partition, method)) {
        throw Error(ErrorKind::Argument, kModule, "output row has the wrong length");
    }
    std::vector<SplitProbability> pre;
    std::vector<SplitProbability> post;
    if (method == Method::CollocationHat) {
        hat_row(model, partition.nodes(), x, out, pre, post);
    } else {
        midpoint_row(model, partition.nodes(), x, out, pre);
    }
}

std::vector<double> operator_row(const KernelMatrix& matrix, double x) {
    std::vector<double> row(matrix.size());
    operator_row(matrix.model(), matrix.partition(), matrix.method(), x, row);
    return row;
}

void write_matrix_csv(const KernelMatrix& matrix, std::ostream& out) {
    const auto& m = matrix.entries();
    char buf[32];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            if (j > 0) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

void write_matrix_csv(const KernelMatrix& matrix, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Argument, kModule, "cannot open " + path.string());
    write_matrix_csv(matrix, out);
}

}  // namespace gsr
