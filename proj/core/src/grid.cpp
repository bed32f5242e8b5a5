#include "gsr/grid.hpp"

#include "gsr/error.hpp"
#include "gsr/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gsr {
namespace {

constexpr const char* kModule = "grid";

}  // namespace

Partition::Partition(double threshold, std::vector<double> nodes, PartitionScheme scheme)
    : threshold_(threshold), nodes_(std::move(nodes)), scheme_(scheme) {
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw Error(ErrorKind::Argument, kModule, "threshold must be positive and finite");
    }
    if (nodes_.size() < 2) {
        throw Error(ErrorKind::Argument, kModule, "a partition needs at least two nodes");
    }
    if (nodes_.front() != 0.0 || nodes_.back() != threshold) {
        throw Error(ErrorKind::Argument, kModule, "partition must start at 0 and end at A");
    }
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (!(nodes_[i] > nodes_[i - 1])) {
            std::ostringstream msg;
            msg << "partition nodes must be strictly increasing (nodes " << i - 1 << " and " << i
                << ")";
            throw Error(ErrorKind::Argument, kModule, msg.str());
        }
    }
}

double Partition::max_step() const noexcept {
    double h = 0.0;
    for (std::size_t i = 1; i < nodes_.size(); ++i) h = std::max(h, nodes_[i] - nodes_[i - 1]);
    return h;
}

std::size_t Partition::locate(double x) const {
    if (!(x >= 0.0 && x <= threshold_)) {
        throw Error(ErrorKind::Domain, kModule, "point lies outside [0, A]");
    }
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    auto i = static_cast<std::size_t>(it - nodes_.begin());
    // i is the first node strictly greater than x; x == A falls into the last interval
    return std::min(i == 0 ? 0 : i - 1, nodes_.size() - 2);
}

Partition chebyshev_partition(std::size_t n, double threshold) {
    if (n < 2) throw Error(ErrorKind::Argument, kModule, "Chebyshev partition needs N >= 2");
    if (!(threshold > 0.0)) throw Error(ErrorKind::Argument, kModule, "threshold must be positive");
    std::vector<double> nodes(n);
    const double N = static_cast<double>(n);
    const double scale = std::cos(std::numbers::pi / (2.0 * N));
    for (std::size_t i = 1; i <= n; ++i) {
        double angle = (2.0 * static_cast<double>(i) - 1.0) * std::numbers::pi / (2.0 * N);
        nodes[n - i] = 0.5 * threshold * (1.0 + std::cos(angle) / scale);
    }
    nodes.front() = 0.0;
    nodes.back() = threshold;
    return Partition(threshold, std::move(nodes), PartitionScheme::ChebyshevShifted);
}

Partition uniform_partition(std::size_t intervals, double threshold) {
    if (intervals < 1) throw Error(ErrorKind::Argument, kModule, "uniform partition needs >= 1 interval");
    if (!(threshold > 0.0)) throw Error(ErrorKind::Argument, kModule, "threshold must be positive");
    std::vector<double> nodes(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        nodes[i] = threshold * static_cast<double>(i) / static_cast<double>(intervals);
    }
    nodes.back() = threshold;
    return Partition(threshold, std::move(nodes), PartitionScheme::Uniform);
}

Partition with_breakpoint(const Partition& partition, double x) {
    if (!(x > 0.0 && x < partition.threshold())) return partition;
    std::vector<double> nodes(partition.nodes().begin(), partition.nodes().end());
    nodes.push_back(x);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return Partition(partition.threshold(), std::move(nodes), partition.scheme());
}

Partition collocation_partition(const ChangePointModel& model, std::size_t n, double threshold) {
    Partition p = chebyshev_partition(n, threshold);
    if (model.psi_kind() == PsiKind::CUSUM) return with_breakpoint(p, 1.0);
    return p;
}

double HatBasis::operator()(std::size_t j, double x) const {
    const auto& p = *partition_;
    const std::size_t n = p.size();
    if (j >= n) {
        std::ostringstream msg;
        msg << "basis index " << j << " out of range [0, " << n << ")";
        throw Error(ErrorKind::Argument, kModule, msg.str());
    }
    const double xj = p[j];
    if (x == xj) return 1.0;
    if (j > 0 && x > p[j - 1] && x < xj) return (x - p[j - 1]) / (xj - p[j - 1]);
    if (j + 1 < n && x > xj && x < p[j + 1]) return (p[j + 1] - x) / (p[j + 1] - xj);
    return 0.0;
}

double HatBasis::interpolate(std::span<const double> coeffs, double x) const {
    const auto& p = *partition_;
    if (coeffs.size() != p.size()) {
        throw Error(ErrorKind::Argument, kModule, "coefficient count must match node count");
    }
    std::size_t i = p.locate(x);
    double w = (x - p[i]) / (p[i + 1] - p[i]);
    if (x == p[i + 1]) return coeffs[i + 1];
    if (x == p[i]) return coeffs[i];
    return (1.0 - w) * coeffs[i] + w * coeffs[i + 1];
}

double hat_eval(const HatBasis& basis, std::size_t j, double x) { return basis(j, x); }

double interpolate(const HatBasis& basis, std::span<const double> coeffs, double x) {
    return basis.interpolate(coeffs, x);
}

}  // namespace gsr
