#include "gsr/model.hpp"

#include "gsr/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gsr {
namespace {

constexpr const char* kModule = "model";

void check_theta(double theta) {
    if (!std::isfinite(theta)) {
        throw Error(ErrorKind::Argument, kModule, "theta must be finite");
    }
    if (theta == 0.0) {
        throw Error(ErrorKind::Argument, kModule,
                    "theta must be nonzero: pre- and post-change densities coincide");
    }
    if (theta < 0.0) {
        std::ostringstream msg;
        msg << "theta must be positive; the kernel is symmetric in the sign of theta, "
               "so pass theta = "
            << -theta << " instead";
        throw Error(ErrorKind::Argument, kModule, msg.str());
    }
}

}  // namespace

ChangePointModel::ChangePointModel(double theta, PsiKind kind, PsiFunction psi,
                                   std::string label)
    : theta_(theta), kind_(kind), psi_(std::move(psi)), label_(std::move(label)) {
    check_theta(theta);
    if (!psi_) {
        throw Error(ErrorKind::Argument, kModule, "psi function must be callable");
    }
}

ChangePointModel ChangePointModel::gsr(double theta) {
    return ChangePointModel(theta, PsiKind::GSR, [](double x) { return 1.0 + x; }, "gsr");
}

ChangePointModel ChangePointModel::cusum(double theta) {
    return ChangePointModel(theta, PsiKind::CUSUM, [](double x) { return std::max(1.0, x); },
                            "cusum");
}

ChangePointModel ChangePointModel::custom(double theta, PsiFunction psi, std::string label) {
    return ChangePointModel(theta, PsiKind::Custom, std::move(psi), std::move(label));
}

double ChangePointModel::psi(double x) const {
    double v = psi_(x);
    if (!(v >= 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << "psi(" << x << ") = " << v << " is not a finite nonnegative value";
        throw Error(ErrorKind::Domain, kModule, msg.str());
    }
    return v;
}

double normal_cdf(double z) noexcept {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

SplitProbability split_normal_cdf(double z) noexcept {
    // erfc of a nonnegative argument is accurate to a few ulp in relative terms.
    if (z > 0.0) return {0.5 * std::erfc(z / std::numbers::sqrt2), true};
    return {0.5 * std::erfc(-z / std::numbers::sqrt2), false};
}

double increment(SplitProbability lo, SplitProbability hi) noexcept {
    if (!lo.upper && !hi.upper) return hi.tail - lo.tail;
    if (lo.upper && hi.upper) return lo.tail - hi.tail;
    return hi.value() - lo.value();
}

double lr_standard_score(const ChangePointModel& model, double t, Measure d) {
    if (!(t >= 0.0)) {
        throw Error(ErrorKind::Domain, kModule, "likelihood-ratio cdf requires t >= 0");
    }
    if (t == 0.0) return -std::numeric_limits<double>::infinity();
    double theta = model.theta();
    double half = 0.5 * theta * theta;
    // log Lambda ~ N(-theta^2/2, theta^2) pre-change, N(+theta^2/2, theta^2) post-change
    double mean = d == Measure::PreChange ? -half : half;
    return (std::log(t) - mean) / theta;
}

double lr_cdf(const ChangePointModel& model, double t, Measure d) {
    return normal_cdf(lr_standard_score(model, t, d));
}

SplitProbability lr_cdf_split(const ChangePointModel& model, double t, Measure d) {
    return split_normal_cdf(lr_standard_score(model, t, d));
}

double lr_cdf_increment(const ChangePointModel& model, double lo, double hi, Measure d) {
    return increment(lr_cdf_split(model, lo, d), lr_cdf_split(model, hi, d));
}

double kernel_density(const ChangePointModel& model, double x, double y, Measure d) {
    if (!(x > -1.0)) {
        throw Error(ErrorKind::Domain, kModule, "kernel density requires x > -1");
    }
    if (!(y >= 0.0)) {
        throw Error(ErrorKind::Domain, kModule, "kernel density requires y >= 0");
    }
    double s = model.psi(x);
    if (y == 0.0 || s == 0.0) return 0.0;
    double theta = model.theta();
    double z = lr_standard_score(model, y / s, d);
    // d/dy Phi(z(y)) with dz/dy = 1 / (theta * y)
    return std::exp(-0.5 * z * z) / (y * theta * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace gsr
