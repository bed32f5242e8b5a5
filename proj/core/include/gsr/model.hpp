#pragma once

// Gaussian mean-shift observation model: X ~ N(0,1) before the change and
// N(theta,1) after it. The single-observation likelihood ratio
//     Lambda = exp(theta * X - theta^2 / 2)
// is log-normal under both measures, so every distribution function used by
// the rest of the library reduces to the standard normal cdf.

#include <functional>
#include <string>

namespace gsr {

enum class Measure {
    PreChange,   // nu = infinity, no change ever happens
    PostChange,  // nu = 0, change in effect from the first observation
};

/// Recursion V_n = psi(V_{n-1}) * Lambda_n driving the detection statistic.
enum class PsiKind { GSR, CUSUM, Custom };

class ChangePointModel {
public:
    using PsiFunction = std::function<double(double)>;

    /// Shiryaev-Roberts family, psi(x) = 1 + x.
    static ChangePointModel gsr(double theta);
    /// CUSUM in likelihood-ratio form, psi(x) = max(1, x).
    static ChangePointModel cusum(double theta);
    /// Any nonnegative psi. The kernel formulas substitute psi(x) for 1 + x.
    static ChangePointModel custom(double theta, PsiFunction psi, std::string label);

    double theta() const noexcept { return theta_; }
    PsiKind psi_kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }

    /// Throws a domain error when psi evaluates to a negative or non-finite value.
    double psi(double x) const;

private:
    ChangePointModel(double theta, PsiKind kind, PsiFunction psi, std::string label);

    double theta_;
    PsiKind kind_;
    PsiFunction psi_;
    std::string label_;
};

double normal_cdf(double z) noexcept;

/// A cdf value kept as whichever tail is smaller. Differences of two such
/// values are formed from the small tails, which avoids cancellation when
/// both probabilities are close to one.
struct SplitProbability {
    double tail = 0.0;   // min(P, 1 - P)
    bool upper = false;  // true when tail == 1 - P

    double value() const noexcept { return upper ? 1.0 - tail : tail; }
};

SplitProbability split_normal_cdf(double z) noexcept;

/// hi.value() - lo.value(), computed from the tails where possible.
double increment(SplitProbability lo, SplitProbability hi) noexcept;

/// Standardized argument z such that P_d(Lambda <= t) = Phi(z); -inf at t = 0.
double lr_standard_score(const ChangePointModel& model, double t, Measure d);

/// P_d(Lambda <= t), t >= 0.
double lr_cdf(const ChangePointModel& model, double t, Measure d);
SplitProbability lr_cdf_split(const ChangePointModel& model, double t, Measure d);

/// P_d(lo < Lambda <= hi) with tail-aware differencing.
double lr_cdf_increment(const ChangePointModel& model, double lo, double hi, Measure d);

/// Transition density K_d(x, y) = d/dy P_d(Lambda <= y / psi(x)), x > -1, y >= 0.
double kernel_density(const ChangePointModel& model, double x, double y, Measure d);

}  // namespace gsr
