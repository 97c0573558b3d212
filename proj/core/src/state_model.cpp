#include "quadcoh/states/state_model.hpp"

#include <cmath>
#include <string>

#include "quadcoh/errors.hpp"

namespace quadcoh {

GaussianPureState GaussianPureState::minimum_uncertainty(double x_mean, double y_mean,
                                                         double delta_x) {
    if (!(delta_x > 0.0))
        throw ArgumentError("GaussianPureState: delta_x must be positive");
    GaussianPureState s;
    s.x_mean = x_mean;
    s.y_mean = y_mean;
    s.delta_x = delta_x;
    s.delta_y = 1.0 / (4.0 * delta_x);
    s.xy_correlation = 0.0;
    return s;
}

void GaussianPureState::validate() const {
    if (!(delta_x > 0.0) || !(delta_y > 0.0))
        throw ArgumentError("GaussianPureState: uncertainties must be positive");
    if (!std::isfinite(x_mean) || !std::isfinite(y_mean) || !std::isfinite(xy_correlation))
        throw ArgumentError("GaussianPureState: parameters must be finite");
    const double purity = var_x() * var_y() - xy_correlation * xy_correlation;
    if (std::abs(purity - 1.0 / 16.0) > 1e-10)
        throw ArgumentError("GaussianPureState: not a minimum-uncertainty pure state "
                            "(var_x var_y - cov^2 = " + std::to_string(purity) + ")");
}

void ThermalState::validate() const {
    if (!(n_mean >= 0.0) || !std::isfinite(n_mean))
        throw ArgumentError("ThermalState: n_mean must be a nonnegative real");
}

void FockVector::validate() const {
    if (coefficients.empty()) throw ArgumentError("FockVector: no coefficients");
    double norm = 0.0;
    for (const auto& c : coefficients) norm += std::norm(c);
    if (std::abs(norm - 1.0) > 1e-10)
        throw ArgumentError("FockVector: coefficients not normalized (|c|^2 sums to " +
                            std::to_string(norm) + ")");
}

void FockDensityMatrix::validate() const {
    if (entries.rows() != entries.cols() || entries.rows() < 1)
        throw ArgumentError("FockDensityMatrix: matrix must be square and nonempty");
    const double herm = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10)
        throw ArgumentError("FockDensityMatrix: not Hermitian (defect " + std::to_string(herm) +
                            ")");
    const double trace = entries.trace().real();
    if (std::abs(trace - 1.0) > 1e-8)
        throw ArgumentError("FockDensityMatrix: trace " + std::to_string(trace) +
                            " not 1 within 1e-8");
}

void ProductState::validate() const {
    if (factors.empty()) throw ArgumentError("ProductState: needs at least one factor");
}

void Rescaled::validate() const {
    if (!inner) throw ArgumentError("Rescaled: missing inner state");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ArgumentError("Rescaled: lambda must be a positive real");
}

void Displaced::validate() const {
    if (!inner) throw ArgumentError("Displaced: missing inner state");
    if (!std::isfinite(x0) || !std::isfinite(y0))
        throw ArgumentError("Displaced: displacement must be finite");
}

RemapMatrix RemapMatrix::rotation(double theta) {
    return {std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)};
}

RemapMatrix RemapMatrix::hyperbolic(double theta) {
    return {std::cosh(theta), std::sinh(theta), std::sinh(theta), std::cosh(theta)};
}

RemapMatrix RemapMatrix::inverse() const {
    const double d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

RemapMatrix RemapMatrix::times(const RemapMatrix& rhs) const {
    return {a11 * rhs.a11 + a12 * rhs.a21, a11 * rhs.a12 + a12 * rhs.a22,
            a21 * rhs.a11 + a22 * rhs.a21, a21 * rhs.a12 + a22 * rhs.a22};
}

void RemapMatrix::apply(double x1, double x2, double& u1, double& u2) const {
    u1 = a11 * x1 + a12 * x2;
    u2 = a21 * x1 + a22 * x2;
}

bool RemapMatrix::is_identity() const {
    return a11 == 1.0 && a12 == 0.0 && a21 == 0.0 && a22 == 1.0;
}

void RemapMatrix::validate() const {
    if (std::abs(det() - 1.0) >= 1e-12)
        throw ArgumentError("RemapMatrix: determinant " + std::to_string(det()) + " must be 1");
}

void TwoModeRemapped::validate() const {
    if (!mode1 || !mode2) throw ArgumentError("TwoModeRemapped: missing factor states");
    remap.validate();
}

namespace {
template <class T>
StateModel::Variant validated(T s) {
    s.validate();
    return StateModel::Variant{std::move(s)};
}
}  // namespace

StateModel::StateModel(GaussianPureState s) : value_(validated(std::move(s))) {}
StateModel::StateModel(ThermalState s) : value_(validated(std::move(s))) {}
StateModel::StateModel(FockVector s) : value_(validated(std::move(s))) {}
StateModel::StateModel(FockDensityMatrix s) : value_(validated(std::move(s))) {}
StateModel::StateModel(ProductState s) : value_(validated(std::move(s))) {}
StateModel::StateModel(Rescaled s) : value_(validated(std::move(s))) {}
StateModel::StateModel(Displaced s) : value_(validated(std::move(s))) {}
StateModel::StateModel(TwoModeRemapped s) : value_(validated(std::move(s))) {}

bool StateModel::is_pure() const {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState> || std::is_same_v<T, FockVector>) {
                return true;
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return false;
            } else if constexpr (std::is_same_v<T, FockDensityMatrix>) {
                // rank-one check via purity of the spectrum
                return std::abs((s.entries * s.entries).trace().real() - 1.0) < 1e-10;
            } else if constexpr (std::is_same_v<T, ProductState>) {
                for (const auto& f : s.factors)
                    if (!f.is_pure()) return false;
                return true;
            } else if constexpr (std::is_same_v<T, TwoModeRemapped>) {
                return s.mode1->is_pure() && s.mode2->is_pure();
            } else {
                return s.inner->is_pure();
            }
        },
        value_);
}

bool StateModel::is_single_mode() const { return mode_count() == 1; }

int StateModel::mode_count() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ProductState>) {
                int n = 0;
                for (const auto& f : s.factors) n += f.mode_count();
                return n;
            } else if constexpr (std::is_same_v<T, TwoModeRemapped>) {
                return 2;
            } else if constexpr (std::is_same_v<T, Rescaled> || std::is_same_v<T, Displaced>) {
                return s.inner->mode_count();
            } else {
                return 1;
            }
        },
        value_);
}

StateModel StateModel::vacuum() { return GaussianPureState{}; }

StateModel StateModel::coherent(double x_mean, double y_mean) {
    return GaussianPureState::minimum_uncertainty(x_mean, y_mean, 0.5);
}

StateModel StateModel::fock(int n) {
    if (n < 0) throw ArgumentError("StateModel::fock: n must be nonnegative");
    FockVector v;
    v.coefficients.assign(n + 1, {0.0, 0.0});
    v.coefficients[n] = {1.0, 0.0};
    return v;
}

StateModel StateModel::thermal(double n_mean) { return ThermalState{n_mean}; }

}  // namespace quadcoh
