#include "quadcoh/transforms/single_mode.hpp"

#include <cmath>

#include "quadcoh/errors.hpp"

namespace quadcoh {

namespace {

GaussianPureState rotate_gaussian(const GaussianPureState& g, double tau) {
    const double c = std::cos(tau), s = std::sin(tau);
    GaussianPureState out;
    out.x_mean = c * g.x_mean + s * g.y_mean;
    out.y_mean = -s * g.x_mean + c * g.y_mean;
    const double vx = g.var_x(), vy = g.var_y(), cov = g.xy_correlation;
    const double vx_new = c * c * vx + 2.0 * c * s * cov + s * s * vy;
    const double vy_new = s * s * vx - 2.0 * c * s * cov + c * c * vy;
    out.delta_x = std::sqrt(vx_new);
    out.delta_y = std::sqrt(vy_new);
    out.xy_correlation = c * s * (vy - vx) + (c * c - s * s) * cov;
    return out;
}

}  // namespace

StateModel rotate(const StateModel& state, double tau) {
    return std::visit(
        [tau](const auto& s) -> StateModel {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return rotate_gaussian(s, tau);
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return s;  // stationary
            } else if constexpr (std::is_same_v<T, FockVector>) {
                FockVector out = s;
                for (int n = 0; n < out.dim(); ++n)
                    out.coefficients[n] *= std::polar(1.0, -tau * n);
                return out;
            } else if constexpr (std::is_same_v<T, FockDensityMatrix>) {
                FockDensityMatrix out = s;
                for (int m = 0; m < out.dim(); ++m)
                    for (int n = 0; n < out.dim(); ++n)
                        out.entries(m, n) *= std::polar(1.0, -tau * (m - n));
                return out;
            } else if constexpr (std::is_same_v<T, ProductState>) {
                ProductState out;
                out.factors.reserve(s.factors.size());
                for (const auto& f : s.factors) out.factors.push_back(rotate(f, tau));
                return out;
            } else if constexpr (std::is_same_v<T, Displaced>) {
                // Displacements rotate covariantly: the offset vector turns
                // with the quadratures.
                const double c = std::cos(tau), si = std::sin(tau);
                Displaced out;
                out.inner = share(rotate(*s.inner, tau));
                out.x0 = c * s.x0 + si * s.y0;
                out.y0 = -si * s.x0 + c * s.y0;
                return out;
            } else {
                throw UnsupportedStateError(
                    "rotate: no closed position-kernel map for this wrapped state");
            }
        },
        state.value());
}

std::vector<std::pair<double, double>> rotation_coherence_curve(const GaussianPureState& g,
                                                                std::span<const double> taus) {
    if (g.xy_correlation != 0.0)
        throw ContractError("rotation_coherence_curve: formula requires zero X-Y correlation",
                            g.xy_correlation);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(taus.size());
    for (double tau : taus) {
        const double c = std::cos(tau), s = std::sin(tau);
        const double var_tau = c * c * g.var_x() + s * s * g.var_y();
        curve.emplace_back(tau, 2.0 * std::sqrt(2.0 * M_PI) * std::sqrt(var_tau));
    }
    return curve;
}

StateModel displace(const StateModel& state, double x0, double y0) {
    if (!state.is_single_mode())
        throw UnsupportedStateError("displace: single-mode states only");
    if (const auto* g = state.get_if<GaussianPureState>()) {
        GaussianPureState out = *g;
        out.x_mean += x0;
        out.y_mean += y0;
        return out;
    }
    if (const auto* d = state.get_if<Displaced>()) {
        // Compose; the accumulated global phase never reaches |kernel|.
        Displaced out;
        out.inner = d->inner;
        out.x0 = d->x0 + x0;
        out.y0 = d->y0 + y0;
        return out;
    }
    Displaced out;
    out.inner = share(state);
    out.x0 = x0;
    out.y0 = y0;
    return out;
}

StateModel squeeze(const StateModel& state, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ArgumentError("squeeze: lambda must be a positive real");
    if (!state.is_single_mode())
        throw UnsupportedStateError("squeeze: single-mode states only");
    if (const auto* g = state.get_if<GaussianPureState>()) {
        GaussianPureState out = *g;
        out.x_mean *= lambda;
        out.y_mean /= lambda;
        out.delta_x *= lambda;
        out.delta_y /= lambda;
        return out;
    }
    if (const auto* r = state.get_if<Rescaled>()) {
        Rescaled out;
        out.inner = r->inner;
        out.lambda = r->lambda * lambda;
        return out;
    }
    Rescaled out;
    out.inner = share(state);
    out.lambda = lambda;
    return out;
}

double squeeze_entropy_shift(const StateModel& state, double lambda, const EntropyOptions& opts) {
    return relative_entropy_coherence(squeeze(state, lambda), opts) -
           relative_entropy_coherence(state, opts);
}

}  // namespace quadcoh
