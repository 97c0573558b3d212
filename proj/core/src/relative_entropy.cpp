#include "quadcoh/measures/relative_entropy.hpp"

#include <cmath>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/entropy.hpp"
#include "quadcoh/states/evaluate.hpp"
#include "quadcoh/states/fock.hpp"

namespace quadcoh {

std::string to_string(EntropyMethod method) {
    switch (method) {
        case EntropyMethod::analytic: return "analytic";
        case EntropyMethod::numeric: return "numeric";
        case EntropyMethod::product: return "product";
    }
    return "unknown";
}

namespace {

double gaussian_formula(double var_x) { return 0.5 * (1.0 + std::log(2.0 * M_PI * var_x)); }

double thermal_formula(const ThermalState& t) {
    const double n = t.n_mean;
    // tr(rho ln rho) = ln[(1/(1+n)) (n/(1+n))^n], with 0 ln 0 := 0 at n = 0.
    double spectrum_term = -std::log(1.0 + n);
    if (n > 0.0) spectrum_term += n * std::log(n / (1.0 + n));
    const double pdf_term = 0.5 * (1.0 + std::log(M_PI * (1.0 + 2.0 * n) / 2.0));
    return spectrum_term + pdf_term;
}

// -tr(rho ln rho) via the number-basis representation; unitary transform
// wrappers delegate to their inner state (same spectrum).
double spectrum_entropy(const StateModel& state, const EntropyOptions& opts) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState> || std::is_same_v<T, FockVector>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return von_neumann_entropy(fock_truncate(s, opts.fock_dim).entries);
            } else if constexpr (std::is_same_v<T, FockDensityMatrix>) {
                return von_neumann_entropy(s.entries);
            } else if constexpr (std::is_same_v<T, Rescaled> || std::is_same_v<T, Displaced>) {
                return spectrum_entropy(*s.inner, opts);
            } else if constexpr (std::is_same_v<T, ProductState>) {
                double total = 0.0;
                for (const auto& f : s.factors) total += spectrum_entropy(f, opts);
                return total;
            } else {
                throw UnsupportedStateError(
                    "relative_entropy_coherence: no Fock representation for this state");
            }
        },
        state.value());
}

double pdf_entropy(const StateModel& state, const EntropyOptions& opts) {
    const double radius = support_radius(state);
    const QuadratureGrid grid =
        build_grid(-radius, radius, opts.gl_points, opts.gl_panels, Scheme::gauss_legendre);
    return differential_entropy([&state](double x) { return quadrature_pdf(state, x); }, grid);
}

}  // namespace

double relative_entropy_coherence_numeric(const StateModel& state, const EntropyOptions& opts) {
    if (const auto* p = state.get_if<ProductState>()) {
        double total = 0.0;
        for (const auto& f : p->factors) total += relative_entropy_coherence_numeric(f, opts);
        return total;
    }
    return -spectrum_entropy(state, opts) + pdf_entropy(state, opts);
}

double state_spectrum_entropy(const StateModel& state, const EntropyOptions& opts) {
    return spectrum_entropy(state, opts);
}

double relative_entropy_coherence(const StateModel& state, const EntropyOptions& opts) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return gaussian_formula(s.var_x());
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return thermal_formula(s);
            } else if constexpr (std::is_same_v<T, ProductState>) {
                double total = 0.0;
                for (const auto& f : s.factors) total += relative_entropy_coherence(f, opts);
                return total;
            } else if constexpr (std::is_same_v<T, TwoModeRemapped>) {
                throw UnsupportedStateError(
                    "relative_entropy_coherence: remapped two-mode states are not supported");
            } else {
                return relative_entropy_coherence_numeric(state, opts);
            }
        },
        state.value());
}

EntropyMethod relative_entropy_method(const StateModel& state) {
    if (state.get_if<GaussianPureState>() || state.get_if<ThermalState>())
        return EntropyMethod::analytic;
    if (state.get_if<ProductState>()) return EntropyMethod::product;
    return EntropyMethod::numeric;
}

}  // namespace quadcoh
