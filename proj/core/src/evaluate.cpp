#include "quadcoh/states/evaluate.hpp"

#include <cmath>
#include <vector>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/hermite.hpp"

namespace quadcoh {

namespace {

using cplx = std::complex<double>;

cplx gaussian_wavefunction(const GaussianPureState& g, double x) {
    // (2 pi var)^{-1/4} exp[2i y_mean x - (x-x_mean)^2 (1/(4 var) - i cov/var)].
    // The imaginary quadratic term reproduces the X-Y correlation of rotated
    // squeezed states; |psi|^2 is the Gaussian marginal with variance var_x
    // either way.
    const double v = g.var_x();
    const double u = x - g.x_mean;
    const cplx quad(-u * u / (4.0 * v), u * u * g.xy_correlation / v);
    const cplx phase(0.0, 2.0 * g.y_mean * x);
    return std::pow(2.0 * M_PI * v, -0.25) * std::exp(quad + phase);
}

cplx fock_wavefunction(const FockVector& f, double x) {
    std::vector<double> psi(f.coefficients.size());
    hermite_psi_all(f.dim() - 1, x, psi);
    cplx sum = 0.0;
    for (int n = 0; n < f.dim(); ++n) sum += f.coefficients[n] * psi[n];
    return sum;
}

cplx thermal_kernel(const ThermalState& t, double x, double xp) {
    // sqrt((2/pi)/(1+2n)) exp(-x^t M x); the quadratic form splits into
    // (x^2 + x'^2)/(1+2n) + 2n(1+n)(x-x')^2/(1+2n).
    const double n = t.n_mean;
    const double denom = 1.0 + 2.0 * n;
    const double diff = x - xp;
    const double expo = -(x * x + xp * xp) / denom - 2.0 * n * (1.0 + n) * diff * diff / denom;
    return std::sqrt((2.0 / M_PI) / denom) * std::exp(expo);
}

cplx fock_matrix_kernel(const FockDensityMatrix& f, double x, double xp) {
    const int dim = f.dim();
    std::vector<double> px(dim), pxp(dim);
    hermite_psi_all(dim - 1, x, px);
    hermite_psi_all(dim - 1, xp, pxp);
    cplx sum = 0.0;
    for (int m = 0; m < dim; ++m) {
        cplx row = 0.0;
        for (int n = 0; n < dim; ++n) row += f.entries(m, n) * pxp[n];
        sum += px[m] * row;
    }
    return sum;
}

}  // namespace

std::complex<double> wavefunction(const StateModel& state, double x) {
    return std::visit(
        [x](const auto& s) -> cplx {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return gaussian_wavefunction(s, x);
            } else if constexpr (std::is_same_v<T, FockVector>) {
                return fock_wavefunction(s, x);
            } else if constexpr (std::is_same_v<T, Rescaled>) {
                return wavefunction(*s.inner, x / s.lambda) / std::sqrt(s.lambda);
            } else if constexpr (std::is_same_v<T, Displaced>) {
                const cplx phase(0.0, 2.0 * s.y0 * x);
                return std::exp(phase) * wavefunction(*s.inner, x - s.x0);
            } else {
                throw TypeError("wavefunction: defined only for pure single-mode states");
            }
        },
        state.value());
}

bool has_wavefunction(const StateModel& state) {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState> || std::is_same_v<T, FockVector>) {
                return true;
            } else if constexpr (std::is_same_v<T, Rescaled> || std::is_same_v<T, Displaced>) {
                return has_wavefunction(*s.inner);
            } else {
                return false;
            }
        },
        state.value());
}

std::complex<double> kernel(const StateModel& state, double x, double xp) {
    return std::visit(
        [x, xp](const auto& s) -> cplx {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return gaussian_wavefunction(s, x) * std::conj(gaussian_wavefunction(s, xp));
            } else if constexpr (std::is_same_v<T, FockVector>) {
                return fock_wavefunction(s, x) * std::conj(fock_wavefunction(s, xp));
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return thermal_kernel(s, x, xp);
            } else if constexpr (std::is_same_v<T, FockDensityMatrix>) {
                return fock_matrix_kernel(s, x, xp);
            } else if constexpr (std::is_same_v<T, Rescaled>) {
                return kernel(*s.inner, x / s.lambda, xp / s.lambda) / s.lambda;
            } else if constexpr (std::is_same_v<T, Displaced>) {
                const cplx phase(0.0, 2.0 * s.y0 * (x - xp));
                return std::exp(phase) * kernel(*s.inner, x - s.x0, xp - s.x0);
            } else {
                throw TypeError("kernel: defined only for single-mode states");
            }
        },
        state.value());
}

double quadrature_pdf(const StateModel& state, double x) {
    const double p = kernel(state, x, x).real();
    if (std::abs(p) < 1e-14) return 0.0;
    return p;
}

QuadratureMoments quadrature_moments(const StateModel& state) {
    return std::visit(
        [](const auto& s) -> QuadratureMoments {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return {s.x_mean, s.y_mean, s.x_mean * s.x_mean + s.var_x(),
                        s.y_mean * s.y_mean + s.var_y()};
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                const double second = (1.0 + 2.0 * s.n_mean) / 4.0;
                return {0.0, 0.0, second, second};
            } else if constexpr (std::is_same_v<T, FockVector>) {
                // X = (a + a†)/2, Y = (a - a†)/(2i); everything reduces to
                // <a>, <a^2> and <n> in the number basis.
                cplx a = 0.0, a2 = 0.0;
                double n_mean = 0.0;
                const auto& c = s.coefficients;
                for (int n = 0; n < s.dim(); ++n) {
                    n_mean += n * std::norm(c[n]);
                    if (n >= 1) a += std::conj(c[n - 1]) * c[n] * std::sqrt(double(n));
                    if (n >= 2)
                        a2 += std::conj(c[n - 2]) * c[n] * std::sqrt(double(n) * (n - 1));
                }
                QuadratureMoments m;
                m.x_mean = a.real();
                m.y_mean = a.imag();
                m.x_sq = (2.0 * a2.real() + 2.0 * n_mean + 1.0) / 4.0;
                m.y_sq = (-2.0 * a2.real() + 2.0 * n_mean + 1.0) / 4.0;
                return m;
            } else if constexpr (std::is_same_v<T, FockDensityMatrix>) {
                cplx a = 0.0, a2 = 0.0;
                double n_mean = 0.0;
                const int dim = s.dim();
                for (int k = 0; k < dim; ++k) {
                    n_mean += k * s.entries(k, k).real();
                    if (k >= 1) a += std::sqrt(double(k)) * s.entries(k, k - 1);
                    if (k >= 2) a2 += std::sqrt(double(k) * (k - 1)) * s.entries(k, k - 2);
                }
                QuadratureMoments m;
                m.x_mean = a.real();
                m.y_mean = a.imag();
                m.x_sq = (2.0 * a2.real() + 2.0 * n_mean + 1.0) / 4.0;
                m.y_sq = (-2.0 * a2.real() + 2.0 * n_mean + 1.0) / 4.0;
                return m;
            } else if constexpr (std::is_same_v<T, Rescaled>) {
                QuadratureMoments m = quadrature_moments(*s.inner);
                m.x_mean *= s.lambda;
                m.x_sq *= s.lambda * s.lambda;
                m.y_mean /= s.lambda;
                m.y_sq /= s.lambda * s.lambda;
                return m;
            } else if constexpr (std::is_same_v<T, Displaced>) {
                QuadratureMoments m = quadrature_moments(*s.inner);
                m.x_sq += 2.0 * s.x0 * m.x_mean + s.x0 * s.x0;
                m.y_sq += 2.0 * s.y0 * m.y_mean + s.y0 * s.y0;
                m.x_mean += s.x0;
                m.y_mean += s.y0;
                return m;
            } else {
                throw TypeError("quadrature_moments: defined only for single-mode states");
            }
        },
        state.value());
}

double mean_photon_number(const StateModel& state) {
    if (const auto* p = state.get_if<ProductState>()) {
        double total = 0.0;
        for (const auto& f : p->factors) total += mean_photon_number(f);
        return total;
    }
    if (state.get_if<TwoModeRemapped>() != nullptr)
        throw UnsupportedStateError("mean_photon_number: not defined for remapped two-mode states");
    const QuadratureMoments m = quadrature_moments(state);
    const double n = m.x_sq + m.y_sq - 0.5;
    return n < 0.0 ? 0.0 : n;
}

double support_radius(const StateModel& state) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return std::abs(s.x_mean) + 13.5 * s.delta_x;
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return 6.75 * std::sqrt(1.0 + 2.0 * s.n_mean);
            } else if constexpr (std::is_same_v<T, FockVector>) {
                int top = 0;
                for (int n = 0; n < s.dim(); ++n)
                    if (std::norm(s.coefficients[n]) > 0.0) top = n;
                return std::sqrt(top + 0.5) + 6.0;
            } else if constexpr (std::is_same_v<T, FockDensityMatrix>) {
                return std::sqrt(s.dim() - 0.5) + 6.0;
            } else if constexpr (std::is_same_v<T, Rescaled>) {
                return s.lambda * support_radius(*s.inner);
            } else if constexpr (std::is_same_v<T, Displaced>) {
                return support_radius(*s.inner) + std::abs(s.x0);
            } else {
                throw TypeError("support_radius: defined only for single-mode states");
            }
        },
        state.value());
}

}  // namespace quadcoh
