#include "quadcoh/states/fock.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "quadcoh/errors.hpp"

namespace quadcoh {

namespace {

FockDensityMatrix thermal_truncation(const ThermalState& t, int dim, double loss_threshold) {
    const double n = t.n_mean;
    FockDensityMatrix rho;
    rho.entries = Eigen::MatrixXcd::Zero(dim, dim);
    if (n == 0.0) {
        rho.entries(0, 0) = 1.0;
        return rho;
    }
    const double ratio = n / (1.0 + n);
    double p = 1.0 / (1.0 + n);
    double trace = 0.0;
    for (int k = 0; k < dim; ++k) {
        rho.entries(k, k) = p;
        trace += p;
        p *= ratio;
    }
    const double loss = 1.0 - trace;  // = ratio^dim
    if (loss > loss_threshold)
        throw CapacityError("fock_truncate: thermal truncation loss " + std::to_string(loss) +
                            " above threshold " + std::to_string(loss_threshold));
    return rho;
}

FockDensityMatrix coherent_truncation(const GaussianPureState& g, int dim,
                                      double loss_threshold) {
    if (std::abs(g.delta_x - 0.5) > 1e-12 || std::abs(g.delta_y - 0.5) > 1e-12 ||
        g.xy_correlation != 0.0)
        throw TypeError("fock_truncate: Gaussian input must be a coherent state "
                        "(delta_x = delta_y = 1/2)");
    const std::complex<double> alpha(g.x_mean, g.y_mean);
    const double a2 = std::norm(alpha);
    std::vector<std::complex<double>> c(dim);
    double norm = 0.0;
    for (int k = 0; k < dim; ++k) {
        // |c_k| = exp(-|a|^2/2 + k ln|a| - lgamma(k+1)/2), phase k*arg(a)
        double log_mag = -0.5 * a2 - 0.5 * std::lgamma(k + 1.0);
        if (k > 0) log_mag += k * 0.5 * std::log(a2 > 0.0 ? a2 : 1.0);
        const double mag = (a2 == 0.0 && k > 0) ? 0.0 : std::exp(log_mag);
        const double phase = k * std::arg(alpha);
        c[k] = std::polar(mag, phase);
        norm += mag * mag;
    }
    const double loss = 1.0 - norm;
    if (loss > loss_threshold)
        throw CapacityError("fock_truncate: coherent truncation loss " + std::to_string(loss) +
                            " above threshold " + std::to_string(loss_threshold));
    FockDensityMatrix rho;
    rho.entries.resize(dim, dim);
    for (int m = 0; m < dim; ++m)
        for (int k = 0; k < dim; ++k) rho.entries(m, k) = c[m] * std::conj(c[k]);
    return rho;
}

}  // namespace

FockDensityMatrix fock_truncate(const StateModel& state, int dim, double loss_threshold) {
    if (dim < 1) throw ArgumentError("fock_truncate: dimension must be positive");
    if (const auto* t = state.get_if<ThermalState>())
        return thermal_truncation(*t, dim, loss_threshold);
    if (const auto* g = state.get_if<GaussianPureState>())
        return coherent_truncation(*g, dim, loss_threshold);
    throw TypeError("fock_truncate: supported for thermal and coherent states only");
}

GaussianPureState squeezed_vacuum_for_energy(double n_mean) {
    if (!(n_mean >= 0.0))
        throw ArgumentError("squeezed_vacuum_for_energy: n_mean must be nonnegative");
    const double e = n_mean + 0.5;
    const double var_x = 0.5 * (e + std::sqrt(e * e - 0.25));
    GaussianPureState g;
    g.x_mean = 0.0;
    g.y_mean = 0.0;
    g.delta_x = std::sqrt(var_x);
    g.delta_y = 1.0 / (4.0 * g.delta_x);
    g.xy_correlation = 0.0;
    return g;
}

}  // namespace quadcoh
