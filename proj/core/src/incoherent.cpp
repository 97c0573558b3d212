#include "quadcoh/measures/incoherent.hpp"

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/grid.hpp"
#include "quadcoh/numerics/hermite.hpp"
#include "quadcoh/numerics/integrate.hpp"
#include "quadcoh/numerics/parallel.hpp"
#include "quadcoh/states/evaluate.hpp"

namespace quadcoh {

namespace {

// 16-point Gauss-Legendre reference rule; machine-exact for the smooth
// densities integrated over single bins here.
void bin_rule(double a, double b, std::vector<double>& xs, std::vector<double>& ws) {
    static const auto ref = [] {
        std::pair<std::vector<double>, std::vector<double>> rule;
        gauss_legendre_rule(16, rule.first, rule.second);
        return rule;
    }();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    xs.resize(ref.first.size());
    ws.resize(ref.second.size());
    for (std::size_t i = 0; i < ref.first.size(); ++i) {
        xs[i] = mid + half * ref.first[i];
        ws[i] = half * ref.second[i];
    }
}

}  // namespace

std::vector<std::pair<long, double>> chi_weights_from_pdf(const std::function<double(double)>& pdf,
                                                          double sigma, long j_max,
                                                          ChiWeightRule rule) {
    if (!(sigma > 0.0)) throw ArgumentError("chi_weights_from_pdf: sigma must be positive");
    if (j_max < 0) throw ArgumentError("chi_weights_from_pdf: j_max must be nonnegative");
    std::vector<std::pair<long, double>> weights;
    weights.reserve(static_cast<std::size_t>(2 * j_max + 1));
    std::vector<double> xs, ws;
    for (long j = -j_max; j <= j_max; ++j) {
        double w = 0.0;
        if (rule == ChiWeightRule::midpoint) {
            w = sigma * pdf(static_cast<double>(j) * sigma);
        } else {
            bin_rule((j - 0.5) * sigma, (j + 0.5) * sigma, xs, ws);
            for (std::size_t k = 0; k < xs.size(); ++k) w += ws[k] * pdf(xs[k]);
        }
        if (w < 0.0 && w > -1e-14) w = 0.0;
        weights.emplace_back(j, w);
    }
    return weights;
}

double entropy_term_from_weights(std::span<const std::pair<long, double>> weights) {
    double sum = 0.0;
    for (const auto& [j, w] : weights) {
        if (w < 1e-300) continue;  // 0 ln 0 := 0
        sum += w * std::log(w);
    }
    return sum;
}

IncoherentApprox chi_diagonal(const StateModel& state, double sigma, long j_max,
                              const ChiOptions& opts) {
    IncoherentApprox approx;
    approx.variant = IncoherentVariant::chi;
    approx.sigma = sigma;
    approx.chi_weights = chi_weights_from_pdf(
        [&state](double x) { return quadrature_pdf(state, x); }, sigma, j_max, opts.rule);
    double total = 0.0;
    for (const auto& [j, w] : approx.chi_weights) total += w;
    if (total < 1.0 - opts.coverage_tol)
        throw CoverageError("chi_diagonal: covered mass " + std::to_string(total) +
                            " below 1 - " + std::to_string(opts.coverage_tol));
    return approx;
}

double chi_entropy_term(const StateModel& state, double sigma, long j_max,
                        const ChiOptions& opts) {
    const IncoherentApprox approx = chi_diagonal(state, sigma, j_max, opts);
    return entropy_term_from_weights(approx.chi_weights);
}

IncoherentApprox xi_incoherent_state(std::span<const double> positions,
                                     std::span<const double> densities, double sigma) {
    if (!(sigma > 0.0)) throw ArgumentError("xi_incoherent_state: sigma must be positive");
    if (positions.size() != densities.size() || positions.empty())
        throw ArgumentError("xi_incoherent_state: positions/densities size mismatch");
    for (double p : densities)
        if (p < 0.0)
            throw ContractError("xi_incoherent_state: P must be nonnegative", p);

    IncoherentApprox approx;
    approx.variant = IncoherentVariant::xi;
    approx.sigma = sigma;
    approx.xi_positions.assign(positions.begin(), positions.end());

    if (positions.size() == 1) {
        approx.xi_masses = {1.0};
        return approx;
    }
    // Trapezoid cell masses of the sampled density.
    const std::size_t n = positions.size();
    std::vector<double> masses(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dx = positions[i + 1] - positions[i];
        if (!(dx > 0.0))
            throw ArgumentError("xi_incoherent_state: positions must be strictly increasing");
        masses[i] += 0.5 * dx * densities[i];
        masses[i + 1] += 0.5 * dx * densities[i + 1];
    }
    double total = 0.0;
    for (double m : masses) total += m;
    if (std::abs(total - 1.0) > 1e-6)
        throw ContractError("xi_incoherent_state: P integrates to " + std::to_string(total) +
                                ", expected 1 within 1e-6",
                            total);
    for (double& m : masses) m /= total;
    approx.xi_masses = std::move(masses);
    return approx;
}

namespace {

void require_xi(const IncoherentApprox& approx, const char* who) {
    if (approx.variant != IncoherentVariant::xi)
        throw ArgumentError(std::string(who) + ": chi-variant approximation passed");
}

}  // namespace

double xi_kernel(const IncoherentApprox& approx, double x, double xp) {
    require_xi(approx, "xi_kernel");
    const double s2 = approx.sigma * approx.sigma;
    // ridge factor e^{-(x-x')^2/(8 s^2)}; underflows (and is dropped) beyond
    // the exponent cutoff.
    const double diff = x - xp;
    const double ridge_expo = diff * diff / (8.0 * s2);
    if (ridge_expo > 700.0) return 0.0;
    const double mid = 0.5 * (x + xp);
    double mix = 0.0;
    for (std::size_t i = 0; i < approx.xi_positions.size(); ++i) {
        const double d = approx.xi_positions[i] - mid;
        mix += approx.xi_masses[i] * std::exp(-d * d / (2.0 * s2));
    }
    return std::exp(-ridge_expo) * mix / (std::sqrt(2.0 * M_PI) * approx.sigma);
}

double xi_coherence_analytic(const IncoherentApprox& approx) {
    require_xi(approx, "xi_coherence_analytic");
    return 2.0 * std::sqrt(2.0 * M_PI) * approx.sigma;
}

CoherenceReport xi_coherence_numeric(const IncoherentApprox& approx, const QuadratureGrid& grid_x,
                                     const QuadratureGrid& grid_y) {
    require_xi(approx, "xi_coherence_numeric");

    const bool uniform_pair =
        grid_x.scheme == Scheme::trapezoid && grid_y.scheme == Scheme::trapezoid &&
        grid_x.size() == grid_y.size() && grid_x.x_min == grid_y.x_min &&
        grid_x.x_max == grid_y.x_max && (grid_x.size() - 1) % 2 == 0 && grid_x.size() >= 5;

    IntegralResult integral;
    if (uniform_pair) {
        // On a shared uniform grid, x_i + x_j and x_i - x_j each take 2N-1
        // values, so both kernel factors tabulate once.
        const std::size_t n = grid_x.size();
        const double h = (grid_x.x_max - grid_x.x_min) / static_cast<double>(n - 1);
        const double s2 = approx.sigma * approx.sigma;
        std::vector<double> ridge(n, 0.0);  // e^{-(d h)^2 / (8 s^2)}
        for (std::size_t d = 0; d < n; ++d) {
            const double expo = (d * h) * (d * h) / (8.0 * s2);
            ridge[d] = expo > 700.0 ? 0.0 : std::exp(-expo);
        }
        std::vector<double> mix(2 * n - 1, 0.0);  // over midpoints
        parallel_for(mix.size(), [&](std::size_t k) {
            const double mid = 0.5 * (2.0 * grid_x.x_min + static_cast<double>(k) * h);
            double m = 0.0;
            for (std::size_t i = 0; i < approx.xi_positions.size(); ++i) {
                const double d = approx.xi_positions[i] - mid;
                const double expo = d * d / (2.0 * s2);
                if (expo <= 700.0) m += approx.xi_masses[i] * std::exp(-expo);
            }
            mix[k] = m / (std::sqrt(2.0 * M_PI) * approx.sigma);
        });

        std::vector<double> fine_rows(n, 0.0);
        std::vector<double> coarse_rows((n - 1) / 2 + 1, 0.0);
        const double h2 = 2.0 * h;
        parallel_for(n, [&](std::size_t i) {
            std::vector<double> row(n);
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t d = i > j ? i - j : j - i;
                row[j] = ridge[d] * mix[i + j];
            }
            std::vector<double> terms(n);
            for (std::size_t j = 0; j < n; ++j) terms[j] = row[j] * grid_y.weights[j];
            fine_rows[i] = pairwise_sum(terms);
            if (i % 2 == 0) {
                const std::size_t cn = (n - 1) / 2 + 1;
                std::vector<double> cterms(cn);
                for (std::size_t j = 0; j < cn; ++j) {
                    const double w = (j == 0 || j == cn - 1) ? 0.5 * h2 : h2;
                    cterms[j] = row[2 * j] * w;
                }
                coarse_rows[i / 2] = pairwise_sum(cterms);
            }
        });
        std::vector<double> terms(n);
        for (std::size_t i = 0; i < n; ++i) terms[i] = fine_rows[i] * grid_x.weights[i];
        integral.value = pairwise_sum(terms);
        const std::size_t cn = (n - 1) / 2 + 1;
        std::vector<double> cterms(cn);
        for (std::size_t i = 0; i < cn; ++i) {
            const double w = (i == 0 || i == cn - 1) ? 0.5 * h2 : h2;
            cterms[i] = coarse_rows[i] * w;
        }
        integral.error_estimate = std::abs(integral.value - pairwise_sum(cterms));
        integral.evaluations = static_cast<long>(n * n);
    } else {
        integral = integrate_2d(
            [&approx](double x, double y) { return xi_kernel(approx, x, y); }, grid_x, grid_y);
    }
    return {integral.value, integral.error_estimate, CoherenceMethod::numeric_kernel};
}

CoherenceReport xi_coherence_numeric(const IncoherentApprox& approx, int grid_points) {
    require_xi(approx, "xi_coherence_numeric");
    double lo = approx.xi_positions.front(), hi = approx.xi_positions.back();
    const double pad = 10.0 * approx.sigma + 7.0;
    const double radius = std::max(std::abs(lo), std::abs(hi)) + pad;
    const QuadratureGrid g = absolute_value_grid(radius, grid_points);
    return xi_coherence_numeric(approx, g, g);
}

double hilbert_schmidt_distance(const FockDensityMatrix& rho, const FockDensityMatrix& rho2) {
    if (rho.dim() != rho2.dim())
        throw ArgumentError("hilbert_schmidt_distance: dimension mismatch (" +
                            std::to_string(rho.dim()) + " vs " + std::to_string(rho2.dim()) + ")");
    return (rho.entries - rho2.entries).squaredNorm();
}

FockDensityMatrix chi_reconstruction_fock(const IncoherentApprox& approx, int dim) {
    if (approx.variant != IncoherentVariant::chi)
        throw ArgumentError("chi_reconstruction_fock: xi-variant approximation passed");
    if (dim < 1) throw ArgumentError("chi_reconstruction_fock: dimension must be positive");

    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<double> xs, ws, psi(dim);
    Eigen::VectorXd overlap(dim);
    for (const auto& [j, w] : approx.chi_weights) {
        if (w <= 0.0) continue;
        // <m|chi_j> = (1/sqrt(sigma)) int_bin psi_m
        bin_rule((j - 0.5) * approx.sigma, (j + 0.5) * approx.sigma, xs, ws);
        overlap.setZero();
        for (std::size_t k = 0; k < xs.size(); ++k) {
            hermite_psi_all(dim - 1, xs[k], psi);
            for (int m = 0; m < dim; ++m) overlap(m) += ws[k] * psi[m];
        }
        overlap /= std::sqrt(approx.sigma);
        R.noalias() += w * (overlap * overlap.transpose());
    }
    const double trace = R.trace();
    if (!(trace > 0.0))
        throw NumericError("chi_reconstruction_fock: projection has vanishing trace");
    FockDensityMatrix out;
    out.entries = (R / trace).cast<std::complex<double>>();
    return out;
}

}  // namespace quadcoh
