#include "quadcoh/measures/coherence.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/hermite.hpp"
#include "quadcoh/numerics/parallel.hpp"
#include "quadcoh/states/evaluate.hpp"
#include "quadcoh/transforms/two_mode.hpp"

namespace quadcoh {

std::string to_string(CoherenceMethod method) {
    switch (method) {
        case CoherenceMethod::analytic: return "analytic";
        case CoherenceMethod::numeric_pure: return "numeric_pure";
        case CoherenceMethod::numeric_kernel: return "numeric_kernel";
        case CoherenceMethod::product: return "product";
    }
    return "unknown";
}

namespace {

// Fills one row |kernel(x_i, y_j)| for all j. Implementations precompute
// whatever the family allows so that 4096^2 grids stay subsecond.
class AbsKernelRows {
public:
    virtual ~AbsKernelRows() = default;
    virtual void fill(std::size_t row, std::span<double> out) const = 0;
};

class PureRows final : public AbsKernelRows {
public:
    PureRows(const StateModel& s, std::span<const double> xs, std::span<const double> ys) {
        abs_x_.resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) abs_x_[i] = std::abs(wavefunction(s, xs[i]));
        abs_y_.resize(ys.size());
        for (std::size_t j = 0; j < ys.size(); ++j) abs_y_[j] = std::abs(wavefunction(s, ys[j]));
    }
    void fill(std::size_t row, std::span<double> out) const override {
        const double a = abs_x_[row];
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = a * abs_y_[j];
    }

private:
    std::vector<double> abs_x_, abs_y_;
};

class ThermalRows final : public AbsKernelRows {
public:
    ThermalRows(const ThermalState& t, std::span<const double> xs, std::span<const double> ys)
        : xs_(xs.begin(), xs.end()), ys_(ys.begin(), ys.end()) {
        const double denom = 1.0 + 2.0 * t.n_mean;
        prefactor_ = std::sqrt((2.0 / M_PI) / denom);
        diag_rate_ = 1.0 / denom;
        cross_rate_ = 2.0 * t.n_mean * (1.0 + t.n_mean) / denom;
        gx_.resize(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) gx_[i] = std::exp(-diag_rate_ * xs_[i] * xs_[i]);
        gy_.resize(ys_.size());
        for (std::size_t j = 0; j < ys_.size(); ++j) gy_[j] = std::exp(-diag_rate_ * ys_[j] * ys_[j]);
    }
    void fill(std::size_t row, std::span<double> out) const override {
        const double x = xs_[row];
        const double a = prefactor_ * gx_[row];
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double d = x - ys_[j];
            out[j] = a * gy_[j] * std::exp(-cross_rate_ * d * d);
        }
    }

private:
    std::vector<double> xs_, ys_, gx_, gy_;
    double prefactor_ = 0.0, diag_rate_ = 0.0, cross_rate_ = 0.0;
};

class FockMatrixRows final : public AbsKernelRows {
public:
    FockMatrixRows(const FockDensityMatrix& f, std::span<const double> xs,
                   std::span<const double> ys)
        : rho_(f.entries) {
        const int dim = f.dim();
        psi_x_ = sample_all(dim, xs);
        psi_y_ = sample_all(dim, ys);
    }
    void fill(std::size_t row, std::span<double> out) const override {
        const Eigen::VectorXcd u = rho_.transpose() * psi_x_.col(static_cast<Eigen::Index>(row));
        const Eigen::RowVectorXcd vals = u.transpose() * psi_y_;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = std::abs(vals(static_cast<Eigen::Index>(j)));
    }

private:
    static Eigen::MatrixXcd sample_all(int dim, std::span<const double> nodes) {
        Eigen::MatrixXcd m(dim, static_cast<Eigen::Index>(nodes.size()));
        std::vector<double> buf(dim);
        for (std::size_t c = 0; c < nodes.size(); ++c) {
            hermite_psi_all(dim - 1, nodes[c], buf);
            for (int r = 0; r < dim; ++r) m(r, static_cast<Eigen::Index>(c)) = buf[r];
        }
        return m;
    }

    Eigen::MatrixXcd rho_;
    Eigen::MatrixXcd psi_x_, psi_y_;
};

class GenericRows final : public AbsKernelRows {
public:
    GenericRows(const StateModel& s, std::span<const double> xs, std::span<const double> ys)
        : state_(s), xs_(xs.begin(), xs.end()), ys_(ys.begin(), ys.end()) {}
    void fill(std::size_t row, std::span<double> out) const override {
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = std::abs(kernel(state_, xs_[row], ys_[j]));
    }

private:
    const StateModel& state_;
    std::vector<double> xs_, ys_;
};

std::unique_ptr<AbsKernelRows> make_abs_rows(const StateModel& state, std::vector<double> xs,
                                             std::vector<double> ys) {
    if (has_wavefunction(state))
        return std::make_unique<PureRows>(state, xs, ys);
    if (const auto* t = state.get_if<ThermalState>())
        return std::make_unique<ThermalRows>(*t, xs, ys);
    if (const auto* f = state.get_if<FockDensityMatrix>())
        return std::make_unique<FockMatrixRows>(*f, xs, ys);
    if (const auto* r = state.get_if<Rescaled>()) {
        // kernel'(x,x') = kernel(x/l, x'/l)/l: inner rows on the shrunk
        // nodes, then the 1/l prefactor.
        for (auto& v : xs) v /= r->lambda;
        for (auto& v : ys) v /= r->lambda;
        struct Scaled final : AbsKernelRows {
            std::unique_ptr<AbsKernelRows> inner;
            double inv_lambda;
            void fill(std::size_t row, std::span<double> out) const override {
                inner->fill(row, out);
                for (auto& v : out) v *= inv_lambda;
            }
        };
        auto scaled = std::make_unique<Scaled>();
        scaled->inner = make_abs_rows(*r->inner, std::move(xs), std::move(ys));
        scaled->inv_lambda = 1.0 / r->lambda;
        return scaled;
    }
    if (const auto* d = state.get_if<Displaced>()) {
        // |kernel'| is a rigid shift; the y0 phase has unit modulus.
        for (auto& v : xs) v -= d->x0;
        for (auto& v : ys) v -= d->x0;
        return make_abs_rows(*d->inner, std::move(xs), std::move(ys));
    }
    return std::make_unique<GenericRows>(state, std::move(xs), std::move(ys));
}

std::vector<double> coarse_weights(const QuadratureGrid& g) {
    const std::size_t coarse_n = (g.size() - 1) / 2 + 1;
    const double h2 = (g.x_max - g.x_min) / static_cast<double>(coarse_n - 1);
    std::vector<double> w(coarse_n, h2);
    w.front() = 0.5 * h2;
    w.back() = 0.5 * h2;
    return w;
}

void require_abs_grid(const QuadratureGrid& g, const char* who) {
    if (g.scheme != Scheme::trapezoid || g.size() < 5 || (g.size() - 1) % 2 != 0)
        throw ArgumentError(std::string(who) +
                            ": |kernel| grids must be trapezoid with an even interval count");
}

}  // namespace

IntegralResult abs_kernel_integral(const StateModel& state, const QuadratureGrid& grid_x,
                                   const QuadratureGrid& grid_y) {
    require_abs_grid(grid_x, "abs_kernel_integral");
    require_abs_grid(grid_y, "abs_kernel_integral");
    const auto rows = make_abs_rows(state, grid_x.nodes, grid_y.nodes);

    const std::vector<double> cw_y = coarse_weights(grid_y);
    std::vector<double> fine_rows(grid_x.size(), 0.0);
    std::vector<double> coarse_rows((grid_x.size() - 1) / 2 + 1, 0.0);

    parallel_for(grid_x.size(), [&](std::size_t i) {
        std::vector<double> row(grid_y.size());
        rows->fill(i, row);
        std::vector<double> terms(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) terms[j] = row[j] * grid_y.weights[j];
        fine_rows[i] = pairwise_sum(terms);
        if (i % 2 == 0) {
            std::vector<double> cterms(cw_y.size());
            for (std::size_t j = 0; j < cw_y.size(); ++j) cterms[j] = row[2 * j] * cw_y[j];
            coarse_rows[i / 2] = pairwise_sum(cterms);
        }
    });

    IntegralResult result;
    {
        std::vector<double> terms(fine_rows.size());
        for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = fine_rows[i] * grid_x.weights[i];
        result.value = pairwise_sum(terms);
    }
    const std::vector<double> cw_x = coarse_weights(grid_x);
    std::vector<double> cterms(cw_x.size());
    for (std::size_t i = 0; i < cw_x.size(); ++i) cterms[i] = coarse_rows[i] * cw_x[i];
    const double coarse = pairwise_sum(cterms);
    result.error_estimate = std::abs(result.value - coarse);
    result.evaluations = static_cast<long>(grid_x.size() * grid_y.size());
    return result;
}

namespace {

CoherenceReport pure_numeric(const StateModel& state, const QuadratureGrid& grid) {
    const auto f = [&state](double x) { return std::abs(wavefunction(state, x)); };
    const IntegralResult integral = integrate_1d(f, grid);
    CoherenceReport report;
    report.value = integral.value * integral.value;
    report.error_estimate =
        2.0 * std::abs(integral.value) * integral.error_estimate +
        integral.error_estimate * integral.error_estimate;
    report.method = CoherenceMethod::numeric_pure;
    return report;
}

QuadratureGrid default_abs_grid(const StateModel& state, const CoherenceOptions& opts) {
    return absolute_value_grid(support_radius(state), opts.grid_points);
}

void check_converged(const CoherenceReport& report, const CoherenceOptions& opts) {
    if (report.error_estimate > opts.tolerance * std::max(std::abs(report.value), 1.0))
        throw ConvergenceError("coherence_l1: error estimate " +
                               std::to_string(report.error_estimate) + " above tolerance " +
                               std::to_string(opts.tolerance));
}

CoherenceReport numeric_with_refinement(const StateModel& state, const CoherenceOptions& opts,
                                        bool force_kernel2d) {
    const bool use_kernel2d = force_kernel2d || !has_wavefunction(state);
    // 1D node counts are cheap, so kinked |psi_n| integrands may refine far
    // beyond the configured start; 2D refinements quadruple the work and stay
    // capped by max_refinements.
    const int max_points_1d = 1 << 20;
    int points = opts.grid_points;
    CoherenceReport report;
    for (int attempt = 0;; ++attempt) {
        CoherenceOptions local = opts;
        local.grid_points = points;
        const QuadratureGrid g = default_abs_grid(state, local);
        if (use_kernel2d) {
            const IntegralResult integral = abs_kernel_integral(state, g, g);
            report = {integral.value, integral.error_estimate, CoherenceMethod::numeric_kernel};
        } else {
            report = pure_numeric(state, g);
        }
        if (report.error_estimate <= opts.tolerance * std::max(std::abs(report.value), 1.0))
            return report;
        if (use_kernel2d) {
            if (attempt >= opts.max_refinements) break;
        } else {
            if (points * 2 > max_points_1d) break;
        }
        points *= 2;
    }
    check_converged(report, opts);
    return report;
}

}  // namespace

CoherenceReport coherence_l1_numeric(const StateModel& state, const QuadratureGrid& grid_x,
                                     const QuadratureGrid& grid_y, const CoherenceOptions& opts) {
    if (state.get_if<TwoModeRemapped>() != nullptr)
        return coherence_two_mode_pure(as_two_mode_pure(state), grid_x, grid_y, opts);
    if (state.get_if<ProductState>() != nullptr)
        throw TypeError("coherence_l1_numeric: pass product factors individually");
    CoherenceReport report;
    if (has_wavefunction(state)) {
        report = pure_numeric(state, grid_x);
    } else {
        const IntegralResult integral = abs_kernel_integral(state, grid_x, grid_y);
        report = {integral.value, integral.error_estimate, CoherenceMethod::numeric_kernel};
    }
    check_converged(report, opts);
    return report;
}

CoherenceReport coherence_l1_numeric(const StateModel& state, const CoherenceOptions& opts) {
    if (state.get_if<TwoModeRemapped>() != nullptr)
        return coherence_two_mode_pure(as_two_mode_pure(state), opts);
    if (const auto* p = state.get_if<ProductState>()) {
        CoherenceReport total{1.0, 0.0, CoherenceMethod::product};
        double rel_err = 0.0;
        for (const auto& f : p->factors) {
            const CoherenceReport r = coherence_l1_numeric(f, opts);
            total.value *= r.value;
            if (r.value != 0.0) rel_err += r.error_estimate / std::abs(r.value);
        }
        total.error_estimate = std::abs(total.value) * rel_err;
        return total;
    }
    return numeric_with_refinement(state, opts, /*force_kernel2d=*/false);
}

CoherenceReport coherence_l1_kernel2d(const StateModel& state, const QuadratureGrid& grid_x,
                                      const QuadratureGrid& grid_y, const CoherenceOptions& opts) {
    const IntegralResult integral = abs_kernel_integral(state, grid_x, grid_y);
    CoherenceReport report{integral.value, integral.error_estimate,
                           CoherenceMethod::numeric_kernel};
    check_converged(report, opts);
    return report;
}

CoherenceReport coherence_l1(const StateModel& state, const CoherenceOptions& opts) {
    return std::visit(
        [&](const auto& s) -> CoherenceReport {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianPureState>) {
                return {2.0 * std::sqrt(2.0 * M_PI) * s.delta_x, 0.0, CoherenceMethod::analytic};
            } else if constexpr (std::is_same_v<T, ThermalState>) {
                return {std::sqrt(2.0 * M_PI / (1.0 + 2.0 * s.n_mean)), 0.0,
                        CoherenceMethod::analytic};
            } else if constexpr (std::is_same_v<T, Rescaled>) {
                CoherenceReport r = coherence_l1(*s.inner, opts);
                r.value *= s.lambda;
                r.error_estimate *= s.lambda;
                return r;
            } else if constexpr (std::is_same_v<T, Displaced>) {
                // |kernel| is rigidly shifted, so the value is exactly that of
                // the inner state.
                return coherence_l1(*s.inner, opts);
            } else if constexpr (std::is_same_v<T, ProductState>) {
                CoherenceReport total{1.0, 0.0, CoherenceMethod::product};
                double rel_err = 0.0;
                for (const auto& f : s.factors) {
                    const CoherenceReport r = coherence_l1(f, opts);
                    total.value *= r.value;
                    if (r.value != 0.0) rel_err += r.error_estimate / std::abs(r.value);
                }
                total.error_estimate = std::abs(total.value) * rel_err;
                return total;
            } else if constexpr (std::is_same_v<T, TwoModeRemapped>) {
                return coherence_two_mode_pure(as_two_mode_pure(state), opts);
            } else {
                return numeric_with_refinement(state, opts, /*force_kernel2d=*/false);
            }
        },
        state.value());
}

}  // namespace quadcoh
