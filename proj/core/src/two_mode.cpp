#include "quadcoh/transforms/two_mode.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/parallel.hpp"
#include "quadcoh/states/evaluate.hpp"

namespace quadcoh {

namespace {

void require_pure_single_mode(const StateModel& s, const char* who) {
    if (!s.is_single_mode() || !has_wavefunction(s))
        throw UnsupportedStateError(std::string(who) +
                                    ": factors must be pure single-mode states");
}

}  // namespace

TwoModePure two_mode_product(const StateModel& s1, const StateModel& s2) {
    require_pure_single_mode(s1, "two_mode_product");
    require_pure_single_mode(s2, "two_mode_product");
    TwoModePure out;
    const auto a = std::make_shared<const StateModel>(s1);
    const auto b = std::make_shared<const StateModel>(s2);
    out.amplitude = [a, b](double x1, double x2) {
        return wavefunction(*a, x1) * wavefunction(*b, x2);
    };
    out.support_x1 = support_radius(s1);
    out.support_x2 = support_radius(s2);
    return out;
}

TwoModePure remap_two_mode(const TwoModePure& s, const RemapMatrix& A) {
    A.validate();
    TwoModePure out;
    const RemapMatrix inv = A.inverse();
    auto inner = s.amplitude;
    out.amplitude = [inner, inv](double x1, double x2) {
        double u1 = 0.0, u2 = 0.0;
        inv.apply(x1, x2, u1, u2);
        return inner(u1, u2);
    };
    out.support_x1 = std::abs(A.a11) * s.support_x1 + std::abs(A.a12) * s.support_x2 + 2.0;
    out.support_x2 = std::abs(A.a21) * s.support_x1 + std::abs(A.a22) * s.support_x2 + 2.0;
    return out;
}

TwoModePure beam_split(const StateModel& s1, const StateModel& s2, double theta) {
    return remap_two_mode(two_mode_product(s1, s2), RemapMatrix::rotation(theta));
}

TwoModePure two_mode_squeeze(const TwoModePure& s, double theta) {
    return remap_two_mode(s, RemapMatrix::hyperbolic(theta));
}

TwoModePure two_mode_squeeze(const StateModel& s1, const StateModel& s2, double theta) {
    return two_mode_squeeze(two_mode_product(s1, s2), theta);
}

CoherenceReport coherence_two_mode_pure(const TwoModePure& s, const QuadratureGrid& grid_x1,
                                        const QuadratureGrid& grid_x2,
                                        const CoherenceOptions& opts) {
    const auto f = [&s](double x1, double x2) { return std::abs(s.amplitude(x1, x2)); };
    const IntegralResult integral = integrate_2d(f, grid_x1, grid_x2);
    CoherenceReport report;
    report.value = integral.value * integral.value;
    report.error_estimate = 2.0 * std::abs(integral.value) * integral.error_estimate +
                            integral.error_estimate * integral.error_estimate;
    report.method = CoherenceMethod::numeric_pure;
    if (report.error_estimate > opts.tolerance * std::max(std::abs(report.value), 1.0))
        throw ConvergenceError("coherence_two_mode_pure: error estimate " +
                               std::to_string(report.error_estimate) + " above tolerance " +
                               std::to_string(opts.tolerance));
    return report;
}

CoherenceReport coherence_two_mode_pure(const TwoModePure& s, const CoherenceOptions& opts) {
    // Half the 1D default per axis keeps the grid near 8M points.
    const int points = std::max(opts.grid_points / 2, 512);
    const QuadratureGrid g1 = absolute_value_grid(s.support_x1, points);
    const QuadratureGrid g2 = absolute_value_grid(s.support_x2, points);
    return coherence_two_mode_pure(s, g1, g2, opts);
}

double two_mode_norm(const TwoModePure& s, int grid_points) {
    const QuadratureGrid g1 = absolute_value_grid(s.support_x1, grid_points);
    const QuadratureGrid g2 = absolute_value_grid(s.support_x2, grid_points);
    const auto f = [&s](double x1, double x2) { return std::norm(s.amplitude(x1, x2)); };
    return integrate_2d(f, g1, g2, false).value;
}

StateModel make_two_mode_remapped(const StateModel& s1, const StateModel& s2,
                                  const RemapMatrix& A) {
    require_pure_single_mode(s1, "make_two_mode_remapped");
    require_pure_single_mode(s2, "make_two_mode_remapped");
    TwoModeRemapped t;
    t.mode1 = share(s1);
    t.mode2 = share(s2);
    t.remap = A;
    return t;
}

TwoModePure as_two_mode_pure(const StateModel& state) {
    const auto* t = state.get_if<TwoModeRemapped>();
    if (t == nullptr) throw TypeError("as_two_mode_pure: state is not a two-mode remap");
    const TwoModePure base = two_mode_product(*t->mode1, *t->mode2);
    if (t->remap.is_identity()) return base;
    return remap_two_mode(base, t->remap);
}

}  // namespace quadcoh
