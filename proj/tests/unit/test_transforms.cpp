// Transformation laws: rotation, displacement, squeezing, beam splitting,
// two-mode squeezing, and their exact effects on both measures.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "quadcoh/errors.hpp"
#include "quadcoh/measures/coherence.hpp"
#include "quadcoh/measures/relative_entropy.hpp"
#include "quadcoh/numerics/hermite.hpp"
#include "quadcoh/selftest.hpp"
#include "quadcoh/states/evaluate.hpp"
#include "quadcoh/states/state_model.hpp"
#include "quadcoh/transforms/single_mode.hpp"
#include "quadcoh/transforms/two_mode.hpp"

using namespace quadcoh;

namespace {

const double kRoot2Pi = std::sqrt(2.0 * M_PI);

StateModel superposition01() {
    FockVector v;
    const double r = 1.0 / std::sqrt(2.0);
    v.coefficients = {{r, 0.0}, {r, 0.0}};
    return v;
}

StateModel diag_mixture() {
    FockDensityMatrix m;
    m.entries = Eigen::MatrixXcd::Zero(3, 3);
    m.entries(0, 0) = 0.5;
    m.entries(1, 1) = 0.3;
    m.entries(2, 2) = 0.2;
    return m;
}

}  // namespace

TEST_CASE("rotate: quarter turn swaps the Gaussian uncertainties") {
    const StateModel g(GaussianPureState::minimum_uncertainty(0.0, 0.0, 1.0));  // dy = 1/4
    const StateModel quarter = rotate(g, M_PI / 2.0);
    CHECK(std::abs(coherence_l1(quarter).value - 2.0 * kRoot2Pi * 0.25) < 1e-12);
    const StateModel identity = rotate(g, 0.0);
    CHECK(std::abs(coherence_l1(identity).value - 2.0 * kRoot2Pi) < 1e-12);
}

TEST_CASE("rotate: stationary states are untouched") {
    const StateModel thermal = StateModel::thermal(1.3);
    const StateModel rotated = rotate(thermal, 1.1);
    CHECK(rotated.get_if<ThermalState>() != nullptr);

    const StateModel mixture = diag_mixture();
    const StateModel rotated_mixture = rotate(mixture, 0.9);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int i = 0; i < 30; ++i) {
        const double x = dist(rng), y = dist(rng);
        CHECK(std::abs(kernel(mixture, x, y) - kernel(rotated_mixture, x, y)) < 1e-14);
    }
    const double c0 = coherence_l1_numeric(mixture, CoherenceOptions{.tolerance = 1e-4}).value;
    const double c1 =
        coherence_l1_numeric(rotated_mixture, CoherenceOptions{.tolerance = 1e-4}).value;
    CHECK(std::abs(c0 - c1) < 1e-10);
}

TEST_CASE("rotate: photon number preserved across families") {
    std::vector<StateModel> states;
    states.push_back(StateModel(GaussianPureState::minimum_uncertainty(1.0, 0.5, 0.8)));
    states.push_back(StateModel::thermal(2.0));
    states.push_back(superposition01());
    states.push_back(diag_mixture());
    states.push_back(displace(StateModel::fock(1), 2.0, 1.0));
    for (const StateModel& s : states) {
        const double before = mean_photon_number(s);
        for (double tau : {0.3, 1.2, 2.9}) {
            CHECK(std::abs(mean_photon_number(rotate(s, tau)) - before) < 1e-10);
        }
    }
}

TEST_CASE("rotation_coherence_curve: endpoints and quarter points") {
    GaussianPureState coherent_state = GaussianPureState::minimum_uncertainty(0.0, 0.0, 0.5);
    std::vector<double> taus;
    for (int k = 0; k < 16; ++k) taus.push_back(k * M_PI / 8.0);

    for (const auto& [tau, c] : rotation_coherence_curve(coherent_state, taus))
        CHECK(std::abs(c - kRoot2Pi) < 1e-12);

    GaussianPureState squeezed = GaussianPureState::minimum_uncertainty(0.0, 0.0, 1.0);
    const auto curve = rotation_coherence_curve(squeezed, taus);
    CHECK(std::abs(curve[0].second - 2.0 * kRoot2Pi) < 1e-12);
    // tau = pi/4: 2 sqrt(2 pi) sqrt((1 + 1/16)/2)
    const double quarter = 2.0 * kRoot2Pi * std::sqrt((1.0 + 1.0 / 16.0) / 2.0);
    CHECK(std::abs(curve[2].second - quarter) < 1e-12);

    // matches the analytic dispatch of the rotated state pointwise
    for (const auto& [tau, c] : curve)
        CHECK(std::abs(coherence_l1(rotate(squeezed, tau)).value - c) < 1e-12);

    // correlated Gaussians fall outside the formula
    const StateModel turned = rotate(squeezed, M_PI / 6.0);
    const auto* correlated = turned.get_if<GaussianPureState>();
    REQUIRE(correlated != nullptr);
    CHECK(correlated->xy_correlation != 0.0);
    CHECK_THROWS_AS(rotation_coherence_curve(*correlated, taus), ContractError);
}

TEST_CASE("displace: coherent states and exact invariance") {
    const StateModel coherent_state = displace(StateModel::vacuum(), 3.0, 0.0);
    const auto* g = coherent_state.get_if<GaussianPureState>();
    REQUIRE(g != nullptr);
    CHECK(g->x_mean == 3.0);
    CHECK(std::abs(coherence_l1(coherent_state).value - kRoot2Pi) < 1e-12);

    // displaced Fock state: the dispatch reuses the inner value exactly,
    // and the direct quadrature of the shifted wavefunction agrees
    const StateModel moved = displace(StateModel::fock(1), 2.0, 1.0);
    const double expected = 8.0 / kRoot2Pi;
    CHECK(coherence_l1(moved).value == coherence_l1(StateModel::fock(1)).value);
    CHECK(std::abs(coherence_l1_numeric(moved).value - expected) < 1e-5);

    const StateModel still = displace(StateModel::fock(1), 0.0, 0.0);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const double x = dist(rng), y = dist(rng);
        CHECK(std::abs(kernel(still, x, y) - kernel(StateModel::fock(1), x, y)) < 1e-14);
    }
}

TEST_CASE("squeeze: scaling law and composition") {
    CHECK(std::abs(coherence_l1(squeeze(StateModel::vacuum(), 2.0)).value - 2.0 * kRoot2Pi) <
          1e-12);
    CHECK_THROWS_AS(squeeze(StateModel::vacuum(), 0.0), ArgumentError);
    CHECK_THROWS_AS(squeeze(StateModel::vacuum(), -1.0), ArgumentError);

    // lambda = 1/2 halves the coherence of |2>
    const double base = coherence_l1_numeric(StateModel::fock(2)).value;
    const double squeezed = coherence_l1_numeric(squeeze(StateModel::fock(2), 0.5)).value;
    CHECK(std::abs(squeezed - 0.5 * base) / (0.5 * base) < 1e-5);

    // composition equals the single map with the product parameter
    const StateModel thermal = StateModel::thermal(1.0);
    const StateModel twice = squeeze(squeeze(thermal, 1.5), 2.0);
    const StateModel once = squeeze(thermal, 3.0);
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int i = 0; i < 30; ++i) {
        const double x = dist(rng), y = dist(rng);
        CHECK(std::abs(kernel(twice, x, y) - kernel(once, x, y)) < 1e-12);
    }
    // identity map
    const StateModel same = squeeze(StateModel::fock(1), 1.0);
    for (int i = 0; i < 10; ++i) {
        const double x = dist(rng);
        CHECK(std::abs(wavefunction(same, x) - wavefunction(StateModel::fock(1), x)) < 1e-14);
    }
}

TEST_CASE("squeeze scaling across the state battery") {
    std::vector<StateModel> states;
    states.push_back(StateModel::fock(1));
    states.push_back(StateModel::thermal(1.0));
    states.push_back(superposition01());
    const CoherenceOptions opts{.tolerance = 1e-4};
    for (const StateModel& s : states) {
        const double base = coherence_l1_numeric(s, opts).value;
        for (double lambda : {0.5, 2.0}) {
            const double val = coherence_l1_numeric(squeeze(s, lambda), opts).value;
            CHECK(std::abs(val - lambda * base) / (lambda * base) < 1e-4);
        }
    }
}

TEST_CASE("displacement invariance across offsets and families") {
    const CoherenceOptions opts{.tolerance = 1e-4};
    const std::pair<double, double> offsets[] = {{2.0, 0.0}, {0.0, 2.0}, {1.0, -3.0}};
    std::vector<StateModel> states;
    states.push_back(StateModel::fock(1));
    states.push_back(superposition01());
    states.push_back(StateModel::thermal(1.0));
    for (const StateModel& s : states) {
        const double base = coherence_l1_numeric(s, opts).value;
        for (const auto& [x0, y0] : offsets) {
            const double moved = coherence_l1_numeric(displace(s, x0, y0), opts).value;
            CHECK(std::abs(moved - base) / base < 1e-4);
        }
    }
}

TEST_CASE("squeeze_entropy_shift: ln(lambda) for closed and numeric branches") {
    CHECK(std::abs(squeeze_entropy_shift(StateModel::vacuum(), std::exp(1.0)) - 1.0) < 1e-12);
    CHECK(std::abs(squeeze_entropy_shift(StateModel::vacuum(), 1.0)) < 1e-12);
    CHECK(std::abs(squeeze_entropy_shift(StateModel::thermal(1.0), 2.0) - std::log(2.0)) < 1e-3);
}

TEST_CASE("beam_split: identity at theta = 0 and two-mode vacuum symmetry") {
    const StateModel vac = StateModel::vacuum();
    const StateModel one = StateModel::fock(1);

    const TwoModePure split0 = beam_split(one, vac, 0.0);
    const TwoModePure product = two_mode_product(one, vac);
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const double x = dist(rng), y = dist(rng);
        CHECK(std::abs(split0.amplitude(x, y) - product.amplitude(x, y)) < 1e-14);
    }

    // rotational symmetry of the split vacuum pair
    const TwoModePure vv = beam_split(vac, vac, 0.7);
    for (int i = 0; i < 20; ++i) {
        const double x = dist(rng), y = dist(rng);
        const double c = std::cos(0.4), s = std::sin(0.4);
        CHECK(std::abs(vv.amplitude(x, y) - vv.amplitude(c * x + s * y, -s * x + c * y)) <
              1e-12);
    }
    CHECK(std::abs(coherence_two_mode_pure(vv).value - 2.0 * M_PI) / (2.0 * M_PI) < 1e-6);

    CHECK_THROWS_AS(beam_split(StateModel::thermal(1.0), vac, 0.3), UnsupportedStateError);
}

TEST_CASE("beam_split and two_mode_squeeze: unit-Jacobian normalization") {
    const TwoModePure split = beam_split(StateModel::fock(1), StateModel::vacuum(), M_PI / 4.0);
    CHECK(std::abs(two_mode_norm(split) - 1.0) < 5e-5);
    const TwoModePure tms = two_mode_squeeze(StateModel::vacuum(), StateModel::vacuum(), 0.5);
    CHECK(std::abs(two_mode_norm(tms) - 1.0) < 5e-5);
}

TEST_CASE("two-mode coherence: invariance values") {
    const StateModel vac = StateModel::vacuum();
    const StateModel one = StateModel::fock(1);
    const CoherenceOptions opts{.tolerance = 1e-4};

    const double split = coherence_two_mode_pure(beam_split(one, vac, M_PI / 4.0), opts).value;
    CHECK(std::abs(split - 8.0) / 8.0 < 1e-4);

    const double tms0 =
        coherence_two_mode_pure(two_mode_squeeze(vac, vac, 0.5), opts).value;
    CHECK(std::abs(tms0 - 2.0 * M_PI) / (2.0 * M_PI) < 1e-4);

    const double tms1 = coherence_two_mode_pure(two_mode_squeeze(one, vac, 0.3), opts).value;
    CHECK(std::abs(tms1 - 8.0) / 8.0 < 1e-3);

    const double pair =
        coherence_two_mode_pure(two_mode_product(one, one), opts).value;
    const double expected = (8.0 / kRoot2Pi) * (8.0 / kRoot2Pi);
    CHECK(std::abs(pair - expected) / expected < 1e-4);
}

TEST_CASE("two-mode amplitude contract: entangled superposition") {
    // (|1,0> + |0,1>)/sqrt(2), the beam-splitter image of |1>|0>
    TwoModePure s;
    s.amplitude = [](double x1, double x2) {
        const double a = hermite_psi(1, x1) * hermite_psi(0, x2);
        const double b = hermite_psi(0, x1) * hermite_psi(1, x2);
        return std::complex<double>((a + b) / std::sqrt(2.0), 0.0);
    };
    s.support_x1 = std::sqrt(1.5) + 6.0;
    s.support_x2 = s.support_x1;
    CHECK(std::abs(coherence_two_mode_pure(s, CoherenceOptions{.tolerance = 1e-4}).value - 8.0) /
              8.0 <
          1e-4);
}

TEST_CASE("TwoModeRemapped variant dispatches to the 2D integral") {
    const StateModel remapped = make_two_mode_remapped(
        StateModel::fock(1), StateModel::vacuum(), RemapMatrix::rotation(M_PI / 4.0));
    CHECK(remapped.mode_count() == 2);
    CHECK_FALSE(remapped.is_single_mode());
    const CoherenceReport rep = coherence_l1(remapped, CoherenceOptions{.tolerance = 1e-4});
    CHECK(rep.method == CoherenceMethod::numeric_pure);
    CHECK(std::abs(rep.value - 8.0) / 8.0 < 1e-3);

    CHECK_THROWS_AS(make_two_mode_remapped(StateModel::thermal(1.0), StateModel::vacuum(),
                                           RemapMatrix::rotation(0.2)),
                    UnsupportedStateError);
}

TEST_CASE("unsupported transform combinations are rejected") {
    const StateModel squeezed_thermal = squeeze(StateModel::thermal(1.0), 2.0);
    CHECK_THROWS_AS(rotate(squeezed_thermal, 0.5), UnsupportedStateError);

    ProductState p;
    p.factors = {StateModel::vacuum(), StateModel::vacuum()};
    CHECK_THROWS_AS(displace(StateModel(p), 1.0, 0.0), UnsupportedStateError);
    CHECK_THROWS_AS(squeeze(StateModel(p), 2.0), UnsupportedStateError);
}

TEST_CASE("energy ratio table: first rows and comparator choice") {
    const CoherenceOptions opts{.tolerance = 1e-4};
    const auto rows = energy_ratio_rows(3, GaussianComparator::squeezed_vacuum, opts);
    REQUIRE(rows.size() == 4);
    CHECK(std::abs(rows[0].ratio - 1.0) < 1e-12);
    const double ratio1 = 8.0 / (2.0 * M_PI * (1.0 + std::sqrt(2.0)));
    CHECK(std::abs(rows[1].ratio - ratio1) < 1e-4);
    CHECK(rows[1].ratio < rows[0].ratio);
    CHECK(rows[2].ratio < rows[1].ratio);

    // the coherent comparator has constant C = sqrt(2 pi), so the ratio rises
    const auto rising = energy_ratio_rows(2, GaussianComparator::coherent, opts);
    CHECK(std::abs(rising[1].c_gauss - kRoot2Pi) / kRoot2Pi < 1e-6);
    CHECK(rising[1].ratio > 1.0);
}
