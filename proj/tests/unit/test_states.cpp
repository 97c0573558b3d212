// State families: wavefunctions, kernels, densities, photon numbers, and
// the JSON state-spec schema.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/grid.hpp"
#include "quadcoh/numerics/hermite.hpp"
#include "quadcoh/numerics/integrate.hpp"
#include "quadcoh/states/evaluate.hpp"
#include "quadcoh/states/fock.hpp"
#include "quadcoh/states/state_json.hpp"
#include "quadcoh/states/state_model.hpp"

using namespace quadcoh;

namespace {

StateModel superposition01() {
    FockVector v;
    const double r = 1.0 / std::sqrt(2.0);
    v.coefficients = {{r, 0.0}, {r, 0.0}};
    return v;
}

StateModel displaced() {
    Displaced d;
    d.inner = share(StateModel::fock(1));
    d.x0 = 1.5;
    d.y0 = -0.75;
    return d;
}

StateModel rescaled_thermal() {
    Rescaled r;
    r.inner = share(StateModel::thermal(0.5));
    r.lambda = 2.0;
    return r;
}

std::vector<StateModel> sample_states() {
    std::vector<StateModel> states;
    states.push_back(StateModel::vacuum());
    states.push_back(GaussianPureState::minimum_uncertainty(1.0, -0.5, 2.0));
    states.push_back(StateModel::thermal(1.0));
    states.push_back(superposition01());
    states.push_back(displaced());
    states.push_back(rescaled_thermal());
    return states;
}

}  // namespace

TEST_CASE("wavefunction: closed-form spot values") {
    const double peak = std::pow(M_PI / 2.0, -0.25);  // 0.8932438...
    CHECK(std::abs(wavefunction(StateModel::vacuum(), 0.0).real() - peak) < 1e-12);
    CHECK(std::abs(wavefunction(StateModel::fock(1), 0.0)) == 0.0);
    const StateModel moved(GaussianPureState::minimum_uncertainty(1.0, 0.0, 0.5));
    CHECK(std::abs(wavefunction(moved, 1.0).real() - peak) < 1e-12);
    CHECK_THROWS_AS(wavefunction(StateModel::thermal(1.0), 0.0), TypeError);
}

TEST_CASE("kernel: thermal closed form") {
    // n = 0 reduces to the vacuum projector
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    const StateModel vac = StateModel::vacuum();
    const StateModel th0 = StateModel::thermal(0.0);
    for (int i = 0; i < 50; ++i) {
        const double x = dist(rng), y = dist(rng);
        CHECK(std::abs(kernel(th0, x, y) - kernel(vac, x, y)) < 1e-12);
    }
    // prefactor sqrt((2/pi)/(1+2n)) at the origin
    CHECK(std::abs(kernel(StateModel::thermal(1.0), 0.0, 0.0).real() -
                   std::sqrt((2.0 / M_PI) / 3.0)) < 1e-12);
}

TEST_CASE("kernel: number-basis mixture diagonal") {
    FockDensityMatrix m;
    m.entries = Eigen::MatrixXcd::Zero(2, 2);
    m.entries(0, 0) = 0.5;
    m.entries(1, 1) = 0.5;
    const StateModel mix(m);
    for (double x : {-1.3, 0.0, 0.4, 2.2}) {
        const double expected =
            0.5 * hermite_psi(0, x) * hermite_psi(0, x) + 0.5 * hermite_psi(1, x) * hermite_psi(1, x);
        CHECK(std::abs(kernel(mix, x, x).real() - expected) < 1e-14);
    }
}

TEST_CASE("kernel: Hermitian symmetry across families") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (const StateModel& s : sample_states()) {
        for (int i = 0; i < 40; ++i) {
            const double x = dist(rng), y = dist(rng);
            const std::complex<double> k = kernel(s, x, y);
            const std::complex<double> kt = std::conj(kernel(s, y, x));
            CHECK(std::abs(k - kt) < 1e-12);
        }
    }
}

TEST_CASE("quadrature_pdf: values, moments, normalization") {
    CHECK(std::abs(quadrature_pdf(StateModel::vacuum(), 0.0) - std::sqrt(2.0 / M_PI)) < 1e-12);
    CHECK(quadrature_pdf(StateModel::fock(1), 0.0) == 0.0);

    // thermal pdf is a zero-mean Gaussian with variance (1 + 2n)/4
    for (double n : {0.5, 1.0, 3.0}) {
        const StateModel t = StateModel::thermal(n);
        const QuadratureGrid g =
            build_grid(-support_radius(t), support_radius(t), 64, 16, Scheme::gauss_legendre);
        const double mass = integrate_1d([&](double x) { return quadrature_pdf(t, x); }, g, false).value;
        const double second =
            integrate_1d([&](double x) { return x * x * quadrature_pdf(t, x); }, g, false).value;
        CHECK(std::abs(mass - 1.0) < 1e-8);
        CHECK(std::abs(second - (1.0 + 2.0 * n) / 4.0) < 1e-8);
    }

    for (const StateModel& s : sample_states()) {
        const double radius = support_radius(s);
        const QuadratureGrid g = build_grid(-radius, radius, 64, 16, Scheme::gauss_legendre);
        const double mass =
            integrate_1d([&](double x) { return quadrature_pdf(s, x); }, g, false).value;
        CHECK(std::abs(mass - 1.0) < 5e-6);
    }
}

TEST_CASE("quadrature_pdf equals |wavefunction|^2 for pure states") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    std::vector<StateModel> pure;
    pure.push_back(StateModel::vacuum());
    pure.push_back(GaussianPureState::minimum_uncertainty(0.3, 1.0, 1.5));
    pure.push_back(superposition01());
    pure.push_back(displaced());
    for (const StateModel& s : pure) {
        for (int i = 0; i < 40; ++i) {
            const double x = dist(rng);
            CHECK(std::abs(quadrature_pdf(s, x) - std::norm(wavefunction(s, x))) < 1e-12);
        }
    }
}

TEST_CASE("mean_photon_number: closed cases") {
    CHECK(mean_photon_number(StateModel::vacuum()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mean_photon_number(StateModel::fock(3)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(mean_photon_number(StateModel::thermal(2.5)) == doctest::Approx(2.5).epsilon(1e-12));

    // X-antisqueezed vacuum with e^{2r} = 3 + 2 sqrt(2) carries one photon
    const double dx = (1.0 + std::sqrt(2.0)) / 2.0;
    const StateModel squeezed(GaussianPureState::minimum_uncertainty(0.0, 0.0, dx));
    CHECK(std::abs(mean_photon_number(squeezed) - 1.0) < 1e-10);

    ProductState p;
    p.factors = {StateModel::fock(2), StateModel::thermal(1.0)};
    CHECK(std::abs(mean_photon_number(StateModel(p)) - 3.0) < 1e-12);
}

TEST_CASE("squeezed_vacuum_for_energy: defining constraint") {
    CHECK(squeezed_vacuum_for_energy(0.0).delta_x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(squeezed_vacuum_for_energy(1.0).delta_x - (1.0 + std::sqrt(2.0)) / 2.0) <
          1e-12);
    for (double n : {0.25, 1.0, 4.0, 12.0}) {
        const StateModel g(squeezed_vacuum_for_energy(n));
        CHECK(std::abs(mean_photon_number(g) - n) < 1e-10);
    }
}

TEST_CASE("fock_truncate: thermal spectrum and coherent amplitudes") {
    const FockDensityMatrix t = fock_truncate(StateModel::thermal(1.0), 60);
    double expected = 0.5;
    for (int k = 0; k < 6; ++k) {
        CHECK(std::abs(t.entries(k, k).real() - expected) < 1e-14);
        expected *= 0.5;
    }
    CHECK(std::abs(t.entries.trace().real() - (1.0 - std::pow(0.5, 60))) < 1e-14);

    const FockDensityMatrix zero = fock_truncate(StateModel::coherent(0.0, 0.0), 8);
    CHECK(std::abs(zero.entries(0, 0).real() - 1.0) < 1e-14);

    const FockDensityMatrix one = fock_truncate(StateModel::coherent(1.0, 0.0), 30);
    CHECK(std::abs(one.entries(0, 0).real() - std::exp(-1.0)) < 1e-12);

    CHECK_THROWS_AS(fock_truncate(StateModel::thermal(5.0), 10), CapacityError);
    const StateModel squeezed(GaussianPureState::minimum_uncertainty(0.0, 0.0, 1.0));
    CHECK_THROWS_AS(fock_truncate(squeezed, 30), TypeError);
}

TEST_CASE("thermal kernel: M-matrix route vs number-basis truncation") {
    for (double n : {0.5, 1.0, 2.0}) {
        const StateModel closed = StateModel::thermal(n);
        const StateModel truncated(fock_truncate(closed, 80));
        for (double x = -4.0; x <= 4.0; x += 0.8) {
            for (double y = -4.0; y <= 4.0; y += 0.8) {
                CHECK(std::abs(kernel(closed, x, y) - kernel(truncated, x, y)) < 1e-6);
            }
        }
    }
}

TEST_CASE("state invariants: construction rejects bad data") {
    GaussianPureState impure;
    impure.delta_x = 1.0;
    impure.delta_y = 1.0;  // var product far from 1/16
    CHECK_THROWS_AS(StateModel{impure}, ArgumentError);

    FockVector unnormalized;
    unnormalized.coefficients = {{0.5, 0.0}, {0.5, 0.0}};
    CHECK_THROWS_AS(StateModel{unnormalized}, ArgumentError);

    CHECK_THROWS_AS(StateModel::thermal(-0.1), ArgumentError);
    CHECK_THROWS_AS(StateModel{ProductState{}}, ArgumentError);

    FockDensityMatrix traceless;
    traceless.entries = Eigen::MatrixXcd::Zero(2, 2);
    traceless.entries(0, 0) = 0.7;
    CHECK_THROWS_AS(StateModel{traceless}, ArgumentError);
}

TEST_CASE("state specs: every family parses") {
    const StateModel vac = parse_state_spec(R"({"type":"gaussian"})");
    REQUIRE(vac.get_if<GaussianPureState>() != nullptr);
    CHECK(vac.get_if<GaussianPureState>()->delta_x == 0.5);  // vacuum defaults

    const StateModel g = parse_state_spec(
        R"({"type":"gaussian","x_mean":1.0,"y_mean":-2.0,"delta_x":0.75})");
    const auto* gp = g.get_if<GaussianPureState>();
    REQUIRE(gp != nullptr);
    CHECK(gp->delta_x == 0.75);
    CHECK(gp->delta_y == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const StateModel t = parse_state_spec(R"({"type":"thermal","n_mean":1.0})");
    CHECK(t.get_if<ThermalState>() != nullptr);

    const StateModel f =
        parse_state_spec(R"({"type":"fock_vector","coefficients":[[0,0],[1,0]]})");
    CHECK(f.get_if<FockVector>() != nullptr);

    const StateModel m = parse_state_spec(
        R"({"type":"fock_matrix","entries":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
    CHECK(m.get_if<FockDensityMatrix>() != nullptr);

    const StateModel p = parse_state_spec(
        R"({"type":"product","factors":[{"type":"gaussian"},{"type":"thermal","n_mean":1}]})");
    REQUIRE(p.get_if<ProductState>() != nullptr);
    CHECK(p.get_if<ProductState>()->factors.size() == 2);
}

TEST_CASE("state specs: malformed documents rejected") {
    CHECK_THROWS_AS(parse_state_spec("not json"), ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"type":"gaussian","unknown_field":1})"), ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"no_type":1})"), ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"type":"wigner"})"), ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"type":"thermal"})"), ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"type":"fock_vector","coefficients":[[1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_state_spec(R"({"type":"product","factors":[]})"), ParseError);
    // schema-valid but invariant-violating
    CHECK_THROWS_AS(parse_state_spec(R"({"type":"fock_vector","coefficients":[[0.5,0]]})"),
                    ArgumentError);
}
