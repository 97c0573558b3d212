// Coherence functional, regularized relative entropy, and the incoherent
// approximants (box discretization and Gaussian smearing).

#include <doctest.h>

#include <cmath>
#include <vector>

#include "quadcoh/errors.hpp"
#include "quadcoh/measures/coherence.hpp"
#include "quadcoh/measures/incoherent.hpp"
#include "quadcoh/measures/relative_entropy.hpp"
#include "quadcoh/states/evaluate.hpp"
#include "quadcoh/states/fock.hpp"
#include "quadcoh/states/state_model.hpp"

using namespace quadcoh;

namespace {

const double kRoot2Pi = std::sqrt(2.0 * M_PI);

StateModel superposition(std::complex<double> c0, std::complex<double> c1) {
    FockVector v;
    v.coefficients = {c0, c1};
    return v;
}

}  // namespace

TEST_CASE("coherence_l1: closed-form dispatch") {
    CHECK(coherence_l1(StateModel::vacuum()).value == doctest::Approx(kRoot2Pi).epsilon(1e-12));
    CHECK(coherence_l1(StateModel::vacuum()).method == CoherenceMethod::analytic);
    CHECK(coherence_l1(StateModel::vacuum()).error_estimate == 0.0);

    CHECK(coherence_l1(StateModel::thermal(1.0)).value ==
          doctest::Approx(std::sqrt(2.0 * M_PI / 3.0)).epsilon(1e-12));

    ProductState two_vacua;
    two_vacua.factors = {StateModel::vacuum(), StateModel::vacuum()};
    const CoherenceReport product = coherence_l1(StateModel(two_vacua));
    CHECK(product.value == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    CHECK(product.method == CoherenceMethod::product);
}

TEST_CASE("coherence_l1: Fock |1> runs the numeric pure path") {
    const CoherenceReport rep = coherence_l1(StateModel::fock(1));
    CHECK(rep.method == CoherenceMethod::numeric_pure);
    CHECK(std::abs(rep.value - 8.0 / kRoot2Pi) / (8.0 / kRoot2Pi) < 1e-6);
}

TEST_CASE("coherence_l1_numeric: thermal truncation against the closed form") {
    const double expected = std::sqrt(2.0 * M_PI / 3.0);
    const StateModel truncated(fock_truncate(StateModel::thermal(1.0), 60));
    const CoherenceReport rep = coherence_l1_numeric(truncated, CoherenceOptions{.tolerance = 1e-4});
    CHECK(rep.method == CoherenceMethod::numeric_kernel);
    CHECK(std::abs(rep.value - expected) / expected < 1e-4);

    const QuadratureGrid g = absolute_value_grid(7.0, 4096);
    const CoherenceReport vac = coherence_l1_kernel2d(StateModel::vacuum(), g, g);
    CHECK(std::abs(vac.value - kRoot2Pi) / kRoot2Pi < 1e-6);
}

TEST_CASE("pure-state identity: C equals (int sqrt(p))^2") {
    std::vector<StateModel> states;
    states.push_back(superposition(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)));
    states.push_back(superposition(1.0 / std::sqrt(2.0), std::complex<double>(0.0, 1.0) / std::sqrt(2.0)));
    states.push_back(StateModel::fock(1));
    for (const StateModel& s : states) {
        const QuadratureGrid g = absolute_value_grid(support_radius(s), 8192);
        const double root_p =
            integrate_1d([&](double x) { return std::sqrt(quadrature_pdf(s, x)); }, g, false)
                .value;
        const double direct = coherence_l1_numeric(s).value;
        CHECK(std::abs(direct - root_p * root_p) / direct < 1e-6);
    }
}

TEST_CASE("analytic vs numeric agreement across parameters") {
    for (double dx : {0.25, 0.5, 1.0, 2.0}) {
        const StateModel g(GaussianPureState::minimum_uncertainty(0.0, 0.0, dx));
        const double analytic = coherence_l1(g).value;
        const CoherenceReport numeric = coherence_l1_numeric(g);
        CHECK(std::abs(analytic - numeric.value) <=
              std::max(1e-4, numeric.error_estimate));
    }
    for (double n : {0.0, 0.5, 1.0, 2.0}) {
        const StateModel t = StateModel::thermal(n);
        const double analytic = coherence_l1(t).value;
        const CoherenceReport numeric = coherence_l1_numeric(t, CoherenceOptions{.tolerance = 1e-4});
        CHECK(std::abs(analytic - numeric.value) <=
              std::max(1e-4, numeric.error_estimate));
    }
}

TEST_CASE("monotone energy trends of the closed forms") {
    double prev = coherence_l1(StateModel::thermal(0.0)).value;
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        const double c = coherence_l1(StateModel::thermal(n)).value;
        CHECK(c < prev);
        prev = c;
    }
    prev = 0.0;
    for (double dx : {0.25, 0.5, 1.0, 2.0}) {
        const double c =
            coherence_l1(StateModel(GaussianPureState::minimum_uncertainty(0.0, 0.0, dx))).value;
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("relative_entropy_coherence: closed forms and numeric branch") {
    const double vac = relative_entropy_coherence(StateModel::vacuum());
    CHECK(std::abs(vac - 0.5 * (1.0 + std::log(M_PI / 2.0))) < 1e-14);
    CHECK(vac == doctest::Approx(0.7257914).epsilon(1e-6));

    const StateModel wide(GaussianPureState::minimum_uncertainty(0.0, 0.0, 1.0));
    CHECK(std::abs(relative_entropy_coherence(wide) - 0.5 * (1.0 + std::log(2.0 * M_PI))) <
          1e-14);

    // thermal n=1: ln(1/4) + (1/2)[1 + ln(3 pi/2)]; the value is negative
    // because the regularization drops the diverging offset.
    const double t1 = relative_entropy_coherence(StateModel::thermal(1.0));
    CHECK(std::abs(t1 - (std::log(0.25) + 0.5 * (1.0 + std::log(1.5 * M_PI)))) < 1e-14);
    CHECK(t1 < 0.0);

    EntropyOptions opts;
    opts.fock_dim = 80;
    for (double n : {0.5, 1.0}) {
        const StateModel t = StateModel::thermal(n);
        CHECK(std::abs(relative_entropy_coherence_numeric(t, opts) -
                       relative_entropy_coherence(t)) < 1e-3);
    }
}

TEST_CASE("chi_diagonal: trace recovery and positivity") {
    const IncoherentApprox fine = chi_diagonal(StateModel::vacuum(), 0.1, 80);
    double total = 0.0;
    for (const auto& [j, w] : fine.chi_weights) {
        CHECK(w >= 0.0);
        total += w;
    }
    CHECK(std::abs(total - 1.0) < 1e-8);

    const IncoherentApprox mixed = chi_diagonal(StateModel::thermal(1.0), 0.1, 120);
    for (const auto& [j, w] : mixed.chi_weights) CHECK(w >= 0.0);
}

TEST_CASE("chi_diagonal: exact bin mass vs midpoint rule at sigma = 0.5") {
    const double sigma = 0.5;
    const IncoherentApprox exact = chi_diagonal(StateModel::vacuum(), sigma, 40);
    double w0 = 0.0;
    for (const auto& [j, w] : exact.chi_weights)
        if (j == 0) w0 = w;
    // oracle: the mass of N(0, 1/4) in (-sigma/2, sigma/2)
    const double mass = std::erf(0.25 / (0.5 * std::sqrt(2.0)));
    CHECK(std::abs(w0 - mass) < 1e-12);

    ChiOptions midpoint;
    midpoint.rule = ChiWeightRule::midpoint;
    midpoint.coverage_tol = 1e-2;  // midpoint misses mass at this sigma
    const IncoherentApprox approx = chi_diagonal(StateModel::vacuum(), sigma, 40, midpoint);
    double m0 = 0.0;
    for (const auto& [j, w] : approx.chi_weights)
        if (j == 0) m0 = w;
    CHECK(std::abs(m0 - sigma * std::sqrt(2.0 / M_PI)) < 1e-14);
    // the midpoint value overshoots the exact bin mass by O(sigma^2)
    CHECK(std::abs(w0 - m0) < 0.08 * sigma * sigma);
    CHECK(std::abs(w0 - m0) > 0.01 * sigma * sigma);
}

TEST_CASE("chi_diagonal: insufficient coverage raises CoverageError") {
    CHECK_THROWS_AS(chi_diagonal(StateModel::vacuum(), 0.1, 5), CoverageError);
}

TEST_CASE("chi_entropy_term: limit toward int p ln p") {
    const double h = 0.5 * (1.0 + std::log(M_PI / 2.0));
    const double term = chi_entropy_term(StateModel::vacuum(), 0.01, 700);
    CHECK(std::abs((term - std::log(0.01)) - (-h)) < 2e-4);

    // discrepancy shrinks monotonically as sigma halves
    double prev = 1e300;
    for (double sigma : {0.5, 0.25, 0.125}) {
        const long j_max = static_cast<long>(std::ceil(7.0 / sigma));
        const double t = chi_entropy_term(StateModel::vacuum(), sigma, j_max);
        const double gap = std::abs((t - std::log(sigma)) + h);
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("chi weights of a uniform density: exact discrete entropy") {
    // width-1 uniform density on (-1/2, 1/2), sigma = 1/9: nine bins of mass
    // 1/9 each, so sum w ln w = -ln 9 and the ln(sigma) offset cancels.
    const auto uniform = [](double x) { return std::abs(x) < 0.5 ? 1.0 : 0.0; };
    const double sigma = 1.0 / 9.0;
    const auto weights = chi_weights_from_pdf(uniform, sigma, 4, ChiWeightRule::exact_bin);
    const double term = entropy_term_from_weights(weights);
    CHECK(std::abs(term + std::log(9.0)) < 1e-12);
    CHECK(std::abs((term - std::log(sigma)) - 0.0) < 1e-12);
}

TEST_CASE("xi_incoherent_state: coherence is 2 sqrt(2 pi) sigma regardless of P") {
    const int cells = 161;
    std::vector<double> xs(cells), gauss(cells), wide(cells);
    for (int i = 0; i < cells; ++i) {
        const double x = -8.0 + 16.0 * i / (cells - 1);
        xs[i] = x;
        gauss[i] = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
        wide[i] = std::exp(-0.25 * x * x) / std::sqrt(4.0 * M_PI);
    }
    const double sigma = 0.1;
    const IncoherentApprox a = xi_incoherent_state(xs, gauss, sigma);
    const IncoherentApprox b = xi_incoherent_state(xs, wide, sigma);

    const double expected = 2.0 * kRoot2Pi * sigma;
    CHECK(xi_coherence_analytic(a) == doctest::Approx(expected).epsilon(1e-14));
    const double ca = xi_coherence_numeric(a).value;
    const double cb = xi_coherence_numeric(b).value;
    CHECK(std::abs(ca - expected) / expected < 1e-6);
    CHECK(std::abs(ca - cb) < 1e-8);

    // linear in sigma
    const IncoherentApprox fine = xi_incoherent_state(xs, gauss, 0.01);
    CHECK(xi_coherence_analytic(fine) == doctest::Approx(2.0 * kRoot2Pi * 0.01).epsilon(1e-14));
}

TEST_CASE("xi_incoherent_state: point mass and contract violations") {
    const std::vector<double> pos{1.5};
    const std::vector<double> one{3.0};
    const IncoherentApprox delta = xi_incoherent_state(pos, one, 0.05);
    CHECK(delta.xi_masses.size() == 1);
    CHECK(delta.xi_masses[0] == 1.0);
    CHECK(std::abs(xi_coherence_numeric(delta).value - 2.0 * kRoot2Pi * 0.05) /
              (2.0 * kRoot2Pi * 0.05) <
          1e-6);

    std::vector<double> xs{-1.0, 0.0, 1.0};
    std::vector<double> not_normalized{1.0, 2.0, 1.0};
    CHECK_THROWS_AS(xi_incoherent_state(xs, not_normalized, 0.1), ContractError);
    std::vector<double> negative{0.5, -0.1, 0.5};
    CHECK_THROWS_AS(xi_incoherent_state(xs, negative, 0.1), ContractError);
}

TEST_CASE("xi kernel: mixture form agrees with the banded integrator") {
    std::vector<double> xs{-2.0, -1.0, 0.0, 1.0, 2.0};
    std::vector<double> dens{0.05, 0.25, 0.4, 0.25, 0.05};
    double mass = 0.0;  // normalize by trapezoid mass so the contract passes
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        mass += 0.5 * (dens[i] + dens[i + 1]) * (xs[i + 1] - xs[i]);
    for (auto& d : dens) d /= mass;
    const IncoherentApprox approx = xi_incoherent_state(xs, dens, 0.2);

    const QuadratureGrid g = absolute_value_grid(9.0, 2048);
    const double banded = xi_coherence_numeric(approx, g, g).value;
    const QuadratureGrid gy = absolute_value_grid(9.5, 2048);  // distinct grid: generic path
    const double generic = xi_coherence_numeric(approx, g, gy).value;
    CHECK(std::abs(banded - generic) < 1e-8);
}

TEST_CASE("hilbert_schmidt_distance: identities") {
    FockDensityMatrix a, b;
    a.entries = Eigen::MatrixXcd::Zero(2, 2);
    a.entries(0, 0) = 1.0;
    b.entries = Eigen::MatrixXcd::Zero(2, 2);
    b.entries(1, 1) = 1.0;
    CHECK(hilbert_schmidt_distance(a, a) == 0.0);
    CHECK(hilbert_schmidt_distance(a, b) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(hilbert_schmidt_distance(a, b) == hilbert_schmidt_distance(b, a));

    FockDensityMatrix wider;
    wider.entries = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
    CHECK_THROWS_AS(hilbert_schmidt_distance(a, wider), ArgumentError);
}

TEST_CASE("chi reconstruction: valid density matrix, distance decreasing in sigma") {
    const StateModel thermal = StateModel::thermal(1.0);
    const int dim = 40;
    const FockDensityMatrix rho = fock_truncate(thermal, dim);

    std::vector<double> distances;
    for (double sigma : {0.5, 0.25, 0.125}) {
        const long j_max = static_cast<long>(std::ceil(8.0 / sigma));
        const FockDensityMatrix rec =
            chi_reconstruction_fock(chi_diagonal(thermal, sigma, j_max), dim);
        CHECK(std::abs(rec.entries.trace().real() - 1.0) < 1e-12);
        CHECK((rec.entries - rec.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        distances.push_back(hilbert_schmidt_distance(rho, rec));
    }
    // wider boxes preserve more of the state: d grows as sigma shrinks
    CHECK(distances[0] < distances[1]);
    CHECK(distances[1] < distances[2]);
}
