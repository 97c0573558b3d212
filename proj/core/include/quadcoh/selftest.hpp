#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcoh/measures/coherence.hpp"

namespace quadcoh {

enum class GaussianComparator { squeezed_vacuum, coherent };

// Number-state coherence C(n) against the Gaussian comparator with the same
// mean photon number. The default comparator is the X-antisqueezed vacuum
// (largest delta_x at fixed energy); the coherent-state comparator has
// constant C = sqrt(2 pi), which makes the ratio grow instead of decay.
struct EnergyRatioRow {
    int n = 0;
    double c_fock = 0.0;
    double c_gauss = 0.0;
    double ratio = 0.0;
};
EnergyRatioRow energy_ratio_row(int n, GaussianComparator comparator,
                                const CoherenceOptions& opts = {});
std::vector<EnergyRatioRow> energy_ratio_rows(int n_max, GaussianComparator comparator,
                                              const CoherenceOptions& opts = {});

// One sub-check of an acceptance criterion.
struct CheckPart {
    std::string label;
    double expected = 0.0;
    double got = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool budget = false;  // runtime limits and monotonicity margins
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    // worst sub-check, for one-line reporting
    double expected = 0.0;
    double got = 0.0;
    double tol = 0.0;
    double seconds = 0.0;
    std::vector<CheckPart> parts;
};

struct SelftestOptions {
    // When set, accuracy tolerances become min(stated, override); runtime
    // limits are unaffected.
    std::optional<double> tolerance_override;
    int grid_points = 4096;
    int fock_dim = 64;
};

// Runs the full battery of library-level cross-checks (closed forms vs
// quadrature, transformation laws, discretization limits) and returns one
// result per criterion.
std::vector<CriterionResult> run_acceptance_criteria(const SelftestOptions& opts = {});

}  // namespace quadcoh
