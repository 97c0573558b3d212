#pragma once

#include <complex>
#include <memory>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace quadcoh {

class StateModel;

// Pure Gaussian state of one mode, parameterized by the means and second
// moments of the quadratures X and Y (a = X + iY, so the vacuum has
// delta_x = delta_y = 1/2). Purity pins the covariance:
// var_x * var_y - cov^2 = 1/16.
struct GaussianPureState {
    double x_mean = 0.0;
    double y_mean = 0.0;
    double delta_x = 0.5;
    double delta_y = 0.5;
    double xy_correlation = 0.0;

    double var_x() const { return delta_x * delta_x; }
    double var_y() const { return delta_y * delta_y; }

    // delta_y = 1/(4 delta_x), zero correlation.
    static GaussianPureState minimum_uncertainty(double x_mean, double y_mean, double delta_x);
    // checks the purity invariant within 1e-10
    void validate() const;
};

struct ThermalState {
    double n_mean = 0.0;
    void validate() const;
};

// Superposition sum c_n |n>; coefficients normalized within 1e-10.
struct FockVector {
    std::vector<std::complex<double>> coefficients;
    void validate() const;
    int dim() const { return static_cast<int>(coefficients.size()); }
};

// Density matrix in the number basis: Hermitian within 1e-10, unit trace
// within 1e-8, spectrum >= -1e-8.
struct FockDensityMatrix {
    Eigen::MatrixXcd entries;
    void validate() const;
    int dim() const { return static_cast<int>(entries.rows()); }
};

struct ProductState {
    std::vector<StateModel> factors;  // one per mode, nonempty
    void validate() const;
};

// x -> lambda x squeeze applied to an arbitrary inner state:
// kernel'(x,x') = kernel(x/lambda, x'/lambda) / lambda.
struct Rescaled {
    std::shared_ptr<const StateModel> inner;
    double lambda = 1.0;
    void validate() const;
};

// Phase-space displacement of an arbitrary inner state:
// kernel'(x,x') = e^{2i y0 (x-x')} kernel(x-x0, x'-x0).
struct Displaced {
    std::shared_ptr<const StateModel> inner;
    double x0 = 0.0;
    double y0 = 0.0;
    void validate() const;
};

// Unit-determinant change of the two-mode quadrature coordinates
// (rotation for a beam splitter, hyperbolic for a two-mode squeezer).
struct RemapMatrix {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    static RemapMatrix identity() { return {}; }
    static RemapMatrix rotation(double theta);
    static RemapMatrix hyperbolic(double theta);

    double det() const { return a11 * a22 - a12 * a21; }
    RemapMatrix inverse() const;
    RemapMatrix times(const RemapMatrix& rhs) const;
    void apply(double x1, double x2, double& u1, double& u2) const;
    bool is_identity() const;
    void validate() const;  // |det - 1| < 1e-12
};

// Two-mode pure state obtained by remapping the coordinates of a product of
// two pure single-mode states.
struct TwoModeRemapped {
    std::shared_ptr<const StateModel> mode1;
    std::shared_ptr<const StateModel> mode2;
    RemapMatrix remap;
    void validate() const;
};

// The single currency of the library: a tagged union over every state
// family plus the exact transform wrappers.
class StateModel {
public:
    using Variant = std::variant<GaussianPureState, ThermalState, FockVector, FockDensityMatrix,
                                 ProductState, Rescaled, Displaced, TwoModeRemapped>;

    StateModel(GaussianPureState s);
    StateModel(ThermalState s);
    StateModel(FockVector s);
    StateModel(FockDensityMatrix s);
    StateModel(ProductState s);
    StateModel(Rescaled s);
    StateModel(Displaced s);
    StateModel(TwoModeRemapped s);

    const Variant& value() const { return value_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&value_);
    }

    bool is_pure() const;
    bool is_single_mode() const;
    int mode_count() const;

    static StateModel vacuum();
    static StateModel coherent(double x_mean, double y_mean);
    static StateModel fock(int n);
    static StateModel thermal(double n_mean);

private:
    Variant value_;
};

inline std::shared_ptr<const StateModel> share(StateModel s) {
    return std::make_shared<const StateModel>(std::move(s));
}

}  // namespace quadcoh
