#include "quadcoh/numerics/entropy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/integrate.hpp"

namespace quadcoh {

double differential_entropy(const std::function<double(double)>& pdf, const QuadratureGrid& grid) {
    const IntegralResult norm = integrate_1d(pdf, grid, false);
    if (std::abs(norm.value - 1.0) > 1e-4)
        throw ContractError("differential_entropy: density integrates to " +
                                std::to_string(norm.value) + ", expected 1 within 1e-4",
                            norm.value);
    const auto integrand = [&pdf](double x) {
        const double p = pdf(x);
        if (p < 1e-300) return 0.0;
        return p * std::log(p);
    };
    return -integrate_1d(integrand, grid, false).value;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols())
        throw ArgumentError("von_neumann_entropy: matrix must be square");
    const double herm_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-10)
        throw ArgumentError("von_neumann_entropy: matrix not Hermitian (defect " +
                            std::to_string(herm_defect) + ")");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()[i];
        if (lambda < -1e-8)
            throw PositivityError("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                                  " below -1e-8");
        if (lambda <= 0.0) continue;  // clamp [-1e-8, 0] to zero; 0 ln 0 := 0
        entropy -= lambda * std::log(lambda);
    }
    return entropy < 0.0 ? 0.0 : entropy;
}

}  // namespace quadcoh
