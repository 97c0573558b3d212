#include "quadcoh/numerics/hermite.hpp"

#include <cmath>
#include <string>

#include "quadcoh/errors.hpp"

namespace quadcoh {

namespace {

// h_0(q) = pi^{-1/4} e^{-q^2/2}; h_{n+1} = sqrt(2/(n+1)) q h_n - sqrt(n/(n+1)) h_{n-1}.
// The h_n are orthonormal and uniformly bounded, so the forward recurrence is
// stable at every order we allow.
inline double h0(double q) { return std::pow(M_PI, -0.25) * std::exp(-0.5 * q * q); }

}  // namespace

double hermite_psi(int n, double x, int max_order) {
    if (n < 0) throw ArgumentError("hermite_psi: order must be nonnegative");
    if (n > max_order)
        throw CapacityError("hermite_psi: order " + std::to_string(n) +
                            " exceeds maximum " + std::to_string(max_order));
    const double q = std::sqrt(2.0) * x;
    double hm = 0.0;        // h_{k-1}
    double hk = h0(q);      // h_k
    for (int k = 0; k < n; ++k) {
        const double hn = std::sqrt(2.0 / (k + 1)) * q * hk - std::sqrt(double(k) / (k + 1)) * hm;
        hm = hk;
        hk = hn;
    }
    return std::pow(2.0, 0.25) * hk;
}

void hermite_psi_all(int n_max, double x, std::span<double> out, int max_order) {
    if (n_max < 0) throw ArgumentError("hermite_psi_all: order must be nonnegative");
    if (n_max > max_order)
        throw CapacityError("hermite_psi_all: order " + std::to_string(n_max) +
                            " exceeds maximum " + std::to_string(max_order));
    if (out.size() < static_cast<std::size_t>(n_max) + 1)
        throw ArgumentError("hermite_psi_all: output span too small");
    const double q = std::sqrt(2.0) * x;
    const double scale = std::pow(2.0, 0.25);
    double hm = 0.0;
    double hk = h0(q);
    out[0] = scale * hk;
    for (int k = 0; k < n_max; ++k) {
        const double hn = std::sqrt(2.0 / (k + 1)) * q * hk - std::sqrt(double(k) / (k + 1)) * hm;
        hm = hk;
        hk = hn;
        out[k + 1] = scale * hk;
    }
}

}  // namespace quadcoh
