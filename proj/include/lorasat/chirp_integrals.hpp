#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace lorasat {

// Thrown when an oscillatory quadrature fails its self-check (doubling the
// oversampling changes the result beyond tolerance) or is configured below
// the supported oversampling floor.
class NonConvergent : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Fresnel integral F(x) = C(x) + i S(x) = integral_0^x exp(i pi t^2 / 2) dt.
// Power series for small |x|; for large |x| evaluated through
// erf((sqrt(pi)/2)(1-i)x) with a continued-fraction erfc on the rotated ray,
// where |exp(-z^2)| = 1 so there is no overflow at any magnitude.
std::complex<double> fresnel(double x);

// integral_a^b exp(i (alpha u^2 + beta u)) du, closed form.
// Centered at the midpoint and dispatched over three regimes: a Taylor
// expansion in the quadratic term when it is mild, the Fresnel form when the
// stationary point is near the segment, and an integration-by-parts
// asymptotic series when the phase slope never gets small; a Gauss-Legendre
// fallback covers the rare series breakdown.
std::complex<double> chirp_segment_integral(double alpha, double beta, double a,
                                            double b);

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order.
const std::vector<double>& gauss_legendre_nodes(int order);
const std::vector<double>& gauss_legendre_weights(int order);

}  // namespace lorasat
