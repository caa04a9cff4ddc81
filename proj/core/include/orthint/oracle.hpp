#ifndef ORTHINT_ORACLE_HPP
#define ORTHINT_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "orthint/power_matrix.hpp"
#include "orthint/rational.hpp"

namespace orthint {

struct MomentEstimate {
    double mean = 0.0;
    double standardError = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Angular average of cos^a(t) sin^b(t): zero for odd powers, otherwise
/// (a-1)!!(b-1)!!/(a+b)!!.
Rational wallisMoment(int a, int b);

/// O(1) = {+1,-1} with equal weights: 1 for even m, 0 for odd.
Rational exactO1(int m);

/// Haar on O(2) as the equal mixture of rotations and reflections with a
/// uniform angle; exact moment of the monomial for a support within 2x2.
Rational exactO2(const PowerMatrix& m);

/// U(1) moment of x^m y^n with x = cos t, y = sin t.
Rational exactU1(int m, int n);

/// Deterministic standard normal deviates: mt19937_64 uniforms mapped to
/// [0,1) by the top 53 bits, paired through the Box-Muller transform.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
    double next();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool hasSpare_ = false;
};

/// Haar-distributed Q in O(n): QR of a standard Gaussian matrix with each
/// column sign-fixed so the triangular factor has a positive diagonal.
Eigen::MatrixXd haarSampleOrthogonal(int n, GaussianSource& source);

/// Monte Carlo mean and standard error of the monomial at concrete
/// dimension n; bit-for-bit reproducible for a fixed seed.
MomentEstimate mcMoment(const PowerMatrix& m, int n, std::uint64_t samples,
                        std::uint64_t seed);

} // namespace orthint

#endif
