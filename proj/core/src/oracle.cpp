#include "orthint/oracle.hpp"

#include <cmath>
#include <numbers>

#include "orthint/errors.hpp"

namespace orthint {

Rational wallisMoment(int a, int b) {
    if (a % 2 != 0 || b % 2 != 0) return 0;
    return Rational(doubleFactorial(a - 1) * doubleFactorial(b - 1),
                    doubleFactorial(a + b));
}

Rational exactO1(int m) { return m % 2 == 0 ? 1 : 0; }

Rational exactO2(const PowerMatrix& m) {
    if (m.supportRows() > 2 || m.columnCount() > 2)
        throw ShapeError("exact O(2) oracle needs a support within 2x2");
    const int a00 = m.entry(0, 0);
    const int a01 = m.columnCount() > 1 ? m.entry(0, 1) : 0;
    const int a10 = m.supportRows() > 1 ? m.entry(1, 0) : 0;
    const int a11 = (m.supportRows() > 1 && m.columnCount() > 1) ? m.entry(1, 1) : 0;

    // Rotation [[c,-s],[s,c]] contributes sign (-1)^a01, reflection
    // [[c,s],[s,-c]] contributes (-1)^a11; both share the same Wallis moment.
    const int rotationSign = a01 % 2 == 0 ? 1 : -1;
    const int reflectionSign = a11 % 2 == 0 ? 1 : -1;
    return Rational(rotationSign + reflectionSign, 2) *
           wallisMoment(a00 + a11, a01 + a10);
}

Rational exactU1(int m, int n) { return wallisMoment(m, n); }

double GaussianSource::next() {
    if (hasSpare_) {
        hasSpare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    hasSpare_ = true;
    return radius * std::cos(angle);
}

Eigen::MatrixXd haarSampleOrthogonal(int n, GaussianSource& source) {
    while (true) {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g(i, j) = source.next();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        const Eigen::MatrixXd r = qr.matrixQR();
        bool degenerate = false;
        for (int j = 0; j < n; ++j) {
            if (r(j, j) == 0.0) {
                degenerate = true;
                break;
            }
            if (r(j, j) < 0.0) q.col(j) = -q.col(j);
        }
        if (!degenerate) return q;
    }
}

MomentEstimate mcMoment(const PowerMatrix& m, int n, std::uint64_t samples,
                        std::uint64_t seed) {
    if (n < m.validityBound())
        throw DimensionTooSmall("dimension " + std::to_string(n) +
                                " is below the validity bound " +
                                std::to_string(m.validityBound()));
    if (samples < 2)
        throw DimensionTooSmall("Monte Carlo estimation needs at least 2 samples");

    GaussianSource source(seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXd q = haarSampleOrthogonal(n, source);
        double value = 1.0;
        for (int i = 0; i < m.supportRows(); ++i)
            for (int c = 0; c < m.columnCount(); ++c)
                for (int e = 0; e < m.entry(i, c); ++e)
                    value *= q(i, c);
        const double delta = value - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (value - mean);
    }
    const double variance = m2 / static_cast<double>(samples - 1);
    MomentEstimate out;
    out.mean = mean;
    out.standardError = std::sqrt(variance / static_cast<double>(samples));
    out.samples = samples;
    out.seed = seed;
    return out;
}

} // namespace orthint
