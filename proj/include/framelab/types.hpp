#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace framelab {

using cplx = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTolerance = 1e-10;

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double length() const { return hi - lo; }
    [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
};

// <x, y>, linear in the first argument.
inline cplx inner(const cvec& x, const cvec& y) { return y.dot(x); }

}  // namespace framelab
