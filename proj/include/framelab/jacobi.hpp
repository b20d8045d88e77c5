#pragma once

// Cyclic Jacobi eigenvalues of a real symmetric matrix, templated on the
// scalar so it runs in extended precision (Eigen's solvers do not accept the
// boost multiprecision types here).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace framelab {

/// Row-major n x n symmetric matrix in, ascending eigenvalues out.
template <class Real>
std::vector<Real> jacobi_eigenvalues(std::vector<Real> m, std::size_t n, int max_sweeps = 100) {
    using std::abs;
    using std::sqrt;
    auto at = [&](std::size_t i, std::size_t j) -> Real& { return m[i * n + j]; };
    Real total = 0;
    for (const Real& v : m) total += v * v;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real off = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        }
        if (off == 0 || off <= total * std::numeric_limits<Real>::epsilon() * std::numeric_limits<Real>::epsilon()) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Real apq = at(p, q);
                if (apq == 0) continue;
                const Real theta = (at(q, q) - at(p, p)) / (2 * apq);
                const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(theta * theta + 1));
                const Real c = 1 / sqrt(t * t + 1);
                const Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const Real akp = at(k, p);
                    const Real akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Real apk = at(p, k);
                    const Real aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<Real> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace framelab
