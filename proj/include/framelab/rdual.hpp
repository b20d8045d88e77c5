#pragma once

// R-duals of finite sequences with respect to a pair of orthonormal bases,
// and numerical checks of the frame/Riesz transfer properties.

#include "framelab/frame_core.hpp"

#include <optional>

namespace framelab::rdual {

/// Two orthonormal bases {e_i}, {h_i} of C^N.
class OrthonormalPair {
 public:
    /// Throws PreconditionError unless both systems are orthonormal bases (to 1e-10).
    OrthonormalPair(VectorSystem e_basis, VectorSystem h_basis);

    static OrthonormalPair standard(std::size_t n);

    [[nodiscard]] const VectorSystem& e() const { return e_; }
    [[nodiscard]] const VectorSystem& h() const { return h_; }
    [[nodiscard]] std::size_t dim() const { return e_.ambient_dim(); }
    [[nodiscard]] OrthonormalPair swapped() const { return OrthonormalPair(h_, e_); }

 private:
    VectorSystem e_;
    VectorSystem h_;
};

struct RDualReport {
    FrameBounds bessel_f;       // upper bound of f (Bessel)
    FrameBounds bessel_omega;   // upper bound of omega (Bessel)
    FrameBounds frame_f;        // frame bounds of f on C^N
    FrameBounds riesz_omega;    // Riesz bounds of omega
    double involution_residual = 0.0;
    std::optional<double> biorthogonality_residual;
    AnalysisReport report;      // relative bound agreement residuals
};

struct NSequence {
    VectorSystem vectors;             // the n_i
    FrameBounds tight_bound_estimate; // bounds as a frame for W = span(omega)
    AnalysisReport tightness;         // pass iff both bounds equal 1
};

/// omega_j = sum_i <f_i, e_j> h_i. f_sys must hold exactly N vectors in C^N.
VectorSystem r_dual(const VectorSystem& f_sys, const OrthonormalPair& pair);

/// max_i || f_i - sum_j <omega_j, h_i> e_j ||.
AnalysisReport r_dual_inverse_check(const VectorSystem& f_sys, const VectorSystem& omega_sys,
                                    const OrthonormalPair& pair,
                                    double tolerance = kDefaultTolerance);

/// Compares frame bounds of f with Riesz bounds of its R-dual (relative agreement).
RDualReport verify_rdual_theorem(const VectorSystem& f_sys, const OrthonormalPair& pair,
                                 double rtol = 1e-10);

/// Verdict agreement between duality of (f, g) and biorthogonality of their R-duals.
AnalysisReport verify_dual_pair_biorthogonality(const VectorSystem& f_sys,
                                                const VectorSystem& g_sys,
                                                const OrthonormalPair& pair,
                                                double tolerance = kDefaultTolerance);

/// Dual Riesz sequence inside span(omega): omega G^{-1}.
VectorSystem dual_riesz_sequence(const VectorSystem& omega_sys,
                                 double tolerance = kDefaultTolerance);

/// n_i = sum_k <e_k, f_i> dual_omega_k. omega may live in a larger space C^M
/// (M >= N) so that W is a proper subspace; f_sys holds N vectors of C^N.
NSequence n_sequence(const VectorSystem& f_sys, const VectorSystem& omega_sys,
                     const OrthonormalPair& pair, double tolerance = kDefaultTolerance);

}  // namespace framelab::rdual
