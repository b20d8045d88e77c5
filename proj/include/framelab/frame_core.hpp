#pragma once

// Finite frames: synthesis/analysis/frame operators, optimal frame and Riesz
// bounds, canonical duals and dual-pair checks. Vectors live in C^d with the
// inner product <x, y> = sum x_i conj(y_i).

#include "framelab/report.hpp"
#include "framelab/types.hpp"

#include <string>
#include <vector>

namespace framelab {

/// Ordered finite family of vectors in C^d. Immutable; may be empty.
class VectorSystem {
 public:
    VectorSystem(std::size_t ambient_dim, const std::vector<cvec>& vectors, std::string label = {});

    /// Columns of `columns` become the vectors.
    static VectorSystem from_columns(const cmat& columns, std::string label = {});
    static VectorSystem standard_basis(std::size_t dim, std::string label = "standard basis");
    static VectorSystem empty(std::size_t dim, std::string label = "empty");

    [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(columns_.cols()); }
    [[nodiscard]] bool empty() const { return size() == 0; }
    [[nodiscard]] cvec vector(std::size_t k) const;
    [[nodiscard]] const std::string& label() const { return label_; }

    /// The d x n matrix whose columns are the vectors (the synthesis operator).
    [[nodiscard]] const cmat& synthesis_matrix() const { return columns_; }

    [[nodiscard]] VectorSystem concatenated(const VectorSystem& tail, std::string label = {}) const;
    [[nodiscard]] VectorSystem scaled(cplx factor, std::string label = {}) const;
    [[nodiscard]] VectorSystem relabeled(std::string label) const;

 private:
    VectorSystem(std::size_t dim, cmat columns, std::string label, int);

    std::size_t dim_;
    cmat columns_;
    std::string label_;
};

/// Optimal bounds. lower == 0 signals failure of the lower inequality.
struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] bool tight(double rtol = 1e-10) const;
};

enum class BoundsMode { full_space, span };

/// Ratio lower/upper below which a system is declared "not a frame".
inline constexpr double kFrameRatioFloor = 1e-10;

[[nodiscard]] bool is_frame(const FrameBounds& b, double ratio_floor = kFrameRatioFloor);

cvec synthesis(const VectorSystem& sys, const cvec& coeffs);
cvec analysis(const VectorSystem& sys, const cvec& f);
cmat frame_operator(const VectorSystem& sys);

/// Ascending real spectrum of a Hermitian matrix (symmetrized first).
rvec hermitian_spectrum(const cmat& m);

/// Spectral frame bounds. mode=span uses the smallest eigenvalue above the
/// numerical-rank cutoff d * eps * lambda_max.
FrameBounds frame_bounds(const VectorSystem& sys, BoundsMode mode = BoundsMode::full_space);

/// Extreme eigenvalues of the Gram matrix G_jk = <f_k, f_j>.
FrameBounds riesz_bounds(const VectorSystem& sys);

/// {S^{-1} f_k} (pseudo-inverse of S in mode=span).
VectorSystem canonical_dual(const VectorSystem& sys, BoundsMode mode = BoundsMode::full_space,
                            double tolerance = kDefaultTolerance);

/// S^{-1} (or S^+ in mode=span) for a system whose lower bound exceeds tolerance.
cmat inverse_frame_operator(const VectorSystem& sys, BoundsMode mode = BoundsMode::full_space,
                            double tolerance = kDefaultTolerance);

/// Residual ||I - U T^*||_2 where T, U synthesize f_sys and g_sys.
AnalysisReport duality_check(const VectorSystem& f_sys, const VectorSystem& g_sys,
                             double tolerance = kDefaultTolerance);

/// M_jk = <f_j, g_k>.
cmat cross_gram(const VectorSystem& f_sys, const VectorSystem& g_sys);

/// max_jk |M_jk - delta_jk|; requires a square matrix.
double biorthogonality_residual(const cmat& cross);

/// Largest singular value of a dense matrix.
double operator_norm(const cmat& m);

}  // namespace framelab
