#include "framelab/frame_core.hpp"

#include "framelab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace framelab {

namespace {

double rank_cutoff(std::size_t dim, double lambda_max) {
    return static_cast<double>(dim) * std::numeric_limits<double>::epsilon() *
           std::max(lambda_max, 0.0);
}

FrameBounds bounds_from_spectrum(const rvec& spectrum, std::size_t dim, bool smallest_nonzero) {
    if (spectrum.size() == 0) return {};
    const double top = std::max(spectrum(spectrum.size() - 1), 0.0);
    const double cutoff = rank_cutoff(dim, top);
    double low = std::max(spectrum(0), 0.0);
    if (smallest_nonzero) {
        low = 0.0;
        for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
            if (spectrum(i) > cutoff) {
                low = spectrum(i);
                break;
            }
        }
    } else if (low <= cutoff) {
        low = 0.0;
    }
    return {low, top};
}

}  // namespace

VectorSystem::VectorSystem(std::size_t dim, cmat columns, std::string label, int)
    : dim_(dim), columns_(std::move(columns)), label_(std::move(label)) {}

VectorSystem::VectorSystem(std::size_t ambient_dim, const std::vector<cvec>& vectors,
                           std::string label)
    : dim_(ambient_dim), label_(std::move(label)) {
    if (ambient_dim == 0) throw DimensionError("VectorSystem: ambient dimension must be positive");
    columns_.resize(static_cast<Eigen::Index>(ambient_dim),
                    static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (static_cast<std::size_t>(vectors[k].size()) != ambient_dim) {
            throw DimensionError("VectorSystem: vector " + std::to_string(k) + " has length " +
                                 std::to_string(vectors[k].size()) + ", expected " +
                                 std::to_string(ambient_dim));
        }
        columns_.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
}

VectorSystem VectorSystem::from_columns(const cmat& columns, std::string label) {
    if (columns.rows() == 0) throw DimensionError("VectorSystem: ambient dimension must be positive");
    return VectorSystem(static_cast<std::size_t>(columns.rows()), columns, std::move(label), 0);
}

VectorSystem VectorSystem::standard_basis(std::size_t dim, std::string label) {
    if (dim == 0) throw DimensionError("VectorSystem: ambient dimension must be positive");
    const auto d = static_cast<Eigen::Index>(dim);
    return VectorSystem(dim, cmat::Identity(d, d), std::move(label), 0);
}

VectorSystem VectorSystem::empty(std::size_t dim, std::string label) {
    if (dim == 0) throw DimensionError("VectorSystem: ambient dimension must be positive");
    return VectorSystem(dim, cmat(static_cast<Eigen::Index>(dim), 0), std::move(label), 0);
}

cvec VectorSystem::vector(std::size_t k) const {
    if (k >= size()) throw DimensionError("VectorSystem: index out of range");
    return columns_.col(static_cast<Eigen::Index>(k));
}

VectorSystem VectorSystem::concatenated(const VectorSystem& tail, std::string label) const {
    if (tail.dim_ != dim_) throw DimensionError("concatenation: ambient dimensions differ");
    cmat joined(columns_.rows(), columns_.cols() + tail.columns_.cols());
    joined << columns_, tail.columns_;
    if (label.empty()) label = label_ + " + " + tail.label_;
    return VectorSystem(dim_, std::move(joined), std::move(label), 0);
}

VectorSystem VectorSystem::scaled(cplx factor, std::string label) const {
    return VectorSystem(dim_, columns_ * factor, label.empty() ? label_ : std::move(label), 0);
}

VectorSystem VectorSystem::relabeled(std::string label) const {
    return VectorSystem(dim_, columns_, std::move(label), 0);
}

bool FrameBounds::tight(double rtol) const {
    return upper > 0.0 && (upper - lower) <= rtol * upper;
}

bool is_frame(const FrameBounds& b, double ratio_floor) {
    return b.upper > 0.0 && b.lower / b.upper >= ratio_floor;
}

cvec synthesis(const VectorSystem& sys, const cvec& coeffs) {
    if (static_cast<std::size_t>(coeffs.size()) != sys.size()) {
        throw DimensionError("synthesis: " + std::to_string(coeffs.size()) +
                             " coefficients for " + std::to_string(sys.size()) + " vectors");
    }
    if (sys.empty()) return cvec::Zero(static_cast<Eigen::Index>(sys.ambient_dim()));
    return sys.synthesis_matrix() * coeffs;
}

cvec analysis(const VectorSystem& sys, const cvec& f) {
    if (static_cast<std::size_t>(f.size()) != sys.ambient_dim()) {
        throw DimensionError("analysis: vector length does not match ambient dimension");
    }
    return sys.synthesis_matrix().adjoint() * f;
}

cmat frame_operator(const VectorSystem& sys) {
    const auto d = static_cast<Eigen::Index>(sys.ambient_dim());
    if (sys.empty()) return cmat::Zero(d, d);
    const cmat& t = sys.synthesis_matrix();
    cmat s = t * t.adjoint();
    return (s + s.adjoint()) * 0.5;
}

rvec hermitian_spectrum(const cmat& m) {
    if (m.rows() != m.cols()) throw DimensionError("hermitian_spectrum: matrix is not square");
    if (m.rows() == 0) return rvec();
    const cmat h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<cmat> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

FrameBounds frame_bounds(const VectorSystem& sys, BoundsMode mode) {
    if (mode == BoundsMode::span && sys.empty()) {
        throw DomainError("frame_bounds: span mode needs a nonempty system");
    }
    return bounds_from_spectrum(hermitian_spectrum(frame_operator(sys)), sys.ambient_dim(),
                                mode == BoundsMode::span);
}

FrameBounds riesz_bounds(const VectorSystem& sys) {
    if (sys.empty()) throw DomainError("riesz_bounds: empty system");
    const cmat& t = sys.synthesis_matrix();
    // More vectors than dimensions: the Gram matrix is singular and shares its
    // nonzero spectrum with the (smaller) frame operator.
    if (sys.size() > sys.ambient_dim()) {
        const rvec spec = hermitian_spectrum(frame_operator(sys));
        return {0.0, std::max(spec(spec.size() - 1), 0.0)};
    }
    return bounds_from_spectrum(hermitian_spectrum(t.adjoint() * t), sys.size(), false);
}

cmat inverse_frame_operator(const VectorSystem& sys, BoundsMode mode, double tolerance) {
    const FrameBounds b = frame_bounds(sys, mode);
    if (!(b.lower > tolerance)) {
        throw SingularFrameError("lower frame bound " + std::to_string(b.lower) +
                                 " is not above tolerance");
    }
    const cmat s = frame_operator(sys);
    Eigen::SelfAdjointEigenSolver<cmat> solver(s);
    const rvec& lambda = solver.eigenvalues();
    const double cutoff = rank_cutoff(sys.ambient_dim(), lambda(lambda.size() - 1));
    rvec inv(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        inv(i) = lambda(i) > cutoff ? 1.0 / lambda(i) : 0.0;
    }
    const cmat& v = solver.eigenvectors();
    return v * inv.asDiagonal() * v.adjoint();
}

VectorSystem canonical_dual(const VectorSystem& sys, BoundsMode mode, double tolerance) {
    const cmat s_inv = inverse_frame_operator(sys, mode, tolerance);
    return VectorSystem::from_columns(s_inv * sys.synthesis_matrix(),
                                      "canonical dual of " + sys.label());
}

double operator_norm(const cmat& m) {
    if (m.size() == 0) return 0.0;
    const cmat gram = m.cols() <= m.rows() ? cmat(m.adjoint() * m) : cmat(m * m.adjoint());
    const rvec spec = hermitian_spectrum(gram);
    return std::sqrt(std::max(spec(spec.size() - 1), 0.0));
}

AnalysisReport duality_check(const VectorSystem& f_sys, const VectorSystem& g_sys,
                             double tolerance) {
    if (f_sys.ambient_dim() != g_sys.ambient_dim() || f_sys.size() != g_sys.size()) {
        throw DimensionError("duality_check: systems differ in length or ambient dimension");
    }
    const auto d = static_cast<Eigen::Index>(f_sys.ambient_dim());
    cmat defect = cmat::Identity(d, d);
    if (!f_sys.empty()) defect -= g_sys.synthesis_matrix() * f_sys.synthesis_matrix().adjoint();
    return AnalysisReport::from_residuals({{"duality", operator_norm(defect)}}, tolerance,
                                          "operator norm of I - U T*");
}

cmat cross_gram(const VectorSystem& f_sys, const VectorSystem& g_sys) {
    if (f_sys.ambient_dim() != g_sys.ambient_dim()) {
        throw DimensionError("cross_gram: ambient dimensions differ");
    }
    return (g_sys.synthesis_matrix().adjoint() * f_sys.synthesis_matrix()).transpose();
}

double biorthogonality_residual(const cmat& cross) {
    if (cross.rows() != cross.cols()) {
        throw DimensionError("biorthogonality_residual: systems differ in length");
    }
    if (cross.size() == 0) return 0.0;
    const auto n = cross.rows();
    return (cross - cmat::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace framelab
