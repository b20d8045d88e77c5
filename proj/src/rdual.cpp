#include "framelab/rdual.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace framelab::rdual {

namespace {

constexpr double kOrthonormalTolerance = 1e-10;

void require_square_family(const VectorSystem& sys, std::size_t n, const char* what) {
    if (sys.ambient_dim() != n) {
        throw DimensionError(std::string(what) + ": ambient dimension differs from the bases");
    }
    if (sys.size() != n) {
        throw ModelError(std::string(what) +
                         ": the finite R-dual model indexes the sequence by the orthonormal "
                         "basis, so it needs exactly N = dim H = " +
                         std::to_string(n) + " vectors (got " + std::to_string(sys.size()) + ")");
    }
}

double relative_gap(double x, double y, double scale) {
    return scale > 0.0 ? std::abs(x - y) / scale : std::abs(x - y);
}

// Coefficient matrix C_ij = <f_i, e_j>.
cmat coefficients(const VectorSystem& f, const VectorSystem& e) {
    return cross_gram(f, e);
}

}  // namespace

OrthonormalPair::OrthonormalPair(VectorSystem e_basis, VectorSystem h_basis)
    : e_(std::move(e_basis)), h_(std::move(h_basis)) {
    const std::size_t n = e_.ambient_dim();
    if (h_.ambient_dim() != n || e_.size() != n || h_.size() != n) {
        throw DimensionError("OrthonormalPair: both bases need N vectors in C^N");
    }
    if (biorthogonality_residual(cross_gram(e_, e_)) > kOrthonormalTolerance ||
        biorthogonality_residual(cross_gram(h_, h_)) > kOrthonormalTolerance) {
        throw PreconditionError("OrthonormalPair: bases are not orthonormal");
    }
}

OrthonormalPair OrthonormalPair::standard(std::size_t n) {
    return {VectorSystem::standard_basis(n, "e"), VectorSystem::standard_basis(n, "h")};
}

VectorSystem r_dual(const VectorSystem& f_sys, const OrthonormalPair& pair) {
    require_square_family(f_sys, pair.dim(), "r_dual");
    // omega_j = sum_i C_ij h_i  =>  Omega = H C.
    const cmat c = coefficients(f_sys, pair.e());
    return VectorSystem::from_columns(pair.h().synthesis_matrix() * c,
                                      "R-dual of " + f_sys.label());
}

AnalysisReport r_dual_inverse_check(const VectorSystem& f_sys, const VectorSystem& omega_sys,
                                    const OrthonormalPair& pair, double tolerance) {
    require_square_family(f_sys, pair.dim(), "r_dual_inverse_check");
    require_square_family(omega_sys, pair.dim(), "r_dual_inverse_check");
    // f_i = sum_j <omega_j, h_i> e_j  =>  F = E D with D_ji = <omega_j, h_i>.
    const cmat d = cross_gram(omega_sys, pair.h());
    const cmat rebuilt = pair.e().synthesis_matrix() * d;
    const double residual = (f_sys.synthesis_matrix() - rebuilt).colwise().norm().maxCoeff();
    return AnalysisReport::from_residuals({{"inverse", residual}}, tolerance,
                                          "max_i ||f_i - sum_j <omega_j, h_i> e_j||");
}

RDualReport verify_rdual_theorem(const VectorSystem& f_sys, const OrthonormalPair& pair,
                                 double rtol) {
    const VectorSystem omega = r_dual(f_sys, pair);
    RDualReport out;
    out.frame_f = frame_bounds(f_sys);
    out.riesz_omega = riesz_bounds(omega);
    out.bessel_f = {0.0, out.frame_f.upper};
    out.bessel_omega = {0.0, frame_bounds(omega).upper};
    const VectorSystem back = r_dual(omega, pair.swapped());
    out.involution_residual =
        (back.synthesis_matrix() - f_sys.synthesis_matrix()).cwiseAbs().maxCoeff();

    const double scale = std::max(out.frame_f.upper, out.riesz_omega.upper);
    out.report = AnalysisReport::from_residuals(
        {{"lower", relative_gap(out.frame_f.lower, out.riesz_omega.lower, scale)},
         {"upper", relative_gap(out.frame_f.upper, out.riesz_omega.upper, scale)},
         {"bessel", relative_gap(out.bessel_f.upper, out.bessel_omega.upper, scale)}},
        rtol, "frame bounds of f against Riesz bounds of its R-dual, relative to the upper bound");
    out.report.with_metric("frame_lower", out.frame_f.lower)
        .with_metric("frame_upper", out.frame_f.upper)
        .with_metric("riesz_lower", out.riesz_omega.lower)
        .with_metric("riesz_upper", out.riesz_omega.upper)
        .with_metric("involution", out.involution_residual);
    return out;
}

AnalysisReport verify_dual_pair_biorthogonality(const VectorSystem& f_sys,
                                                const VectorSystem& g_sys,
                                                const OrthonormalPair& pair, double tolerance) {
    require_square_family(f_sys, pair.dim(), "verify_dual_pair_biorthogonality");
    require_square_family(g_sys, pair.dim(), "verify_dual_pair_biorthogonality");
    const AnalysisReport dual = duality_check(f_sys, g_sys, tolerance);
    const double bio = biorthogonality_residual(cross_gram(r_dual(f_sys, pair), r_dual(g_sys, pair)));
    const bool dual_ok = dual.passed();
    const bool bio_ok = bio <= tolerance;

    AnalysisReport r;
    r.tolerance_used = tolerance;
    r.verdict = dual_ok == bio_ok ? Verdict::pass : Verdict::fail;
    r.metrics = {{"duality", dual.residuals.at("duality")},
                 {"biorthogonality", bio},
                 {"dual_frames", dual_ok ? 1.0 : 0.0},
                 {"biorthogonal", bio_ok ? 1.0 : 0.0}};
    r.notes = std::string("verdicts ") + (dual_ok == bio_ok ? "agree" : "disagree") +
              ": (f, g) " + (dual_ok ? "are" : "are not") + " dual frames; R-duals " +
              (bio_ok ? "are" : "are not") + " biorthogonal";
    return r;
}

VectorSystem dual_riesz_sequence(const VectorSystem& omega_sys, double tolerance) {
    const FrameBounds rb = riesz_bounds(omega_sys);
    if (!(rb.lower > tolerance)) {
        throw SingularFrameError("dual_riesz_sequence: Gram matrix is singular");
    }
    const cmat& w = omega_sys.synthesis_matrix();
    const cmat gram = w.adjoint() * w;
    const cmat dual = w * gram.ldlt().solve(cmat::Identity(gram.rows(), gram.cols()));
    return VectorSystem::from_columns(dual, "dual of " + omega_sys.label());
}

NSequence n_sequence(const VectorSystem& f_sys, const VectorSystem& omega_sys,
                     const OrthonormalPair& pair, double tolerance) {
    const std::size_t n = pair.dim();
    if (f_sys.ambient_dim() != n || f_sys.size() != n) {
        throw DimensionError("n_sequence: f needs N vectors in C^N");
    }
    if (omega_sys.size() != n) throw DimensionError("n_sequence: omega needs N vectors");
    if (omega_sys.ambient_dim() < n) {
        throw DimensionError("n_sequence: omega must live in C^M with M >= N");
    }
    const VectorSystem dual = dual_riesz_sequence(omega_sys, tolerance);
    // n_i = sum_k <e_k, f_i> dual_k  =>  N = Dual * K with K_ki = <e_k, f_i>.
    const cmat k = cross_gram(pair.e(), f_sys);
    VectorSystem nvec = VectorSystem::from_columns(dual.synthesis_matrix() * k, "n-sequence");

    // Bounds as a frame for W: spectrum of S compressed to an orthonormal basis of W.
    const cmat q = omega_sys.synthesis_matrix().householderQr().householderQ() *
                   cmat::Identity(omega_sys.synthesis_matrix().rows(), static_cast<Eigen::Index>(n));
    const rvec spec = hermitian_spectrum(q.adjoint() * frame_operator(nvec) * q);
    const double top = std::max(spec(spec.size() - 1), 0.0);
    const double low = spec(0) > static_cast<double>(n) * std::numeric_limits<double>::epsilon() * top ? spec(0) : 0.0;

    NSequence out{nvec, FrameBounds{low, top}, {}};
    out.tightness = AnalysisReport::from_residuals(
        {{"lower_minus_one", std::abs(out.tight_bound_estimate.lower - 1.0)},
         {"upper_minus_one", std::abs(out.tight_bound_estimate.upper - 1.0)}},
        tolerance, "tight frame for span(omega) with bound 1");
    out.tightness.with_metric("lower", out.tight_bound_estimate.lower)
        .with_metric("upper", out.tight_bound_estimate.upper);
    return out;
}

}  // namespace framelab::rdual
