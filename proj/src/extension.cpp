#include "framelab/extension.hpp"

#include "framelab/errors.hpp"

#include <vector>

namespace framelab::extension {

cmat defect_operator(const VectorSystem& f_sys, const VectorSystem& g_sys) {
    if (f_sys.size() != g_sys.size() || f_sys.ambient_dim() != g_sys.ambient_dim()) {
        throw DimensionError("extension: f and g differ in length or ambient dimension");
    }
    const auto d = static_cast<Eigen::Index>(f_sys.ambient_dim());
    cmat phi = cmat::Identity(d, d);
    if (!f_sys.empty()) phi -= g_sys.synthesis_matrix() * f_sys.synthesis_matrix().adjoint();
    return phi;
}

DualPairExtension extend_to_dual_pair(const VectorSystem& f_sys, const VectorSystem& g_sys,
                                      const std::optional<VectorSystem>& a_sys,
                                      const std::optional<VectorSystem>& b_sys,
                                      const ExtensionOptions& options) {
    const std::size_t dim = f_sys.ambient_dim();
    const VectorSystem a = a_sys.value_or(VectorSystem::standard_basis(dim, "a"));
    const VectorSystem b = b_sys.value_or(VectorSystem::standard_basis(dim, "b"));
    if (a.ambient_dim() != dim || b.ambient_dim() != dim) {
        throw DimensionError("extend_to_dual_pair: auxiliary pair lives in another dimension");
    }
    if (a.size() != b.size()) throw DimensionError("extend_to_dual_pair: a and b differ in length");
    const AnalysisReport aux = duality_check(a, b, options.tolerance);
    if (!aux.passed()) {
        throw PreconditionError("extend_to_dual_pair: auxiliary pair (a, b) is not a dual pair "
                                "(residual " + std::to_string(aux.residuals.at("duality")) + ")");
    }
    const cmat phi = defect_operator(f_sys, g_sys);
    const cmat p = phi.adjoint() * a.synthesis_matrix();

    const double scale = std::max(1.0, a.synthesis_matrix().cwiseAbs().maxCoeff());
    std::vector<bool> zero(static_cast<std::size_t>(p.cols()));
    bool all_zero = true;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        zero[static_cast<std::size_t>(j)] = p.col(j).norm() <= options.tolerance * scale;
        all_zero = all_zero && zero[static_cast<std::size_t>(j)];
    }

    if (!options.prune_zero) {
        return {VectorSystem::from_columns(p, "p"), b.relabeled("q"), all_zero};
    }
    std::vector<cvec> kept_p;
    std::vector<cvec> kept_q;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        if (zero[static_cast<std::size_t>(j)]) continue;
        kept_p.emplace_back(p.col(j));
        kept_q.emplace_back(b.synthesis_matrix().col(j));
    }
    return {VectorSystem(dim, kept_p, "p"), VectorSystem(dim, kept_q, "q"), all_zero};
}

AnalysisReport verify_extension(const VectorSystem& f, const VectorSystem& g,
                                const VectorSystem& p, const VectorSystem& q, double tolerance) {
    if (p.size() != q.size()) throw DimensionError("verify_extension: p and q differ in length");
    const VectorSystem fp = f.concatenated(p, "f u p");
    const VectorSystem gq = g.concatenated(q, "g u q");
    AnalysisReport r = duality_check(fp, gq, tolerance);
    const FrameBounds bf = frame_bounds(fp);
    const FrameBounds bg = frame_bounds(gq);
    r.with_metric("f_union_lower", bf.lower)
        .with_metric("f_union_upper", bf.upper)
        .with_metric("g_union_lower", bg.lower)
        .with_metric("g_union_upper", bg.upper)
        .with_metric("added_vectors", static_cast<double>(p.size()));
    if (r.passed() && !(bf.lower > 0.0 && bg.lower > 0.0)) {
        r.verdict = Verdict::fail;
        r.notes += "; a union has vanishing lower frame bound";
    }
    return r;
}

double defect_identity_residual(const VectorSystem& f, const VectorSystem& g,
                                const VectorSystem& p, const VectorSystem& q) {
    const cmat phi = defect_operator(f, g);
    cmat via_pair = cmat::Zero(phi.rows(), phi.cols());
    if (!p.empty()) via_pair = q.synthesis_matrix() * p.synthesis_matrix().adjoint();
    return operator_norm(phi - via_pair);
}

}  // namespace framelab::extension
