#pragma once

// Extension of two Bessel sequences {f_i}, {g_i} to a pair of dual frames
// {f_i} u {p_j}, {g_i} u {q_j}, with p_j = (I - U T*)* a_j and q_j = b_j for
// an auxiliary dual pair (a, b).

#include "framelab/frame_core.hpp"

#include <optional>

namespace framelab::extension {

struct ExtensionOptions {
    double tolerance = kDefaultTolerance;
    /// Drop p_j that vanish (together with the matching q_j).
    bool prune_zero = false;
};

struct DualPairExtension {
    VectorSystem p;
    VectorSystem q;
    /// True when every p_j vanished, i.e. (f, g) was already a dual pair.
    bool collapsed = false;
};

/// I - U T*, with T, U the synthesis operators of f_sys, g_sys.
cmat defect_operator(const VectorSystem& f_sys, const VectorSystem& g_sys);

/// Throws PreconditionError when (a_sys, b_sys) fails duality_check.
/// With no auxiliary pair the standard basis is used for both.
DualPairExtension extend_to_dual_pair(const VectorSystem& f_sys, const VectorSystem& g_sys,
                                      const std::optional<VectorSystem>& a_sys = std::nullopt,
                                      const std::optional<VectorSystem>& b_sys = std::nullopt,
                                      const ExtensionOptions& options = {});

/// Duality residual of (f u p, g u q) plus frame bounds of both unions.
AnalysisReport verify_extension(const VectorSystem& f, const VectorSystem& g,
                                const VectorSystem& p, const VectorSystem& q,
                                double tolerance = kDefaultTolerance);

/// ||(I - U T*) - Q P*||_2: the added pair reproduces exactly the defect operator.
double defect_identity_residual(const VectorSystem& f, const VectorSystem& g,
                                const VectorSystem& p, const VectorSystem& q);

}  // namespace framelab::extension
