#pragma once

// Gabor systems. Exact finite model on the cyclic group Z_L (translation
// mod L, modulation by exp(2 pi i m b t / L)), plus checks on sampled windows
// on the real line.

#include "framelab/frame_core.hpp"
#include "framelab/parallel.hpp"
#include "framelab/sampled_window.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace framelab::gabor {

struct GaborSpec {
    int L = 1;
    int a = 1;  // time step, divides L
    int b = 1;  // frequency step, divides L
    cvec window;

    /// Throws DomainError on non-positive / non-dividing steps, DimensionError on window length.
    void validate() const;
    [[nodiscard]] int time_count() const { return L / a; }
    [[nodiscard]] int freq_count() const { return L / b; }
    [[nodiscard]] std::size_t system_size() const {
        return static_cast<std::size_t>(time_count()) * static_cast<std::size_t>(freq_count());
    }
};

/// Time-frequency point: modulation lambda, translation mu.
struct TFPoint {
    double lambda = 0.0;
    double mu = 0.0;
};

/// exp(2 pi i m b t / L) * window[(t - n a) mod L], ordered lexicographically in (n, m).
VectorSystem finite_gabor_system(const GaborSpec& spec);

/// The system with time step L/b, frequency step L/a and window scaled by sqrt(L/(ab)).
GaborSpec adjoint_spec(const GaborSpec& spec);

/// Frame bounds of the (a, b) system against Riesz bounds of the adjoint system;
/// pass iff both bounds agree to `rtol` relative to the larger upper bound.
AnalysisReport duality_principle_check(const GaborSpec& spec, double rtol = kDefaultTolerance);

/// Dual-frame verdict of the two (a, b) systems against biorthogonality of the
/// two adjoint systems. Pass iff the verdicts agree; both residuals are metrics.
AnalysisReport wexler_raz_check(const GaborSpec& g, const GaborSpec& h,
                                double tolerance = kDefaultTolerance);

/// Lattice (a, b) on Z_L used to build the shifts tested against S^{-1}.
struct Lattice {
    int a = 1;
    int b = 1;
};

/// max over (n, m) of ||S^{-1} M_{mb} T_{na} - M_{mb} T_{na} S^{-1}||_F, where S
/// belongs to `spec`. `probe` replaces the lattice of the shifts (negative control).
/// Also reports the distance between the canonical dual system and the Gabor
/// system of S^{-1} g as the metric "dual_structure".
AnalysisReport frame_operator_commutation_check(const GaborSpec& spec,
                                                std::optional<Lattice> probe = std::nullopt,
                                                double tolerance = kDefaultTolerance);

/// S^{-1} g. Throws SingularFrameError when the system is not a frame.
cvec canonical_dual_window(const GaborSpec& spec, double tolerance = kDefaultTolerance);

/// Sum_k conj(g(x - n/b - k a)) h(x - k a) = b delta_{n,0} on the grid of [0, a).
/// Both windows share the step h; a/h, 1/(b h) and x0/h must be integers.
AnalysisReport ron_shen_duality_check(const SampledWindow& g, const SampledWindow& h, double a,
                                      double b, double tolerance = kDefaultTolerance);

struct FiniteExtension {
    cvec g2;
    cvec h2;
    AnalysisReport report;  // duality of the union systems
};

/// g2 = r1 - sum <r1, h1_{nm}> g1_{nm}, h2 = r2 for a dual pair (r1, r2) on the
/// lattice of `g1`. Default pair: r1 = indicator of [0, a), r2 = (b/L) r1.
/// Throws InfeasibleError when a*b > L.
FiniteExtension gabor_extension_finite(const GaborSpec& g1, const GaborSpec& h1,
                                       std::optional<std::pair<cvec, cvec>> pair = std::nullopt,
                                       double tolerance = kDefaultTolerance);

struct SampledExtension {
    SampledWindow g2;
    SampledWindow h2;
    GaborSpec cyclic_g1;  // the cyclic realization that was solved
    AnalysisReport report;
};

/// Real-line adapter: both windows on a common step h; a/h and 1/(b h) must be
/// integers. The windows are placed on Z_L with L the smallest admissible
/// period that holds their supports.
SampledExtension gabor_extension(const SampledWindow& g1, const SampledWindow& h1, double a,
                                 double b, double tolerance = kDefaultTolerance);

struct HrtOptions {
    double step = 1.0 / 64.0;
    std::optional<double> tolerance;  // default 1e-8 * sqrt(point count)
};

/// Smallest singular value of the normalized sampled vectors
/// exp(2 pi i lambda x) g(x - mu). Numerical evidence only.
AnalysisReport hrt_independence(const AnalyticWindow& g, const std::vector<TFPoint>& points,
                                const HrtOptions& options = {});
AnalysisReport hrt_independence(const SampledWindow& g, const std::vector<TFPoint>& points,
                                const HrtOptions& options = {});

struct SweepRow {
    int L = 0;
    int a = 0;
    int b = 0;
    double lowerA = 0.0;
    double upperB = 0.0;
    double adjoint_lower = 0.0;
    double adjoint_upper = 0.0;
    double residual = 0.0;
};

/// Duality-principle sweep over every divisor pair (a, b) of every L in
/// [L_min, L_max] with `windows_per_lattice` random windows each. Windows are
/// drawn serially from the seed, so both execution modes return the same rows.
std::vector<SweepRow> duality_sweep(int L_min, int L_max, int windows_per_lattice,
                                    std::uint64_t seed, Execution exec = Execution::parallel);

}  // namespace framelab::gabor
