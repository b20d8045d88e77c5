#pragma once

// Band-limited functions on the frequency axis and the dilation-based systems
// built from them: dyadic wavelet duality and wave packet systems
// {D_{a_j} T_{kb} E_{c_m} g}.
//
// Wave packet elements are taken in the frequency domain as
//   a_j^{-1/2} exp(-2 pi i k b gamma / a_j) g^(gamma / a_j - c_m),
// the normalization under which the bound formulas below are exact.

#include "framelab/frame_core.hpp"
#include "framelab/parallel.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace framelab::dilation {

/// Finite union of closed intervals.
struct Band {
    std::vector<Interval> intervals;

    [[nodiscard]] bool contains(double x) const;
    [[nodiscard]] Interval hull() const;
    /// Distance from 0 to the band (0 when an interval touches 0).
    [[nodiscard]] double distance_from_zero() const;
    [[nodiscard]] Band shifted(double c) const;
    [[nodiscard]] bool empty() const { return intervals.empty(); }
};

struct UniformGrid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    [[nodiscard]] double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// A function of gamma vanishing outside a compact band.
class FreqFunction {
 public:
    /// Linear interpolation of `values` on `grid`; values outside `band` must be zero.
    static FreqFunction from_samples(UniformGrid grid, std::vector<cplx> values, Band band);
    static FreqFunction from_callable(std::function<cplx(double)> fn, Band band);
    /// scale on each half-open [lo, hi) of the band.
    static FreqFunction indicator(Band band, cplx scale = 1.0);
    static FreqFunction zero();

    [[nodiscard]] cplx operator()(double gamma) const;
    [[nodiscard]] const Band& band() const { return band_; }
    [[nodiscard]] bool is_zero() const { return band_.empty(); }
    [[nodiscard]] FreqFunction scaled(cplx factor) const;
    [[nodiscard]] FreqFunction plus(const FreqFunction& other) const;

    [[nodiscard]] bool is_sampled() const { return grid_.has_value(); }
    /// Samples on `grid` (the stored ones for a sampled function).
    [[nodiscard]] std::vector<cplx> sample(const UniformGrid& grid) const;
    [[nodiscard]] const std::optional<UniformGrid>& grid() const { return grid_; }

 private:
    FreqFunction(std::function<cplx(double)> fn, Band band, std::optional<UniformGrid> grid = std::nullopt);

    std::function<cplx(double)> fn_;
    Band band_;
    std::optional<UniformGrid> grid_;
};

struct GridOptions {
    std::size_t grid_points = 4096;
    /// Repeat on a grid twice as fine and fold both into the result.
    bool refine = true;
    Execution exec = Execution::parallel;
};

struct WaveletOptions : GridOptions {
    /// Grid over [-radius, radius); default is the largest |band endpoint|.
    std::optional<double> radius;
};

/// Dyadic wavelet dual-frame conditions:
///   (i)  sum_j conj(psi^(2^j g)) psit^(2^j g) = b,
///   (ii) sum_{(j,m): m/2^j = alpha} conj(psi^(2^j g)) psit^(2^j g + m) = 0 for alpha != 0.
/// Bands must stay away from 0 (TruncationError otherwise).
AnalysisReport wavelet_duality_check(const FreqFunction& psi_hat, const FreqFunction& psi_tilde_hat,
                                     double b = 1.0, double tolerance = kDefaultTolerance,
                                     const WaveletOptions& options = {});

/// Parameters {a_j}, b, {c_m} of a wave packet system. The j and m sums run over
/// the given lists; the k sum is finite because of the band.
struct WavePacketGrid {
    std::vector<double> a_values;
    double b = 1.0;
    std::vector<double> c_values;

    void validate() const;
};

struct WavePacketOptions : GridOptions {
    /// Range of gamma; default is the hull of the sets a_j (band + c_m).
    std::optional<Interval> gamma_range;
    /// Partial sums above this value mark the bound as divergent.
    double ceiling = 1e6;
};

struct BesselBound {
    std::optional<double> bound;  // empty when divergent
    double tail_estimate = 0.0;   // B minus B with the outermost j and m removed
    bool diverged = false;
    AnalysisReport report;
};

/// B = (1/b) sup_gamma sum_{j,m} sum_k |g^(gamma/a_j - c_m) g^(gamma/a_j - c_m - k/b)|.
BesselBound wave_packet_bessel_bound(const FreqFunction& g_hat, const WavePacketGrid& grid,
                                     const WavePacketOptions& options = {});

struct WavePacketFrameBounds {
    FrameBounds bounds;     // (max(A, 0), B)
    double raw_lower = 0.0; // A before clamping
    bool certified = false; // A > 0 and B finite
    AnalysisReport report;  // pass when certified, undecided when A <= 0
};

/// A = (1/b) inf_gamma (sum_{j,m} |g^(.)|^2 - sum_{k != 0} sum_{j,m} |g^(.) g^(. - k/b)|).
WavePacketFrameBounds wave_packet_frame_bounds(const FreqFunction& g_hat, const WavePacketGrid& grid,
                                               const WavePacketOptions& options = {});

struct WavePacketDualityOptions : GridOptions {
    std::optional<Interval> gamma_range;
    /// Also evaluate the full alpha-indexed characterization (needs rational a).
    bool full_check = true;
};

/// Sufficient conditions for duality of {D_{a^j} T_{kb} E_{c_m} psi} and the
/// same system of psi_tilde:
///   (c1) sum_{j,m} psi^(a^{-j} g - c_m) conj(psit^(a^{-j} g - c_m)) = b,
///   (c2) psi^(g) conj(psit^(g + q)) = 0 for q in (1/b)(Z \ {0}),
/// and optionally the full condition indexed by alpha = a^j n / b.
AnalysisReport wave_packet_duality_check(const FreqFunction& psi_hat, const FreqFunction& psi_tilde_hat,
                                         double a, double b, const std::vector<double>& c_values,
                                         double tolerance = kDefaultTolerance,
                                         const WavePacketDualityOptions& options = {});

struct LicResult {
    double value = 0.0;
    /// (j, partial sum over dilation indices processed so far), in processing order.
    std::vector<std::pair<int, double>> trace;
    AnalysisReport report;
};

/// Truncated local integrability sum
///   sum_{j=j_min}^{j_max} sum_m sum_n int_{supp f^} |f^(g + a^j n / b)|^2 |psi^(a^{-j} g - c_m)|^2 dg
/// with a midpoint rule of `quadrature_points` nodes on the hull of supp f^.
LicResult lic_estimate(const FreqFunction& psi_hat, double a, double b, const std::vector<double>& c_values,
                       const FreqFunction& f_hat, int j_min, int j_max, std::size_t quadrature_points = 4096);

struct BesselProbeOptions {
    std::vector<double> probe_gammas{0.3, 0.7, 1.3};
    double ceiling = 1e6;
    long long max_terms = 10'000'000;
};

struct BesselProbe {
    std::vector<std::pair<long long, double>> trace;  // (j count, partial sum) at powers of two
    bool monotone = true;
    bool exceeded = false;
    long long terms_to_exceed = -1;
    double final_partial = 0.0;
    AnalysisReport report;
};

/// Partial Bessel sums (1/b) sum_{j < J} sum_m sum_k |g^(u) g^(u - k/b)|, u = gamma/a_j - m r,
/// accumulated over j = 0, 1, 2, ... at fixed probe frequencies with c_m = m r.
/// Exceeding the ceiling means no Bessel bound holds for the full system.
BesselProbe wave_packet_bessel_probe(const FreqFunction& g_hat, const std::function<double(long long)>& dilation,
                                     double b, double r, const BesselProbeOptions& options = {});

}  // namespace framelab::dilation
