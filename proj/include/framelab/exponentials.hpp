#pragma once

// Finite exponential systems {exp(i lambda_n x)} in L^2(-pi, pi). The
// exponentials are left unnormalized, so the Gram diagonal is 2 pi.

#include "framelab/parallel.hpp"
#include "framelab/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace framelab::exponentials {

class LambdaSet {
 public:
    /// Strictly increasing, finite, nonempty.
    explicit LambdaSet(std::vector<double> lambdas);

    [[nodiscard]] const std::vector<double>& lambdas() const { return lambdas_; }
    [[nodiscard]] std::size_t size() const { return lambdas_.size(); }
    /// Minimal gap; infinity for a singleton.
    [[nodiscard]] double delta() const;
    [[nodiscard]] LambdaSet shifted(double c) const;

    static LambdaSet integers(int count);       // 0, 1, ..., count-1
    static LambdaSet half_integers(int count);  // 0, 1/2, 1, ...

 private:
    std::vector<double> lambdas_;
};

/// G_jk = int_{-pi}^{pi} exp(i (lambda_j - lambda_k) x) dx = 2 sin(pi d) / d, diagonal 2 pi.
/// `normalized` divides by 2 pi.
cmat exp_gram(const LambdaSet& ls, bool normalized = false);

struct LowerBound {
    double value = 0.0;
    double log10_value = 0.0;
    bool extended_precision = false;
};

/// Smallest Gram eigenvalue. Switches to a 50-digit Jacobi solve when the
/// double result falls below 1e-8 of the largest eigenvalue.
LowerBound lower_bound_detail(const LambdaSet& ls);
double lower_bound(const LambdaSet& ls);

struct CrudeBound {
    double value = 0.0;  // 0 when below the double range
    double log10_value = 0.0;
};

/// 1.6e-14 (delta/2)^{2N+1} / ((N+1)!)^8, evaluated in log space.
CrudeBound crude_bound(int N, double delta);

struct DecayRow {
    int N = 0;
    double lower = 0.0;
    double log10_lower = 0.0;
    double delta = 0.0;
    double log10_crude = 0.0;
    double log10_ratio = 0.0;  // log10(crude / lower)
};

struct DecayStudy {
    std::vector<DecayRow> rows;
    bool strictly_decreasing = false;
    bool crude_below_exact = false;
};

/// Rows N = 1..N_max for the sets family(N). The crude bound uses
/// delta = min(1, min gap).
DecayStudy decay_study(const std::function<LambdaSet(int)>& family, int N_max, Execution exec = Execution::parallel);

}  // namespace framelab::exponentials
