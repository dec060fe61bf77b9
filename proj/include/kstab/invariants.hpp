#ifndef KSTAB_INVARIANTS_HPP
#define KSTAB_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "kstab/interpolation.hpp"
#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"
#include "kstab/weight_system.hpp"

namespace kstab {

using Matrix = std::vector<std::vector<Rational>>;

// Exact per-k sums over the blocks: total dimension, the trace of each
// action's generator, and all pairwise trace products.
struct TraceTable {
    Rational dim;
    std::vector<Rational> trace;
    Matrix pair_trace;
};

TraceTable tabulate(const WeightSystem& ws, std::int64_t k);

// The fitted asymptotic polynomials of a weight system: dim has degree n,
// each action's weight polynomial degree <= n+1, each pairwise trace
// product degree <= n+2, together with the extracted top coefficients.
struct HilbertData {
    int dimension = 0; // n
    Polynomial dim;
    std::vector<Polynomial> weight;
    std::vector<std::vector<Polynomial>> pair_trace;
    Rational dim_lead; // k^n coefficient of dim, always > 0
    Rational dim_sub;  // k^(n-1) coefficient
    std::vector<Rational> weight_lead; // k^(n+1) coefficients
    std::vector<Rational> weight_sub;  // k^n coefficients

    int action_count() const { return static_cast<int>(weight.size()); }
};

// Samples (degree + 1 + extra_points) admissible k per sequence starting
// at k_min and interpolates; the extra points certify the fits.
HilbertData fit_hilbert_data(const WeightSystem& ws, int extra_points = 2);

Rational futaki_invariant(const HilbertData& hd, int action);

// Leading coefficient, at order k^(n+2), of the trace-normalized product
// pair_trace - weight[a]*weight[b]/dim. Independent of the chosen lifts.
Rational inner_product(const HilbertData& hd, int a, int b);

Matrix gram_matrix(const HilbertData& hd, const std::vector<int>& actions);

// Exact Gaussian elimination with a positive-pivot check; every leading
// principal minor of gram must be positive or singular_gram is thrown.
std::vector<Rational> solve_positive_definite(Matrix gram, std::vector<Rational> rhs);

// Coefficients x of the extremal action in the generator basis:
// gram * x = futaki_vec.
std::vector<Rational> extremal_coefficients(const Matrix& torus_gram,
                                            const std::vector<Rational>& torus_futaki);

// futaki(alpha) - <alpha, chi> where chi is the extremal combination of
// the listed torus actions.
Rational relative_futaki(const HilbertData& hd, int alpha, const std::vector<int>& torus);

// Coefficients t with <alpha - sum t_j beta_j, beta_i> = 0 for all i.
std::vector<Rational> orthogonal_projection(const HilbertData& hd, int alpha,
                                            const std::vector<int>& torus);

struct InvariantReport {
    std::vector<Rational> futaki; // per action
    Matrix gram;                  // all actions
    std::vector<Rational> chi;    // extremal coefficients in the torus basis
    Rational chi_norm_sq;
    Rational relative; // relative Futaki invariant of the designated action
};

InvariantReport analyze(const HilbertData& hd, int alpha, const std::vector<int>& torus);

} // namespace kstab

#endif
