#pragma once

#include "ssc/types.hpp"

namespace ssc {

/// Full eigendecomposition of a dense symmetric matrix.
///
/// Eigenvalues are sorted in non-increasing order and column j of `vectors`
/// is the unit eigenvector paired with `values[j]`. The sign of each
/// eigenvector is fixed by making its largest-magnitude component positive
/// (first such component on magnitude ties), so the decomposition is a
/// deterministic function of the input.
struct SpectralDecomposition {
    Vector values;
    Matrix vectors;
};

/// Result of the projection onto {x : 0 <= x <= 1, sum(x) = k}.
/// `values[i] == clamp(input[i] + shift, 0, 1)` for the reported shift.
struct SimplexWeights {
    Vector values;
    int k = 0;
    double shift = 0.0;
};

/// (A + A^T) / 2. Throws std::invalid_argument on non-square or non-finite
/// input.
Matrix symmetrize(const Matrix& a);

/// Entrywise symmetry check: |a_ij - a_ji| <= tol * max(1, |a_ij|).
bool is_symmetric(const Matrix& a, double tol = 1e-10);

/// Eigendecomposition of a symmetric matrix; see SpectralDecomposition for
/// the ordering and sign conventions. The input must be symmetric within
/// 1e-10 relative tolerance and finite.
SpectralDecomposition eig_sym(const Matrix& b);

/// Shrink scalar toward zero: x - eps if x > eps, x + eps if x < -eps,
/// else 0. Requires eps >= 0.
double soft_threshold(double x, double eps);

/// Elementwise soft threshold (the l1 proximal mapping).
Matrix soft_threshold(const Matrix& x, double eps);

/// Euclidean projection onto the capped simplex {x : 0 <= x <= 1,
/// sum(x) = k}. Exact O(n log n) solve: the minimizer is
/// clamp(v_i + shift, 0, 1) for the unique shift making the sum k, found by
/// walking the sorted breakpoints {-v_i, 1 - v_i} of the piecewise-linear
/// sum. Requires 1 <= k <= n.
SimplexWeights capped_simplex_project(const Vector& v, int k);

/// Frobenius projection of a square matrix onto
/// {P : 0 <= P <= I (spectrally), trace(P) = k}: symmetrize, project the
/// eigenvalues onto the capped simplex, reassemble. Requires 1 <= k <= n.
Matrix fantope_project(const Matrix& a, int k);

}  // namespace ssc
