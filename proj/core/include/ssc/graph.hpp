#pragma once

#include <cstdint>
#include <vector>

#include "ssc/types.hpp"

namespace ssc {

// Affinity matrices and normalized Laplacians are plain dense matrices;
// `is_valid_affinity` checks the structural invariants (symmetry,
// nonnegativity, zero diagonal) where inputs cross an API boundary.

bool is_valid_affinity(const Matrix& w, double tol = 1e-10);

/// Gaussian-kernel affinity from a d x n matrix whose columns are data
/// points: w_ij = exp(-||x_i - x_j||^2 / (2 sigma^2)) off the diagonal and
/// w_ii = 0. The bandwidth sigma is the median of the pairwise Euclidean
/// distances, excluding exact-zero pairs from duplicate points. Throws if
/// every pairwise distance is zero.
Matrix gaussian_affinity(const Matrix& points);

/// L = I - D^{-1/2} W D^{-1/2} with d_ii = sum_j w_ij. Rows with zero
/// degree keep D^{-1/2} entry 0, so isolated nodes contribute an identity
/// row.
Matrix normalized_laplacian(const Matrix& affinity);

/// Parameters for the synthetic block-structured affinity generator.
/// Intra-block off-diagonal entries are uniform in
/// [intra_strength/2, intra_strength]; inter-block entries are uniform in
/// [0, noise_level].
struct SyntheticSpec {
    std::vector<int> cluster_sizes;
    double intra_strength = 0.8;
    double noise_level = 0.0;
    std::uint64_t seed = 0;
};

struct BlockProblem {
    Matrix affinity;
    Partition ground_truth;
};

/// Deterministic given spec.seed.
BlockProblem generate_block_problem(const SyntheticSpec& spec);

}  // namespace ssc
