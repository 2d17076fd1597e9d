#include "ssc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ssc/random.hpp"

namespace ssc {

bool is_valid_affinity(const Matrix& w, double tol) {
    if (w.rows() != w.cols() || !w.allFinite()) return false;
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        if (w(i, i) != 0.0) return false;
        for (Eigen::Index j = 0; j < w.cols(); ++j) {
            if (w(i, j) < -tol) return false;
            if (std::abs(w(i, j) - w(j, i)) > tol * std::max(1.0, std::abs(w(i, j))))
                return false;
        }
    }
    return true;
}

Matrix gaussian_affinity(const Matrix& points) {
    const Eigen::Index n = points.cols();
    if (n < 2)
        throw std::invalid_argument("gaussian_affinity: need at least two points");
    if (!points.allFinite())
        throw std::invalid_argument("gaussian_affinity: non-finite coordinates");

    Matrix dist2(n, n);
    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        dist2(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d2 = (points.col(i) - points.col(j)).squaredNorm();
            dist2(i, j) = dist2(j, i) = d2;
            const double d = std::sqrt(d2);
            if (d > 0.0) distances.push_back(d);  // duplicates excluded from the median
        }
    }
    if (distances.empty())
        throw std::runtime_error("gaussian_affinity: all points coincide, bandwidth undefined");

    std::sort(distances.begin(), distances.end());
    const std::size_t half = distances.size() / 2;
    const double sigma = (distances.size() % 2 == 1)
                             ? distances[half]
                             : 0.5 * (distances[half - 1] + distances[half]);

    Matrix w(n, n);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (Eigen::Index i = 0; i < n; ++i) {
        w(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j)
            w(i, j) = w(j, i) = std::exp(-dist2(i, j) * inv);
    }
    return w;
}

Matrix normalized_laplacian(const Matrix& affinity) {
    if (!is_valid_affinity(affinity))
        throw std::invalid_argument(
            "normalized_laplacian: input is not a valid affinity matrix");
    const Eigen::Index n = affinity.rows();
    Vector inv_sqrt_degree(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = affinity.row(i).sum();
        inv_sqrt_degree(i) = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
    }
    Matrix l = -affinity;
    for (Eigen::Index i = 0; i < n; ++i)
        l.row(i) *= inv_sqrt_degree(i);
    for (Eigen::Index j = 0; j < n; ++j)
        l.col(j) *= inv_sqrt_degree(j);
    l.diagonal().array() += 1.0;
    return 0.5 * (l + l.transpose());
}

BlockProblem generate_block_problem(const SyntheticSpec& spec) {
    if (spec.cluster_sizes.empty())
        throw std::invalid_argument("generate_block_problem: no cluster sizes");
    for (int s : spec.cluster_sizes)
        if (s < 1)
            throw std::invalid_argument("generate_block_problem: cluster sizes must be >= 1");
    if (spec.intra_strength <= 0.0 || spec.intra_strength > 1.0)
        throw std::invalid_argument("generate_block_problem: intra_strength must be in (0, 1]");
    if (spec.noise_level < 0.0)
        throw std::invalid_argument("generate_block_problem: noise_level must be >= 0");

    const int n = std::accumulate(spec.cluster_sizes.begin(), spec.cluster_sizes.end(), 0);
    Partition truth;
    truth.labels.reserve(n);
    for (std::size_t b = 0; b < spec.cluster_sizes.size(); ++b)
        truth.labels.insert(truth.labels.end(), spec.cluster_sizes[b], static_cast<int>(b));

    Rng rng(spec.seed);
    Matrix w = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double value =
                truth.labels[i] == truth.labels[j]
                    ? rng.uniform(spec.intra_strength / 2.0, spec.intra_strength)
                    : rng.uniform(0.0, spec.noise_level);
            w(i, j) = w(j, i) = value;
        }
    }
    return {std::move(w), std::move(truth)};
}

}  // namespace ssc
