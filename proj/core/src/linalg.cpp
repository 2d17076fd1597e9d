#include "ssc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ssc {

namespace {

void require_square_finite(const Matrix& a, const char* who) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(who) + ": matrix is not square");
    if (!a.allFinite())
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

}  // namespace

Matrix symmetrize(const Matrix& a) {
    require_square_finite(a, "symmetrize");
    return 0.5 * (a + a.transpose());
}

bool is_symmetric(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < j; ++i)
            if (std::abs(a(i, j) - a(j, i)) > tol * std::max(1.0, std::abs(a(i, j))))
                return false;
    return true;
}

SpectralDecomposition eig_sym(const Matrix& b) {
    require_square_finite(b, "eig_sym");
    if (!is_symmetric(b))
        throw std::invalid_argument("eig_sym: matrix is not symmetric within tolerance");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(b));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_sym: eigendecomposition did not converge");

    const Eigen::Index n = b.rows();
    SpectralDecomposition dec;
    dec.values.resize(n);
    dec.vectors.resize(n, n);

    // Eigen returns ascending order; flip to descending. Ties keep the
    // solver's (deterministic) relative order.
    for (Eigen::Index j = 0; j < n; ++j) {
        dec.values(j) = solver.eigenvalues()(n - 1 - j);
        dec.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }

    // Sign convention: largest-magnitude component positive; first such
    // component wins on exact magnitude ties.
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double mag = std::abs(dec.vectors(i, j));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (dec.vectors(arg, j) < 0.0) dec.vectors.col(j) = -dec.vectors.col(j);
    }
    return dec;
}

double soft_threshold(double x, double eps) {
    if (eps < 0.0) throw std::invalid_argument("soft_threshold: eps must be >= 0");
    if (x > eps) return x - eps;
    if (x < -eps) return x + eps;
    return 0.0;
}

Matrix soft_threshold(const Matrix& x, double eps) {
    if (eps < 0.0) throw std::invalid_argument("soft_threshold: eps must be >= 0");
    return x.unaryExpr([eps](double v) {
        if (v > eps) return v - eps;
        if (v < -eps) return v + eps;
        return 0.0;
    });
}

SimplexWeights capped_simplex_project(const Vector& v, int k) {
    const int n = static_cast<int>(v.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("capped_simplex_project: k must satisfy 1 <= k <= n");
    if (!v.allFinite())
        throw std::invalid_argument("capped_simplex_project: non-finite input");

    // g(shift) = sum_i clamp(v_i + shift, 0, 1) is piecewise linear and
    // nondecreasing from 0 to n. Entry i starts growing at shift = -v_i and
    // saturates at shift = 1 - v_i; sweep the 2n breakpoints and solve the
    // linear segment where g crosses k.
    struct Event {
        double where;
        double delta;
    };
    std::vector<Event> events;
    events.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        events.push_back({-v(i), 1.0});
        events.push_back({1.0 - v(i), -1.0});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.where < b.where; });

    const double target = static_cast<double>(k);
    double g = 0.0;
    double slope = 0.0;
    double pos = events.front().where;
    double shift = events.back().where;  // k == n lands here
    bool found = false;
    std::size_t idx = 0;
    while (idx < events.size() && !found) {
        while (idx < events.size() && events[idx].where <= pos) {
            slope += events[idx].delta;
            ++idx;
        }
        if (idx == events.size()) break;
        const double next = events[idx].where;
        const double g_next = g + slope * (next - pos);
        if (slope > 0.0 && target <= g_next) {
            shift = pos + (target - g) / slope;
            found = true;
        }
        g = g_next;
        pos = next;
    }

    SimplexWeights result;
    result.k = k;
    result.shift = shift;
    result.values = v.unaryExpr(
        [shift](double x) { return std::clamp(x + shift, 0.0, 1.0); });
    return result;
}

Matrix fantope_project(const Matrix& a, int k) {
    const Eigen::Index n = a.rows();
    if (k < 1 || k > n)
        throw std::invalid_argument("fantope_project: k must satisfy 1 <= k <= n");
    const SpectralDecomposition dec = eig_sym(symmetrize(a));
    const SimplexWeights rho = capped_simplex_project(dec.values, k);
    Matrix q = dec.vectors * rho.values.asDiagonal() * dec.vectors.transpose();
    return 0.5 * (q + q.transpose());
}

}  // namespace ssc
