#pragma once

#include <Eigen/Dense>
#include <vector>

namespace ssc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Cluster assignment for n data points. Labels are in [0, num_clusters()).
struct Partition {
    std::vector<int> labels;

    int size() const { return static_cast<int>(labels.size()); }

    int num_clusters() const {
        int k = 0;
        for (int l : labels) k = std::max(k, l + 1);
        return k;
    }

    bool operator==(const Partition& other) const { return labels == other.labels; }
};

}  // namespace ssc
