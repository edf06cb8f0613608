#pragma once

#include <Eigen/Dense>
#include <vector>

namespace centropy {

// k-d tree over a fixed point set with the Chebyshev (max) norm, supporting
// the two queries the kNN estimators need: the distance to the k-th nearest
// neighbor of a stored point, and the number of points strictly inside a
// ball around a stored point. The query point itself is never counted.
class ChebyshevKdTree {
public:
    explicit ChebyshevKdTree(const Eigen::MatrixXd& points, int leaf_size = 16);

    Eigen::Index size() const { return points_.rows(); }
    int dims() const { return static_cast<int>(points_.cols()); }

    // Distance to the k-th nearest neighbor of points.row(query), self excluded.
    // Requires 1 <= k < size().
    double kth_neighbor_distance(Eigen::Index query, int k) const;

    // Indices of the k nearest neighbors of points.row(query), self excluded,
    // ordered nearest first.
    std::vector<Eigen::Index> k_nearest(Eigen::Index query, int k) const;

    // Number of points j != query with dist(j, query) < radius (strict).
    Eigen::Index count_within(Eigen::Index query, double radius) const;

private:
    struct Node {
        Eigen::Index begin = 0, end = 0;  // range in order_
        int left = -1, right = -1;        // children; leaf when left < 0
    };

    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    int build(Eigen::Index begin, Eigen::Index end);
    double dist(Eigen::Index a, Eigen::Index b) const;
    double box_min_dist(int node, Eigen::Index query) const;
    double box_max_dist(int node, Eigen::Index query) const;

    struct HeapEntry {
        double d;
        Eigen::Index idx;
        bool operator<(const HeapEntry& o) const { return d < o.d; }
    };
    void search_knn(int node, Eigen::Index query, int k, std::vector<HeapEntry>& heap) const;
    Eigen::Index count_node(int node, Eigen::Index query, double radius) const;

    RowMajor points_;
    std::vector<Eigen::Index> order_;
    std::vector<Node> nodes_;
    RowMajor node_min_, node_max_;
    int leaf_size_;
};

}  // namespace centropy
