#include "centropy/kdtree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace centropy {

ChebyshevKdTree::ChebyshevKdTree(const Eigen::MatrixXd& points, int leaf_size)
    : points_(points), leaf_size_(std::max(1, leaf_size)) {
    order_.resize(points_.rows());
    std::iota(order_.begin(), order_.end(), Eigen::Index{0});
    nodes_.reserve(static_cast<std::size_t>(2 * points_.rows() / leaf_size_ + 8));
    if (points_.rows() > 0) build(0, points_.rows());
    node_min_.resize(nodes_.size(), points_.cols());
    node_max_.resize(nodes_.size(), points_.cols());
    // Boxes are filled bottom-up: children always have larger indices.
    for (int n = static_cast<int>(nodes_.size()) - 1; n >= 0; --n) {
        const Node& nd = nodes_[static_cast<std::size_t>(n)];
        if (nd.left < 0) {
            auto lo = Eigen::RowVectorXd::Constant(points_.cols(), std::numeric_limits<double>::infinity()).eval();
            auto hi = (-lo).eval();
            for (Eigen::Index i = nd.begin; i < nd.end; ++i) {
                lo = lo.cwiseMin(points_.row(order_[static_cast<std::size_t>(i)]));
                hi = hi.cwiseMax(points_.row(order_[static_cast<std::size_t>(i)]));
            }
            node_min_.row(n) = lo;
            node_max_.row(n) = hi;
        } else {
            node_min_.row(n) = node_min_.row(nd.left).cwiseMin(node_min_.row(nd.right));
            node_max_.row(n) = node_max_.row(nd.left).cwiseMax(node_max_.row(nd.right));
        }
    }
}

int ChebyshevKdTree::build(Eigen::Index begin, Eigen::Index end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{begin, end, -1, -1});
    if (end - begin <= leaf_size_) return id;

    // Split along the dimension with the largest extent, at the median.
    const int d = dims();
    int split_dim = 0;
    double best_extent = -1.0;
    for (int m = 0; m < d; ++m) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (Eigen::Index i = begin; i < end; ++i) {
            double v = points_(order_[static_cast<std::size_t>(i)], m);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > best_extent) {
            best_extent = hi - lo;
            split_dim = m;
        }
    }
    if (best_extent <= 0.0) return id;  // all points identical; keep as leaf

    const Eigen::Index mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](Eigen::Index a, Eigen::Index b) { return points_(a, split_dim) < points_(b, split_dim); });

    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    return id;
}

double ChebyshevKdTree::dist(Eigen::Index a, Eigen::Index b) const {
    return (points_.row(a) - points_.row(b)).cwiseAbs().maxCoeff();
}

double ChebyshevKdTree::box_min_dist(int node, Eigen::Index query) const {
    double m = 0.0;
    for (int j = 0; j < dims(); ++j) {
        double q = points_(query, j);
        double lo = node_min_(node, j) - q;
        double hi = q - node_max_(node, j);
        m = std::max(m, std::max(lo, hi));
    }
    return m;
}

double ChebyshevKdTree::box_max_dist(int node, Eigen::Index query) const {
    double m = 0.0;
    for (int j = 0; j < dims(); ++j) {
        double q = points_(query, j);
        m = std::max(m, std::max(std::abs(q - node_min_(node, j)), std::abs(q - node_max_(node, j))));
    }
    return m;
}

void ChebyshevKdTree::search_knn(int node, Eigen::Index query, int k, std::vector<HeapEntry>& heap) const {
    const Node& nd = nodes_[static_cast<std::size_t>(node)];
    if (static_cast<int>(heap.size()) == k && box_min_dist(node, query) >= heap.front().d) return;
    if (nd.left < 0) {
        for (Eigen::Index i = nd.begin; i < nd.end; ++i) {
            Eigen::Index p = order_[static_cast<std::size_t>(i)];
            if (p == query) continue;
            double d = dist(p, query);
            if (static_cast<int>(heap.size()) < k) {
                heap.push_back({d, p});
                std::push_heap(heap.begin(), heap.end());
            } else if (d < heap.front().d) {
                std::pop_heap(heap.begin(), heap.end());
                heap.back() = {d, p};
                std::push_heap(heap.begin(), heap.end());
            }
        }
        return;
    }
    // Visit the nearer child first so the pruning radius tightens early.
    double dl = box_min_dist(nd.left, query);
    double dr = box_min_dist(nd.right, query);
    int first = nd.left, second = nd.right;
    if (dr < dl) std::swap(first, second);
    search_knn(first, query, k, heap);
    search_knn(second, query, k, heap);
}

double ChebyshevKdTree::kth_neighbor_distance(Eigen::Index query, int k) const {
    assert(k >= 1 && k < size());
    std::vector<HeapEntry> heap;
    heap.reserve(static_cast<std::size_t>(k) + 1);
    search_knn(0, query, k, heap);
    return heap.front().d;
}

std::vector<Eigen::Index> ChebyshevKdTree::k_nearest(Eigen::Index query, int k) const {
    assert(k >= 1 && k < size());
    std::vector<HeapEntry> heap;
    heap.reserve(static_cast<std::size_t>(k) + 1);
    search_knn(0, query, k, heap);
    std::sort_heap(heap.begin(), heap.end());
    std::vector<Eigen::Index> out(heap.size());
    for (std::size_t i = 0; i < heap.size(); ++i) out[i] = heap[i].idx;
    return out;
}

Eigen::Index ChebyshevKdTree::count_node(int node, Eigen::Index query, double radius) const {
    if (box_min_dist(node, query) >= radius) return 0;
    const Node& nd = nodes_[static_cast<std::size_t>(node)];
    if (box_max_dist(node, query) < radius) return nd.end - nd.begin;
    if (nd.left < 0) {
        Eigen::Index c = 0;
        for (Eigen::Index i = nd.begin; i < nd.end; ++i)
            if (dist(order_[static_cast<std::size_t>(i)], query) < radius) ++c;
        return c;
    }
    return count_node(nd.left, query, radius) + count_node(nd.right, query, radius);
}

Eigen::Index ChebyshevKdTree::count_within(Eigen::Index query, double radius) const {
    if (radius <= 0.0 || size() == 0) return 0;
    // The query point itself is always strictly inside when radius > 0.
    return count_node(0, query, radius) - 1;
}

}  // namespace centropy
