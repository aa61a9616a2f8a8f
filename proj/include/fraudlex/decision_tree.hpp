#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace fraudlex {

struct TreeNode {
    int feature = -1; ///< -1 marks a leaf
    double threshold = 0.0;
    int left = -1;  ///< rows with x[feature] <= threshold
    int right = -1;
    int depth = 0;
    std::array<std::size_t, 2> counts{};

    bool is_leaf() const noexcept { return feature < 0; }
    /// Majority class; an even split goes to 0.
    int prediction() const noexcept { return counts[1] > counts[0] ? 1 : 0; }
    double gini() const noexcept {
        const double n = static_cast<double>(counts[0] + counts[1]);
        if (n == 0.0) return 0.0;
        const double p0 = static_cast<double>(counts[0]) / n, p1 = static_cast<double>(counts[1]) / n;
        return 1.0 - p0 * p0 - p1 * p1;
    }
    bool operator==(const TreeNode&) const = default;
};

/// Binary CART classifier on Gini impurity.
///
/// Splits are searched exhaustively over every feature and every midpoint
/// between consecutive distinct values. The best split has the largest Gini
/// decrease; ties go to the lower feature index, then the lower threshold. A
/// node stays a leaf at max depth, when pure, with fewer than two rows, or
/// when no split strictly lowers impurity. Nodes are stored in preorder.
class DecisionTree {
public:
    static constexpr int kDefaultMaxDepth = 3;

    static DecisionTree fit(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                            int max_depth = kDefaultMaxDepth) {
        DecisionTree tree;
        tree.max_depth_ = max_depth;
        std::vector<std::size_t> rows(X.size());
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        tree.grow(X, y, rows, 0);
        return tree;
    }

    int predict(std::span<const double> x) const { return nodes_[leaf_for(x)].prediction(); }

    /// Index of the leaf reached by x.
    std::size_t leaf_for(std::span<const double> x) const {
        std::size_t i = 0;
        while (!nodes_[i].is_leaf())
            i = static_cast<std::size_t>(x[static_cast<std::size_t>(nodes_[i].feature)] <= nodes_[i].threshold
                                              ? nodes_[i].left
                                              : nodes_[i].right);
        return i;
    }

    const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    int max_depth() const noexcept { return max_depth_; }

    int depth() const {
        int d = 0;
        for (const auto& n : nodes_) d = std::max(d, n.depth);
        return d;
    }

    std::size_t leaf_count() const {
        return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
    }

    static DecisionTree from_nodes(std::vector<TreeNode> nodes, int max_depth) {
        DecisionTree t;
        t.nodes_ = std::move(nodes);
        t.max_depth_ = max_depth;
        return t;
    }

    bool operator==(const DecisionTree&) const = default;

private:
    // Weighted impurity n_l*g_l + n_r*g_r = n - S with S = (a^2+b^2)/n_l + (c^2+d^2)/n_r,
    // so the best split maximizes S. S is kept as an exact fraction to make ties exact.
    __extension__ using Wide = __int128;
    struct Score {
        Wide num = 0;
        Wide den = 1;
        bool operator>(const Score& o) const { return num * o.den > o.num * den; }
    };

    static Score purity_score(const std::array<std::size_t, 2>& l, const std::array<std::size_t, 2>& r) {
        const Wide nl = static_cast<Wide>(l[0] + l[1]), nr = static_cast<Wide>(r[0] + r[1]);
        const Wide sl = static_cast<Wide>(l[0]) * l[0] + static_cast<Wide>(l[1]) * l[1];
        const Wide sr = static_cast<Wide>(r[0]) * r[0] + static_cast<Wide>(r[1]) * r[1];
        return {sl * nr + sr * nl, nl * nr};
    }

    struct Split {
        int feature;
        double threshold;
    };

    static std::optional<Split> best_split(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                                           const std::vector<std::size_t>& rows, const std::array<std::size_t, 2>& counts) {
        const std::size_t n = counts[0] + counts[1];
        const Score parent{static_cast<Wide>(counts[0]) * counts[0] + static_cast<Wide>(counts[1]) * counts[1],
                           static_cast<Wide>(n)};
        std::optional<Split> best;
        Score best_score = parent;
        const std::size_t d = X.front().size();
        std::vector<std::size_t> order(rows);
        for (std::size_t f = 0; f < d; ++f) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return X[a][f] < X[b][f] || (X[a][f] == X[b][f] && a < b);
            });
            std::array<std::size_t, 2> left{}, right = counts;
            for (std::size_t k = 0; k + 1 < order.size(); ++k) {
                const auto label = static_cast<std::size_t>(y[order[k]]);
                ++left[label];
                --right[label];
                const double lo = X[order[k]][f], hi = X[order[k + 1]][f];
                if (!(lo < hi)) continue;
                const Score s = purity_score(left, right);
                if (s > best_score) {
                    best_score = s;
                    double t = lo + (hi - lo) / 2.0;
                    if (!(t < hi)) t = lo;
                    best = Split{static_cast<int>(f), t};
                }
            }
        }
        return best;
    }

    int grow(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
             const std::vector<std::size_t>& rows, int depth) {
        TreeNode node;
        node.depth = depth;
        for (auto r : rows) ++node.counts[static_cast<std::size_t>(y[r])];
        const int index = static_cast<int>(nodes_.size());
        nodes_.push_back(node);

        const bool pure = node.counts[0] == 0 || node.counts[1] == 0;
        if (depth >= max_depth_ || pure || rows.size() < 2) return index;
        const auto split = best_split(X, y, rows, node.counts);
        if (!split) return index;

        std::vector<std::size_t> left, right;
        for (auto r : rows)
            (X[r][static_cast<std::size_t>(split->feature)] <= split->threshold ? left : right).push_back(r);
        nodes_[static_cast<std::size_t>(index)].feature = split->feature;
        nodes_[static_cast<std::size_t>(index)].threshold = split->threshold;
        const int l = grow(X, y, left, depth + 1);
        const int r = grow(X, y, right, depth + 1);
        nodes_[static_cast<std::size_t>(index)].left = l;
        nodes_[static_cast<std::size_t>(index)].right = r;
        return index;
    }

    std::vector<TreeNode> nodes_;
    int max_depth_ = kDefaultMaxDepth;
};

} // namespace fraudlex
