#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace fraudlex {

struct Neighbor {
    std::size_t index = 0; ///< position in the stored training rows
    std::string id;
    double distance = 0.0;
    int label = 0;

    bool operator==(const Neighbor&) const = default;
};

/// k-nearest-neighbour vote under Euclidean distance.
///
/// Equal distances are ordered by training-row id, so the neighbour set does
/// not depend on the order rows were supplied in. A split vote (only possible
/// when fewer than k rows exist and k_eff is even) goes to the nearest neighbour.
struct KnnModel {
    static constexpr std::size_t kDefaultK = 3;

    std::size_t k = kDefaultK;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::vector<std::string> ids;

    std::size_t effective_k() const noexcept { return std::min(k, rows.size()); }

    std::vector<Neighbor> neighbors(std::span<const double> x) const {
        std::vector<Neighbor> all;
        all.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double ss = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double d = x[j] - rows[i][j];
                ss += d * d;
            }
            all.push_back({i, ids[i], std::sqrt(ss), labels[i]});
        }
        const auto keff = static_cast<std::ptrdiff_t>(effective_k());
        std::partial_sort(all.begin(), all.begin() + keff, all.end(), [](const Neighbor& a, const Neighbor& b) {
            if (a.distance != b.distance) return a.distance < b.distance;
            if (a.id != b.id) return a.id < b.id;
            return a.index < b.index;
        });
        all.resize(static_cast<std::size_t>(keff));
        return all;
    }

    static int vote(const std::vector<Neighbor>& nearest) {
        std::size_t ones = 0;
        for (const auto& n : nearest) ones += n.label == 1;
        const std::size_t zeros = nearest.size() - ones;
        if (ones != zeros) return ones > zeros ? 1 : 0;
        return nearest.front().label;
    }

    int predict(std::span<const double> x) const { return vote(neighbors(x)); }

    bool operator==(const KnnModel&) const = default;
};

} // namespace fraudlex
