#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace fraudlex {

/// Per-feature z-scoring fitted on training rows only.
struct Standardizer {
    static constexpr double kSdFloor = 1e-12;

    std::vector<double> mean;
    std::vector<double> sd;

    /// Population mean and sd. Each column is summed in sorted order so the
    /// statistics do not depend on row order.
    static Standardizer fit(const std::vector<std::vector<double>>& rows) {
        Standardizer s;
        if (rows.empty()) return s;
        const std::size_t d = rows.front().size();
        const double n = static_cast<double>(rows.size());
        s.mean.assign(d, 0.0);
        s.sd.assign(d, 0.0);
        std::vector<double> column(rows.size());
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][j];
            std::sort(column.begin(), column.end());
            double sum = 0.0;
            for (double v : column) sum += v;
            const double m = sum / n;
            std::vector<double> sq(column.size());
            for (std::size_t i = 0; i < column.size(); ++i) sq[i] = (column[i] - m) * (column[i] - m);
            std::sort(sq.begin(), sq.end());
            double ss = 0.0;
            for (double v : sq) ss += v;
            s.mean[j] = m;
            s.sd[j] = std::sqrt(ss / n);
        }
        return s;
    }

    std::vector<double> transform(std::span<const double> x) const {
        std::vector<double> z(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) z[j] = (x[j] - mean[j]) / std::max(sd[j], kSdFloor);
        return z;
    }

    std::vector<std::vector<double>> transform_all(const std::vector<std::vector<double>>& rows) const {
        std::vector<std::vector<double>> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(transform(r));
        return out;
    }

    bool operator==(const Standardizer&) const = default;
};

} // namespace fraudlex
