#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace fraudlex {

/// Two-class Gaussian naive Bayes.
///
/// Every per-class variance is inflated by epsilon = 1e-9 times the largest
/// per-feature variance over all training rows (1e-9 when every feature is
/// constant), so no variance is zero.
struct GaussianNB {
    static constexpr double kSmoothing = 1e-9;

    std::array<double, 2> prior{};
    std::array<std::vector<double>, 2> mean;
    std::array<std::vector<double>, 2> variance;
    double epsilon = 0.0;

    static GaussianNB fit(const std::vector<std::vector<double>>& X, const std::vector<int>& y) {
        GaussianNB nb;
        const std::size_t d = X.front().size();
        const auto population_variance = [&](std::size_t j, int cls) {
            double sum = 0.0, n = 0.0;
            for (std::size_t i = 0; i < X.size(); ++i)
                if (cls < 0 || y[i] == cls) sum += X[i][j], n += 1.0;
            const double m = sum / n;
            double ss = 0.0;
            for (std::size_t i = 0; i < X.size(); ++i)
                if (cls < 0 || y[i] == cls) ss += (X[i][j] - m) * (X[i][j] - m);
            return std::pair{m, ss / n};
        };

        double widest = 0.0;
        for (std::size_t j = 0; j < d; ++j) widest = std::max(widest, population_variance(j, -1).second);
        nb.epsilon = widest > 0.0 ? kSmoothing * widest : kSmoothing;

        std::array<double, 2> counts{};
        for (int label : y) counts[static_cast<std::size_t>(label)] += 1.0;
        for (int c = 0; c < 2; ++c) {
            const auto k = static_cast<std::size_t>(c);
            nb.prior[k] = counts[k] / static_cast<double>(y.size());
            nb.mean[k].resize(d);
            nb.variance[k].resize(d);
            for (std::size_t j = 0; j < d; ++j) {
                const auto [m, v] = population_variance(j, c);
                nb.mean[k][j] = m;
                nb.variance[k][j] = v + nb.epsilon;
            }
        }
        return nb;
    }

    /// log P(class) + sum_j log N(x_j; mean, variance), per class.
    std::array<double, 2> log_joint(std::span<const double> x) const {
        std::array<double, 2> out{};
        for (std::size_t c = 0; c < 2; ++c) {
            double acc = std::log(prior[c]);
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double diff = x[j] - mean[c][j];
                acc -= 0.5 * (std::log(2.0 * std::numbers::pi * variance[c][j]) + diff * diff / variance[c][j]);
            }
            out[c] = acc;
        }
        return out;
    }

    std::array<double, 2> posterior(std::span<const double> x) const {
        const auto lj = log_joint(x);
        const double top = std::max(lj[0], lj[1]);
        const double e0 = std::exp(lj[0] - top), e1 = std::exp(lj[1] - top);
        return {e0 / (e0 + e1), e1 / (e0 + e1)};
    }

    int predict(std::span<const double> x) const {
        const auto lj = log_joint(x);
        return lj[1] > lj[0] ? 1 : 0;
    }

    bool operator==(const GaussianNB&) const = default;
};

} // namespace fraudlex
