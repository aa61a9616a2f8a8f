#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace fraudlex {

/// Soft-margin linear SVM trained by dual coordinate descent.
///
/// The bias is learned as the weight of a constant feature equal to 1, so the
/// problem solved is  min 1/2 (|w|^2 + b^2) + C sum_i max(0, 1 - y_i (w.x_i + b))
/// with dual  min 1/2 a'Qa - sum a,  0 <= a_i <= C.  Coordinates are swept in
/// index order. Training stops once the largest projected-gradient violation
/// of the current iterate is at most `tolerance`, or after `iteration_cap` sweeps.
struct LinearSvm {
    static constexpr double kDefaultC = 1.0;
    static constexpr double kDefaultTolerance = 1e-6;
    static constexpr std::uint64_t kDefaultIterationCap = 50000;

    std::vector<double> weights;
    double bias = 0.0;
    double C = kDefaultC;
    double tolerance = kDefaultTolerance;
    std::uint64_t iteration_cap = kDefaultIterationCap;
    std::uint64_t iterations = 0;
    bool converged = false;
    double max_violation = 0.0;
    std::vector<double> alpha;

    /// Labels are 0/1; 1 maps to the positive side.
    static LinearSvm fit(const std::vector<std::vector<double>>& X, const std::vector<int>& y, double C = kDefaultC,
                         double tolerance = kDefaultTolerance, std::uint64_t iteration_cap = kDefaultIterationCap) {
        LinearSvm svm;
        svm.C = C;
        svm.tolerance = tolerance;
        svm.iteration_cap = iteration_cap;
        const std::size_t n = X.size(), d = X.front().size();
        svm.weights.assign(d, 0.0);
        svm.alpha.assign(n, 0.0);

        std::vector<double> sign(n), diag(n);
        for (std::size_t i = 0; i < n; ++i) {
            sign[i] = y[i] == 1 ? 1.0 : -1.0;
            double q = 1.0; // bias feature
            for (double v : X[i]) q += v * v;
            diag[i] = q;
        }

        auto gradient = [&](std::size_t i) { return sign[i] * svm.decision(X[i]) - 1.0; };
        auto projected = [&](std::size_t i, double g) {
            if (svm.alpha[i] <= 0.0) return std::min(g, 0.0);
            if (svm.alpha[i] >= C) return std::max(g, 0.0);
            return g;
        };
        auto violation = [&] {
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(projected(i, gradient(i))));
            return worst;
        };

        for (;;) {
            svm.max_violation = violation();
            if (svm.max_violation <= tolerance) {
                svm.converged = true;
                break;
            }
            if (svm.iterations >= iteration_cap) break;
            ++svm.iterations;
            for (std::size_t i = 0; i < n; ++i) {
                const double g = gradient(i);
                if (projected(i, g) == 0.0) continue;
                const double old = svm.alpha[i];
                svm.alpha[i] = std::clamp(old - g / diag[i], 0.0, C);
                const double step = (svm.alpha[i] - old) * sign[i];
                if (step == 0.0) continue;
                for (std::size_t j = 0; j < d; ++j) svm.weights[j] += step * X[i][j];
                svm.bias += step;
            }
        }
        return svm;
    }

    double decision(std::span<const double> x) const {
        double f = bias;
        for (std::size_t j = 0; j < x.size(); ++j) f += weights[j] * x[j];
        return f;
    }

    int predict(std::span<const double> x) const { return decision(x) >= 0.0 ? 1 : 0; }

    /// Primal objective of the problem above at the current (w, b).
    double objective(const std::vector<std::vector<double>>& X, const std::vector<int>& y) const {
        double reg = bias * bias;
        for (double w : weights) reg += w * w;
        double loss = 0.0;
        for (std::size_t i = 0; i < X.size(); ++i) {
            const double s = y[i] == 1 ? 1.0 : -1.0;
            loss += std::max(0.0, 1.0 - s * decision(X[i]));
        }
        return 0.5 * reg + C * loss;
    }

    bool operator==(const LinearSvm&) const = default;
};

} // namespace fraudlex
