#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fraudlex/model.hpp"
#include "fraudlex/rng.hpp"
#include "oracles.hpp"

using namespace fraudlex;

namespace {

using Matrix = std::vector<std::vector<double>>;

Dataset make_dataset(const Matrix& X, const std::vector<int>& y) {
    Dataset d;
    d.names.clear();
    for (std::size_t j = 0; j < X.front().size(); ++j) d.names.push_back("f" + std::to_string(j));
    for (std::size_t i = 0; i < X.size(); ++i) {
        char id[16];
        std::snprintf(id, sizeof id, "r%03zu", i);
        d.rows.push_back({id, X[i], y[i] ? Label::fraud : Label::non_fraud});
    }
    return d;
}

double training_accuracy(const TrainedModel& m, const Dataset& d) {
    std::size_t ok = 0;
    for (const auto& r : d.rows) ok += predict(m, r.values) == static_cast<int>(r.label);
    return static_cast<double>(ok) / static_cast<double>(d.size());
}

/// Random labelled instance with both classes present.
std::pair<Matrix, std::vector<int>> random_instance(Rng& rng, std::size_t n, std::size_t d, bool integer_grid) {
    Matrix X(n, std::vector<double>(d));
    std::vector<int> y(n);
    do {
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& v : X[i]) v = integer_grid ? static_cast<double>(rng.below(5)) : rng.normal();
            y[i] = rng.bernoulli(0.5) ? 1 : 0;
        }
    } while (std::count(y.begin(), y.end(), 1) == 0 || std::count(y.begin(), y.end(), 0) == 0);
    return {X, y};
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

void expect_same_tree(const std::vector<TreeNode>& got, const std::vector<oracle::TreeNode>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].feature, want[i].feature) << "node " << i;
        EXPECT_EQ(got[i].counts, want[i].counts) << "node " << i;
        if (want[i].feature >= 0) {
            EXPECT_EQ(got[i].threshold, want[i].threshold) << "node " << i;
            EXPECT_EQ(got[i].left, want[i].left);
            EXPECT_EQ(got[i].right, want[i].right);
        }
    }
}

} // namespace

TEST(Fit, TwoPointDatasetIsLearnedByEveryModel) {
    const auto d = make_dataset({{0.0, 1.0}, {2.0, -1.0}}, {0, 1});
    for (auto kind : kAllModels) {
        const auto m = fit({kind}, d);
        EXPECT_EQ(training_accuracy(m, d), 1.0) << display_name(kind);
    }
}

TEST(Fit, RejectsSingleClassAndUnlabeledAndNaN) {
    auto d = make_dataset({{0.0}, {1.0}}, {1, 1});
    for (auto kind : kAllModels) EXPECT_EQ(code_of([&] { fit({kind}, d); }), ErrorCode::single_class_training);
    d.rows[0].label = Label::unlabeled;
    EXPECT_EQ(code_of([&] { fit({ModelKind::knn}, d); }), ErrorCode::invalid_config);
    d = make_dataset({{0.0}, {NAN}}, {0, 1});
    EXPECT_EQ(code_of([&] { fit({ModelKind::knn}, d); }), ErrorCode::invalid_config);
}

TEST(Fit, StandardizationDefaults) {
    EXPECT_FALSE(ModelSpec{ModelKind::naive_bayes}.uses_standardizer());
    EXPECT_FALSE(ModelSpec{ModelKind::decision_tree}.uses_standardizer());
    EXPECT_TRUE(ModelSpec{ModelKind::knn}.uses_standardizer());
    EXPECT_TRUE(ModelSpec{ModelKind::linear_svm}.uses_standardizer());
    EXPECT_FALSE((ModelSpec{ModelKind::linear_svm, false}.uses_standardizer()));
    EXPECT_TRUE((ModelSpec{ModelKind::decision_tree, true}.uses_standardizer()));
}

TEST(Predict, DimensionMismatch) {
    const auto d = make_dataset({{0.0, 1.0}, {2.0, -1.0}}, {0, 1});
    for (auto kind : kAllModels) {
        const auto m = fit({kind}, d);
        const std::vector<double> short_row = {1.0};
        EXPECT_EQ(code_of([&] { predict(m, short_row); }), ErrorCode::dimension_mismatch);
    }
}

// ---------------------------------------------------------------------------
// Decision tree

TEST(Tree, RootSplitsOnMedianSentimentAtZero) {
    // Every other column is shared between a fraud row and a non-fraud row, so
    // only the median separates the classes.
    Rng rng(41);
    Dataset d;
    const auto median = static_cast<std::size_t>(std::find(d.names.begin(), d.names.end(), "sentiment_median") - d.names.begin());
    for (int i = 0; i < 12; ++i) {
        std::vector<double> shared(kFeatureCount);
        for (auto& v : shared) v = static_cast<double>(rng.below(6));
        auto fraud = shared, honest = shared;
        fraud[median] = -0.25 - 0.05 * i;
        honest[median] = 0.25 + 0.05 * i;
        d.rows.push_back({"f" + std::to_string(i), fraud, Label::fraud});
        d.rows.push_back({"n" + std::to_string(i), honest, Label::non_fraud});
    }
    const auto m = fit({ModelKind::decision_tree}, d);
    const auto& nodes = std::get<DecisionTree>(m.params).nodes();
    ASSERT_FALSE(nodes[0].is_leaf());
    EXPECT_EQ(m.feature_names[static_cast<std::size_t>(nodes[0].feature)], "sentiment_median");
    EXPECT_EQ(nodes[0].threshold, 0.0);
    // Left (median <= 0) is the fraud leaf, as in a v:1 reading.
    EXPECT_EQ(nodes[static_cast<std::size_t>(nodes[0].left)].prediction(), 1);
    EXPECT_EQ(nodes[static_cast<std::size_t>(nodes[0].right)].prediction(), 0);
    const auto dot = render_tree(std::get<TreeExplanation>(export_explanation(m)));
    EXPECT_NE(dot.find("sentiment_median <= 0\\n"), std::string::npos);
}

TEST(Tree, PureInputIsDepthZeroLeaf) {
    const auto t = DecisionTree::fit({{1.0}, {2.0}, {3.0}}, {1, 1, 1});
    ASSERT_EQ(t.nodes().size(), 1u);
    EXPECT_TRUE(t.nodes()[0].is_leaf());
    EXPECT_EQ(t.depth(), 0);
    EXPECT_EQ(t.predict(std::vector<double>{-5.0}), 1);
}

TEST(Tree, IdenticalRowsGiveLeafRoot) {
    const auto t = DecisionTree::fit({{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}}, {0, 1, 1});
    ASSERT_EQ(t.nodes().size(), 1u);
    EXPECT_EQ(t.predict(std::vector<double>{0.0, 0.0}), 1);
    const auto dot = render_tree(TreeExplanation{{"a", "b"}, {}, t.nodes()});
    EXPECT_NE(dot.find("v:1\\nvalue = [1, 2]"), std::string::npos);
    EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(Tree, XorLikeNeedsDepthTwo) {
    const Matrix X = {{0, 0}, {0, 0}, {1, 1}, {0, 1}, {1, 0}};
    const std::vector<int> y = {0, 0, 0, 1, 1};
    const auto t = DecisionTree::fit(X, y);
    EXPECT_EQ(t.depth(), 2);
    for (std::size_t i = 0; i < X.size(); ++i) EXPECT_EQ(t.predict(X[i]), y[i]);
    expect_same_tree(t.nodes(), oracle::cart(X, y));
}

TEST(Tree, ExactXorHasNoImprovingSplit) {
    // Every axis split of the balanced XOR leaves both halves at 50/50, so no
    // split strictly lowers impurity.
    const auto t = DecisionTree::fit({{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {0, 0, 1, 1});
    EXPECT_EQ(t.nodes().size(), 1u);
}

TEST(Tree, GiniOfBalancedNode) {
    TreeNode n;
    n.counts = {5, 5};
    EXPECT_DOUBLE_EQ(n.gini(), 0.5);
    n.counts = {4, 0};
    EXPECT_EQ(n.gini(), 0.0);
    EXPECT_EQ(n.prediction(), 0);
}

TEST(Tree, TieBreaksByFeatureThenThreshold) {
    // Feature 0 and feature 1 separate equally well; feature 0 wins.
    const auto t = DecisionTree::fit({{0, 0}, {1, 1}}, {0, 1});
    EXPECT_EQ(t.nodes()[0].feature, 0);
    EXPECT_EQ(t.nodes()[0].threshold, 0.5);
    // Thresholds 0.5 and 2.5 tie on one feature; the lower one wins.
    const auto u = DecisionTree::fit({{0}, {1}, {1}, {2}, {3}, {3}}, {0, 1, 1, 1, 1, 0});
    EXPECT_EQ(u.nodes()[0].threshold, 0.5);
}

TEST(TreeProperties, StructuralInvariantsOnRandomData) {
    Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const auto [X, y] = random_instance(rng, 2 + rng.below(40), 1 + rng.below(5), rng.bernoulli(0.5));
        const auto t = DecisionTree::fit(X, y);
        ASSERT_LE(t.depth(), 3);
        for (const auto& n : t.nodes()) {
            if (n.is_leaf()) continue;
            const auto& l = t.nodes()[static_cast<std::size_t>(n.left)];
            const auto& r = t.nodes()[static_cast<std::size_t>(n.right)];
            const double nl = static_cast<double>(l.counts[0] + l.counts[1]);
            const double nr = static_cast<double>(r.counts[0] + r.counts[1]);
            ASSERT_LT(nl * l.gini() + nr * r.gini(), (nl + nr) * n.gini() - 1e-12);
            ASSERT_EQ(l.counts[0] + r.counts[0], n.counts[0]);
            ASSERT_EQ(l.counts[1] + r.counts[1], n.counts[1]);
        }
        for (const auto& x : X) {
            const auto& leaf = t.nodes()[t.leaf_for(x)];
            ASSERT_TRUE(leaf.is_leaf());
            ASSERT_EQ(t.predict(x), leaf.counts[1] > leaf.counts[0] ? 1 : 0);
        }
    }
}

TEST(TreeProperties, MatchesEnumerationOracle) {
    Rng rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        const auto [X, y] = random_instance(rng, 2 + rng.below(15), 1 + rng.below(4), true);
        expect_same_tree(DecisionTree::fit(X, y).nodes(), oracle::cart(X, y));
        if (HasFailure()) return;
    }
}

TEST(TreeRender, LeafCountAndLabels) {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [X, y] = random_instance(rng, 2 + rng.below(40), 1 + rng.below(4), false);
        const auto t = DecisionTree::fit(X, y);
        std::vector<std::string> names;
        for (std::size_t j = 0; j < X.front().size(); ++j) names.push_back("x" + std::to_string(j));
        const auto dot = render_tree(TreeExplanation{names, {}, t.nodes()});
        std::size_t leaves = 0;
        for (std::size_t p = dot.find("label=\"v:"); p != std::string::npos; p = dot.find("label=\"v:", p + 1)) {
            const char c = dot[p + 9];
            ASSERT_TRUE(c == '0' || c == '1');
            ++leaves;
        }
        ASSERT_EQ(leaves, t.leaf_count());
        ASSERT_EQ(dot.rfind("digraph", 0), 0u);
    }
}

// ---------------------------------------------------------------------------
// Linear SVM

TEST(Svm, SymmetricPair) {
    const auto svm = LinearSvm::fit({{-1.0}, {1.0}}, {0, 1});
    EXPECT_TRUE(svm.converged);
    EXPECT_GT(svm.weights[0], 0.0);
    EXPECT_NEAR(svm.bias, 0.0, 1e-9);
    EXPECT_NEAR(-svm.bias / svm.weights[0], 0.0, 1e-9);
    // Both points sit on the margin: w = 1.
    EXPECT_NEAR(svm.weights[0], 1.0, 1e-6);
}

TEST(Svm, ContradictoryLabelsStayFinite) {
    const Matrix X = {{0.5, 0.5}, {0.5, 0.5}, {1.0, -1.0}};
    const std::vector<int> y = {0, 1, 1};
    const auto svm = LinearSvm::fit(X, y);
    EXPECT_TRUE(std::isfinite(svm.objective(X, y)));
    double slack = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) slack += std::max(0.0, 1.0 - (y[i] ? 1.0 : -1.0) * svm.decision(X[i]));
    EXPECT_GT(slack, 0.0);
}

TEST(Svm, FourPointInstanceMatchesQpOracle) {
    const Matrix X = {{1.0, 2.0}, {2.0, 3.0}, {-1.0, -0.5}, {-2.0, 0.0}};
    const std::vector<int> y = {1, 1, 0, 0};
    const auto svm = LinearSvm::fit(X, y);
    const auto qp = oracle::svm_qp(X, y, 1.0);
    ASSERT_TRUE(svm.converged);
    EXPECT_NEAR(svm.weights[0], qp.w[0], 1e-4);
    EXPECT_NEAR(svm.weights[1], qp.w[1], 1e-4);
    EXPECT_NEAR(svm.bias, qp.w[2], 1e-4);
    for (const auto& x : X) EXPECT_EQ(svm.predict(x), qp.w[0] * x[0] + qp.w[1] * x[1] + qp.w[2] >= 0 ? 1 : 0);
}

TEST(Svm, TenPointInstanceMatchesQpObjective) {
    const Matrix X = {{0.2, 1.1}, {1.5, 0.3}, {-0.7, 0.4}, {2.2, 1.9}, {-1.3, -0.8},
                      {0.9, -1.2}, {-0.1, 2.3}, {1.1, 1.0}, {-2.0, 0.5}, {0.4, -0.3}};
    const std::vector<int> y = {1, 1, 0, 1, 0, 0, 1, 1, 0, 0};
    const auto svm = LinearSvm::fit(X, y);
    const auto qp = oracle::svm_qp(X, y, 1.0);
    ASSERT_TRUE(svm.converged);
    EXPECT_NEAR(svm.objective(X, y), qp.primal, 1e-4 * std::max(1.0, std::abs(qp.primal)));
}

TEST(Svm, ComplementarySlacknessAtConvergence) {
    Rng rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [X, y] = random_instance(rng, 5 + rng.below(40), 1 + rng.below(6), false);
        const auto svm = LinearSvm::fit(X, y);
        ASSERT_TRUE(svm.converged);
        ASSERT_LE(svm.max_violation, svm.tolerance);
        for (std::size_t i = 0; i < X.size(); ++i) {
            const double margin = (y[i] ? 1.0 : -1.0) * svm.decision(X[i]);
            const double a = svm.alpha[i];
            ASSERT_GE(a, 0.0);
            ASSERT_LE(a, svm.C);
            if (a == 0.0) ASSERT_GE(margin, 1.0 - 1e-6);
            else if (a == svm.C) ASSERT_LE(margin, 1.0 + 1e-6);
            else ASSERT_NEAR(margin, 1.0, 1e-6);
        }
    }
}

TEST(Svm, PredictionsInvariantUnderPositiveScaling) {
    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [X, y] = random_instance(rng, 5 + rng.below(30), 1 + rng.below(6), false);
        const auto svm = LinearSvm::fit(X, y);
        for (double c : {1e-3, 0.5, 2.0, 1e3}) {
            auto scaled = svm;
            for (auto& w : scaled.weights) w *= c;
            scaled.bias *= c;
            for (const auto& x : X) ASSERT_EQ(scaled.predict(x), svm.predict(x));
        }
    }
}

TEST(Svm, IterationCapIsRecorded) {
    Rng rng(67);
    const auto [X, y] = random_instance(rng, 60, 4, false);
    const auto svm = LinearSvm::fit(X, y, 1.0, 1e-6, 1);
    EXPECT_EQ(svm.iterations, 1u);
    EXPECT_FALSE(svm.converged);
    EXPECT_GT(svm.max_violation, 1e-6);
}

// ---------------------------------------------------------------------------
// kNN

TEST(Knn, SingleTrainingRowAlwaysWins) {
    KnnModel m{3, {{1.0, 2.0}}, {1}, {"only"}};
    EXPECT_EQ(m.effective_k(), 1u);
    Rng rng(71);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(m.predict(std::vector<double>{rng.normal() * 10, rng.normal() * 10}), 1);
}

TEST(Knn, DistanceTiesBrokenById) {
    KnnModel m{3, {{1.0}, {-1.0}, {1.0}, {-1.0}}, {1, 1, 0, 0}, {"d", "c", "b", "a"}};
    const auto nn = m.neighbors(std::vector<double>{0.0});
    ASSERT_EQ(nn.size(), 3u);
    EXPECT_EQ(nn[0].id, "a");
    EXPECT_EQ(nn[1].id, "b");
    EXPECT_EQ(nn[2].id, "c");
    EXPECT_EQ(m.predict(std::vector<double>{0.0}), 0);
}

TEST(Knn, SplitVoteGoesToNearest) {
    KnnModel m{3, {{0.0}, {3.0}}, {1, 0}, {"a", "b"}};
    EXPECT_EQ(m.predict(std::vector<double>{1.0}), 1);
    EXPECT_EQ(m.predict(std::vector<double>{2.0}), 0);
}

TEST(Knn, PredictionInvariantUnderRowPermutation) {
    Rng rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const bool grid = rng.bernoulli(0.5); // many distance ties
        const auto [X, y] = random_instance(rng, 3 + rng.below(30), 1 + rng.below(4), grid);
        auto d = make_dataset(X, y);
        const auto a = fit({ModelKind::knn}, d);
        rng.shuffle(d.rows);
        const auto b = fit({ModelKind::knn}, d);
        for (int q = 0; q < 20; ++q) {
            std::vector<double> x(X.front().size());
            for (auto& v : x) v = grid ? static_cast<double>(rng.below(5)) : rng.normal();
            ASSERT_EQ(predict(a, x), predict(b, x));
        }
    }
}

// ---------------------------------------------------------------------------
// Naive Bayes

TEST(NaiveBayes, PosteriorsSumToOne) {
    Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [X, y] = random_instance(rng, 4 + rng.below(30), 1 + rng.below(8), rng.bernoulli(0.3));
        const auto nb = GaussianNB::fit(X, y);
        ASSERT_NEAR(nb.prior[0] + nb.prior[1], 1.0, 1e-15);
        for (const auto& v : nb.variance[0]) ASSERT_GT(v, 0.0);
        for (const auto& v : nb.variance[1]) ASSERT_GT(v, 0.0);
        for (int q = 0; q < 10; ++q) {
            std::vector<double> x(X.front().size());
            for (auto& v : x) v = rng.normal() * 3;
            const auto p = nb.posterior(x);
            ASSERT_TRUE(std::isfinite(p[0]) && std::isfinite(p[1]));
            ASSERT_NEAR(p[0] + p[1], 1.0, 1e-12);
        }
    }
}

TEST(NaiveBayes, HandComputedPosteriorMatchesPredict) {
    Rng rng(83);
    const auto [X, y] = random_instance(rng, 40, 5, false);
    const auto d = make_dataset(X, y);
    const auto m = fit({ModelKind::naive_bayes}, d);
    const auto e = std::get<NaiveBayesExplanation>(export_explanation(m));
    for (int q = 0; q < 20; ++q) {
        std::vector<double> x(5);
        for (auto& v : x) v = rng.normal() * 2;
        long double lp[2];
        for (int c = 0; c < 2; ++c) {
            lp[c] = std::log(static_cast<long double>(e.prior[c]));
            for (std::size_t j = 0; j < x.size(); ++j) {
                const long double var = e.variance[c][j], diff = x[j] - e.mean[c][j];
                lp[c] += -0.5L * std::log(2.0L * std::numbers::pi_v<long double> * var) - diff * diff / (2.0L * var);
            }
        }
        const int hand = lp[1] > lp[0] ? 1 : 0;
        ASSERT_EQ(predict(m, x), hand);
    }
}

TEST(NaiveBayes, ConstantFeaturesStillFit) {
    const auto nb = GaussianNB::fit({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}}, {0, 1, 1});
    EXPECT_EQ(nb.epsilon, 1e-9);
    EXPECT_EQ(nb.predict(std::vector<double>{1.0, 1.0}), 1);
}

// ---------------------------------------------------------------------------
// Explanations and model files

TEST(Explain, SvmListsEveryWeightAndBias) {
    Rng rng(89);
    Dataset d;
    for (int i = 0; i < 20; ++i) {
        std::vector<double> v(kFeatureCount);
        for (auto& x : v) x = rng.normal();
        d.rows.push_back({"r" + std::to_string(100 + i), v, i % 2 ? Label::fraud : Label::non_fraud});
    }
    const auto m = fit({ModelKind::linear_svm}, d);
    const auto e = std::get<SvmExplanation>(export_explanation(m));
    EXPECT_EQ(e.weights.size(), 27u);
    const auto text = render_explanation(e);
    for (const auto& n : feature_names()) EXPECT_NE(text.find("  " + n + " "), std::string::npos) << n;
    EXPECT_NE(text.find("\nbias "), std::string::npos);
    // Hand trace through the standardizer.
    for (const auto& r : d.rows) {
        double f = e.bias;
        for (std::size_t j = 0; j < 27; ++j)
            f += e.weights[j] * (r.values[j] - e.standardizer->mean[j]) / std::max(e.standardizer->sd[j], 1e-12);
        ASSERT_EQ(f >= 0 ? 1 : 0, predict(m, r.values));
    }
}

TEST(Explain, KnnNeedsQuery) {
    const auto d = make_dataset({{0.0}, {1.0}, {5.0}}, {0, 0, 1});
    const auto m = fit({ModelKind::knn}, d);
    EXPECT_EQ(code_of([&] { export_explanation(m); }), ErrorCode::invalid_config);
    const std::vector<double> q = {0.2};
    const auto e = std::get<KnnExplanation>(export_explanation(m, std::span<const double>(q)));
    ASSERT_EQ(e.neighbors.size(), 3u);
    EXPECT_EQ(e.neighbors[0].id, "r000");
    EXPECT_EQ(e.prediction, 0);
    EXPECT_NE(render_explanation(e).find("1,r000,"), std::string::npos);
}

TEST(ModelFile, RoundTripPreservesPredictions) {
    Rng rng(97);
    const auto [X, y] = random_instance(rng, 30, 4, false);
    const auto d = make_dataset(X, y);
    for (auto kind : kAllModels) {
        for (bool st : {false, true}) {
            const auto m = fit({kind, st}, d, {"markers-v1", "lexicon:valence-v1"});
            const auto text = serialize_model(m);
            const auto back = parse_model(text);
            EXPECT_EQ(back, m) << display_name(kind);
            EXPECT_EQ(serialize_model(back), text);
            for (int q = 0; q < 20; ++q) {
                std::vector<double> x(4);
                for (auto& v : x) v = rng.normal();
                ASSERT_EQ(predict(back, x), predict(m, x));
            }
        }
    }
}

TEST(ModelFile, RepeatedFitsAreBitIdentical) {
    Rng rng(101);
    const auto [X, y] = random_instance(rng, 40, 6, false);
    const auto d = make_dataset(X, y);
    for (auto kind : kAllModels) EXPECT_EQ(serialize_model(fit({kind}, d)), serialize_model(fit({kind}, d)));
}

TEST(ModelFile, RejectsGarbage) {
    EXPECT_EQ(code_of([] { parse_model("not json"); }), ErrorCode::invalid_model);
    EXPECT_EQ(code_of([] { parse_model(R"({"format": "fraudlex-model", "format_version": 99})"); }), ErrorCode::invalid_model);
    EXPECT_EQ(code_of([] { parse_model(R"({"format": "other"})"); }), ErrorCode::invalid_model);
}
