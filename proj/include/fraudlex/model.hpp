#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fraudlex/decision_tree.hpp"
#include "fraudlex/error.hpp"
#include "fraudlex/features.hpp"
#include "fraudlex/knn.hpp"
#include "fraudlex/linear_svm.hpp"
#include "fraudlex/naive_bayes.hpp"
#include "fraudlex/standardizer.hpp"

namespace fraudlex {

enum class ModelKind { naive_bayes, decision_tree, knn, linear_svm };

inline constexpr std::array<ModelKind, 4> kAllModels = {ModelKind::naive_bayes, ModelKind::decision_tree, ModelKind::knn,
                                                        ModelKind::linear_svm};

/// Short name used on the command line and in files.
inline std::string_view to_string(ModelKind k) {
    switch (k) {
    case ModelKind::naive_bayes: return "nb";
    case ModelKind::decision_tree: return "tree";
    case ModelKind::knn: return "knn";
    default: return "svm";
    }
}

/// Column heading used in the accuracy table.
inline std::string_view display_name(ModelKind k) {
    switch (k) {
    case ModelKind::naive_bayes: return "Naive Bayes";
    case ModelKind::decision_tree: return "DTree (d=3)";
    case ModelKind::knn: return "kNN(k=3)";
    default: return "SVM(Linear)";
    }
}

inline ModelKind parse_model_kind(std::string_view s) {
    for (auto k : kAllModels)
        if (s == to_string(k)) return k;
    throw Error(ErrorCode::invalid_config, "unknown model '" + std::string(s) + "' (expected nb, tree, knn or svm)");
}

struct ModelSpec {
    ModelKind kind = ModelKind::naive_bayes;
    /// Unset means the default: on for kNN and SVM, off for NB and the tree.
    std::optional<bool> standardize;

    bool uses_standardizer() const {
        return standardize.value_or(kind == ModelKind::knn || kind == ModelKind::linear_svm);
    }
};

/// Where the features of a model's training rows came from.
struct Provenance {
    std::string marker_lexicon;
    std::string sentiment_backend;

    bool operator==(const Provenance&) const = default;
};

struct TrainedModel {
    ModelKind kind = ModelKind::naive_bayes;
    FeatureSubset subset = FeatureSubset::combined;
    std::vector<std::string> feature_names;
    std::optional<Standardizer> standardizer;
    Provenance provenance;
    std::variant<GaussianNB, DecisionTree, KnnModel, LinearSvm> params;

    bool operator==(const TrainedModel&) const = default;
};

namespace detail {

inline void check_no_nan(const Dataset& d) {
    for (const auto& r : d.rows) {
        if (r.values.size() != d.dimension())
            throw Error(ErrorCode::dimension_mismatch, "row '" + r.id + "' has " + std::to_string(r.values.size()) +
                                                           " values, expected " + std::to_string(d.dimension()));
        for (double v : r.values)
            if (!std::isfinite(v)) throw Error(ErrorCode::invalid_config, "non-finite feature in row '" + r.id + "'");
    }
}

} // namespace detail

inline TrainedModel fit(const ModelSpec& spec, const Dataset& dataset, Provenance provenance = {}) {
    detail::check_no_nan(dataset);
    std::vector<std::vector<double>> X;
    std::vector<int> y;
    std::vector<std::string> ids;
    std::array<std::size_t, 2> per_class{};
    for (const auto& r : dataset.rows) {
        if (r.label == Label::unlabeled) throw Error(ErrorCode::invalid_config, "row '" + r.id + "' is unlabeled");
        X.push_back(r.values);
        y.push_back(static_cast<int>(r.label));
        ids.push_back(r.id);
        ++per_class[static_cast<std::size_t>(r.label)];
    }
    if (per_class[0] == 0 || per_class[1] == 0)
        throw Error(ErrorCode::single_class_training, "training rows must include both classes");

    TrainedModel model;
    model.kind = spec.kind;
    model.subset = dataset.subset;
    model.feature_names = dataset.names;
    model.provenance = std::move(provenance);
    if (spec.uses_standardizer()) {
        model.standardizer = Standardizer::fit(X);
        X = model.standardizer->transform_all(X);
    }

    switch (spec.kind) {
    case ModelKind::naive_bayes: model.params = GaussianNB::fit(X, y); break;
    case ModelKind::decision_tree: model.params = DecisionTree::fit(X, y); break;
    case ModelKind::knn: model.params = KnnModel{KnnModel::kDefaultK, std::move(X), std::move(y), std::move(ids)}; break;
    case ModelKind::linear_svm: model.params = LinearSvm::fit(X, y); break;
    }
    return model;
}

/// Applies the model's standardizer (if any) after checking dimensionality.
inline std::vector<double> model_input(const TrainedModel& model, std::span<const double> row) {
    if (row.size() != model.feature_names.size())
        throw Error(ErrorCode::dimension_mismatch, "row has " + std::to_string(row.size()) + " values, model expects " +
                                                       std::to_string(model.feature_names.size()));
    if (model.standardizer) return model.standardizer->transform(row);
    return {row.begin(), row.end()};
}

inline int predict(const TrainedModel& model, std::span<const double> row) {
    const auto x = model_input(model, row);
    return std::visit([&](const auto& m) { return m.predict(x); }, model.params);
}

// ---------------------------------------------------------------------------
// Explanations

struct TreeExplanation {
    std::vector<std::string> feature_names;
    std::optional<Standardizer> standardizer;
    std::vector<TreeNode> nodes;
};

struct SvmExplanation {
    std::vector<std::string> feature_names;
    std::optional<Standardizer> standardizer;
    std::vector<double> weights;
    double bias = 0.0;
};

struct NaiveBayesExplanation {
    std::vector<std::string> feature_names;
    std::optional<Standardizer> standardizer;
    std::array<double, 2> prior{};
    std::array<std::vector<double>, 2> mean;
    std::array<std::vector<double>, 2> variance;
};

struct KnnExplanation {
    std::vector<std::string> feature_names;
    std::optional<Standardizer> standardizer;
    std::size_t k = 0;
    std::vector<double> query; ///< after standardization
    std::vector<Neighbor> neighbors;
    int prediction = 0;
};

using Explanation = std::variant<TreeExplanation, SvmExplanation, NaiveBayesExplanation, KnnExplanation>;

/// Everything needed to recompute a prediction by hand. kNN explanations are
/// per query, so a query row is required for kNN models.
inline Explanation export_explanation(const TrainedModel& model, std::optional<std::span<const double>> query = {}) {
    const auto& names = model.feature_names;
    const auto& st = model.standardizer;
    switch (model.kind) {
    case ModelKind::decision_tree: return TreeExplanation{names, st, std::get<DecisionTree>(model.params).nodes()};
    case ModelKind::linear_svm: {
        const auto& svm = std::get<LinearSvm>(model.params);
        return SvmExplanation{names, st, svm.weights, svm.bias};
    }
    case ModelKind::naive_bayes: {
        const auto& nb = std::get<GaussianNB>(model.params);
        return NaiveBayesExplanation{names, st, nb.prior, nb.mean, nb.variance};
    }
    case ModelKind::knn: {
        if (!query) throw Error(ErrorCode::invalid_config, "a kNN explanation needs a query row");
        const auto& knn = std::get<KnnModel>(model.params);
        auto x = model_input(model, *query);
        auto nearest = knn.neighbors(x);
        const int label = KnnModel::vote(nearest);
        return KnnExplanation{names, st, knn.effective_k(), std::move(x), std::move(nearest), label};
    }
    }
    throw Error(ErrorCode::internal, "unknown model kind");
}

/// Graphviz DOT text. Internal nodes read `feature <= threshold`, leaves read
/// `v:0` (non-fraud) or `v:1` (fraud) with their class counts.
inline std::string render_tree(const TreeExplanation& e) {
    std::string out = "digraph DecisionTree {\n";
    out += "  node [shape=box, fontname=\"Helvetica\"];\n";
    out += "  edge [fontname=\"Helvetica\"];\n";
    if (e.standardizer) out += "  // thresholds apply to standardized features\n";
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const auto& n = e.nodes[i];
        const auto counts = "value = [" + std::to_string(n.counts[0]) + ", " + std::to_string(n.counts[1]) + "]";
        std::string label;
        if (n.is_leaf()) {
            label = "v:" + std::to_string(n.prediction()) + "\\n" + counts;
        } else {
            label = e.feature_names[static_cast<std::size_t>(n.feature)] + " <= " + format_double(n.threshold) +
                    "\\ngini = " + format_double(std::round(n.gini() * 1e4) / 1e4) +
                    "\\nsamples = " + std::to_string(n.counts[0] + n.counts[1]) + "\\n" + counts;
        }
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"" + (n.is_leaf() ? ", style=rounded" : "") + "];\n";
    }
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const auto& n = e.nodes[i];
        if (n.is_leaf()) continue;
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(n.left) + " [label=\"True\"];\n";
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(n.right) + " [label=\"False\"];\n";
    }
    out += "}\n";
    return out;
}

namespace detail {

inline std::string standardizer_note(const std::optional<Standardizer>& st, const std::vector<std::string>& names) {
    if (!st) return "features: raw (no standardization)\n";
    std::string out = "features: standardized as (x - mean) / max(sd, 1e-12)\n";
    for (std::size_t j = 0; j < names.size(); ++j)
        out += "  " + names[j] + ": mean=" + format_double(st->mean[j]) + " sd=" + format_double(st->sd[j]) + "\n";
    return out;
}

} // namespace detail

/// Human-readable rendering. Tree explanations render as DOT.
inline std::string render_explanation(const Explanation& explanation) {
    return std::visit(
        [](const auto& e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, TreeExplanation>) {
                return render_tree(e);
            } else if constexpr (std::is_same_v<T, SvmExplanation>) {
                std::vector<std::size_t> order(e.weights.size());
                for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
                std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    return std::abs(e.weights[a]) > std::abs(e.weights[b]);
                });
                std::string out = "linear SVM: predict fraud (1) when sum(w * x) + bias >= 0\n";
                out += detail::standardizer_note(e.standardizer, e.feature_names);
                out += "weights (largest magnitude first):\n";
                for (auto j : order) out += "  " + e.feature_names[j] + " " + format_double(e.weights[j]) + "\n";
                out += "bias " + format_double(e.bias) + "\n";
                return out;
            } else if constexpr (std::is_same_v<T, NaiveBayesExplanation>) {
                std::string out = "gaussian naive Bayes: predict the class with the larger\n"
                                  "log prior + sum of log N(x; mean, variance)\n";
                out += detail::standardizer_note(e.standardizer, e.feature_names);
                out += "prior non_fraud=" + format_double(e.prior[0]) + " fraud=" + format_double(e.prior[1]) + "\n";
                out += "feature,mean_non_fraud,variance_non_fraud,mean_fraud,variance_fraud\n";
                for (std::size_t j = 0; j < e.feature_names.size(); ++j)
                    out += e.feature_names[j] + "," + format_double(e.mean[0][j]) + "," + format_double(e.variance[0][j]) +
                           "," + format_double(e.mean[1][j]) + "," + format_double(e.variance[1][j]) + "\n";
                return out;
            } else {
                std::string out = "kNN (k=" + std::to_string(e.k) + "): majority label of the nearest rows\n";
                out += "rank,id,distance,label\n";
                for (std::size_t i = 0; i < e.neighbors.size(); ++i)
                    out += std::to_string(i + 1) + "," + e.neighbors[i].id + "," + format_double(e.neighbors[i].distance) +
                           "," + std::to_string(e.neighbors[i].label) + "\n";
                out += "prediction " + std::to_string(e.prediction) + "\n";
                return out;
            }
        },
        explanation);
}

// ---------------------------------------------------------------------------
// Model files

inline constexpr int kModelFormatVersion = 1;

namespace detail {

inline nlohmann::ordered_json standardizer_json(const std::optional<Standardizer>& st) {
    if (!st) return nullptr;
    return {{"mean", st->mean}, {"sd", st->sd}};
}

inline std::optional<Standardizer> standardizer_from(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return Standardizer{j.at("mean").get<std::vector<double>>(), j.at("sd").get<std::vector<double>>()};
}

} // namespace detail

inline nlohmann::ordered_json model_to_json(const TrainedModel& m) {
    nlohmann::ordered_json j;
    j["format"] = "fraudlex-model";
    j["format_version"] = kModelFormatVersion;
    j["kind"] = std::string(to_string(m.kind));
    j["feature_subset"] = std::string(to_string(m.subset));
    j["feature_names"] = m.feature_names;
    j["marker_lexicon"] = m.provenance.marker_lexicon;
    j["sentiment_backend"] = m.provenance.sentiment_backend;
    j["standardizer"] = detail::standardizer_json(m.standardizer);
    nlohmann::ordered_json p;
    switch (m.kind) {
    case ModelKind::naive_bayes: {
        const auto& nb = std::get<GaussianNB>(m.params);
        p["var_smoothing"] = GaussianNB::kSmoothing;
        p["epsilon"] = nb.epsilon;
        p["prior"] = nb.prior;
        p["mean"] = nb.mean;
        p["variance"] = nb.variance;
        break;
    }
    case ModelKind::decision_tree: {
        const auto& t = std::get<DecisionTree>(m.params);
        p["max_depth"] = t.max_depth();
        p["nodes"] = nlohmann::ordered_json::array();
        for (const auto& n : t.nodes())
            p["nodes"].push_back({{"feature", n.feature}, {"threshold", n.threshold}, {"left", n.left},
                                  {"right", n.right}, {"depth", n.depth}, {"counts", n.counts}});
        break;
    }
    case ModelKind::knn: {
        const auto& k = std::get<KnnModel>(m.params);
        p["k"] = k.k;
        p["ids"] = k.ids;
        p["labels"] = k.labels;
        p["rows"] = k.rows;
        break;
    }
    case ModelKind::linear_svm: {
        const auto& s = std::get<LinearSvm>(m.params);
        p["C"] = s.C;
        p["tolerance"] = s.tolerance;
        p["iteration_cap"] = s.iteration_cap;
        p["iterations"] = s.iterations;
        p["converged"] = s.converged;
        p["max_violation"] = s.max_violation;
        p["weights"] = s.weights;
        p["bias"] = s.bias;
        p["alpha"] = s.alpha;
        break;
    }
    }
    j["parameters"] = std::move(p);
    return j;
}

inline TrainedModel model_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "fraudlex-model") throw Error(ErrorCode::invalid_model, "not a model file");
        if (j.at("format_version") != kModelFormatVersion)
            throw Error(ErrorCode::invalid_model, "unsupported model format version");
        TrainedModel m;
        m.kind = parse_model_kind(j.at("kind").get<std::string>());
        m.subset = parse_feature_subset(j.at("feature_subset").get<std::string>());
        m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        m.provenance = {j.at("marker_lexicon").get<std::string>(), j.at("sentiment_backend").get<std::string>()};
        m.standardizer = detail::standardizer_from(j.at("standardizer"));
        const auto& p = j.at("parameters");
        switch (m.kind) {
        case ModelKind::naive_bayes: {
            GaussianNB nb;
            nb.epsilon = p.at("epsilon").get<double>();
            nb.prior = p.at("prior").get<std::array<double, 2>>();
            nb.mean = p.at("mean").get<std::array<std::vector<double>, 2>>();
            nb.variance = p.at("variance").get<std::array<std::vector<double>, 2>>();
            m.params = std::move(nb);
            break;
        }
        case ModelKind::decision_tree: {
            std::vector<TreeNode> nodes;
            for (const auto& n : p.at("nodes"))
                nodes.push_back({n.at("feature").get<int>(), n.at("threshold").get<double>(), n.at("left").get<int>(),
                                 n.at("right").get<int>(), n.at("depth").get<int>(),
                                 n.at("counts").get<std::array<std::size_t, 2>>()});
            const int size = static_cast<int>(nodes.size());
            for (const auto& n : nodes)
                if (n.feature >= static_cast<int>(m.feature_names.size()) ||
                    (!n.is_leaf() && (n.left <= 0 || n.left >= size || n.right <= 0 || n.right >= size)))
                    throw Error(ErrorCode::invalid_model, "inconsistent tree node");
            if (nodes.empty()) throw Error(ErrorCode::invalid_model, "tree without nodes");
            m.params = DecisionTree::from_nodes(std::move(nodes), p.at("max_depth").get<int>());
            break;
        }
        case ModelKind::knn: {
            KnnModel k;
            k.k = p.at("k").get<std::size_t>();
            k.ids = p.at("ids").get<std::vector<std::string>>();
            k.labels = p.at("labels").get<std::vector<int>>();
            k.rows = p.at("rows").get<std::vector<std::vector<double>>>();
            if (k.ids.size() != k.rows.size() || k.labels.size() != k.rows.size() || k.rows.empty())
                throw Error(ErrorCode::invalid_model, "kNN rows, ids and labels disagree");
            m.params = std::move(k);
            break;
        }
        case ModelKind::linear_svm: {
            LinearSvm s;
            s.C = p.at("C").get<double>();
            s.tolerance = p.at("tolerance").get<double>();
            s.iteration_cap = p.at("iteration_cap").get<std::uint64_t>();
            s.iterations = p.at("iterations").get<std::uint64_t>();
            s.converged = p.at("converged").get<bool>();
            s.max_violation = p.at("max_violation").get<double>();
            s.weights = p.at("weights").get<std::vector<double>>();
            s.bias = p.at("bias").get<double>();
            s.alpha = p.at("alpha").get<std::vector<double>>();
            if (s.weights.size() != m.feature_names.size()) throw Error(ErrorCode::invalid_model, "weight count mismatch");
            m.params = std::move(s);
            break;
        }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_model, e.what());
    }
}

inline std::string serialize_model(const TrainedModel& m) { return model_to_json(m).dump(2) + "\n"; }

inline TrainedModel parse_model(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::invalid_model, e.what());
    }
    return model_from_json(j);
}

} // namespace fraudlex
