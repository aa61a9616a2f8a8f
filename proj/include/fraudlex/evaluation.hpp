#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraudlex/error.hpp"
#include "fraudlex/features.hpp"
#include "fraudlex/model.hpp"
#include "fraudlex/rng.hpp"

namespace fraudlex {

inline constexpr std::size_t kDefaultFolds = 10;
inline constexpr std::uint64_t kDefaultSeed = 20190611;

/// Assignment of every dataset row (by position) to one of K folds.
struct FoldPlan {
    std::size_t K = kDefaultFolds;
    std::uint64_t seed = kDefaultSeed;
    bool stratified = true;
    std::vector<std::size_t> fold_of;
    std::vector<std::string> warnings;

    std::vector<std::size_t> test_rows(std::size_t fold) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < fold_of.size(); ++i)
            if (fold_of[i] == fold) out.push_back(i);
        return out;
    }

    /// 16 hex digits identifying the exact assignment.
    std::string digest() const {
        std::string text = std::to_string(K) + "|" + std::to_string(seed) + "|" + (stratified ? "s" : "u");
        for (auto f : fold_of) text += "," + std::to_string(f);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
        return buf;
    }
};

/// Stratified K-fold assignment.
///
/// Rows of each class (non-fraud first, then fraud) are shuffled with the seed,
/// concatenated, and dealt round-robin into folds. Fold sizes then differ by at
/// most one, and so do per-class counts. A class with fewer than K rows is
/// still dealt round-robin and a warning is recorded. With `stratified` off the
/// whole dataset is shuffled and dealt the same way.
inline FoldPlan make_folds(const Dataset& dataset, std::size_t K = kDefaultFolds, std::uint64_t seed = kDefaultSeed,
                           bool stratified = true) {
    const std::size_t n = dataset.rows.size();
    if (K < 2) throw Error(ErrorCode::invalid_config, "K must be at least 2");
    if (n < K)
        throw Error(ErrorCode::too_few_rows, std::to_string(n) + " rows cannot fill " + std::to_string(K) + " folds");

    FoldPlan plan;
    plan.K = K;
    plan.seed = seed;
    plan.stratified = stratified;
    plan.fold_of.assign(n, 0);
    Rng rng(seed);

    std::vector<std::size_t> sequence;
    if (stratified) {
        for (Label cls : {Label::non_fraud, Label::fraud}) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (dataset.rows[i].label == cls) members.push_back(i);
            if (!members.empty() && members.size() < K)
                plan.warnings.push_back("class " + std::string(to_string(cls)) + " has " + std::to_string(members.size()) +
                                        " rows, fewer than K=" + std::to_string(K) + "; stratification degraded");
            rng.shuffle(members);
            sequence.insert(sequence.end(), members.begin(), members.end());
        }
        if (sequence.size() != n) throw Error(ErrorCode::invalid_config, "stratified folds need labeled rows");
    } else {
        sequence.resize(n);
        for (std::size_t i = 0; i < n; ++i) sequence[i] = i;
        rng.shuffle(sequence);
    }
    for (std::size_t p = 0; p < sequence.size(); ++p) plan.fold_of[sequence[p]] = p % K;
    return plan;
}

/// Rows outside / inside one fold.
inline std::pair<Dataset, Dataset> fold_split(const Dataset& dataset, const FoldPlan& plan, std::size_t fold) {
    Dataset train{dataset.subset, dataset.names, {}}, test{dataset.subset, dataset.names, {}};
    for (std::size_t i = 0; i < dataset.rows.size(); ++i)
        (plan.fold_of[i] == fold ? test : train).rows.push_back(dataset.rows[i]);
    return {std::move(train), std::move(test)};
}

inline double accuracy(const TrainedModel& model, const Dataset& d) {
    if (d.rows.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& r : d.rows) hits += predict(model, r.values) == static_cast<int>(r.label);
    return static_cast<double>(hits) / static_cast<double>(d.rows.size());
}

// ---------------------------------------------------------------------------
// Reports

struct AccuracySummary {
    double mean = 0.0;
    double sd = 0.0; ///< sample sd over folds (K-1 denominator)
    std::vector<double> folds;

    static AccuracySummary of(std::vector<double> values) {
        AccuracySummary s;
        s.folds = std::move(values);
        const double k = static_cast<double>(s.folds.size());
        for (double v : s.folds) s.mean += v;
        s.mean /= k;
        double ss = 0.0;
        for (double v : s.folds) ss += (v - s.mean) * (v - s.mean);
        s.sd = s.folds.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
        return s;
    }
    bool operator==(const AccuracySummary&) const = default;
};

struct ModelResult {
    ModelKind kind = ModelKind::naive_bayes;
    bool standardized = false;
    AccuracySummary train;
    AccuracySummary test;
    /// Pooled over all held-out predictions, fraud as the positive class.
    std::optional<double> test_precision;
    std::optional<double> test_recall;

    bool operator==(const ModelResult&) const = default;
};

struct SubsetResult {
    FeatureSubset subset = FeatureSubset::combined;
    std::vector<ModelResult> models;

    bool operator==(const SubsetResult&) const = default;
};

struct ReportMetadata {
    std::uint64_t seed = kDefaultSeed;
    std::size_t K = kDefaultFolds;
    bool stratified = true;
    std::string standardization = "default";
    std::string marker_lexicon;
    std::string sentiment_backend;
    std::string fold_plan_digest;
    std::string sd_convention = "sample (K-1 denominator)";
    std::vector<std::string> warnings;
    nlohmann::json config = nlohmann::json::object();

    bool operator==(const ReportMetadata&) const = default;
};

struct EvalReport {
    ReportMetadata meta;
    std::vector<SubsetResult> subsets;

    bool operator==(const EvalReport&) const = default;
};

/// Trains every spec on each fold's training rows and scores both splits.
inline std::vector<ModelResult> cross_validate(const Dataset& dataset, const std::vector<ModelSpec>& specs,
                                               const FoldPlan& plan) {
    if (plan.fold_of.size() != dataset.rows.size())
        throw Error(ErrorCode::invalid_config, "fold plan does not match the dataset");
    std::vector<ModelResult> results;
    for (const auto& spec : specs) {
        std::vector<double> train_acc, test_acc;
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t fold = 0; fold < plan.K; ++fold) {
            const auto [train, test] = fold_split(dataset, plan, fold);
            TrainedModel model;
            try {
                model = fit(spec, train);
            } catch (const Error& e) {
                throw Error(e.code(), "fold " + std::to_string(fold) + ", model " + std::string(to_string(spec.kind)) +
                                          ": " + e.what());
            }
            train_acc.push_back(accuracy(model, train));
            test_acc.push_back(accuracy(model, test));
            for (const auto& r : test.rows) {
                const int p = predict(model, r.values);
                const int truth = static_cast<int>(r.label);
                tp += p == 1 && truth == 1;
                fp += p == 1 && truth == 0;
                fn += p == 0 && truth == 1;
            }
        }
        ModelResult res{spec.kind, spec.uses_standardizer(), AccuracySummary::of(std::move(train_acc)),
                        AccuracySummary::of(std::move(test_acc)), std::nullopt, std::nullopt};
        if (tp + fp) res.test_precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        if (tp + fn) res.test_recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
        results.push_back(std::move(res));
    }
    return results;
}

/// Mean held-out accuracy of always predicting the training folds' majority class.
inline double majority_baseline(const Dataset& dataset, const FoldPlan& plan) {
    double total = 0.0;
    for (std::size_t fold = 0; fold < plan.K; ++fold) {
        const auto [train, test] = fold_split(dataset, plan, fold);
        std::size_t ones = 0;
        for (const auto& r : train.rows) ones += r.label == Label::fraud;
        const Label majority = ones * 2 > train.rows.size() ? Label::fraud : Label::non_fraud;
        std::size_t hits = 0;
        for (const auto& r : test.rows) hits += r.label == majority;
        total += test.rows.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(test.rows.size());
    }
    return total / static_cast<double>(plan.K);
}

/// Cross-validates every requested subset of a combined dataset with one shared plan.
inline EvalReport evaluate(const Dataset& combined, const std::vector<FeatureSubset>& subsets,
                           const std::vector<ModelSpec>& specs, const FoldPlan& plan, ReportMetadata meta = {}) {
    EvalReport report;
    meta.seed = plan.seed;
    meta.K = plan.K;
    meta.stratified = plan.stratified;
    meta.fold_plan_digest = plan.digest();
    meta.warnings.insert(meta.warnings.end(), plan.warnings.begin(), plan.warnings.end());
    report.meta = std::move(meta);
    for (auto subset : {FeatureSubset::markers, FeatureSubset::sentiment, FeatureSubset::combined}) {
        if (std::find(subsets.begin(), subsets.end(), subset) == subsets.end()) continue;
        report.subsets.push_back({subset, cross_validate(project(combined, subset), specs, plan)});
    }
    return report;
}

inline std::string_view subset_heading(FeatureSubset s) {
    switch (s) {
    case FeatureSubset::markers: return "Markers";
    case FeatureSubset::sentiment: return "Sentiment";
    default: return "Markers + Sentiment";
    }
}

/// `0.6900 ±0.13`
inline std::string format_cell(double mean, double sd) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f \xC2\xB1%.2f", mean, sd);
    return buf;
}

namespace detail {

inline std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
}

inline std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    for (auto w = display_width(s); w < width; ++w) out.push_back(' ');
    return out;
}

inline void rtrim_line(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

} // namespace detail

/// Accuracy table: one block per feature subset with Training and Testing
/// rows, one column per model in the canonical model order.
inline std::string render_report(const EvalReport& report) {
    constexpr std::size_t kFeatureWidth = 21, kAccuracyWidth = 10, kCellWidth = 15;
    std::vector<ModelKind> columns;
    for (auto k : kAllModels)
        for (const auto& s : report.subsets)
            if (std::any_of(s.models.begin(), s.models.end(), [&](const ModelResult& m) { return m.kind == k; }) &&
                std::find(columns.begin(), columns.end(), k) == columns.end())
                columns.push_back(k);

    std::string out;
    std::string line = detail::pad("Features", kFeatureWidth) + detail::pad("Accuracy", kAccuracyWidth);
    for (auto k : columns) line += detail::pad(display_name(k), kCellWidth);
    detail::rtrim_line(line);
    out += line + "\n";
    if (columns.empty()) return out;

    for (const auto& s : report.subsets) {
        for (int split = 0; split < 2; ++split) {
            line = detail::pad(split == 0 ? subset_heading(s.subset) : "", kFeatureWidth) +
                   detail::pad(split == 0 ? "Training" : "Testing", kAccuracyWidth);
            for (auto k : columns) {
                auto it = std::find_if(s.models.begin(), s.models.end(), [&](const ModelResult& m) { return m.kind == k; });
                std::string cell = "-";
                if (it != s.models.end()) {
                    const auto& acc = split == 0 ? it->train : it->test;
                    cell = format_cell(acc.mean, acc.sd);
                }
                line += detail::pad(cell, kCellWidth);
            }
            detail::rtrim_line(line);
            out += line + "\n";
        }
    }
    return out;
}

inline nlohmann::ordered_json report_to_json(const EvalReport& r) {
    nlohmann::ordered_json j;
    j["format"] = "fraudlex-report";
    j["format_version"] = 1;
    auto& m = j["metadata"];
    m["seed"] = r.meta.seed;
    m["K"] = r.meta.K;
    m["stratified"] = r.meta.stratified;
    m["standardization"] = r.meta.standardization;
    m["marker_lexicon"] = r.meta.marker_lexicon;
    m["sentiment_backend"] = r.meta.sentiment_backend;
    m["fold_plan_digest"] = r.meta.fold_plan_digest;
    m["sd_convention"] = r.meta.sd_convention;
    m["warnings"] = r.meta.warnings;
    m["config"] = r.meta.config;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& s : r.subsets) {
        for (const auto& mr : s.models) {
            auto acc = [](const AccuracySummary& a) {
                return nlohmann::ordered_json{{"mean", a.mean}, {"sd", a.sd}, {"folds", a.folds}};
            };
            nlohmann::ordered_json row{{"features", std::string(to_string(s.subset))},
                                       {"model", std::string(to_string(mr.kind))},
                                       {"standardized", mr.standardized},
                                       {"train", acc(mr.train)},
                                       {"test", acc(mr.test)}};
            row["test_precision"] = mr.test_precision ? nlohmann::ordered_json(*mr.test_precision) : nullptr;
            row["test_recall"] = mr.test_recall ? nlohmann::ordered_json(*mr.test_recall) : nullptr;
            j["results"].push_back(std::move(row));
        }
    }
    return j;
}

inline EvalReport report_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "fraudlex-report") throw Error(ErrorCode::malformed_document, "not a report file");
        EvalReport r;
        const auto& m = j.at("metadata");
        r.meta.seed = m.at("seed").get<std::uint64_t>();
        r.meta.K = m.at("K").get<std::size_t>();
        r.meta.stratified = m.at("stratified").get<bool>();
        r.meta.standardization = m.at("standardization").get<std::string>();
        r.meta.marker_lexicon = m.at("marker_lexicon").get<std::string>();
        r.meta.sentiment_backend = m.at("sentiment_backend").get<std::string>();
        r.meta.fold_plan_digest = m.at("fold_plan_digest").get<std::string>();
        r.meta.sd_convention = m.at("sd_convention").get<std::string>();
        r.meta.warnings = m.at("warnings").get<std::vector<std::string>>();
        r.meta.config = m.at("config");
        for (const auto& row : j.at("results")) {
            const auto subset = parse_feature_subset(row.at("features").get<std::string>());
            if (r.subsets.empty() || r.subsets.back().subset != subset) r.subsets.push_back({subset, {}});
            auto acc = [](const nlohmann::json& a) {
                return AccuracySummary{a.at("mean").get<double>(), a.at("sd").get<double>(),
                                       a.at("folds").get<std::vector<double>>()};
            };
            ModelResult mr{parse_model_kind(row.at("model").get<std::string>()), row.at("standardized").get<bool>(),
                           acc(row.at("train")), acc(row.at("test")), std::nullopt, std::nullopt};
            if (!row.at("test_precision").is_null()) mr.test_precision = row.at("test_precision").get<double>();
            if (!row.at("test_recall").is_null()) mr.test_recall = row.at("test_recall").get<double>();
            r.subsets.back().models.push_back(std::move(mr));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }
}

} // namespace fraudlex
