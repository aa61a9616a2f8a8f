#pragma once

#include <array>
#include <charconv>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fraudlex/error.hpp"
#include "fraudlex/marker_lexicon.hpp"
#include "fraudlex/sentiment.hpp"
#include "fraudlex/tokenizer.hpp"
#include "fraudlex/transcript.hpp"

namespace fraudlex {

inline constexpr std::size_t kSentimentFeatureCount = 11;
inline constexpr std::size_t kFeatureCount = kMarkerCount + kSentimentFeatureCount;

inline constexpr std::array<std::string_view, kSentimentFeatureCount> kSentimentFeatureNames = {
    "sentiment_mean",     "sentiment_sd",       "sentiment_min", "sentiment_max",
    "sentiment_median",   "sentiment_iqr",      "sentiment_kurtosis",
    "sentiment_skewness", "sentiment_pE",       "sentiment_nE",  "tR",
};

enum class FeatureSubset { markers, sentiment, combined };

inline std::string_view to_string(FeatureSubset s) {
    switch (s) {
    case FeatureSubset::markers: return "markers";
    case FeatureSubset::sentiment: return "sentiment";
    default: return "combined";
    }
}

inline FeatureSubset parse_feature_subset(std::string_view s) {
    if (s == "markers") return FeatureSubset::markers;
    if (s == "sentiment") return FeatureSubset::sentiment;
    if (s == "combined") return FeatureSubset::combined;
    throw Error(ErrorCode::invalid_config, "unknown feature subset '" + std::string(s) + "'");
}

/// Column range [first, last) of a subset inside the combined 27-vector.
inline std::pair<std::size_t, std::size_t> subset_columns(FeatureSubset s) {
    switch (s) {
    case FeatureSubset::markers: return {0, kMarkerCount};
    case FeatureSubset::sentiment: return {kMarkerCount, kFeatureCount};
    default: return {0, kFeatureCount};
    }
}

inline std::vector<std::string> feature_names(FeatureSubset subset = FeatureSubset::combined) {
    std::vector<std::string> all;
    for (auto n : kMarkerNames) all.emplace_back(n);
    for (auto n : kSentimentFeatureNames) all.emplace_back(n);
    const auto [first, last] = subset_columns(subset);
    return {all.begin() + static_cast<std::ptrdiff_t>(first), all.begin() + static_cast<std::ptrdiff_t>(last)};
}

struct FeatureVector {
    std::string id;
    std::vector<double> values;
    Label label = Label::unlabeled;

    bool operator==(const FeatureVector&) const = default;
};

struct Dataset {
    FeatureSubset subset = FeatureSubset::combined;
    std::vector<std::string> names = feature_names();
    std::vector<FeatureVector> rows;

    std::size_t dimension() const noexcept { return names.size(); }
    std::size_t size() const noexcept { return rows.size(); }
    bool operator==(const Dataset&) const = default;
};

/// Where per-response sentiment scores come from.
class SentimentBackend {
public:
    static SentimentBackend lexicon(std::shared_ptr<const ValenceLexicon> lex) {
        SentimentBackend b;
        b.source_ = std::move(lex);
        return b;
    }
    static SentimentBackend external(std::shared_ptr<const ExternalScores> scores) {
        SentimentBackend b;
        b.source_ = std::move(scores);
        return b;
    }

    std::vector<double> score(const Transcript& t, const std::vector<TokenStream>& responses) const {
        std::vector<double> out;
        out.reserve(responses.size());
        if (const auto* lex = std::get_if<std::shared_ptr<const ValenceLexicon>>(&source_)) {
            for (const auto& r : responses) out.push_back(score_response(r, **lex).value());
        } else {
            const auto& scores = *std::get<std::shared_ptr<const ExternalScores>>(source_);
            for (std::size_t i = 0; i < responses.size(); ++i) {
                auto it = scores.find({t.id, i});
                if (it == scores.end())
                    throw Error(ErrorCode::missing_response_score, "'" + t.id + "' response " + std::to_string(i));
                out.push_back(it->second.value());
            }
        }
        return out;
    }

    /// "lexicon:<version>" or "external".
    std::string describe() const {
        if (const auto* lex = std::get_if<std::shared_ptr<const ValenceLexicon>>(&source_))
            return "lexicon:" + (*lex)->version();
        return "external";
    }

private:
    SentimentBackend() = default;
    std::variant<std::shared_ptr<const ValenceLexicon>, std::shared_ptr<const ExternalScores>> source_;
};

struct FeatureOptions {
    /// Report marker counts per 1000 response tokens instead of raw counts.
    bool per_thousand_tokens = false;
};

inline std::vector<double> sentiment_block(const SentimentStats& s) {
    return {s.mean, s.sd, s.min, s.max, s.median, s.iqr, s.kurtosis, s.skewness, s.pE, s.nE, static_cast<double>(s.tR)};
}

inline FeatureVector featurize(const Transcript& transcript, const MarkerLexicon& lexicon,
                               const SentimentBackend& backend, const FeatureOptions& options = {}) {
    std::vector<TokenStream> responses;
    for (const auto& text : customer_responses(transcript)) responses.push_back(tokenize(text));
    if (responses.empty())
        throw Error(ErrorCode::no_customer_responses, "'" + transcript.id + "' has no customer responses");

    FeatureVector fv{transcript.id, {}, transcript.label};
    fv.values.reserve(kFeatureCount);
    const auto markers = conversation_marker_features(responses, lexicon);
    std::size_t tokens = 0;
    for (const auto& r : responses) tokens += r.size();
    for (auto c : markers) {
        double v = static_cast<double>(c);
        if (options.per_thousand_tokens) v = tokens ? v * 1000.0 / static_cast<double>(tokens) : 0.0;
        fv.values.push_back(v);
    }
    const auto scores = backend.score(transcript, responses);
    for (double v : sentiment_block(aggregate_sentiment(std::span<const double>(scores)))) fv.values.push_back(v);
    return fv;
}

/// One combined row per transcript, in corpus order.
inline Dataset build_dataset(const Corpus& corpus, const MarkerLexicon& lexicon, const SentimentBackend& backend,
                             const FeatureOptions& options = {}) {
    Dataset d;
    d.rows.reserve(corpus.transcripts.size());
    for (const auto& t : corpus.transcripts) d.rows.push_back(featurize(t, lexicon, backend, options));
    return d;
}

/// Column projection of a combined dataset onto one feature block.
inline Dataset project(const Dataset& dataset, FeatureSubset subset) {
    if (dataset.subset == subset) return dataset;
    if (dataset.subset != FeatureSubset::combined)
        throw Error(ErrorCode::invalid_config, "can only project a combined dataset, got " +
                                                   std::string(to_string(dataset.subset)));
    const auto [first, last] = subset_columns(subset);
    Dataset out;
    out.subset = subset;
    out.names = feature_names(subset);
    out.rows.reserve(dataset.rows.size());
    for (const auto& r : dataset.rows)
        out.rows.push_back({r.id,
                            {r.values.begin() + static_cast<std::ptrdiff_t>(first),
                             r.values.begin() + static_cast<std::ptrdiff_t>(last)},
                            r.label});
    return out;
}

// ---------------------------------------------------------------------------
// Feature matrix files: `id,<feature names>,label`, one row per conversation.

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

inline std::string write_feature_matrix(const Dataset& d) {
    std::string out = "id";
    for (const auto& n : d.names) out += "," + n;
    out += ",label\n";
    for (const auto& r : d.rows) {
        out += r.id;
        for (double v : r.values) out += "," + format_double(v);
        out += ",";
        if (r.label != Label::unlabeled) out += std::to_string(static_cast<int>(r.label));
        out += "\n";
    }
    return out;
}

inline Dataset read_feature_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::malformed_document, "empty feature matrix");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = detail::split_fields(line, ',');
    if (header.size() < 3 || header.front() != "id" || header.back() != "label")
        throw Error(ErrorCode::malformed_document, "feature matrix header must be 'id,<features>,label'");
    std::vector<std::string> names(header.begin() + 1, header.end() - 1);

    Dataset d;
    bool matched = false;
    for (auto s : {FeatureSubset::combined, FeatureSubset::markers, FeatureSubset::sentiment}) {
        if (names == feature_names(s)) {
            d.subset = s;
            d.names = names;
            matched = true;
            break;
        }
    }
    if (!matched) throw Error(ErrorCode::malformed_document, "feature matrix columns are not a known feature block");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        const auto fields = detail::split_fields(line, ',');
        const auto where = "matrix line " + std::to_string(line_no);
        if (fields.size() != names.size() + 2) throw Error(ErrorCode::malformed_document, where + ": wrong field count");
        FeatureVector fv{std::string(fields.front()), {}, Label::unlabeled};
        if (fv.id.empty()) throw Error(ErrorCode::missing_id, where);
        for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
            double v = 0;
            if (!detail::parse_number(fields[i], v) || !std::isfinite(v))
                throw Error(ErrorCode::malformed_document, where + ": bad value '" + std::string(fields[i]) + "'");
            fv.values.push_back(v);
        }
        const auto label = fields.back();
        if (label == "1")
            fv.label = Label::fraud;
        else if (label == "0")
            fv.label = Label::non_fraud;
        else if (!label.empty())
            throw Error(ErrorCode::malformed_document, where + ": label must be 0, 1 or empty");
        d.rows.push_back(std::move(fv));
    }
    return d;
}

} // namespace fraudlex
