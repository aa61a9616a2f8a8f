#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fraudlex/error.hpp"
#include "fraudlex/tokenizer.hpp"
#include "fraudlex/transcript.hpp"

namespace fraudlex {

/// Polarity of one response, always within [-1, 1].
class SentimentScore {
public:
    SentimentScore() = default;
    explicit SentimentScore(double value) : value_(value) {
        if (!(value >= -1.0 && value <= 1.0))
            throw Error(ErrorCode::out_of_range_score, "score " + std::to_string(value) + " outside [-1, 1]");
    }
    double value() const noexcept { return value_; }
    bool operator==(const SentimentScore&) const = default;

private:
    double value_ = 0.0;
};

class ValenceLexicon {
public:
    ValenceLexicon(std::string version, std::map<std::string, double, std::less<>> entries,
                   std::set<std::string, std::less<>> negators, std::size_t negation_window)
        : version_(std::move(version)), entries_(std::move(entries)), negators_(std::move(negators)),
          window_(negation_window) {
        for (const auto& [token, valence] : entries_) {
            if (!(valence >= -1.0 && valence <= 1.0))
                throw Error(ErrorCode::invalid_lexicon, "valence of '" + token + "' outside [-1, 1]");
            if (negators_.contains(token))
                throw Error(ErrorCode::invalid_lexicon, "'" + token + "' is both a negator and a valence entry");
        }
    }

    const std::string& version() const noexcept { return version_; }
    std::size_t negation_window() const noexcept { return window_; }
    const std::map<std::string, double, std::less<>>& entries() const noexcept { return entries_; }
    const std::set<std::string, std::less<>>& negators() const noexcept { return negators_; }

    const double* valence(std::string_view token) const {
        auto it = entries_.find(token);
        return it == entries_.end() ? nullptr : &it->second;
    }
    bool is_negator(std::string_view token) const { return negators_.find(token) != negators_.end(); }

private:
    std::string version_;
    std::map<std::string, double, std::less<>> entries_;
    std::set<std::string, std::less<>> negators_;
    std::size_t window_;
};

/// `{"version": "...", "negation_window": 3, "negators": [...], "entries": {"token": valence, ...}}`
inline ValenceLexicon parse_valence_lexicon(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
        std::map<std::string, double, std::less<>> entries;
        for (const auto& [key, value] : doc.at("entries").items()) {
            auto tokens = tokenize_words(key);
            if (tokens.size() != 1) throw Error(ErrorCode::invalid_lexicon, "entry '" + key + "' is not a single token");
            entries[tokens.front()] = value.get<double>();
        }
        std::set<std::string, std::less<>> negators;
        for (const auto& n : doc.at("negators")) {
            auto tokens = tokenize_words(n.get<std::string>());
            if (tokens.size() != 1) throw Error(ErrorCode::invalid_lexicon, "negator is not a single token");
            negators.insert(tokens.front());
        }
        const auto window = doc.value("negation_window", 3);
        if (window < 0) throw Error(ErrorCode::invalid_lexicon, "negative negation_window");
        return ValenceLexicon(doc.at("version").get<std::string>(), std::move(entries), std::move(negators),
                              static_cast<std::size_t>(window));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_lexicon, e.what());
    }
}

/// Mean of the matched valences, each flipped when a negator appears among
/// the preceding negation_window tokens. Zero when nothing matches.
inline SentimentScore score_response(const TokenStream& stream, const ValenceLexicon& lex) {
    const auto& tokens = stream.tokens;
    double sum = 0.0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const double* v = lex.valence(tokens[i]);
        if (!v) continue;
        bool negated = false;
        const std::size_t from = i > lex.negation_window() ? i - lex.negation_window() : 0;
        for (std::size_t j = from; j < i && !negated; ++j) negated = lex.is_negator(tokens[j]);
        sum += negated ? -*v : *v;
        ++matched;
    }
    if (matched == 0) return SentimentScore(0.0);
    return SentimentScore(std::clamp(sum / static_cast<double>(matched), -1.0, 1.0));
}

// ---------------------------------------------------------------------------
// Precomputed scores

/// (transcript id, 0-based customer response index) -> score.
using ExternalScores = std::map<std::pair<std::string, std::size_t>, SentimentScore>;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line, char delim) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(delim, start);
        fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

template <class T>
bool parse_number(std::string_view text, T& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

} // namespace detail

/// Parses `transcript_id, response_index, score` rows (comma or tab separated,
/// optional header) and checks them against the corpus: every customer response
/// of every transcript must be scored exactly once.
inline ExternalScores parse_external_scores(std::string_view document, const Corpus& corpus) {
    ExternalScores scores;
    std::istringstream in{std::string(document)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = detail::trim(line);
        if (content.empty() || content.front() == '#') continue;
        const char delim = content.find('\t') != std::string_view::npos ? '\t' : ',';
        const auto fields = detail::split_fields(content, delim);
        const auto where = "line " + std::to_string(line_no);
        if (fields.size() != 3) throw Error(ErrorCode::malformed_document, where + ": expected 3 fields");
        std::size_t index = 0;
        double value = 0.0;
        if (!detail::parse_number(fields[1], index)) {
            if (line_no == 1 && scores.empty()) continue; // header row
            throw Error(ErrorCode::malformed_document, where + ": bad response index");
        }
        if (!detail::parse_number(fields[2], value))
            throw Error(ErrorCode::malformed_document, where + ": bad score");
        if (!(value >= -1.0 && value <= 1.0))
            throw Error(ErrorCode::out_of_range_score, where + ": score outside [-1, 1]");
        const std::string id(fields[0]);
        const auto* t = corpus.find(id);
        if (!t) throw Error(ErrorCode::unknown_transcript, where + ": '" + id + "'");
        if (index >= customer_responses(*t).size())
            throw Error(ErrorCode::malformed_document, where + ": response index out of range for '" + id + "'");
        if (!scores.emplace(std::make_pair(id, index), SentimentScore(value)).second)
            throw Error(ErrorCode::malformed_document, where + ": duplicate row for '" + id + "'");
    }
    for (const auto& t : corpus.transcripts) {
        const auto n = customer_responses(t).size();
        for (std::size_t i = 0; i < n; ++i)
            if (!scores.contains({t.id, i}))
                throw Error(ErrorCode::missing_response_score, "'" + t.id + "' response " + std::to_string(i));
    }
    return scores;
}

inline ExternalScores load_external_scores(const std::filesystem::path& path, const Corpus& corpus) {
    try {
        return parse_external_scores(detail::read_file(path), corpus);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Aggregation

struct SentimentStats {
    double mean = 0, sd = 0, min = 0, max = 0, median = 0, iqr = 0, kurtosis = 0, skewness = 0, pE = 0, nE = 0;
    std::size_t tR = 0;

    bool operator==(const SentimentStats&) const = default;
};

namespace detail {

/// Linear-interpolation quantile of an ascending sequence.
inline double quantile_sorted(std::span<const double> sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted[lo];
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace detail

/// Eleven per-conversation statistics over the response scores.
///
/// sd uses the n-1 denominator (0 for a single score). Skewness is g1 and
/// kurtosis is excess kurtosis, both from population central moments, and both
/// 0 when all scores are equal. pE and nE are the sums of the positive parts
/// and of the negated negative parts.
inline SentimentStats aggregate_sentiment(std::span<const double> scores) {
    if (scores.empty()) throw Error(ErrorCode::empty_score_list, "no scores to aggregate");
    const std::size_t n = scores.size();
    const double dn = static_cast<double>(n);

    std::vector<double> sorted(scores.begin(), scores.end());
    std::sort(sorted.begin(), sorted.end());

    SentimentStats s;
    s.tR = n;
    s.min = sorted.front();
    s.max = sorted.back();
    for (double x : scores) {
        s.pE += std::max(x, 0.0);
        s.nE += std::max(-x, 0.0);
    }
    s.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    s.iqr = detail::quantile_sorted(sorted, 0.75) - detail::quantile_sorted(sorted, 0.25);

    if (s.min == s.max) {
        s.mean = s.min;
        return s;
    }

    double sum = 0.0;
    for (double x : scores) sum += x;
    s.mean = std::clamp(sum / dn, s.min, s.max);

    double m2 = 0, m3 = 0, m4 = 0;
    for (double x : scores) {
        const double d = x - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    s.sd = n > 1 ? std::sqrt(m2 / (dn - 1.0)) : 0.0;
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2) - 3.0;
    }
    return s;
}

inline SentimentStats aggregate_sentiment(std::span<const SentimentScore> scores) {
    std::vector<double> values;
    values.reserve(scores.size());
    for (const auto& s : scores) values.push_back(s.value());
    return aggregate_sentiment(std::span<const double>(values));
}

} // namespace fraudlex
