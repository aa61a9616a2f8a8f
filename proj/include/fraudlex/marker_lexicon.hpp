#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fraudlex/error.hpp"
#include "fraudlex/tokenizer.hpp"

namespace fraudlex {

inline constexpr std::size_t kMarkerCount = 16;

/// Canonical marker categories, in feature order.
inline constexpr std::array<std::string_view, kMarkerCount> kMarkerNames = {
    "causation",          "negation",
    "hedging",            "qualified_assertions",
    "temporal_lacunae",   "overzealous_expression",
    "memory_loss",        "third_person_plural_pronouns",
    "pronouns",           "negative_emotion",
    "negative_sentiment", "positive_emotion",
    "positive_sentiment", "disfluencies",
    "self_reference",     "nominalised_verbs",
};

using Pattern = std::vector<std::string>;
using MarkerCounts = std::array<std::uint64_t, kMarkerCount>;

struct MarkerCategory {
    std::string name;
    std::vector<Pattern> patterns;
};

/// Token-level phrase matcher shared by all categories.
///
/// A trie over interned tokens; each node records which categories have a
/// pattern ending there. Counting walks the trie once per start position and
/// resolves the longest match for every category that is not still inside a
/// previous match of its own.
class PhraseMatcher {
public:
    static constexpr std::uint32_t kNoToken = UINT32_MAX;

    PhraseMatcher() { nodes_.emplace_back(); }

    void add(const Pattern& pattern, std::size_t category) {
        std::uint32_t node = 0;
        for (const auto& token : pattern) {
            auto [it, inserted] = vocabulary_.try_emplace(token, static_cast<std::uint32_t>(vocabulary_.size()));
            auto& children = nodes_[node].children;
            auto child = children.find(it->second);
            if (child == children.end()) {
                nodes_.emplace_back();
                child = nodes_[node].children.emplace(it->second, static_cast<std::uint32_t>(nodes_.size() - 1)).first;
            }
            node = child->second;
        }
        nodes_[node].terminal |= (1u << category);
    }

    std::vector<std::uint32_t> intern(const std::vector<std::string>& tokens) const {
        std::vector<std::uint32_t> ids(tokens.size(), kNoToken);
        for (std::size_t i = 0; i < tokens.size(); ++i)
            if (auto it = vocabulary_.find(tokens[i]); it != vocabulary_.end()) ids[i] = it->second;
        return ids;
    }

    MarkerCounts count(const std::vector<std::string>& tokens) const {
        MarkerCounts counts{};
        std::array<std::size_t, kMarkerCount> next_free{};
        std::array<std::size_t, kMarkerCount> best{};
        const auto ids = intern(tokens);
        const std::size_t n = ids.size();

        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t active = 0;
            for (std::size_t c = 0; c < kMarkerCount; ++c)
                if (next_free[c] <= i) active |= (1u << c);
            if (active == 0 || ids[i] == kNoToken) continue;

            best.fill(0);
            std::uint32_t node = 0;
            for (std::size_t j = i; j < n && ids[j] != kNoToken; ++j) {
                const auto& children = nodes_[node].children;
                auto it = children.find(ids[j]);
                if (it == children.end()) break;
                node = it->second;
                const std::uint32_t hits = nodes_[node].terminal & active;
                for (std::size_t c = 0; c < kMarkerCount; ++c)
                    if (hits & (1u << c)) best[c] = j - i + 1;
            }
            for (std::size_t c = 0; c < kMarkerCount; ++c) {
                if (best[c] == 0) continue;
                ++counts[c];
                next_free[c] = i + best[c];
            }
        }
        return counts;
    }

private:
    struct Node {
        std::map<std::uint32_t, std::uint32_t> children;
        std::uint32_t terminal = 0;
    };
    std::map<std::string, std::uint32_t, std::less<>> vocabulary_;
    std::vector<Node> nodes_;
};

/// Sixteen named categories of token patterns, immutable once built.
class MarkerLexicon {
public:
    MarkerLexicon(std::string version, std::vector<MarkerCategory> categories)
        : version_(std::move(version)), categories_(std::move(categories)) {
        if (categories_.size() != kMarkerCount)
            throw Error(ErrorCode::invalid_lexicon,
                        "expected " + std::to_string(kMarkerCount) + " categories, got " + std::to_string(categories_.size()));
        std::set<std::string> names;
        for (std::size_t c = 0; c < categories_.size(); ++c) {
            const auto& cat = categories_[c];
            if (!names.insert(cat.name).second) throw Error(ErrorCode::invalid_lexicon, "duplicate category '" + cat.name + "'");
            std::set<Pattern> seen;
            for (const auto& p : cat.patterns) {
                if (p.empty()) throw Error(ErrorCode::invalid_lexicon, "empty pattern in '" + cat.name + "'");
                for (const auto& tok : p)
                    if (tok.empty() || tokenize_words(tok) != std::vector<std::string>{tok})
                        throw Error(ErrorCode::invalid_lexicon, "token '" + tok + "' in '" + cat.name + "' is not normalized");
                if (!seen.insert(p).second)
                    throw Error(ErrorCode::invalid_lexicon, "duplicate pattern in '" + cat.name + "'");
                matcher_.add(p, c);
            }
        }
    }

    const std::string& version() const noexcept { return version_; }
    const std::vector<MarkerCategory>& categories() const noexcept { return categories_; }
    const PhraseMatcher& matcher() const noexcept { return matcher_; }

    /// True when the category names are exactly the canonical list, in order.
    bool is_canonical() const {
        for (std::size_t c = 0; c < kMarkerCount; ++c)
            if (categories_[c].name != kMarkerNames[c]) return false;
        return true;
    }

private:
    std::string version_;
    std::vector<MarkerCategory> categories_;
    PhraseMatcher matcher_;
};

/// Parses a marker lexicon document:
/// `{"version": "...", "categories": {"causation": ["because", "due to", ...], ...}}`.
/// Exactly the sixteen canonical names must be present; phrases go through the tokenizer.
inline MarkerLexicon parse_marker_lexicon(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::invalid_lexicon, e.what());
    }
    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_string())
        throw Error(ErrorCode::invalid_lexicon, "lexicon needs a string 'version'");
    if (!doc.contains("categories") || !doc["categories"].is_object())
        throw Error(ErrorCode::invalid_lexicon, "lexicon needs a 'categories' object");
    const auto& cats = doc["categories"];
    for (const auto& [key, _] : cats.items())
        if (std::find(kMarkerNames.begin(), kMarkerNames.end(), key) == kMarkerNames.end())
            throw Error(ErrorCode::invalid_lexicon, "unknown category '" + key + "'");

    std::vector<MarkerCategory> categories;
    for (auto name : kMarkerNames) {
        const std::string key(name);
        if (!cats.contains(key) || !cats[key].is_array())
            throw Error(ErrorCode::invalid_lexicon, "missing category '" + key + "'");
        MarkerCategory cat{key, {}};
        for (const auto& phrase : cats[key]) {
            if (!phrase.is_string()) throw Error(ErrorCode::invalid_lexicon, "non-string phrase in '" + key + "'");
            auto tokens = tokenize_words(phrase.get<std::string>());
            if (tokens.empty()) throw Error(ErrorCode::invalid_lexicon, "phrase without tokens in '" + key + "'");
            cat.patterns.push_back(std::move(tokens));
        }
        categories.push_back(std::move(cat));
    }
    return MarkerLexicon(doc["version"].get<std::string>(), std::move(categories));
}

/// Counts non-overlapping longest matches per category; categories are independent.
inline MarkerCounts count_markers(const TokenStream& stream, const MarkerLexicon& lexicon) {
    return lexicon.matcher().count(stream.tokens);
}

/// Element-wise sum of count_markers over the responses of one conversation.
inline MarkerCounts conversation_marker_features(const std::vector<TokenStream>& responses, const MarkerLexicon& lexicon) {
    MarkerCounts total{};
    for (const auto& r : responses) {
        const auto c = count_markers(r, lexicon);
        for (std::size_t i = 0; i < kMarkerCount; ++i) total[i] += c[i];
    }
    return total;
}

} // namespace fraudlex
