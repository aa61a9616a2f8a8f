#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraudlex/default_lexicons.hpp"
#include "fraudlex/error.hpp"
#include "fraudlex/marker_lexicon.hpp"
#include "fraudlex/rng.hpp"
#include "fraudlex/sentiment.hpp"
#include "fraudlex/transcript.hpp"

namespace fraudlex {

/// Categories whose phrases are injected more often into fraudulent calls.
inline constexpr std::array<std::string_view, 4> kDeceptiveCategories = {
    "hedging", "negation", "memory_loss", "third_person_plural_pronouns"};

/// Categories realised through the per-response valence word instead of
/// marker injection.
inline constexpr std::array<std::string_view, 4> kAffectCategories = {
    "negative_emotion", "negative_sentiment", "positive_emotion", "positive_sentiment"};

struct SynthConfig {
    std::size_t n_fraud = 32;
    std::size_t n_nonfraud = 24;
    double response_mean = 19.0;
    double response_sd = 15.0;
    std::size_t response_min = 4;
    std::size_t response_max = 101;
    /// 0: both classes drawn from one distribution; 1: strongly separated.
    double signal_strength = 0.5;
    /// Per-response probability of a phrase from each category, both classes.
    double base_rate = 0.15;
    /// Fraud-class rate for deceptive categories at full signal.
    double deceptive_rate = 0.6;
    /// Probability that a response carries a valence word.
    double valence_rate = 0.8;
    /// At full signal the valence word is positive with probability 0.5 - bias
    /// for fraud and 0.5 + bias for non-fraud.
    double valence_bias = 0.4;
    std::uint64_t seed = 7;

    void validate() const {
        auto bad = [](const std::string& what) { throw Error(ErrorCode::invalid_config, what); };
        if (n_fraud < 1 || n_nonfraud < 1) bad("class counts must be at least 1");
        if (response_min < 1 || response_min > response_max) bad("need 1 <= response_min <= response_max");
        if (!(response_sd >= 0.0) || !std::isfinite(response_mean)) bad("invalid response-count distribution");
        if (!(signal_strength >= 0.0 && signal_strength <= 1.0)) bad("signal_strength must be in [0, 1]");
        for (double p : {base_rate, deceptive_rate, valence_rate})
            if (!(p >= 0.0 && p <= 1.0)) bad("rates must be in [0, 1]");
        if (!(valence_bias >= 0.0 && valence_bias <= 0.5)) bad("valence_bias must be in [0, 0.5]");
    }
};

/// Per-category phrase injection probability for one class.
inline std::array<double, kMarkerCount> injection_rates(const SynthConfig& cfg, Label label) {
    std::array<double, kMarkerCount> rates{};
    for (std::size_t c = 0; c < kMarkerCount; ++c) {
        const auto name = kMarkerNames[c];
        const bool deceptive = std::find(kDeceptiveCategories.begin(), kDeceptiveCategories.end(), name) != kDeceptiveCategories.end();
        const bool affect = std::find(kAffectCategories.begin(), kAffectCategories.end(), name) != kAffectCategories.end();
        if (affect)
            rates[c] = 0.0;
        else if (!deceptive)
            rates[c] = cfg.base_rate;
        else if (label == Label::fraud)
            rates[c] = cfg.base_rate + cfg.signal_strength * (cfg.deceptive_rate - cfg.base_rate);
        else
            rates[c] = cfg.base_rate * (1.0 - cfg.signal_strength);
    }
    return rates;
}

/// Probability that a response's valence word is positive.
inline double positive_probability(const SynthConfig& cfg, Label label) {
    const double shift = cfg.signal_strength * cfg.valence_bias;
    return label == Label::fraud ? 0.5 - shift : 0.5 + shift;
}

namespace detail {

inline double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

/// E[clamp(X, lo, hi)] for X ~ N(location, sd).
inline double clamped_normal_mean(double location, double sd, double lo, double hi) {
    const double a = (lo - location) / sd, b = (hi - location) / sd;
    return lo * normal_cdf(a) + hi * (1.0 - normal_cdf(b)) + location * (normal_cdf(b) - normal_cdf(a)) +
           sd * (normal_pdf(a) - normal_pdf(b));
}

} // namespace detail

/// Response counts are round(clamp(N(location, sd), min, max)); the location
/// is solved so the clamped distribution has the configured mean.
inline double response_count_location(const SynthConfig& cfg) {
    const double lo = static_cast<double>(cfg.response_min), hi = static_cast<double>(cfg.response_max);
    const double target = std::clamp(cfg.response_mean, lo, hi);
    if (cfg.response_sd == 0.0) return target;
    double a = lo - 10.0 * cfg.response_sd, b = hi + 10.0 * cfg.response_sd;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        (detail::clamped_normal_mean(mid, cfg.response_sd, lo, hi) < target ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

struct SynthTruth {
    std::string id;
    Label label = Label::unlabeled;
    std::size_t responses = 0;
    /// Phrases deliberately placed per category (canonical order).
    std::array<std::uint64_t, kMarkerCount> injected{};
    /// Exact marker phrases placed, in order, for oracle checks.
    std::vector<std::string> phrases;
};

struct SynthCorpus {
    Corpus corpus;
    std::vector<SynthTruth> truth;
};

namespace detail {

inline const std::vector<std::string>& filler_candidates() {
    static const std::vector<std::string> words = {
        "account", "number", "card", "bank", "address", "is", "was", "street", "branch", "call", "phone",
        "today", "morning", "yes", "okay", "of", "for", "in", "with", "hello", "details", "it", "this",
        "name", "date", "birth", "code", "postcode", "balance", "online", "email", "letter", "sent",
        "received", "office", "passport", "holder", "week", "month", "from", "usual", "same", "card's",
        "house", "flat", "road", "yeah", "right", "correct", "sure", "number's", "amount", "pounds",
        "ending", "digits", "security", "password", "login", "mobile", "reference"};
    return words;
}

inline const std::vector<std::string>& agent_prompts() {
    static const std::vector<std::string> prompts = {
        "Can you confirm your full name please?",
        "What is the first line of your address?",
        "Could you give me your date of birth?",
        "How can I help you today?",
        "Can you tell me what happened with the card?",
        "When did you last use the account?",
        "Is there anything else I can help with?",
        "Who else has access to the account?",
        "Did you make this transaction yourself?",
        "Could you confirm the postcode for me?"};
    return prompts;
}

} // namespace detail

/// Seeded synthetic corpus. Each customer response is built from neutral
/// filler words, at most one leading valence word, and marker phrases drawn
/// from the marker lexicon at class-dependent rates. Placed segments are
/// separated by at least three filler words so no phrase can match across
/// segments and no negator reaches into the next segment.
inline SynthCorpus generate(const SynthConfig& cfg, const MarkerLexicon& markers, const ValenceLexicon& valence) {
    cfg.validate();
    if (!markers.is_canonical()) throw Error(ErrorCode::invalid_config, "synthetic data needs the canonical categories");

    std::set<std::string> reserved;
    for (const auto& cat : markers.categories())
        for (const auto& p : cat.patterns) reserved.insert(p.begin(), p.end());
    for (const auto& [tok, _] : valence.entries()) reserved.insert(tok);
    reserved.insert(valence.negators().begin(), valence.negators().end());
    std::vector<std::string> filler;
    for (const auto& w : detail::filler_candidates())
        if (!reserved.contains(w)) filler.push_back(w);
    if (filler.size() < 8) throw Error(ErrorCode::invalid_config, "lexicons leave too few neutral filler words");

    // Single-token valence words grouped by sign, tagged with the affect category they belong to.
    std::vector<std::pair<std::string, std::size_t>> positive, negative;
    for (std::size_t c = 0; c < kMarkerCount; ++c) {
        const auto name = kMarkerNames[c];
        if (std::find(kAffectCategories.begin(), kAffectCategories.end(), name) == kAffectCategories.end()) continue;
        for (const auto& p : markers.categories()[c].patterns) {
            if (p.size() != 1) continue;
            const double* v = valence.valence(p.front());
            if (v && *v > 0.0) positive.emplace_back(p.front(), c);
            if (v && *v < 0.0) negative.emplace_back(p.front(), c);
        }
    }
    if (positive.empty() || negative.empty())
        throw Error(ErrorCode::invalid_config, "lexicons share no signed affect words");

    Rng rng(cfg.seed);
    const std::size_t total = cfg.n_fraud + cfg.n_nonfraud;
    std::vector<Label> labels(cfg.n_fraud, Label::fraud);
    labels.insert(labels.end(), cfg.n_nonfraud, Label::non_fraud);
    rng.shuffle(labels);

    const double location = response_count_location(cfg);
    const int width = total > 1000 ? 5 : 3;

    auto words = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::string> out;
        const std::size_t n = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
        for (std::size_t i = 0; i < n; ++i) out.push_back(rng.pick(filler));
        return out;
    };

    SynthCorpus result;
    std::vector<Transcript> transcripts;
    for (std::size_t t = 0; t < total; ++t) {
        char id[32];
        std::snprintf(id, sizeof id, "call_%0*zu", width, t);
        const Label label = labels[t];
        SynthTruth truth{id, label, 0, {}, {}};
        Transcript tr{id, label, {}};

        double draw = location + cfg.response_sd * rng.normal();
        draw = std::clamp(std::round(draw), static_cast<double>(cfg.response_min), static_cast<double>(cfg.response_max));
        truth.responses = static_cast<std::size_t>(draw);

        const auto rates = injection_rates(cfg, label);
        const double p_positive = positive_probability(cfg, label);
        for (std::size_t r = 0; r < truth.responses; ++r) {
            std::vector<std::vector<std::string>> segments;
            if (rng.bernoulli(cfg.valence_rate)) {
                const auto& [word, cat] = rng.bernoulli(p_positive) ? rng.pick(positive) : rng.pick(negative);
                segments.push_back({word});
                ++truth.injected[cat];
                truth.phrases.push_back(word);
            }
            std::vector<std::vector<std::string>> marker_segments;
            for (std::size_t c = 0; c < kMarkerCount; ++c) {
                if (rates[c] <= 0.0 || !rng.bernoulli(rates[c])) continue;
                const auto& phrase = rng.pick(markers.categories()[c].patterns);
                marker_segments.push_back(phrase);
                ++truth.injected[c];
            }
            rng.shuffle(marker_segments);
            for (auto& s : marker_segments) {
                std::string joined;
                for (const auto& w : s) joined += (joined.empty() ? "" : " ") + w;
                truth.phrases.push_back(joined);
                segments.push_back(std::move(s));
            }

            std::vector<std::string> tokens = words(segments.empty() ? 3 : 1, segments.empty() ? 8 : 3);
            for (std::size_t s = 0; s < segments.size(); ++s) {
                tokens.insert(tokens.end(), segments[s].begin(), segments[s].end());
                auto gap = words(s + 1 < segments.size() ? 3 : 0, s + 1 < segments.size() ? 5 : 2);
                tokens.insert(tokens.end(), gap.begin(), gap.end());
            }
            std::string text;
            for (const auto& w : tokens) text += (text.empty() ? "" : " ") + w;
            if (!text.empty() && text[0] >= 'a' && text[0] <= 'z') text[0] = static_cast<char>(text[0] - 32);
            text += ".";

            tr.turns.push_back({Speaker::agent, rng.pick(detail::agent_prompts())});
            tr.turns.push_back({Speaker::customer, std::move(text)});
        }
        transcripts.push_back(std::move(tr));
        result.truth.push_back(std::move(truth));
    }
    result.corpus = make_corpus(std::move(transcripts));
    return result;
}

inline SynthCorpus generate(const SynthConfig& cfg) {
    static const MarkerLexicon markers = parse_marker_lexicon(kDefaultMarkerLexicon);
    static const ValenceLexicon valence = parse_valence_lexicon(kDefaultValenceLexicon);
    return generate(cfg, markers, valence);
}

inline nlohmann::ordered_json config_to_json(const SynthConfig& c) {
    return {{"n_fraud", c.n_fraud},
            {"n_nonfraud", c.n_nonfraud},
            {"response_mean", c.response_mean},
            {"response_sd", c.response_sd},
            {"response_min", c.response_min},
            {"response_max", c.response_max},
            {"signal_strength", c.signal_strength},
            {"base_rate", c.base_rate},
            {"deceptive_rate", c.deceptive_rate},
            {"valence_rate", c.valence_rate},
            {"valence_bias", c.valence_bias},
            {"seed", c.seed}};
}

/// Ground-truth sidecar: the config plus injected per-category counts for every call.
inline std::string serialize_truth(const SynthConfig& cfg, const std::vector<SynthTruth>& truth) {
    nlohmann::ordered_json j;
    j["format"] = "fraudlex-synth-truth";
    j["config"] = config_to_json(cfg);
    j["categories"] = std::vector<std::string>(kMarkerNames.begin(), kMarkerNames.end());
    j["transcripts"] = nlohmann::ordered_json::array();
    for (const auto& t : truth)
        j["transcripts"].push_back({{"id", t.id},
                                    {"label", std::string(to_string(t.label))},
                                    {"responses", t.responses},
                                    {"injected", t.injected},
                                    {"phrases", t.phrases}});
    return j.dump(2) + "\n";
}

inline constexpr std::string_view kTruthFile = "ground_truth.json";
inline constexpr std::string_view kManifestFile = "manifest.txt";

/// Writes `<id>.transcript.json` per call, a manifest and the ground-truth sidecar.
inline void write_synth_corpus(const std::filesystem::path& dir, const SynthConfig& cfg, const SynthCorpus& synth) {
    std::filesystem::create_directories(dir);
    std::string manifest;
    for (const auto& t : synth.corpus.transcripts) {
        const auto name = t.id + std::string(kTranscriptSuffix);
        detail::write_file(dir / name, serialize_transcript(t));
        manifest += name + "\n";
    }
    detail::write_file(dir / kManifestFile, manifest);
    detail::write_file(dir / kTruthFile, serialize_truth(cfg, synth.truth));
}

} // namespace fraudlex
