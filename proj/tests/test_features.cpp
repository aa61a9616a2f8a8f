#include <algorithm>
#include <memory>

#include <gtest/gtest.h>

#include "fraudlex/default_lexicons.hpp"
#include "fraudlex/features.hpp"
#include "fraudlex/rng.hpp"
#include "fraudlex/synth.hpp"

using namespace fraudlex;

namespace {

const MarkerLexicon& markers() {
    static const MarkerLexicon lex = parse_marker_lexicon(kDefaultMarkerLexicon);
    return lex;
}

const SentimentBackend& backend() {
    static const SentimentBackend b =
        SentimentBackend::lexicon(std::make_shared<const ValenceLexicon>(parse_valence_lexicon(kDefaultValenceLexicon)));
    return b;
}

Transcript with_responses(std::string id, Label label, std::vector<std::string> responses) {
    Transcript t{std::move(id), label, {}};
    for (auto& r : responses) {
        t.turns.push_back({Speaker::agent, "Thanks for calling, how can I help?"});
        t.turns.push_back({Speaker::customer, std::move(r)});
    }
    return t;
}

Dataset synth_dataset(std::uint64_t seed = 7) {
    SynthConfig cfg;
    cfg.seed = seed;
    return build_dataset(generate(cfg).corpus, markers(), backend());
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

} // namespace

TEST(Featurize, NullSignalRow) {
    const auto fv = featurize(with_responses("c1", Label::fraud, {"Table seven blue."}), markers(), backend());
    ASSERT_EQ(fv.values.size(), kFeatureCount);
    for (std::size_t i = 0; i < kMarkerCount; ++i) EXPECT_EQ(fv.values[i], 0.0) << kMarkerNames[i];
    const std::vector<double> sentiment(fv.values.begin() + kMarkerCount, fv.values.end());
    EXPECT_EQ(sentiment, (std::vector<double>{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(fv.id, "c1");
    EXPECT_EQ(fv.label, Label::fraud);
}

TEST(Featurize, FourResponsesGiveTR4) {
    const auto fv = featurize(with_responses("c", Label::non_fraud, {"yes", "my card", "I guess so", "thank you"}),
                              markers(), backend());
    EXPECT_EQ(fv.values.back(), 4.0);
}

TEST(Featurize, IsConcatenationOfBlocks) {
    const auto corpus = generate(SynthConfig{}).corpus;
    const auto valence = parse_valence_lexicon(kDefaultValenceLexicon);
    for (const auto& t : corpus.transcripts) {
        const auto fv = featurize(t, markers(), backend());
        std::vector<TokenStream> responses;
        std::vector<double> scores;
        for (const auto& r : customer_responses(t)) {
            responses.push_back(tokenize(r));
            scores.push_back(score_response(responses.back(), valence).value());
        }
        const auto counts = conversation_marker_features(responses, markers());
        for (std::size_t i = 0; i < kMarkerCount; ++i) ASSERT_EQ(fv.values[i], static_cast<double>(counts[i]));
        const auto block = sentiment_block(aggregate_sentiment(std::span<const double>(scores)));
        ASSERT_TRUE(std::equal(block.begin(), block.end(), fv.values.begin() + kMarkerCount));
    }
}

TEST(Featurize, NoCustomerResponses) {
    Transcript t{"x", Label::fraud, {{Speaker::agent, "hello?"}}};
    EXPECT_EQ(code_of([&] { featurize(t, markers(), backend()); }), ErrorCode::no_customer_responses);
}

TEST(Featurize, PerThousandTokens) {
    const auto t = with_responses("c", Label::fraud, {"I guess I can't remember honestly"});
    const auto raw = featurize(t, markers(), backend());
    const auto norm = featurize(t, markers(), backend(), {.per_thousand_tokens = true});
    for (std::size_t i = 0; i < kMarkerCount; ++i) EXPECT_DOUBLE_EQ(norm.values[i], raw.values[i] * 1000.0 / 6.0);
    EXPECT_TRUE(std::equal(raw.values.begin() + kMarkerCount, raw.values.end(), norm.values.begin() + kMarkerCount));
}

TEST(Featurize, ExternalBackend) {
    const auto corpus = make_corpus({with_responses("a", Label::fraud, {"one", "two"}), with_responses("b", Label::non_fraud, {"x"})});
    auto scores = std::make_shared<const ExternalScores>(parse_external_scores("a,0,0.5\na,1,-0.25\nb,0,1\n", corpus));
    const auto d = build_dataset(corpus, markers(), SentimentBackend::external(scores));
    EXPECT_EQ(d.rows[0].values[kMarkerCount], 0.125);
    EXPECT_EQ(d.rows[1].values[kMarkerCount], 1.0);
    EXPECT_EQ(SentimentBackend::external(scores).describe(), "external");
    EXPECT_EQ(backend().describe(), "lexicon:valence-v1");
}

TEST(Dataset, RowsFollowCorpusOrderAndNamesAreCanonical) {
    const auto d = synth_dataset();
    ASSERT_EQ(d.size(), 56u);
    EXPECT_EQ(d.names.size(), 27u);
    EXPECT_EQ(d.names.front(), "causation");
    EXPECT_EQ(d.names[kMarkerCount], "sentiment_mean");
    EXPECT_EQ(d.names.back(), "tR");
    EXPECT_TRUE(std::is_sorted(d.rows.begin(), d.rows.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (const auto& r : d.rows) {
        ASSERT_EQ(r.values.size(), 27u);
        for (std::size_t i = 0; i < kMarkerCount; ++i) {
            ASSERT_GE(r.values[i], 0.0);
            ASSERT_EQ(r.values[i], std::floor(r.values[i]));
        }
        ASSERT_GE(r.values.back(), 1.0);
    }
}

TEST(Project, ColumnCounts) {
    const auto d = synth_dataset();
    const auto m = project(d, FeatureSubset::markers);
    const auto s = project(d, FeatureSubset::sentiment);
    EXPECT_EQ(m.dimension(), 16u);
    EXPECT_EQ(s.dimension(), 11u);
    for (std::size_t i = 0; i < d.size(); ++i) {
        ASSERT_EQ(m.rows[i].values.size(), 16u);
        ASSERT_EQ(s.rows[i].values.size(), 11u);
        ASSERT_EQ(m.rows[i].values[3], d.rows[i].values[3]);
        ASSERT_EQ(s.rows[i].values[0], d.rows[i].values[16]);
        ASSERT_EQ(s.rows[i].label, d.rows[i].label);
    }
    EXPECT_EQ(s.names.front(), "sentiment_mean");
}

TEST(Project, Idempotent) {
    const auto d = synth_dataset();
    const auto m = project(d, FeatureSubset::markers);
    EXPECT_EQ(project(m, FeatureSubset::markers), m);
    EXPECT_EQ(project(d, FeatureSubset::combined), d);
    EXPECT_EQ(code_of([&] { project(m, FeatureSubset::sentiment); }), ErrorCode::invalid_config);
}

TEST(Project, CommutesWithRowFiltering) {
    const auto d = synth_dataset(11);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<bool> keep(d.size());
        for (auto&& k : keep) k = rng.bernoulli(0.5);
        auto filter = [&](Dataset x) {
            std::vector<FeatureVector> rows;
            for (std::size_t i = 0; i < x.rows.size(); ++i)
                if (keep[i]) rows.push_back(x.rows[i]);
            x.rows = rows;
            return x;
        };
        for (auto s : {FeatureSubset::markers, FeatureSubset::sentiment, FeatureSubset::combined})
            ASSERT_EQ(project(filter(d), s), filter(project(d, s)));
    }
}

TEST(Matrix, RoundTripIsExact) {
    auto d = synth_dataset();
    d.rows[0].values[20] = 0.1 + 0.2; // needs 17 significant digits
    d.rows[1].label = Label::unlabeled;
    for (auto s : {FeatureSubset::markers, FeatureSubset::sentiment, FeatureSubset::combined}) {
        const auto p = project(d, s);
        const auto text = write_feature_matrix(p);
        EXPECT_EQ(read_feature_matrix(text), p);
        EXPECT_EQ(write_feature_matrix(read_feature_matrix(text)), text);
    }
    const auto text = write_feature_matrix(d);
    EXPECT_EQ(text.substr(0, text.find('\n')).substr(0, 22), "id,causation,negation,");
    EXPECT_NE(text.find("\ncall_"), std::string::npos);
}

TEST(Matrix, RejectsMalformed) {
    EXPECT_EQ(code_of([] { read_feature_matrix(""); }), ErrorCode::malformed_document);
    EXPECT_EQ(code_of([] { read_feature_matrix("id,foo,label\na,1,0\n"); }), ErrorCode::malformed_document);
    const auto names = feature_names(FeatureSubset::sentiment);
    std::string header = "id";
    for (const auto& n : names) header += "," + n;
    header += ",label\n";
    EXPECT_EQ(code_of([&] { read_feature_matrix(header + "a,1,2\n"); }), ErrorCode::malformed_document);
    EXPECT_EQ(code_of([&] { read_feature_matrix(header + "a,0,0,0,0,0,0,0,0,0,0,x,1\n"); }), ErrorCode::malformed_document);
    EXPECT_EQ(code_of([&] { read_feature_matrix(header + "a,0,0,0,0,0,0,0,0,0,0,1,2\n"); }), ErrorCode::malformed_document);
    EXPECT_EQ(read_feature_matrix(header + "a,0,0,0,0,0,0,0,0,0,0,1,\n").rows[0].label, Label::unlabeled);
}
