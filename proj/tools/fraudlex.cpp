// Command-line front end: synth, extract, evaluate, explain, predict.

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fraudlex/fraudlex.hpp"

namespace fs = std::filesystem;
using namespace fraudlex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct RunConfig {
    std::string corpus;
    std::string matrix;
    std::string lexicon;
    std::string valence;
    std::string sentiment = "lexicon";
    std::vector<std::string> features;
    std::string models = "nb,tree,knn,svm";
    std::size_t k = kDefaultFolds;
    std::uint64_t seed = kDefaultSeed;
    std::string standardize = "default";
    std::string stratify = "on";
    bool per_thousand = false;
    std::string out;
    std::string model;
    std::string transcript;
    std::string row;
    SynthConfig synth;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

MarkerLexicon marker_lexicon(const RunConfig& cfg) {
    if (cfg.lexicon.empty()) return parse_marker_lexicon(kDefaultMarkerLexicon);
    return parse_marker_lexicon(detail::read_file(cfg.lexicon));
}

std::shared_ptr<const ValenceLexicon> valence_lexicon(const RunConfig& cfg) {
    if (cfg.valence.empty()) return std::make_shared<const ValenceLexicon>(parse_valence_lexicon(kDefaultValenceLexicon));
    return std::make_shared<const ValenceLexicon>(parse_valence_lexicon(detail::read_file(cfg.valence)));
}

SentimentBackend sentiment_backend(const RunConfig& cfg, const Corpus& corpus) {
    if (cfg.sentiment == "lexicon") return SentimentBackend::lexicon(valence_lexicon(cfg));
    constexpr std::string_view prefix = "external:";
    if (cfg.sentiment.starts_with(prefix)) {
        const fs::path path = cfg.sentiment.substr(prefix.size());
        return SentimentBackend::external(std::make_shared<const ExternalScores>(load_external_scores(path, corpus)));
    }
    throw Error(ErrorCode::invalid_config, "--sentiment must be 'lexicon' or 'external:<path>'");
}

std::optional<bool> standardize_flag(const std::string& s) {
    if (s == "on") return true;
    if (s == "off") return false;
    return std::nullopt;
}

std::vector<ModelSpec> model_specs(const RunConfig& cfg) {
    std::vector<ModelSpec> specs;
    for (const auto& name : split_list(cfg.models)) specs.push_back({parse_model_kind(name), standardize_flag(cfg.standardize)});
    return specs;
}

nlohmann::json effective_config(const std::string& command, const RunConfig& cfg) {
    nlohmann::json j;
    j["command"] = command;
    if (!cfg.corpus.empty()) j["corpus"] = cfg.corpus;
    if (!cfg.matrix.empty()) j["matrix"] = cfg.matrix;
    j["lexicon"] = cfg.lexicon.empty() ? "built-in" : cfg.lexicon;
    j["valence"] = cfg.valence.empty() ? "built-in" : cfg.valence;
    j["sentiment"] = cfg.sentiment;
    j["features"] = cfg.features;
    j["per_thousand_tokens"] = cfg.per_thousand;
    if (command == "evaluate") {
        j["models"] = cfg.models;
        j["k"] = cfg.k;
        j["seed"] = cfg.seed;
        j["standardize"] = cfg.standardize;
        j["stratify"] = cfg.stratify;
    }
    j["out"] = cfg.out;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_synth(const RunConfig& cfg) {
    const auto synth = generate(cfg.synth);
    write_synth_corpus(cfg.out, cfg.synth, synth);
    const auto& counts = synth.corpus.class_counts;
    auto count = [&](Label l) { return counts.contains(l) ? counts.at(l) : std::size_t{0}; };
    std::cout << "wrote " << synth.corpus.transcripts.size() << " transcripts to " << cfg.out << " (fraud "
              << count(Label::fraud) << ", non_fraud " << count(Label::non_fraud) << ")\n";
    return kExitOk;
}

int cmd_extract(const RunConfig& cfg) {
    const auto corpus = load_corpus(cfg.corpus);
    if (corpus.transcripts.empty()) throw Error(ErrorCode::invalid_config, "corpus '" + cfg.corpus + "' is empty");
    const auto lexicon = marker_lexicon(cfg);
    const auto backend = sentiment_backend(cfg, corpus);
    const auto subset = parse_feature_subset(cfg.features.empty() ? "combined" : cfg.features.front());
    const auto dataset = project(build_dataset(corpus, lexicon, backend, {cfg.per_thousand}), subset);

    detail::write_file(cfg.out, write_feature_matrix(dataset));
    nlohmann::ordered_json meta;
    meta["marker_lexicon"] = lexicon.version();
    meta["sentiment_backend"] = backend.describe();
    meta["feature_subset"] = std::string(to_string(subset));
    meta["rows"] = dataset.rows.size();
    meta["config"] = effective_config("extract", cfg);
    detail::write_file(cfg.out + ".meta.json", meta.dump(2) + "\n");

    std::size_t per_class[3] = {0, 0, 0};
    for (const auto& r : dataset.rows) ++per_class[r.label == Label::fraud ? 1 : r.label == Label::non_fraud ? 0 : 2];
    std::cout << "rows " << dataset.rows.size() << ", columns " << dataset.dimension() << "\n"
              << "non_fraud " << per_class[0] << "\nfraud " << per_class[1] << "\n";
    if (per_class[2]) std::cout << "unlabeled " << per_class[2] << "\n";
    return kExitOk;
}

struct LoadedDataset {
    Dataset dataset;
    Provenance provenance;
};

LoadedDataset load_dataset(const RunConfig& cfg) {
    if (!cfg.matrix.empty()) {
        LoadedDataset out{read_feature_matrix(detail::read_file(cfg.matrix)), {"unknown", "unknown"}};
        const fs::path meta_path = cfg.matrix + ".meta.json";
        if (fs::exists(meta_path)) {
            const auto meta = nlohmann::json::parse(detail::read_file(meta_path));
            out.provenance = {meta.value("marker_lexicon", "unknown"), meta.value("sentiment_backend", "unknown")};
        }
        return out;
    }
    const auto corpus = load_corpus(cfg.corpus);
    if (corpus.transcripts.empty()) throw Error(ErrorCode::invalid_config, "corpus '" + cfg.corpus + "' is empty");
    const auto lexicon = marker_lexicon(cfg);
    const auto backend = sentiment_backend(cfg, corpus);
    return {build_dataset(corpus, lexicon, backend, {cfg.per_thousand}), {lexicon.version(), backend.describe()}};
}

int cmd_evaluate(const RunConfig& cfg) {
    const auto [dataset, provenance] = load_dataset(cfg);
    std::vector<FeatureSubset> subsets;
    for (const auto& f : cfg.features.empty() ? std::vector<std::string>{"markers", "sentiment", "combined"} : cfg.features)
        for (const auto& name : split_list(f)) subsets.push_back(parse_feature_subset(name));
    if (dataset.subset != FeatureSubset::combined)
        for (auto s : subsets)
            if (s != dataset.subset)
                throw Error(ErrorCode::invalid_config, "matrix holds only the " + std::string(to_string(dataset.subset)) +
                                                           " block; cannot evaluate " + std::string(to_string(s)));
    for (const auto& r : dataset.rows)
        if (r.label == Label::unlabeled) throw Error(ErrorCode::invalid_config, "row '" + r.id + "' is unlabeled");
    if (cfg.stratify != "on" && cfg.stratify != "off") throw Error(ErrorCode::invalid_config, "--stratify must be on or off");

    const auto specs = model_specs(cfg);
    const auto plan = make_folds(dataset, cfg.k, cfg.seed, cfg.stratify == "on");
    ReportMetadata meta;
    meta.standardization = cfg.standardize;
    meta.marker_lexicon = provenance.marker_lexicon;
    meta.sentiment_backend = provenance.sentiment_backend;
    meta.config = effective_config("evaluate", cfg);
    const auto report = evaluate(dataset, subsets, specs, plan, meta);

    const fs::path out(cfg.out);
    fs::create_directories(out / "models");
    const auto table = render_report(report);
    detail::write_file(out / "report.txt", table);
    detail::write_file(out / "report.json", report_to_json(report).dump(2) + "\n");
    for (const auto& s : report.subsets) {
        const auto data = project(dataset, s.subset);
        for (const auto& spec : specs) {
            const auto model = fit(spec, data, provenance);
            detail::write_file(out / "models" / (std::string(to_string(s.subset)) + "_" + std::string(to_string(spec.kind)) + ".model.json"),
                               serialize_model(model));
        }
    }
    for (const auto& w : report.meta.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "Results of " << plan.K << "-fold cross-validation (seed " << plan.seed << ")\n" << table;
    return kExitOk;
}

std::optional<std::vector<double>> query_row(const RunConfig& cfg, const TrainedModel& model) {
    if (!cfg.transcript.empty()) {
        const auto t = load_transcript(cfg.transcript);
        const auto corpus = make_corpus({t});
        const auto row = featurize(t, marker_lexicon(cfg), sentiment_backend(cfg, corpus), {cfg.per_thousand});
        return project(Dataset{FeatureSubset::combined, feature_names(), {row}}, model.subset).rows.front().values;
    }
    if (!cfg.row.empty()) {
        if (cfg.matrix.empty()) throw Error(ErrorCode::invalid_config, "--row needs --matrix");
        const auto data = read_feature_matrix(detail::read_file(cfg.matrix));
        const auto projected = project(data, model.subset);
        for (const auto& r : projected.rows)
            if (r.id == cfg.row) return r.values;
        throw Error(ErrorCode::unknown_transcript, "row '" + cfg.row + "' not in " + cfg.matrix);
    }
    return std::nullopt;
}

int cmd_explain(const RunConfig& cfg) {
    const auto model = parse_model(detail::read_file(cfg.model));
    const auto query = query_row(cfg, model);
    std::optional<std::span<const double>> view;
    if (query) view = std::span<const double>(*query);
    const auto text = render_explanation(export_explanation(model, view));
    if (!cfg.out.empty()) detail::write_file(cfg.out, text);
    std::cout << text;
    if (query && model.kind != ModelKind::knn) std::cout << "prediction " << predict(model, *query) << "\n";
    return kExitOk;
}

std::string trace(const TrainedModel& model, std::span<const double> row) {
    const auto x = model_input(model, row);
    std::ostringstream out;
    switch (model.kind) {
    case ModelKind::decision_tree: {
        const auto& nodes = std::get<DecisionTree>(model.params).nodes();
        std::size_t i = 0;
        while (!nodes[i].is_leaf()) {
            const auto f = static_cast<std::size_t>(nodes[i].feature);
            const bool left = x[f] <= nodes[i].threshold;
            out << "  " << model.feature_names[f] << " = " << format_double(x[f]) << (left ? " <= " : " > ")
                << format_double(nodes[i].threshold) << "\n";
            i = static_cast<std::size_t>(left ? nodes[i].left : nodes[i].right);
        }
        out << "  leaf v:" << nodes[i].prediction() << " value = [" << nodes[i].counts[0] << ", " << nodes[i].counts[1] << "]\n";
        break;
    }
    case ModelKind::linear_svm: {
        const auto& svm = std::get<LinearSvm>(model.params);
        out << "  decision value " << format_double(svm.decision(x)) << " (fraud when >= 0)\n";
        break;
    }
    case ModelKind::naive_bayes: {
        const auto p = std::get<GaussianNB>(model.params).posterior(x);
        out << "  posterior non_fraud " << format_double(p[0]) << ", fraud " << format_double(p[1]) << "\n";
        break;
    }
    case ModelKind::knn: {
        for (const auto& n : std::get<KnnModel>(model.params).neighbors(x))
            out << "  neighbor " << n.id << " distance " << format_double(n.distance) << " label " << n.label << "\n";
        break;
    }
    }
    return out.str();
}

int cmd_predict(const RunConfig& cfg) {
    const auto model = parse_model(detail::read_file(cfg.model));
    const auto transcript = load_transcript(cfg.transcript);
    const auto lexicon = marker_lexicon(cfg);
    const auto backend = sentiment_backend(cfg, make_corpus({transcript}));
    if (lexicon.version() != model.provenance.marker_lexicon)
        throw Error(ErrorCode::lexicon_version_mismatch, "model was trained with marker lexicon '" +
                                                             model.provenance.marker_lexicon + "', got '" + lexicon.version() + "'");
    if (backend.describe() != model.provenance.sentiment_backend)
        throw Error(ErrorCode::lexicon_version_mismatch, "model was trained with sentiment '" +
                                                             model.provenance.sentiment_backend + "', got '" + backend.describe() + "'");
    const auto row = featurize(transcript, lexicon, backend, {cfg.per_thousand});
    const auto values = project(Dataset{FeatureSubset::combined, feature_names(), {row}}, model.subset).rows.front().values;
    const int label = predict(model, values);
    std::cout << transcript.id << " " << (label == 1 ? "fraud" : "non_fraud") << "\n"
              << "model " << to_string(model.kind) << " on " << to_string(model.subset) << " features\n"
              << trace(model, values);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explainable fraud detection from transcribed calls"};
    app.set_config("--config", "", "TOML/INI file with option defaults (flags override it)");
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_lexicon_flags = [&](CLI::App* sub) {
        sub->add_option("--lexicon", cfg.lexicon, "Marker lexicon file (default: built-in markers-v1)")->check(CLI::ExistingFile);
        sub->add_option("--valence", cfg.valence, "Valence lexicon file (default: built-in valence-v1)")->check(CLI::ExistingFile);
        sub->add_option("--sentiment", cfg.sentiment, "Sentiment backend: lexicon | external:<scores file>");
        sub->add_flag("--per-thousand", cfg.per_thousand, "Marker counts per 1000 response tokens");
    };

    auto* synth = app.add_subcommand("synth", "Generate a labeled synthetic corpus");
    synth->add_option("--out", cfg.out, "Output directory")->required();
    synth->add_option("--n-fraud", cfg.synth.n_fraud, "Fraudulent calls");
    synth->add_option("--n-nonfraud", cfg.synth.n_nonfraud, "Non-fraudulent calls");
    synth->add_option("--signal", cfg.synth.signal_strength, "Class separation in [0, 1]");
    synth->add_option("--seed", cfg.synth.seed, "Random seed");
    synth->add_option("--response-mean", cfg.synth.response_mean, "Mean responses per call");
    synth->add_option("--response-sd", cfg.synth.response_sd, "SD of responses per call");
    synth->add_option("--response-min", cfg.synth.response_min, "Fewest responses per call");
    synth->add_option("--response-max", cfg.synth.response_max, "Most responses per call");

    auto* extract = app.add_subcommand("extract", "Write the feature matrix for a corpus");
    extract->add_option("--corpus", cfg.corpus, "Corpus directory or manifest")->required()->check(CLI::ExistingPath);
    extract->add_option("--features", cfg.features, "markers | sentiment | combined")->expected(1);
    extract->add_option("--out", cfg.out, "Matrix file")->required();
    add_lexicon_flags(extract);

    auto* eval = app.add_subcommand("evaluate", "K-fold cross-validation report");
    auto* eval_corpus = eval->add_option("--corpus", cfg.corpus, "Corpus directory or manifest")->check(CLI::ExistingPath);
    auto* eval_matrix = eval->add_option("--matrix", cfg.matrix, "Feature matrix file")->check(CLI::ExistingFile);
    eval_corpus->excludes(eval_matrix);
    eval->add_option("--features", cfg.features, "Feature subsets (default: all three)")->delimiter(',');
    eval->add_option("--models", cfg.models, "Comma list of nb, tree, knn, svm");
    eval->add_option("--k", cfg.k, "Folds");
    eval->add_option("--seed", cfg.seed, "Fold seed");
    eval->add_option("--standardize", cfg.standardize, "on | off | default (kNN and SVM only)")
        ->check(CLI::IsMember({"on", "off", "default"}));
    eval->add_option("--stratify", cfg.stratify, "on | off")->check(CLI::IsMember({"on", "off"}));
    eval->add_option("--out", cfg.out, "Output directory")->required();
    add_lexicon_flags(eval);

    auto* explain = app.add_subcommand("explain", "Render a model explanation");
    explain->add_option("--model", cfg.model, "Model file")->required()->check(CLI::ExistingFile);
    explain->add_option("--matrix", cfg.matrix, "Feature matrix holding the query row")->check(CLI::ExistingFile);
    explain->add_option("--row", cfg.row, "Query row id in --matrix");
    explain->add_option("--transcript", cfg.transcript, "Query transcript")->check(CLI::ExistingFile);
    explain->add_option("--out", cfg.out, "Write the explanation (DOT for trees) here");
    add_lexicon_flags(explain);

    auto* pred = app.add_subcommand("predict", "Classify one transcript");
    pred->add_option("--model", cfg.model, "Model file")->required()->check(CLI::ExistingFile);
    pred->add_option("--transcript", cfg.transcript, "Transcript file")->required()->check(CLI::ExistingFile);
    add_lexicon_flags(pred);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (eval->parsed() && cfg.corpus.empty() && cfg.matrix.empty())
            throw Error(ErrorCode::invalid_config, "evaluate needs --corpus or --matrix");
        if (synth->parsed()) return cmd_synth(cfg);
        if (extract->parsed()) return cmd_extract(cfg);
        if (eval->parsed()) return cmd_evaluate(cfg);
        if (explain->parsed()) return cmd_explain(cfg);
        if (pred->parsed()) return cmd_predict(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_input_error() ? kExitInput : kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
