#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fraudlex/error.hpp"

namespace fraudlex {

enum class Speaker { agent, customer };

/// Non-fraud is 0 and fraud is 1 wherever a label is stored numerically.
enum class Label : int { non_fraud = 0, fraud = 1, unlabeled = -1 };

inline std::string_view to_string(Speaker s) { return s == Speaker::agent ? "agent" : "customer"; }

inline std::string_view to_string(Label l) {
    switch (l) {
    case Label::fraud: return "fraud";
    case Label::non_fraud: return "non_fraud";
    default: return "unlabeled";
    }
}

struct Turn {
    Speaker speaker = Speaker::customer;
    std::string text;

    bool operator==(const Turn&) const = default;
};

struct Transcript {
    std::string id;
    Label label = Label::unlabeled;
    std::vector<Turn> turns;

    bool operator==(const Transcript&) const = default;
};

/// Order-preserving filter of the customer turns.
inline std::vector<std::string> customer_responses(const Transcript& t) {
    std::vector<std::string> out;
    for (const auto& turn : t.turns)
        if (turn.speaker == Speaker::customer) out.push_back(turn.text);
    return out;
}

struct Corpus {
    std::vector<Transcript> transcripts;
    std::map<Label, std::size_t> class_counts;

    const Transcript* find(std::string_view id) const {
        auto it = std::lower_bound(transcripts.begin(), transcripts.end(), id,
                                   [](const Transcript& t, std::string_view key) { return t.id < key; });
        return (it != transcripts.end() && it->id == id) ? &*it : nullptr;
    }
};

namespace detail {

inline bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::io_error, "write failed for '" + path.string() + "'");
}

} // namespace detail

/// Parses one transcript document:
/// `{"id": "...", "label": "fraud"|"non_fraud" (optional), "turns": [{"speaker": ..., "text": ...}]}`.
/// Whitespace-only turns are dropped.
inline Transcript parse_transcript(std::string_view document) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::malformed_document, "top level must be an object");

    Transcript t;
    auto id = doc.find("id");
    if (id == doc.end() || id->is_null()) throw Error(ErrorCode::missing_id, "document has no 'id'");
    if (!id->is_string() || id->get<std::string>().empty())
        throw Error(ErrorCode::missing_id, "'id' must be a non-empty string");
    t.id = id->get<std::string>();

    if (auto label = doc.find("label"); label != doc.end() && !label->is_null()) {
        if (!label->is_string()) throw Error(ErrorCode::malformed_document, "'label' must be a string");
        const auto value = label->get<std::string>();
        if (value == "fraud")
            t.label = Label::fraud;
        else if (value == "non_fraud")
            t.label = Label::non_fraud;
        else
            throw Error(ErrorCode::malformed_document, "unknown label '" + value + "' in " + t.id);
    }

    auto turns = doc.find("turns");
    if (turns == doc.end() || !turns->is_array())
        throw Error(ErrorCode::malformed_document, "'turns' must be an array in " + t.id);
    for (const auto& turn : *turns) {
        if (!turn.is_object()) throw Error(ErrorCode::malformed_document, "turn must be an object in " + t.id);
        auto speaker = turn.find("speaker");
        auto text = turn.find("text");
        if (speaker == turn.end() || !speaker->is_string())
            throw Error(ErrorCode::malformed_document, "turn without 'speaker' in " + t.id);
        if (text == turn.end() || !text->is_string())
            throw Error(ErrorCode::malformed_document, "turn without 'text' in " + t.id);
        Turn parsed;
        const auto who = speaker->get<std::string>();
        if (who == "agent")
            parsed.speaker = Speaker::agent;
        else if (who == "customer")
            parsed.speaker = Speaker::customer;
        else
            throw Error(ErrorCode::unknown_speaker, "'" + who + "' in " + t.id);
        parsed.text = text->get<std::string>();
        if (detail::is_blank(parsed.text)) continue;
        t.turns.push_back(std::move(parsed));
    }
    return t;
}

inline std::string serialize_transcript(const Transcript& t) {
    nlohmann::ordered_json doc;
    doc["id"] = t.id;
    if (t.label != Label::unlabeled) doc["label"] = std::string(to_string(t.label));
    doc["turns"] = nlohmann::ordered_json::array();
    for (const auto& turn : t.turns)
        doc["turns"].push_back({{"speaker", std::string(to_string(turn.speaker))}, {"text", turn.text}});
    return doc.dump(2) + "\n";
}

/// Sorts by id, rejects duplicates and fills the class counts.
inline Corpus make_corpus(std::vector<Transcript> transcripts) {
    std::sort(transcripts.begin(), transcripts.end(),
              [](const Transcript& a, const Transcript& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < transcripts.size(); ++i)
        if (transcripts[i].id == transcripts[i - 1].id)
            throw Error(ErrorCode::duplicate_id, "'" + transcripts[i].id + "'");
    Corpus corpus;
    for (const auto& t : transcripts) ++corpus.class_counts[t.label];
    corpus.transcripts = std::move(transcripts);
    return corpus;
}

/// File suffix that marks a transcript document inside a corpus directory.
inline constexpr std::string_view kTranscriptSuffix = ".transcript.json";

inline Transcript load_transcript(const std::filesystem::path& path) {
    const auto bytes = detail::read_file(path);
    try {
        return parse_transcript(bytes);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

/// Loads a corpus from either a directory (every `*.transcript.json` file in it)
/// or a manifest file listing one transcript path per line, relative to the
/// manifest's own directory.
inline Corpus load_corpus(const std::filesystem::path& source) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    std::error_code ec;
    if (fs::is_directory(source, ec)) {
        for (const auto& entry : fs::directory_iterator(source)) {
            const auto name = entry.path().filename().string();
            if (entry.is_regular_file() && name.size() > kTranscriptSuffix.size() && name.ends_with(kTranscriptSuffix))
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(source, ec)) {
        std::istringstream lines(detail::read_file(source));
        std::string line;
        while (std::getline(lines, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (detail::is_blank(line)) continue;
            fs::path p(line);
            files.push_back(p.is_absolute() ? p : source.parent_path() / p);
        }
    } else {
        throw Error(ErrorCode::io_error, "corpus source '" + source.string() + "' does not exist");
    }

    std::vector<Transcript> transcripts;
    transcripts.reserve(files.size());
    for (const auto& f : files) transcripts.push_back(load_transcript(f));
    return make_corpus(std::move(transcripts));
}

} // namespace fraudlex
