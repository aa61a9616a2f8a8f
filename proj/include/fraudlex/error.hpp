#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fraudlex {

enum class ErrorCode {
    malformed_document,
    unknown_speaker,
    missing_id,
    duplicate_id,
    io_error,
    invalid_lexicon,
    empty_score_list,
    out_of_range_score,
    unknown_transcript,
    missing_response_score,
    no_customer_responses,
    single_class_training,
    dimension_mismatch,
    too_few_rows,
    invalid_config,
    lexicon_version_mismatch,
    invalid_model,
    internal,
};

inline constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::malformed_document: return "MalformedDocument";
    case ErrorCode::unknown_speaker: return "UnknownSpeaker";
    case ErrorCode::missing_id: return "MissingId";
    case ErrorCode::duplicate_id: return "DuplicateId";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::invalid_lexicon: return "InvalidLexicon";
    case ErrorCode::empty_score_list: return "EmptyScoreList";
    case ErrorCode::out_of_range_score: return "OutOfRangeScore";
    case ErrorCode::unknown_transcript: return "UnknownTranscript";
    case ErrorCode::missing_response_score: return "MissingResponseScore";
    case ErrorCode::no_customer_responses: return "NoCustomerResponses";
    case ErrorCode::single_class_training: return "SingleClassTraining";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::too_few_rows: return "TooFewRows";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::lexicon_version_mismatch: return "LexiconVersionMismatch";
    case ErrorCode::invalid_model: return "InvalidModel";
    case ErrorCode::internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a code so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// True for errors caused by bad user input rather than a library defect.
    bool is_input_error() const noexcept { return code_ != ErrorCode::internal; }

private:
    ErrorCode code_;
};

} // namespace fraudlex
