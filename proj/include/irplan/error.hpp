#pragma once

#include <stdexcept>
#include <string>

namespace irplan {

// Every failure mode the library reports, one tag per contract-level error.
enum class ErrorKind {
    MissingField,       // required field absent from a structured object
    MalformedValue,     // field present but not of the required form
    MalformedObject,    // no parsable structured object in the text
    UnrecognizedLine,   // alert line matches no known shape
    SchemaError,        // scenario/config file violates its schema
    TemplateError,      // alert template renders an unparsable line
    IoError,            // file missing or unreadable
    EpisodeFinished,    // step() called on a terminal environment
    MissingContext,     // prompt template referenced an absent section
    UnscriptedPrompt,   // scripted/tabular backend has no entry for the prompt
    TransportFailure,   // HTTP failure after retries
    Timeout,            // HTTP timeout after retries
    EmptyPayload,       // generation was all reasoning, no payload
    SimulationParseError, // world-model output unusable after retries
    NoViableCandidates, // every candidate generation failed to parse
    EmptyCandidates,    // argmin over an empty candidate list
    EmptySample,        // metric over an empty sample set
    JudgmentMismatch,   // verdict count differs from action count
    ParseError,         // state text unparsable in strict evaluation
    ConfigError,        // bad run configuration
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace irplan
