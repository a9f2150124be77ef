#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dgbench/parsing/actions.hpp"

namespace dgbench::parsing {

// Single authority on what counts as a well-formed player utterance. Parsers
// are total: any input yields either a value or a BadFormat reason, never an
// exception. A BadFormat from these parsers is what aborts an episode.

enum class Tag {
    Description,  // "DESCRIPTION: "
    Question,     // "QUESTION: "
    Answer,       // "ANSWER: "
    Decision,     // "DECISION: "
    Expression,   // "Expression: "  (reference game, player A)
    RefAnswer,    // "Answer: "      (reference game, player B)
};

const char* tag_string(Tag t);

enum class BadFormatReason {
    WrongTag,
    EmptyPayload,
    BadAction,
    InvalidJson,
    MissingField,
    BadGraph,
    Ambiguous,
    MissingKeyword,
    TooLong,
};

const char* to_string(BadFormatReason r);

struct BadFormat {
    BadFormatReason reason;
    std::string detail;
};

template <typename T>
class ParseResult {
public:
    ParseResult(T value) : result_(std::move(value)) {}  // NOLINT implicit
    ParseResult(BadFormat error) : result_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(result_); }
    const T& value() const { return std::get<T>(result_); }
    const BadFormat& error() const { return std::get<BadFormat>(result_); }

private:
    std::variant<T, BadFormat> result_;
};

struct TaggedUtterance {
    Tag tag;
    std::string payload;  // non-empty
};

// The player's reported map in an EE-gr style answer: node labels plus
// direction-keyed label pairs. Every edge endpoint appears in nodes.
struct PlayerGraph {
    std::vector<std::string> nodes;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> edges;
};

struct GraphAnswer {
    MoveAction action;
    std::optional<std::string> description;
    std::optional<PlayerGraph> graph;
};

enum class Decision { Same, Different };

// Strips leading/trailing whitespace and newlines; interior content untouched.
std::string normalize(std::string_view raw);

// Accepts iff the normalized input starts with "<tag>: " (exact case) and the
// payload after it is non-empty.
ParseResult<TaggedUtterance> parse_tagged(std::string_view raw, Tag expected);

// Exact match against "GO: north|south|east|west" or "DONE" after normalize.
ParseResult<MoveAction> parse_move(std::string_view raw);

// One JSON object, nothing before or after it (a "json" prefix or code fence
// is invalid). The embedded action obeys parse_move rules.
ParseResult<GraphAnswer> parse_graph_answer(std::string_view raw, bool require_graph,
                                            bool require_description);

// Case-insensitive keyword scan over the DECISION payload; exactly one of
// same/different, and no more than 5 whitespace-separated tokens.
ParseResult<Decision> parse_decision(std::string_view payload);

// Reference player B selection: first|second|third (case-insensitive, one
// trailing period tolerated) -> 0|1|2.
ParseResult<int> parse_reference_answer(std::string_view payload);

}  // namespace dgbench::parsing
