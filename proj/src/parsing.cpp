#include "dgbench/parsing/parsers.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace dgbench::parsing {

namespace {

bool is_strippable(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> whitespace_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_strippable(s[i])) ++i;
        std::size_t start = i;
        while (i < s.size() && !is_strippable(s[i])) ++i;
        if (i > start) tokens.emplace_back(s.substr(start, i - start));
    }
    return tokens;
}

// Keyword match on a token with surrounding punctuation trimmed, so that
// "different," counts but "sesame" does not.
bool token_is_keyword(const std::string& token, const char* keyword) {
    std::size_t begin = 0;
    std::size_t end = token.size();
    while (begin < end && !std::isalpha(static_cast<unsigned char>(token[begin]))) ++begin;
    while (end > begin && !std::isalpha(static_cast<unsigned char>(token[end - 1]))) --end;
    return lowercase(token.substr(begin, end - begin)) == keyword;
}

BadFormat fail(BadFormatReason reason, std::string detail = "") {
    return BadFormat{reason, std::move(detail)};
}

}  // namespace

const char* tag_string(Tag t) {
    switch (t) {
        case Tag::Description: return "DESCRIPTION";
        case Tag::Question: return "QUESTION";
        case Tag::Answer: return "ANSWER";
        case Tag::Decision: return "DECISION";
        case Tag::Expression: return "Expression";
        case Tag::RefAnswer: return "Answer";
    }
    return "";
}

const char* to_string(BadFormatReason r) {
    switch (r) {
        case BadFormatReason::WrongTag: return "wrong_tag";
        case BadFormatReason::EmptyPayload: return "empty_payload";
        case BadFormatReason::BadAction: return "bad_action";
        case BadFormatReason::InvalidJson: return "invalid_json";
        case BadFormatReason::MissingField: return "missing_field";
        case BadFormatReason::BadGraph: return "bad_graph";
        case BadFormatReason::Ambiguous: return "ambiguous";
        case BadFormatReason::MissingKeyword: return "missing_keyword";
        case BadFormatReason::TooLong: return "too_long";
    }
    return "";
}

std::string normalize(std::string_view raw) {
    std::size_t begin = 0;
    std::size_t end = raw.size();
    while (begin < end && is_strippable(raw[begin])) ++begin;
    while (end > begin && is_strippable(raw[end - 1])) --end;
    return std::string(raw.substr(begin, end - begin));
}

ParseResult<TaggedUtterance> parse_tagged(std::string_view raw, Tag expected) {
    const std::string text = normalize(raw);
    const std::string prefix = std::string(tag_string(expected)) + ": ";
    if (text.rfind(prefix, 0) != 0) {
        // A bare tag whose payload was pure whitespace normalizes to "<tag>:".
        if (text == std::string(tag_string(expected)) + ":") {
            return fail(BadFormatReason::EmptyPayload);
        }
        return fail(BadFormatReason::WrongTag, "expected '" + prefix + "'");
    }
    std::string payload = text.substr(prefix.size());
    if (payload.empty()) {
        return fail(BadFormatReason::EmptyPayload);
    }
    return TaggedUtterance{expected, std::move(payload)};
}

ParseResult<MoveAction> parse_move(std::string_view raw) {
    const std::string text = normalize(raw);
    if (text == "DONE") return MoveAction::stop();
    const std::string prefix = "GO: ";
    if (text.rfind(prefix, 0) == 0) {
        if (auto d = direction_from_string(text.substr(prefix.size()))) {
            return MoveAction::go(*d);
        }
    }
    return fail(BadFormatReason::BadAction, "not 'GO: <direction>' or 'DONE'");
}

namespace {

// Validates the "graph" value and reshapes it into a PlayerGraph.
ParseResult<PlayerGraph> parse_player_graph(const nlohmann::json& g) {
    if (!g.is_object()) return fail(BadFormatReason::BadGraph, "graph is not an object");
    if (!g.contains("nodes") || !g["nodes"].is_array()) {
        return fail(BadFormatReason::BadGraph, "graph.nodes missing");
    }
    if (!g.contains("edges") || !g["edges"].is_object()) {
        return fail(BadFormatReason::BadGraph, "graph.edges missing");
    }
    PlayerGraph out;
    for (const auto& n : g["nodes"]) {
        if (!n.is_string()) return fail(BadFormatReason::BadGraph, "node label is not a string");
        out.nodes.push_back(n.get<std::string>());
    }
    for (const auto& [key, value] : g["edges"].items()) {
        if (!direction_from_string(key)) {
            return fail(BadFormatReason::BadGraph, "unknown direction key '" + key + "'");
        }
        if (!value.is_array()) return fail(BadFormatReason::BadGraph, "edge list is not an array");
        auto& bucket = out.edges[key];
        for (const auto& pair : value) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_string()) {
                return fail(BadFormatReason::BadGraph, "edge is not a pair of labels");
            }
            std::string a = pair[0].get<std::string>();
            std::string b = pair[1].get<std::string>();
            auto known = [&](const std::string& label) {
                return std::find(out.nodes.begin(), out.nodes.end(), label) != out.nodes.end();
            };
            if (!known(a) || !known(b)) {
                return fail(BadFormatReason::BadGraph, "edge endpoint not listed in nodes");
            }
            bucket.emplace_back(std::move(a), std::move(b));
        }
    }
    return out;
}

}  // namespace

ParseResult<GraphAnswer> parse_graph_answer(std::string_view raw, bool require_graph,
                                            bool require_description) {
    const std::string text = normalize(raw);
    // Exactly one JSON object and nothing else; accept() rejects trailing or
    // leading junk such as a "json" prefix or a markdown fence.
    if (text.empty() || text.front() != '{' || !nlohmann::json::accept(text)) {
        return fail(BadFormatReason::InvalidJson);
    }
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object()) return fail(BadFormatReason::InvalidJson, "not an object");

    if (!doc.contains("action") || !doc["action"].is_string()) {
        return fail(BadFormatReason::MissingField, "action");
    }
    auto action = parse_move(doc["action"].get<std::string>());
    if (!action.ok()) return fail(BadFormatReason::BadAction, doc["action"].get<std::string>());

    GraphAnswer out;
    out.action = action.value();

    if (doc.contains("description") && doc["description"].is_string()) {
        out.description = doc["description"].get<std::string>();
    } else if (require_description) {
        return fail(BadFormatReason::MissingField, "description");
    }

    if (doc.contains("graph")) {
        auto graph = parse_player_graph(doc["graph"]);
        if (!graph.ok()) return graph.error();
        out.graph = graph.value();
    } else if (require_graph) {
        return fail(BadFormatReason::MissingField, "graph");
    }
    return out;
}

ParseResult<Decision> parse_decision(std::string_view payload) {
    const auto tokens = whitespace_tokens(payload);
    int same = 0;
    int different = 0;
    for (const auto& t : tokens) {
        if (token_is_keyword(t, "same")) ++same;
        if (token_is_keyword(t, "different")) ++different;
    }
    if (same > 0 && different > 0) return fail(BadFormatReason::Ambiguous);
    if (same == 0 && different == 0) return fail(BadFormatReason::MissingKeyword);
    // "explanations for final decisions are not allowed": a keyword buried in
    // a longer sentence does not count as a decision.
    if (tokens.size() > 5) return fail(BadFormatReason::TooLong);
    return same > 0 ? Decision::Same : Decision::Different;
}

ParseResult<int> parse_reference_answer(std::string_view payload) {
    std::string text = lowercase(normalize(payload));
    if (!text.empty() && text.back() == '.') text.pop_back();
    if (text == "first") return 0;
    if (text == "second") return 1;
    if (text == "third") return 2;
    return fail(BadFormatReason::MissingKeyword, "expected first, second, or third");
}

}  // namespace dgbench::parsing
