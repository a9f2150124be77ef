#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dgbench/parsing/parsers.hpp"
#include "dgbench/util/rng.hpp"

using namespace dgbench;
using namespace dgbench::parsing;

TEST_CASE("normalize strips only leading and trailing whitespace") {
    CHECK(normalize("  GO: east\n") == "GO: east");
    CHECK(normalize("DONE") == "DONE");
    CHECK(normalize("GO:  east") == "GO:  east");  // interior space preserved
    CHECK(normalize("\r\n\t hello \t\r\n") == "hello");
    CHECK(normalize("") == "");
    CHECK(normalize(" \n ") == "");
}

TEST_CASE("parse_tagged accepts exact tags with non-empty payloads") {
    auto ok = parse_tagged("DESCRIPTION: Two giraffes in a dirt field.", Tag::Description);
    REQUIRE(ok.ok());
    CHECK(ok.value().payload == "Two giraffes in a dirt field.");

    auto wrong = parse_tagged("ANSWER: No, only boats.", Tag::Question);
    REQUIRE_FALSE(wrong.ok());
    CHECK(wrong.error().reason == BadFormatReason::WrongTag);

    auto empty = parse_tagged("Expression: ", Tag::Expression);
    REQUIRE_FALSE(empty.ok());
    CHECK(empty.error().reason == BadFormatReason::EmptyPayload);
}

TEST_CASE("parse_tagged is case-sensitive and anchored at the start") {
    CHECK_FALSE(parse_tagged("description: x", Tag::Description).ok());
    CHECK_FALSE(parse_tagged("Sure! DESCRIPTION: x", Tag::Description).ok());
    CHECK(parse_tagged("  DESCRIPTION: x \n", Tag::Description).ok());  // outer whitespace ok
    // Tag success implies the normalized text starts with "<tag>: " exactly.
    std::string input = "\nQUESTION: Is there a dog?";
    auto parsed = parse_tagged(input, Tag::Question);
    REQUIRE(parsed.ok());
    CHECK(normalize(input).rfind("QUESTION: ", 0) == 0);
}

TEST_CASE("parse_move accepts exactly the move grammar") {
    CHECK(parse_move("GO: north").value() == MoveAction::go(Direction::North));
    CHECK(parse_move("GO: south").value() == MoveAction::go(Direction::South));
    CHECK(parse_move("GO: east").value() == MoveAction::go(Direction::East));
    CHECK(parse_move("GO: west").value() == MoveAction::go(Direction::West));
    CHECK(parse_move("DONE").value() == MoveAction::stop());
    CHECK(parse_move("  GO: east\n").value() == MoveAction::go(Direction::East));

    for (const char* bad : {"go north", "GO:north", "GO: up", "Go: north", "DONE.", "GO: east!",
                            "GO: east GO: west", "", "GO:  east"}) {
        CAPTURE(bad);
        CHECK_FALSE(parse_move(bad).ok());
    }
}

TEST_CASE("move round-trip: serialize(parse(s)) == normalize(s) for accepted inputs") {
    for (const char* s : {"GO: north", "GO: south", "GO: east", "GO: west", "DONE", "  DONE\n",
                          "\nGO: west  "}) {
        auto parsed = parse_move(s);
        REQUIRE(parsed.ok());
        CHECK(serialize(parsed.value()) == normalize(s));
    }
}

TEST_CASE("parse_graph_answer handles the documented shapes") {
    auto plain = parse_graph_answer(
        R"({"description": "We are in a kitchen with a red fridge.", "action": "GO: north"})",
        false, true);
    REQUIRE(plain.ok());
    CHECK(plain.value().action == MoveAction::go(Direction::North));
    CHECK(plain.value().description.value() == "We are in a kitchen with a red fridge.");

    auto with_graph = parse_graph_answer(
        R"({"action": "DONE", "graph": {"nodes": ["Kitchen"], "edges": {"north": [], "south": [], "east": [], "west": []}}})",
        true, false);
    REQUIRE(with_graph.ok());
    CHECK(with_graph.value().action.done);
    CHECK(with_graph.value().graph.value().nodes == std::vector<std::string>{"Kitchen"});

    auto fenced = parse_graph_answer(R"(json{"action": "GO: east"})", false, false);
    REQUIRE_FALSE(fenced.ok());
    CHECK(fenced.error().reason == BadFormatReason::InvalidJson);
}

TEST_CASE("parse_graph_answer required fields and embedded action") {
    CHECK(parse_graph_answer(R"({"action": "GO: east"})", false, true).error().reason ==
          BadFormatReason::MissingField);
    CHECK(parse_graph_answer(R"({"action": "GO: east", "description": "x"})", true, true)
              .error()
              .reason == BadFormatReason::MissingField);
    CHECK(parse_graph_answer(R"({"description": "x"})", false, false).error().reason ==
          BadFormatReason::MissingField);
    CHECK(parse_graph_answer(R"({"action": "go east"})", false, false).error().reason ==
          BadFormatReason::BadAction);
    // Nothing outside the single object.
    CHECK_FALSE(parse_graph_answer(R"({"action": "DONE"} trailing)", false, false).ok());
    CHECK_FALSE(parse_graph_answer("```json\n{\"action\": \"DONE\"}\n```", false, false).ok());
}

TEST_CASE("parse_graph_answer accepts any key order and interior whitespace") {
    auto parsed = parse_graph_answer(
        "{\n  \"graph\": {\"edges\": {\"west\": [[\"A\", \"B\"]]}, \"nodes\": [\"A\", \"B\"]},\n"
        "  \"action\":   \"GO: west\"\n}",
        true, false);
    REQUIRE(parsed.ok());
    CHECK(parsed.value().graph.value().edges.at("west").size() == 1);
}

TEST_CASE("parse_graph_answer rejects structurally bad graphs") {
    // Edge endpoint not listed in nodes.
    auto unknown = parse_graph_answer(
        R"({"action": "DONE", "graph": {"nodes": ["A"], "edges": {"north": [["A", "B"]]}}})", true,
        false);
    REQUIRE_FALSE(unknown.ok());
    CHECK(unknown.error().reason == BadFormatReason::BadGraph);

    CHECK_FALSE(parse_graph_answer(R"({"action": "DONE", "graph": {"nodes": ["A"]}})", true, false)
                    .ok());
    CHECK_FALSE(parse_graph_answer(
                    R"({"action": "DONE", "graph": {"nodes": ["A"], "edges": {"up": []}}})", true,
                    false)
                    .ok());
}

TEST_CASE("parse_decision keyword scan") {
    CHECK(parse_decision("different images.").value() == Decision::Different);
    CHECK(parse_decision("same image").value() == Decision::Same);
    CHECK(parse_decision("SAME!").value() == Decision::Same);
    CHECK(parse_decision("Different grids.").value() == Decision::Different);

    auto both = parse_decision("same or different, hard to say");
    REQUIRE_FALSE(both.ok());
    CHECK(both.error().reason == BadFormatReason::Ambiguous);

    auto none = parse_decision("I cannot tell");
    REQUIRE_FALSE(none.ok());
    CHECK(none.error().reason == BadFormatReason::MissingKeyword);

    auto essay = parse_decision("different because the other one clearly showed boats");
    REQUIRE_FALSE(essay.ok());
    CHECK(essay.error().reason == BadFormatReason::TooLong);

    // "sesame" must not count as the keyword "same".
    CHECK_FALSE(parse_decision("sesame").ok());
}

TEST_CASE("parse_reference_answer ordinals") {
    CHECK(parse_reference_answer("first").value() == 0);
    CHECK(parse_reference_answer("Second").value() == 1);
    CHECK(parse_reference_answer("third.").value() == 2);
    CHECK(parse_reference_answer("THIRD").value() == 2);
    CHECK_FALSE(parse_reference_answer("fourth").ok());
    CHECK_FALSE(parse_reference_answer("the first").ok());
    CHECK_FALSE(parse_reference_answer("").ok());
}

TEST_CASE("rejection totality: random bytes never crash, always value-or-reason") {
    Rng rng(0xfeedface);
    for (int i = 0; i < 20000; ++i) {
        std::string input;
        const int len = uniform_int(rng, 0, 48);
        for (int k = 0; k < len; ++k) {
            input.push_back(static_cast<char>(uniform_int(rng, 0, 255)));
        }
        (void)normalize(input);
        (void)parse_move(input);
        (void)parse_tagged(input, Tag::Description);
        (void)parse_graph_answer(input, true, true);
        (void)parse_decision(input);
        (void)parse_reference_answer(input);
    }
    CHECK(true);  // reaching here is the property
}
