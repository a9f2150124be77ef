#include "dgbench/games/matchit.hpp"

#include "dgbench/core/engine.hpp"

namespace dgbench {

namespace {

constexpr const char* kInitialPrompt =
    R"(Let us play a game. You are given an image, and your partner is also given an image. Your image is either exactly the same as your partner's image or different from it. Your task is to find out together whether you both have the same image or different images.
First, you will describe your image. Start your description with "DESCRIPTION: ". Do not add anything else to your message.
After the descriptions, you will ask your partner questions about their image and answer your partner's questions about yours. Start your questions with "QUESTION: " and your answers with "ANSWER: ". Answer truthfully, based only on your own image.
At the end I will ask you for a decision. Answer either with "DECISION: same image." or "DECISION: different images.". Explanations for final decisions are not allowed. Every message that does not start with the right expression aborts the game.

This is your image:
$STIMULUS$)";

std::string replace_all(std::string text, const std::string& token, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
    return text;
}

// Last response of a participant, parsed as a decision.
std::optional<parsing::Decision> final_decision(const Episode& episode, Participant who) {
    for (auto it = episode.events.rbegin(); it != episode.events.rend(); ++it) {
        if (it->sender != who) continue;
        auto tagged = parsing::parse_tagged(it->content, parsing::Tag::Decision);
        if (!tagged.ok()) return std::nullopt;
        auto decision = parsing::parse_decision(tagged.value().payload);
        if (!decision.ok()) return std::nullopt;
        return decision.value();
    }
    return std::nullopt;
}

}  // namespace

MatchItInstance MatchItInstance::from_payload(const Json& payload) {
    MatchItInstance instance;
    instance.stimulus_a = payload.at("stimulus_a").get<std::string>();
    instance.stimulus_b = payload.at("stimulus_b").get<std::string>();
    instance.same = payload.at("ground_truth").get<std::string>() == "same";
    instance.difficulty = payload.value("difficulty", "");
    instance.modality =
        payload.value("modality", "text") == "image" ? Modality::Multimodal : Modality::Text;
    if (instance.same != (instance.stimulus_a == instance.stimulus_b)) {
        throw IntegrityError("matchit ground truth disagrees with stimulus identity");
    }
    return instance;
}

Json MatchItInstance::to_payload() const {
    return Json{{"stimulus_a", stimulus_a},
                {"stimulus_b", stimulus_b},
                {"ground_truth", same ? "same" : "different"},
                {"difficulty", difficulty},
                {"modality", modality == Modality::Multimodal ? "image" : "text"}};
}

std::string MatchItGame::wording(const char* text) const {
    if (modality_ == Modality::Multimodal) return text;
    return replace_all(replace_all(text, "images", "grids"), "image", "grid");
}

std::string MatchItGame::initial_prompt(const std::string& stimulus) const {
    std::string text = wording(kInitialPrompt);
    return replace_all(std::move(text), "$STIMULUS$", stimulus);
}

std::string MatchItGame::describe_prompt() const { return wording("Describe your image"); }

void MatchItGame::play(EpisodeContext& ctx, const GameInstance& instance) const {
    const MatchItInstance match = MatchItInstance::from_payload(instance.payload);

    auto stimulus_of = [&](Role role) {
        return role == Role::PlayerA ? match.stimulus_a : match.stimulus_b;
    };
    auto attachments_of = [&](Role role) -> std::vector<std::string> {
        if (modality_ == Modality::Multimodal) return {stimulus_of(role)};
        return {};
    };

    // Phase 1: both describe, A first; descriptions are relayed verbatim.
    std::string descriptions[2];
    for (Role role : {Role::PlayerA, Role::PlayerB}) {
        ctx.gm_message(role, initial_prompt(stimulus_of(role)), attachments_of(role));
        const std::string raw = ctx.prompt(role, describe_prompt());
        auto described = parsing::parse_tagged(raw, parsing::Tag::Description);
        if (!described.ok()) ctx.abort_bad_format(role, raw);
        descriptions[role == Role::PlayerA ? 0 : 1] = parsing::normalize(raw);
    }
    ctx.gm_message(Role::PlayerA, descriptions[1]);
    ctx.gm_message(Role::PlayerB, descriptions[0]);

    // Phase 2: Q/A rounds; the relayed question itself prompts the answer.
    for (int round = 0; round < max_qa_rounds_; ++round) {
        const Role asker = (round % 2 == 0) ? Role::PlayerB : Role::PlayerA;
        const Role answerer = (asker == Role::PlayerA) ? Role::PlayerB : Role::PlayerA;

        const std::string raw_question = ctx.prompt(asker, "Ask a question.");
        auto question = parsing::parse_tagged(raw_question, parsing::Tag::Question);
        if (!question.ok()) ctx.abort_bad_format(asker, raw_question);

        const std::string raw_answer = ctx.prompt(answerer, parsing::normalize(raw_question));
        auto answer = parsing::parse_tagged(raw_answer, parsing::Tag::Answer);
        if (!answer.ok()) ctx.abort_bad_format(answerer, raw_answer);
        ctx.gm_message(asker, parsing::normalize(raw_answer));
    }

    // Phase 3: decisions, B first (no early exit; the GM decides when).
    for (Role role : {Role::PlayerB, Role::PlayerA}) {
        const std::string raw = ctx.prompt(role, "Come to a decision.");
        auto tagged = parsing::parse_tagged(raw, parsing::Tag::Decision);
        if (!tagged.ok()) ctx.abort_bad_format(role, raw);
        if (!parsing::parse_decision(tagged.value().payload).ok()) {
            ctx.abort_bad_format(role, raw);
        }
    }
}

PlayResult MatchItGame::score(const Episode& episode) const {
    const MatchItInstance match = MatchItInstance::from_payload(episode.instance.payload);
    const parsing::Decision truth =
        match.same ? parsing::Decision::Same : parsing::Decision::Different;

    auto a = final_decision(episode, Participant::PlayerA);
    auto b = final_decision(episode, Participant::PlayerB);
    const bool success = a && b && *a == truth && *b == truth;

    PlayResult out;
    out.metrics["success"] = success ? 1.0 : 0.0;
    out.quality = success ? 100.0 : 0.0;
    return out;
}

}  // namespace dgbench
