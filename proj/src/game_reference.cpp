#include "dgbench/games/reference.hpp"

#include <algorithm>

#include "dgbench/core/engine.hpp"

namespace dgbench {

namespace {

constexpr const char* kPromptA =
    R"(You are given three images, one is called target and the other two are distractors.
Your task is to generate a referring expression that best describes the target image while distinguishing it from the two other distractor images.
The first image is <IMAGE_POSITION>, the second image is <IMAGE_POSITION>, and the third image is <IMAGE_POSITION>.

Instruction: Describe the target image. Generate the referring expression starting with the tag "Expression: " for the given target image. Omit any other text.

Target image: <IMAGE_PATH>
Second image: <IMAGE_PATH>
Third image: <IMAGE_PATH>)";

constexpr const char* kPromptB =
    R"(You are given three images. You are also given a referring expression that describes one of the given images.
Your task is to select the image that matches the given referring expression.
Generate only the number (in text) of the image that matches the given expression by selecting first, second, or third.

TARGET_EXPRESSION
Question: Which image does the expression refer to?
Start with the tag "Answer: ", followed by your selection. Omit any other text.

First image: <IMAGE_PATH>
Second image: <IMAGE_PATH>
Third image: <IMAGE_PATH>)";

bool replace_first(std::string& text, const std::string& token, const std::string& value) {
    std::size_t pos = text.find(token);
    if (pos == std::string::npos) return false;
    text.replace(pos, token.size(), value);
    return true;
}

std::string replace_all(std::string text, const std::string& token, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
    return text;
}

// Text experiments present grids, so the prompt wording swaps image -> grid.
std::string adapt_to_modality(std::string text, Modality modality) {
    if (modality == Modality::Text) {
        text = replace_all(std::move(text), "images", "grids");
        text = replace_all(std::move(text), "image", "grid");
    }
    return text;
}

// A grid is inlined on its own lines; an image reference stays a path.
std::string stimulus_text(const std::string& stimulus, Modality modality) {
    if (modality == Modality::Text) return "\n" + stimulus;
    return stimulus;
}

}  // namespace

ReferenceInstance ReferenceInstance::from_payload(const Json& payload) {
    ReferenceInstance instance;
    for (const auto& s : payload.at("stimuli")) instance.stimuli.push_back(s.get<std::string>());
    if (instance.stimuli.size() != 3) {
        throw IntegrityError("reference instance must carry exactly 3 stimuli");
    }
    const auto& order = payload.at("order_b");
    for (std::size_t i = 0; i < 3; ++i) instance.order_b[i] = order.at(i).get<int>();
    instance.target_index_a = payload.value("target_index_a", 0);
    instance.modality =
        payload.value("modality", "text") == "image" ? Modality::Multimodal : Modality::Text;
    return instance;
}

Json ReferenceInstance::to_payload() const {
    return Json{{"stimuli", stimuli},
                {"order_b", order_b},
                {"target_index_a", target_index_a},
                {"modality", modality == Modality::Multimodal ? "image" : "text"}};
}

int ReferenceInstance::target_position_b() const {
    for (int pos = 0; pos < 3; ++pos) {
        if (order_b[static_cast<std::size_t>(pos)] == 0) return pos;
    }
    throw IntegrityError("order_b is not a permutation containing the target");
}

std::string ReferenceGame::prompt_a(const ReferenceInstance& instance) const {
    // Wording is adapted before player/stimulus content is inserted, so the
    // image -> grid swap never rewrites an inserted stimulus.
    std::string text = adapt_to_modality(kPromptA, instance.modality);
    // Target always comes first in A's presentation.
    replace_first(text, "<IMAGE_POSITION>", "the target");
    replace_first(text, "<IMAGE_POSITION>", "a distractor");
    replace_first(text, "<IMAGE_POSITION>", "a distractor");
    for (const auto& stimulus : instance.stimuli) {
        replace_first(text, "<IMAGE_PATH>", stimulus_text(stimulus, instance.modality));
    }
    return text;
}

std::string ReferenceGame::prompt_b(const ReferenceInstance& instance,
                                    const std::string& expression) const {
    std::string text = adapt_to_modality(kPromptB, instance.modality);
    replace_first(text, "TARGET_EXPRESSION", expression);
    for (int pos = 0; pos < 3; ++pos) {
        const auto& stimulus =
            instance.stimuli[static_cast<std::size_t>(instance.order_b[static_cast<std::size_t>(pos)])];
        replace_first(text, "<IMAGE_PATH>", stimulus_text(stimulus, instance.modality));
    }
    return text;
}

void ReferenceGame::play(EpisodeContext& ctx, const GameInstance& instance) const {
    const ReferenceInstance ref = ReferenceInstance::from_payload(instance.payload);

    std::vector<std::string> attachments_a;
    std::vector<std::string> attachments_b;
    if (ref.modality == Modality::Multimodal) {
        attachments_a = ref.stimuli;
        for (int pos = 0; pos < 3; ++pos) {
            attachments_b.push_back(
                ref.stimuli[static_cast<std::size_t>(ref.order_b[static_cast<std::size_t>(pos)])]);
        }
    }

    const std::string raw_a = ctx.prompt(Role::PlayerA, prompt_a(ref), attachments_a);
    auto expression = parsing::parse_tagged(raw_a, parsing::Tag::Expression);
    if (!expression.ok()) ctx.abort_bad_format(Role::PlayerA, raw_a);

    const std::string raw_b =
        ctx.prompt(Role::PlayerB, prompt_b(ref, parsing::normalize(raw_a)), attachments_b);
    auto answer = parsing::parse_tagged(raw_b, parsing::Tag::RefAnswer);
    if (!answer.ok()) ctx.abort_bad_format(Role::PlayerB, raw_b);
    if (!parsing::parse_reference_answer(answer.value().payload).ok()) {
        ctx.abort_bad_format(Role::PlayerB, raw_b);
    }
}

PlayResult ReferenceGame::score(const Episode& episode) const {
    const ReferenceInstance ref = ReferenceInstance::from_payload(episode.instance.payload);

    PlayResult out;
    out.metrics["success"] = 0.0;
    for (auto it = episode.events.rbegin(); it != episode.events.rend(); ++it) {
        if (it->sender != Participant::PlayerB) continue;
        auto answer = parsing::parse_tagged(it->content, parsing::Tag::RefAnswer);
        if (!answer.ok()) break;
        auto ordinal = parsing::parse_reference_answer(answer.value().payload);
        if (!ordinal.ok()) break;
        if (ordinal.value() == ref.target_position_b()) {
            out.metrics["success"] = 1.0;
        }
        break;
    }
    out.quality = out.metrics["success"] * 100.0;
    return out;
}

}  // namespace dgbench
