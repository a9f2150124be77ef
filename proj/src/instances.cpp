#include "dgbench/gen/instances.hpp"

#include <algorithm>
#include <cstdio>

#include "dgbench/games/matchit.hpp"
#include "dgbench/games/reference.hpp"

namespace dgbench {

namespace {

std::string instance_id(const std::string& experiment, int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "_%02d", index);
    return experiment + buf;
}

GameInstance make_instance(const std::string& game, const std::string& experiment, int index,
                           std::uint64_t suite_seed, Json payload) {
    GameInstance instance;
    instance.game = game;
    instance.experiment = experiment;
    instance.id = instance_id(experiment, index);
    instance.seed = derive_seed(suite_seed, instance.ref());
    instance.payload = std::move(payload);
    return instance;
}

Rng instance_rng(const GameInstance& instance) { return Rng(instance.seed); }

// Distinct same-kind grid; falls back to flipping two cells when the family
// is too small to offer another member (the diagonal family has only two).
Grid distinct_grid(GridKind kind, const std::vector<Grid>& taken, Rng& rng) {
    auto is_taken = [&taken](const Grid& g) {
        return std::find(taken.begin(), taken.end(), g) != taken.end();
    };
    for (int attempt = 0; attempt < 16; ++attempt) {
        Grid candidate = gen_grid(kind, rng);
        if (!is_taken(candidate)) return candidate;
    }
    for (;;) {
        Grid candidate = edit_distance_two(taken.front(), rng);
        if (!is_taken(candidate)) return candidate;
    }
}

std::array<int, 3> random_permutation3(Rng& rng) {
    std::vector<int> order{0, 1, 2};
    shuffle(rng, order);
    return {order[0], order[1], order[2]};
}

ExperimentInstances reference_grid_experiment(GridKind kind, Modality modality,
                                              std::uint64_t seed, int count) {
    std::string experiment = std::string(to_string(kind)) +
                             (modality == Modality::Text ? "_text" : "_image");
    ExperimentInstances out{"reference", experiment, {}};
    for (int i = 0; i < count; ++i) {
        GameInstance instance = make_instance("reference", experiment, i, seed, Json::object());
        Rng rng = instance_rng(instance);

        std::vector<Grid> grids{gen_grid(kind, rng)};
        grids.push_back(distinct_grid(kind, grids, rng));
        grids.push_back(distinct_grid(kind, grids, rng));

        ReferenceInstance ref;
        ref.modality = modality;
        ref.order_b = random_permutation3(rng);
        Json sources = Json::array();
        if (modality == Modality::Text) {
            for (const Grid& g : grids) ref.stimuli.push_back(render(g));
        } else {
            for (int j = 0; j < 3; ++j) {
                ref.stimuli.push_back("stimuli/grids/" + instance.id + "_" + std::to_string(j) +
                                      ".png");
                sources.push_back(render(grids[static_cast<std::size_t>(j)]));
            }
        }
        Json payload = ref.to_payload();
        payload["generator_version"] = kGeneratorVersion;
        if (!sources.empty()) payload["grid_sources"] = sources;  // for later rendering
        instance.payload = std::move(payload);
        out.instances.push_back(std::move(instance));
    }
    return out;
}

ExperimentInstances reference_pentomino_experiment(std::uint64_t seed, int count) {
    ExperimentInstances out{"reference", "pentomino", {}};
    for (int i = 0; i < count; ++i) {
        GameInstance instance = make_instance("reference", "pentomino", i, seed, Json::object());
        Rng rng = instance_rng(instance);
        ReferenceInstance ref;
        ref.modality = Modality::Multimodal;
        ref.order_b = random_permutation3(rng);
        for (int j = 0; j < 3; ++j) {
            ref.stimuli.push_back("stimuli/pentomino/" + instance.id + "_" + std::to_string(j) +
                                  ".png");
        }
        Json payload = ref.to_payload();
        payload["generator_version"] = kGeneratorVersion;
        instance.payload = payload;
        out.instances.push_back(std::move(instance));
    }
    return out;
}

const std::vector<GridKind>& matchit_base_kinds() {
    static const std::vector<GridKind> kinds{GridKind::Diagonal, GridKind::Letter,
                                             GridKind::Shape};
    return kinds;
}

Json matchit_payload(const MatchItInstance& match) {
    Json payload = match.to_payload();
    payload["generator_version"] = kGeneratorVersion;
    return payload;
}

}  // namespace

std::vector<ExperimentInstances> generate_reference_suite(std::uint64_t seed, int per_experiment) {
    std::vector<ExperimentInstances> suite;
    const std::vector<GridKind> kinds{GridKind::Row,    GridKind::Column, GridKind::Diagonal,
                                      GridKind::Letter, GridKind::Shape,  GridKind::Random};
    for (GridKind kind : kinds) {
        suite.push_back(reference_grid_experiment(kind, Modality::Text, seed, per_experiment));
    }
    for (GridKind kind : kinds) {
        suite.push_back(
            reference_grid_experiment(kind, Modality::Multimodal, seed, per_experiment));
    }
    suite.push_back(reference_pentomino_experiment(seed, per_experiment));
    return suite;
}

std::vector<ExperimentInstances> generate_matchit_ascii_suite(std::uint64_t seed,
                                                              int per_difficulty) {
    const std::string game = "matchit_ascii";
    std::vector<ExperimentInstances> suite;
    for (const std::string difficulty :
         {"same", "similar_transform", "similar_edit2", "different"}) {
        ExperimentInstances exp{game, difficulty, {}};
        for (int i = 0; i < per_difficulty; ++i) {
            GameInstance instance = make_instance(game, difficulty, i, seed, Json::object());
            Rng rng = instance_rng(instance);
            const GridKind kind =
                matchit_base_kinds()[static_cast<std::size_t>(i) % matchit_base_kinds().size()];

            MatchItInstance match;
            match.modality = Modality::Text;
            match.difficulty = difficulty;
            Grid base = gen_grid(kind, rng);
            Grid other = base;
            if (difficulty == "similar_transform") {
                const GridTransform transforms[] = {GridTransform::MirrorH, GridTransform::MirrorV,
                                                    GridTransform::Rotate90};
                for (;;) {
                    other = transform_grid(base, transforms[uniform_int(rng, 0, 2)]);
                    if (other != base) break;
                    base = gen_grid(kind, rng);  // base was symmetric under the transform
                }
            } else if (difficulty == "similar_edit2") {
                other = edit_distance_two(base, rng);
            } else if (difficulty == "different") {
                do {
                    const GridKind other_kind = matchit_base_kinds()[static_cast<std::size_t>(
                        uniform_int(rng, 0, static_cast<int>(matchit_base_kinds().size()) - 1))];
                    other = gen_grid(other_kind, rng);
                } while (other == base);
            }
            match.stimulus_a = render(base);
            match.stimulus_b = render(other);
            match.same = difficulty == "same";
            instance.payload = matchit_payload(match);
            exp.instances.push_back(std::move(instance));
        }
        suite.push_back(std::move(exp));
    }
    return suite;
}

std::vector<ExperimentInstances> generate_matchit_images_suite(std::uint64_t seed,
                                                               int per_difficulty) {
    const std::string game = "matchit_images";
    std::vector<ExperimentInstances> suite;
    for (const std::string source : {"photos", "pentomino"}) {
        for (const std::string difficulty : {"same", "similar", "different"}) {
            const std::string experiment = source + "_" + difficulty;
            ExperimentInstances exp{game, experiment, {}};
            for (int i = 0; i < per_difficulty; ++i) {
                GameInstance instance =
                    make_instance(game, experiment, i, seed, Json::object());
                MatchItInstance match;
                match.modality = Modality::Multimodal;
                match.difficulty = difficulty;
                const std::string stem = "stimuli/" + source + "/" + instance.id;
                match.stimulus_a = stem + "_a.jpg";
                match.stimulus_b = difficulty == "same" ? match.stimulus_a : stem + "_b.jpg";
                match.same = difficulty == "same";
                instance.payload = matchit_payload(match);
                exp.instances.push_back(std::move(instance));
            }
            suite.push_back(std::move(exp));
        }
    }
    return suite;
}

std::vector<ExperimentInstances> generate_mapworld_suite(MapVariant variant, std::uint64_t seed,
                                                         int per_experiment) {
    const std::string game = map_game_id(variant);
    struct MapExperiment {
        std::string name;
        MapGenParams params;
        std::optional<DistanceBucket> bucket;
    };
    std::vector<MapExperiment> experiments;
    if (variant == MapVariant::GoToTarget) {
        // Distance experiments run on large acyclic maps so the far bucket is
        // always reachable.
        for (auto [name, bucket] :
             std::initializer_list<std::pair<const char*, DistanceBucket>>{
                 {"on", DistanceBucket::On},
                 {"close", DistanceBucket::Close},
                 {"far", DistanceBucket::Far}}) {
            experiments.push_back({name, MapGenParams{8, false, std::nullopt, true}, bucket});
        }
    } else {
        experiments.push_back({"small", MapGenParams{4, false, std::nullopt, true}, {}});
        experiments.push_back({"medium", MapGenParams{6, false, std::nullopt, true}, {}});
        experiments.push_back({"large", MapGenParams{8, false, std::nullopt, true}, {}});
        if (variant == MapVariant::ExploreExhaustively) {
            experiments.push_back(
                {"medium_cycle", MapGenParams{6, true, std::nullopt, true}, {}});
            experiments.push_back({"large_cycle", MapGenParams{8, true, std::nullopt, true}, {}});
        }
    }

    std::vector<ExperimentInstances> suite;
    for (const auto& experiment : experiments) {
        ExperimentInstances exp{game, experiment.name, {}};
        for (int i = 0; i < per_experiment; ++i) {
            GameInstance instance =
                make_instance(game, experiment.name, i, seed, Json::object());
            Rng rng = instance_rng(instance);
            for (;;) {
                MapGraph map = gen_map(experiment.params, rng);
                if (experiment.bucket) {
                    try {
                        auto [start, target] = select_g2x_endpoints(map, *experiment.bucket, rng);
                        map.start = start;
                        map.target = target;
                    } catch (const GenerationError&) {
                        continue;  // no pair in this bucket, regenerate the map
                    }
                }
                Json payload = map.to_json();
                payload["generator_version"] = kGeneratorVersion;
                if (experiment.bucket) {
                    payload["bucket"] = to_string(*experiment.bucket);
                    payload["distance"] =
                        bfs_distances(map, map.start)[static_cast<std::size_t>(*map.target)];
                }
                instance.payload = std::move(payload);
                break;
            }
            exp.instances.push_back(std::move(instance));
        }
        suite.push_back(std::move(exp));
    }
    return suite;
}

std::vector<ExperimentInstances> generate_suite(const std::string& game, std::uint64_t seed) {
    if (game == "reference") return generate_reference_suite(seed);
    if (game == "matchit_ascii") return generate_matchit_ascii_suite(seed);
    if (game == "matchit_images") return generate_matchit_images_suite(seed);
    if (game == "mapworld_ee") {
        return generate_mapworld_suite(MapVariant::ExploreExhaustively, seed);
    }
    if (game == "mapworld_eegr") return generate_mapworld_suite(MapVariant::ExploreWithGraph, seed);
    if (game == "mapworld_g2x") return generate_mapworld_suite(MapVariant::GoToTarget, seed);
    throw ConfigError("unknown game id '" + game + "'");
}

std::vector<std::string> known_game_ids() {
    return {"reference",   "matchit_ascii", "matchit_images",
            "mapworld_ee", "mapworld_eegr", "mapworld_g2x"};
}

}  // namespace dgbench
