#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <unistd.h>

#include "dgbench/core/episode_io.hpp"
#include "dgbench/games/matchit.hpp"
#include "dgbench/games/reference.hpp"
#include "dgbench/gen/instances.hpp"
#include "dgbench/gen/photo_pairs.hpp"

using namespace dgbench;

namespace {

int total(const std::vector<ExperimentInstances>& suite) {
    int n = 0;
    for (const auto& experiment : suite) n += static_cast<int>(experiment.instances.size());
    return n;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

TEST_CASE("published suite counts regenerate exactly") {
    CHECK(total(generate_reference_suite(1)) == 390);
    CHECK(generate_reference_suite(1).size() == 13);
    CHECK(total(generate_matchit_ascii_suite(1)) == 40);
    CHECK(total(generate_matchit_images_suite(1)) == 60);
    CHECK(total(generate_mapworld_suite(MapVariant::ExploreExhaustively, 1)) == 50);
    CHECK(total(generate_mapworld_suite(MapVariant::ExploreWithGraph, 1)) == 30);
    CHECK(total(generate_mapworld_suite(MapVariant::GoToTarget, 1)) == 30);
}

TEST_CASE("generation is deterministic: same seed, byte-identical instances") {
    for (const std::string game : known_game_ids()) {
        auto first = generate_suite(game, 42);
        auto second = generate_suite(game, 42);
        REQUIRE(first.size() == second.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            REQUIRE(first[i].instances.size() == second[i].instances.size());
            for (std::size_t k = 0; k < first[i].instances.size(); ++k) {
                CHECK(instance_to_json(first[i].instances[k]).dump() ==
                      instance_to_json(second[i].instances[k]).dump());
            }
        }
    }
    CHECK_THROWS_AS(generate_suite("tetris", 1), ConfigError);
}

TEST_CASE("reference instances: order_b is a permutation, stimuli distinct, modality split") {
    auto suite = generate_reference_suite(7);
    int text_experiments = 0;
    int image_experiments = 0;
    for (const auto& experiment : suite) {
        bool text = experiment.instances.front().payload.at("modality") == "text";
        (text ? text_experiments : image_experiments) += 1;
        for (const auto& instance : experiment.instances) {
            const auto ref = ReferenceInstance::from_payload(instance.payload);
            std::set<int> order(ref.order_b.begin(), ref.order_b.end());
            CHECK(order == std::set<int>{0, 1, 2});
            CHECK(ref.target_index_a == 0);
            std::set<std::string> distinct(ref.stimuli.begin(), ref.stimuli.end());
            CHECK(distinct.size() == 3);
            if (ref.modality == Modality::Text) {
                for (const auto& stimulus : ref.stimuli) {
                    CHECK(parse_grid(stimulus).has_value());
                }
            } else {
                for (const auto& stimulus : ref.stimuli) {
                    CHECK(stimulus.find("stimuli/") == 0);
                }
            }
        }
    }
    CHECK(text_experiments == 6);
    CHECK(image_experiments == 7);  // six grid-image experiments plus pentomino
}

TEST_CASE("matchit ascii instances honor difficulty semantics") {
    for (const auto& experiment : generate_matchit_ascii_suite(3)) {
        CHECK(experiment.instances.size() == 10);
        for (const auto& instance : experiment.instances) {
            const auto match = MatchItInstance::from_payload(instance.payload);
            const bool identical = match.stimulus_a == match.stimulus_b;
            CHECK(match.same == identical);
            CHECK(match.same == (experiment.experiment == "same"));

            auto a = parse_grid(match.stimulus_a);
            auto b = parse_grid(match.stimulus_b);
            REQUIRE(a.has_value());
            REQUIRE(b.has_value());
            if (experiment.experiment == "similar_edit2") {
                CHECK(hamming_distance(*a, *b) == 2);
            }
            if (experiment.experiment == "similar_transform") {
                const bool related =
                    *b == transform_grid(*a, GridTransform::MirrorH) ||
                    *b == transform_grid(*a, GridTransform::MirrorV) ||
                    *b == transform_grid(*a, GridTransform::Rotate90);
                CHECK(related);
                CHECK(*a != *b);
            }
        }
    }
}

TEST_CASE("matchit image instances are opaque references with byte-identity ground truth") {
    for (const auto& experiment : generate_matchit_images_suite(3)) {
        for (const auto& instance : experiment.instances) {
            const auto match = MatchItInstance::from_payload(instance.payload);
            CHECK(match.same == (match.stimulus_a == match.stimulus_b));
            CHECK((match.same || experiment.experiment.find("same") == std::string::npos));
        }
    }
}

TEST_CASE("map suites: cycle experiments contain a cycle, others are trees (oracle-checked)") {
    for (const auto& experiment : generate_mapworld_suite(MapVariant::ExploreExhaustively, 5)) {
        const bool expect_cycle = experiment.experiment.find("cycle") != std::string::npos;
        for (const auto& instance : experiment.instances) {
            MapGraph map = MapGraph::from_json(instance.payload);
            CHECK_FALSE(validate_map(map).has_value());
            UnionFind uf(static_cast<int>(map.nodes.size()));
            bool cycle = false;
            for (const auto& [a, b] : map.edges) {
                if (!uf.merge(a, b)) cycle = true;
            }
            CHECK(cycle == expect_cycle);
            if (!expect_cycle) CHECK(map.edges.size() == map.nodes.size() - 1);
        }
    }
}

TEST_CASE("g2x instances: BFS distance lies in the declared bucket, target category unique") {
    for (const auto& experiment : generate_mapworld_suite(MapVariant::GoToTarget, 5)) {
        for (const auto& instance : experiment.instances) {
            MapGraph map = MapGraph::from_json(instance.payload);
            REQUIRE(map.target.has_value());
            const int distance =
                bfs_distances(map, map.start)[static_cast<std::size_t>(*map.target)];
            if (experiment.experiment == "on") CHECK(distance == 0);
            if (experiment.experiment == "close") CHECK((distance == 1 || distance == 2));
            if (experiment.experiment == "far") CHECK((distance == 3 || distance == 4));
            CHECK(instance.payload.at("distance").get<int>() == distance);

            int with_target_category = 0;
            for (const auto& node : map.nodes) {
                if (node.category == map.node(*map.target).category) ++with_target_category;
            }
            CHECK(with_target_category == 1);
        }
    }
}

TEST_CASE("instance files round-trip through save and load") {
    const auto path = std::filesystem::temp_directory_path() /
                      ("dgbench_instances_" + std::to_string(::getpid()) + ".json");
    auto suite = generate_matchit_ascii_suite(9, 2);
    save_instance_file(path, suite.front().instances);
    auto loaded = load_instance_file(path);
    REQUIRE(loaded.size() == suite.front().instances.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(instance_to_json(loaded[i]).dump() ==
              instance_to_json(suite.front().instances[i]).dump());
    }
    std::filesystem::remove(path);
}

TEST_CASE("photo pair candidates follow the Jaccard and scorer thresholds") {
    const auto scorer = [](const std::string& a, const std::string& b) {
        // Pretend embeddings: images with the same first letter look alike.
        return a.front() == b.front() ? 1.0 : 0.0;
    };
    std::vector<ImageAnnotations> annotations = {
        {"a1.jpg", {"dog", "grass", "ball"}},
        {"a2.jpg", {"dog", "grass", "ball", "tree"}},
        {"b1.jpg", {"boat", "river", "city"}},
        {"no_annotations.jpg", {}},
    };
    auto candidates = pair_matchit_photos(annotations, scorer);

    // Disjoint label sets: Jaccard 0 -> different-pair candidate.
    bool found_different = false;
    for (const auto& pair : candidates.different_pairs) {
        if (pair.image_a == "a1.jpg" && pair.image_b == "b1.jpg") {
            found_different = true;
            CHECK(pair.jaccard == doctest::Approx(0.0));
        }
    }
    CHECK(found_different);

    // High overlap + scorer 1.0 -> similar candidate (jaccard 3/4 >= 0.22).
    REQUIRE(candidates.similar_pairs.size() == 1);
    CHECK(candidates.similar_pairs.front().image_a == "a1.jpg");
    CHECK(candidates.similar_pairs.front().image_b == "a2.jpg");

    CHECK(candidates.skipped == std::vector<std::string>{"no_annotations.jpg"});

    SUBCASE("identical label sets with scorer 1.0 are similar candidates") {
        auto out = pair_matchit_photos({{"x1.jpg", {"cat"}}, {"x2.jpg", {"cat"}}}, scorer);
        REQUIRE(out.similar_pairs.size() == 1);
        CHECK(out.similar_pairs.front().jaccard == doctest::Approx(1.0));
    }
    SUBCASE("a mid-range Jaccard is excluded from both lists") {
        // Jaccard 1/10 = 0.10: above 0.05, below 0.22.
        auto out = pair_matchit_photos(
            {{"m1.jpg", {"a", "b", "c", "d", "e", "f"}}, {"m2.jpg", {"a", "x", "y", "z", "w"}}},
            scorer);
        CHECK(out.different_pairs.empty());
        CHECK(out.similar_pairs.empty());
    }
    SUBCASE("the scorer can veto a similar pair") {
        auto out = pair_matchit_photos({{"a.jpg", {"cat"}}, {"b.jpg", {"cat"}}}, scorer);
        CHECK(out.similar_pairs.empty());  // different first letters -> score 0
    }
}

TEST_CASE("jaccard index basics") {
    CHECK(jaccard_index({"a"}, {"b"}) == doctest::Approx(0.0));
    CHECK(jaccard_index({"a", "b"}, {"a", "b"}) == doctest::Approx(1.0));
    CHECK(jaccard_index({"a", "b", "c"}, {"a"}) == doctest::Approx(1.0 / 3));
}
