#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace dgbench {

// Candidate selection for photo-based MatchIt pairs from per-image
// object/attribute annotations. Different pairs share next to no semantic
// content (low Jaccard); similar pairs share labels and look alike under an
// injected embedding-similarity scorer. The output is a candidate list for
// manual curation, not a final instance set.

struct ImageAnnotations {
    std::string image;
    std::set<std::string> labels;  // object labels plus their attributes
};

struct PhotoPair {
    std::string image_a;
    std::string image_b;
    double jaccard = 0.0;
    double similarity = 0.0;  // scorer output; only computed for similar pairs
};

struct PhotoPairThresholds {
    double different_max_jaccard = 0.05;
    double similar_min_jaccard = 0.22;
    double similar_min_score = 0.8;
};

struct PhotoPairCandidates {
    std::vector<PhotoPair> different_pairs;
    std::vector<PhotoPair> similar_pairs;
    std::vector<std::string> skipped;  // images without annotations
};

using SimilarityScorer = std::function<double(const std::string&, const std::string&)>;

double jaccard_index(const std::set<std::string>& a, const std::set<std::string>& b);

// The scorer is consulted only for pairs that already clear the similar
// Jaccard threshold.
PhotoPairCandidates pair_matchit_photos(const std::vector<ImageAnnotations>& annotations,
                                        const SimilarityScorer& scorer,
                                        const PhotoPairThresholds& thresholds = {});

}  // namespace dgbench
