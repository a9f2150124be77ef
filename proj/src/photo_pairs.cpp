#include "dgbench/gen/photo_pairs.hpp"

#include <algorithm>

namespace dgbench {

double jaccard_index(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t intersection = 0;
    for (const auto& label : a) intersection += b.count(label);
    const std::size_t union_size = a.size() + b.size() - intersection;
    return static_cast<double>(intersection) / static_cast<double>(union_size);
}

PhotoPairCandidates pair_matchit_photos(const std::vector<ImageAnnotations>& annotations,
                                        const SimilarityScorer& scorer,
                                        const PhotoPairThresholds& thresholds) {
    PhotoPairCandidates out;
    std::vector<const ImageAnnotations*> usable;
    for (const auto& entry : annotations) {
        if (entry.labels.empty()) {
            out.skipped.push_back(entry.image);
        } else {
            usable.push_back(&entry);
        }
    }
    for (std::size_t i = 0; i < usable.size(); ++i) {
        for (std::size_t j = i + 1; j < usable.size(); ++j) {
            PhotoPair pair;
            pair.image_a = usable[i]->image;
            pair.image_b = usable[j]->image;
            pair.jaccard = jaccard_index(usable[i]->labels, usable[j]->labels);
            if (pair.jaccard <= thresholds.different_max_jaccard) {
                out.different_pairs.push_back(pair);
            } else if (pair.jaccard >= thresholds.similar_min_jaccard && scorer) {
                pair.similarity = scorer(pair.image_a, pair.image_b);
                if (pair.similarity >= thresholds.similar_min_score) {
                    out.similar_pairs.push_back(pair);
                }
            }
        }
    }
    // Lowest-scoring pairs first for the different list, as they are the
    // clearest candidates.
    std::sort(out.different_pairs.begin(), out.different_pairs.end(),
              [](const PhotoPair& a, const PhotoPair& b) { return a.jaccard < b.jaccard; });
    std::sort(out.similar_pairs.begin(), out.similar_pairs.end(),
              [](const PhotoPair& a, const PhotoPair& b) { return a.similarity > b.similarity; });
    return out;
}

}  // namespace dgbench
