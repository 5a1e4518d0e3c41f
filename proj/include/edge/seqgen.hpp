#pragma once

// Inter-task similarity scoring and hard/easy/median task-sequence generation.

#include <cstdint>
#include <vector>

#include "edge/types.hpp"

namespace edge::seqgen {

enum class GreedyMode { min, max };

struct GenerationConfig {
    // Clustering granularities to try; empty means the default K..min(3K, N).
    std::vector<int> granularities;
    std::uint64_t seed = 0;  // used by the median draw only

    static std::vector<int> default_granularities(int n_classes, int k_tasks);
    std::vector<int> resolved(int n_classes, int k_tasks) const;
};

// S(O) = K/((K-1)N) * sum over consecutive task pairs of all cross-pair
// similarities. Only cross-task pairs contribute.
double similarity_score(const TaskSequence& seq, const SimilarityMatrix& sim);

// K x K matrix of mean cross-task class similarities (diagonal left zero).
SquareMatrix its_matrix(const TaskPartition& part, const SimilarityMatrix& sim);

// Greedy ordering: first task extremizes its ITS row sum; each next task
// extremizes the summed ITS to all tasks already placed. Ties take the
// lowest task id.
std::vector<int> greedy_order(const SquareMatrix& its, GreedyMode mode);

// Same selection rule but with a fixed first task.
std::vector<int> greedy_order_from(const SquareMatrix& its, GreedyMode mode, int start);

struct GeneratedSequence {
    TaskSequence sequence;
    double score = 0.0;
    int granularity = 0;  // the granularity that won
};

// Algorithm: for each granularity, cluster on 1 - similarity (complete
// linkage), balance into K tasks, order greedily on the ITS matrix (all K
// starting tasks are tried) and keep the candidate with minimum S(O).
GeneratedSequence generate_hard(const SimilarityMatrix& sim, int k_tasks,
                                const GenerationConfig& cfg = {});

// Mirror image: clustering distance is the similarity itself, so similar
// classes land in different tasks; selection maximizes S(O).
GeneratedSequence generate_easy(const SimilarityMatrix& sim, int k_tasks,
                                const GenerationConfig& cfg = {});

// Uniform draw over the canonical sequence space, deterministic in the seed.
TaskSequence generate_median(int n_classes, int k_tasks, std::uint64_t seed);

}  // namespace edge::seqgen
