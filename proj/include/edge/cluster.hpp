#pragma once

// Hierarchical agglomerative clustering (complete linkage) and balancing of
// clusters into K equal-size tasks.

#include <vector>

#include "edge/types.hpp"

namespace edge::cluster {

struct MergeStep {
    int left = 0;    // cluster ids; leaves are 0..N-1, merges N..2N-2
    int right = 0;
    double height = 0.0;
};

struct Dendrogram {
    int leaf_count = 0;
    std::vector<MergeStep> steps;  // exactly leaf_count-1 entries
};

struct ClusterAssignment {
    int n_clusters = 0;
    std::vector<int> cluster_of;  // class index -> cluster id in 0..n_clusters-1

    std::vector<std::vector<int>> groups() const;
};

// Complete linkage over a symmetric dissimilarity table with zero diagonal.
// Equal-distance pairs merge in (min-id, max-id) lexicographic order.
Dendrogram agglomerate(const SquareMatrix& dissimilarity);

// Undoes the last g-1 merges; cluster ids are ordered by smallest leaf index.
ClusterAssignment cut(const Dendrogram& d, int g);

// Packs clusters into k equal tasks of size N/k. Clusters are placed whole
// (size descending, ties by cluster id) onto the currently smallest task;
// oversized tasks then donate classes in ascending index order to the
// currently smallest task until all tasks hold exactly N/k classes.
TaskPartition balance(const ClusterAssignment& a, int k_tasks);

}  // namespace edge::cluster
