#include "edge/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace edge::cluster {

std::vector<std::vector<int>> ClusterAssignment::groups() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_clusters));
    for (std::size_t c = 0; c < cluster_of.size(); ++c)
        out[static_cast<std::size_t>(cluster_of[c])].push_back(static_cast<int>(c));
    return out;
}

Dendrogram agglomerate(const SquareMatrix& dissimilarity) {
    const int n = dissimilarity.size();
    if (n < 2) throw ValidationError("agglomerate needs at least 2 classes");
    if (!dissimilarity.symmetric(1e-9))
        throw ValidationError("dissimilarity table is asymmetric");
    for (int i = 0; i < n; ++i)
        if (dissimilarity.at(i, i) != 0.0)
            throw ValidationError("dissimilarity diagonal must be zero");

    // Active-cluster distance matrix, updated with the complete-linkage rule.
    std::vector<int> id(static_cast<std::size_t>(n));      // slot -> cluster id
    std::iota(id.begin(), id.end(), 0);
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    SquareMatrix d = dissimilarity;

    Dendrogram out;
    out.leaf_count = n;
    out.steps.reserve(static_cast<std::size_t>(n) - 1);

    for (int step = 0; step < n - 1; ++step) {
        int bi = -1, bj = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!active[static_cast<std::size_t>(j)]) continue;
                const double v = d.at(i, j);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                } else if (v == best && bi >= 0) {
                    const int lo = std::min(id[static_cast<std::size_t>(i)],
                                            id[static_cast<std::size_t>(j)]);
                    const int hi = std::max(id[static_cast<std::size_t>(i)],
                                            id[static_cast<std::size_t>(j)]);
                    const int blo = std::min(id[static_cast<std::size_t>(bi)],
                                             id[static_cast<std::size_t>(bj)]);
                    const int bhi = std::max(id[static_cast<std::size_t>(bi)],
                                             id[static_cast<std::size_t>(bj)]);
                    if (lo < blo || (lo == blo && hi < bhi)) {
                        bi = i;
                        bj = j;
                    }
                }
            }
        }
        const int left = std::min(id[static_cast<std::size_t>(bi)],
                                  id[static_cast<std::size_t>(bj)]);
        const int right = std::max(id[static_cast<std::size_t>(bi)],
                                   id[static_cast<std::size_t>(bj)]);
        out.steps.push_back({left, right, best});

        // Merged cluster lives in slot bi; complete linkage takes the max.
        for (int k = 0; k < n; ++k) {
            if (!active[static_cast<std::size_t>(k)] || k == bi || k == bj) continue;
            const double v = std::max(d.at(bi, k), d.at(bj, k));
            d.at(bi, k) = v;
            d.at(k, bi) = v;
        }
        active[static_cast<std::size_t>(bj)] = false;
        id[static_cast<std::size_t>(bi)] = n + step;
    }
    return out;
}

ClusterAssignment cut(const Dendrogram& d, int g) {
    const int n = d.leaf_count;
    if (g < 1 || g > n)
        throw ValidationError("cut: g = " + std::to_string(g) +
                              " outside 1.." + std::to_string(n));

    // Replay the first n-g merges with union-find over cluster ids.
    std::vector<int> parent(static_cast<std::size_t>(2 * n - 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int s = 0; s < n - g; ++s) {
        const auto& m = d.steps[static_cast<std::size_t>(s)];
        const int root = n + s;
        parent[static_cast<std::size_t>(find(m.left))] = root;
        parent[static_cast<std::size_t>(find(m.right))] = root;
    }

    ClusterAssignment a;
    a.cluster_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> label(static_cast<std::size_t>(2 * n - 1), -1);
    int next = 0;
    for (int c = 0; c < n; ++c) {
        const int root = find(c);
        if (label[static_cast<std::size_t>(root)] < 0)
            label[static_cast<std::size_t>(root)] = next++;
        a.cluster_of[static_cast<std::size_t>(c)] = label[static_cast<std::size_t>(root)];
    }
    a.n_clusters = next;
    return a;
}

TaskPartition balance(const ClusterAssignment& a, int k_tasks) {
    const int n = static_cast<int>(a.cluster_of.size());
    if (n == 0) throw ValidationError("balance: empty assignment");
    if (k_tasks < 1) throw ValidationError("balance: need at least one task");
    if (n % k_tasks != 0)
        throw ValidationError("balance: " + std::to_string(n) +
                              " classes not divisible into " +
                              std::to_string(k_tasks) + " equal tasks");
    const int m = n / k_tasks;

    auto clusters = a.groups();
    std::vector<int> order(clusters.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&clusters](int x, int y) {
        return clusters[static_cast<std::size_t>(x)].size() >
               clusters[static_cast<std::size_t>(y)].size();
    });

    TaskPartition part;
    part.tasks.assign(static_cast<std::size_t>(k_tasks), {});
    auto smallest = [&part, k_tasks]() {
        int best = 0;
        for (int t = 1; t < k_tasks; ++t)
            if (part.tasks[static_cast<std::size_t>(t)].size() <
                part.tasks[static_cast<std::size_t>(best)].size())
                best = t;
        return best;
    };

    for (int c : order) {
        auto& task = part.tasks[static_cast<std::size_t>(smallest())];
        const auto& cl = clusters[static_cast<std::size_t>(c)];
        task.insert(task.end(), cl.begin(), cl.end());
    }

    // Redistribution: oversized tasks donate their lowest class indices,
    // one at a time, to the currently smallest task.
    for (;;) {
        int src = -1;
        for (int t = 0; t < k_tasks; ++t) {
            if (static_cast<int>(part.tasks[static_cast<std::size_t>(t)].size()) <= m)
                continue;
            if (src < 0 || part.tasks[static_cast<std::size_t>(t)].size() >
                               part.tasks[static_cast<std::size_t>(src)].size())
                src = t;
        }
        if (src < 0) break;
        auto& task = part.tasks[static_cast<std::size_t>(src)];
        const auto it = std::min_element(task.begin(), task.end());
        const int donated = *it;
        task.erase(it);
        part.tasks[static_cast<std::size_t>(smallest())].push_back(donated);
    }

    part.canonicalize();
    part.validate(n, k_tasks);
    return part;
}

}  // namespace edge::cluster
