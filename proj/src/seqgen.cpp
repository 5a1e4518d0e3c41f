#include "edge/seqgen.hpp"

#include <algorithm>
#include <numeric>

#include "edge/cluster.hpp"
#include "edge/rng.hpp"

namespace edge::seqgen {

std::vector<int> GenerationConfig::default_granularities(int n_classes, int k_tasks) {
    std::vector<int> gs;
    for (int g = k_tasks; g <= std::min(3 * k_tasks, n_classes); ++g) gs.push_back(g);
    return gs;
}

std::vector<int> GenerationConfig::resolved(int n_classes, int k_tasks) const {
    if (granularities.empty()) return default_granularities(n_classes, k_tasks);
    for (int g : granularities)
        if (g < k_tasks || g > n_classes)
            throw ValidationError("granularity " + std::to_string(g) +
                                  " outside K..N = " + std::to_string(k_tasks) +
                                  ".." + std::to_string(n_classes));
    return granularities;
}

double similarity_score(const TaskSequence& seq, const SimilarityMatrix& sim) {
    const int k = seq.n_tasks();
    if (k < 2) throw ValidationError("similarity score undefined for K = 1");
    const int n = sim.n();
    seq.validate(n, k);
    double total = 0.0;
    for (int t = 0; t + 1 < k; ++t)
        for (int c : seq.tasks[static_cast<std::size_t>(t)])
            for (int c2 : seq.tasks[static_cast<std::size_t>(t) + 1])
                total += sim.at(c, c2);
    return total * k / (static_cast<double>(k - 1) * n);
}

SquareMatrix its_matrix(const TaskPartition& part, const SimilarityMatrix& sim) {
    const int k = part.n_tasks();
    part.validate(sim.n(), k);
    SquareMatrix its(k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            double sum = 0.0;
            for (int a : part.tasks[static_cast<std::size_t>(i)])
                for (int b : part.tasks[static_cast<std::size_t>(j)])
                    sum += sim.at(a, b);
            const double mean =
                sum / (static_cast<double>(part.tasks[static_cast<std::size_t>(i)].size()) *
                       static_cast<double>(part.tasks[static_cast<std::size_t>(j)].size()));
            its.at(i, j) = mean;
            its.at(j, i) = mean;
        }
    return its;
}

namespace {

bool better(double candidate, double best, GreedyMode mode) {
    return mode == GreedyMode::min ? candidate < best : candidate > best;
}

}  // namespace

std::vector<int> greedy_order_from(const SquareMatrix& its, GreedyMode mode, int start) {
    const int k = its.size();
    if (start < 0 || start >= k) throw ValidationError("greedy start out of range");
    std::vector<int> order{start};
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    used[static_cast<std::size_t>(start)] = true;
    while (static_cast<int>(order.size()) < k) {
        int pick = -1;
        double pick_val = 0.0;
        for (int c = 0; c < k; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            double val = 0.0;
            for (int t : order) val += its.at(t, c);
            if (pick < 0 || better(val, pick_val, mode)) {
                pick = c;
                pick_val = val;
            }
        }
        order.push_back(pick);
        used[static_cast<std::size_t>(pick)] = true;
    }
    return order;
}

std::vector<int> greedy_order(const SquareMatrix& its, GreedyMode mode) {
    const int k = its.size();
    if (k < 1) throw ValidationError("greedy order needs at least one task");
    int start = 0;
    double start_val = 0.0;
    for (int t = 0; t < k; ++t) {
        double row = 0.0;
        for (int j = 0; j < k; ++j)
            if (j != t) row += its.at(t, j);
        if (t == 0 || better(row, start_val, mode)) {
            start = t;
            start_val = row;
        }
    }
    return greedy_order_from(its, mode, start);
}

namespace {

GeneratedSequence generate_extreme(const SimilarityMatrix& sim, int k_tasks,
                                   const GenerationConfig& cfg, GreedyMode mode,
                                   Provenance prov) {
    sim.validate();
    const int n = sim.n();
    if (k_tasks < 2) throw ValidationError("sequence generation needs K >= 2");
    if (n % k_tasks != 0)
        throw ValidationError("N = " + std::to_string(n) +
                              " not divisible by K = " + std::to_string(k_tasks));
    const auto granularities = cfg.resolved(n, k_tasks);

    const SimilarityMatrix zeroed = sim.zeroed_diagonal();
    SquareMatrix dist(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            dist.at(i, j) = mode == GreedyMode::min ? 1.0 - zeroed.at(i, j)
                                                    : zeroed.at(i, j);
        }
    const cluster::Dendrogram tree = cluster::agglomerate(dist);

    GeneratedSequence best;
    bool have = false;
    for (int g : granularities) {
        const auto assignment = cluster::cut(tree, g);
        const auto part = cluster::balance(assignment, k_tasks);
        const auto its = its_matrix(part, zeroed);
        for (int start = 0; start < k_tasks; ++start) {
            const auto order = greedy_order_from(its, mode, start);
            auto seq = TaskSequence::from_partition(part, order, prov);
            const double score = similarity_score(seq, sim);
            if (!have || better(score, best.score, mode)) {
                best = {std::move(seq), score, g};
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

GeneratedSequence generate_hard(const SimilarityMatrix& sim, int k_tasks,
                                const GenerationConfig& cfg) {
    return generate_extreme(sim, k_tasks, cfg, GreedyMode::min, Provenance::hard);
}

GeneratedSequence generate_easy(const SimilarityMatrix& sim, int k_tasks,
                                const GenerationConfig& cfg) {
    return generate_extreme(sim, k_tasks, cfg, GreedyMode::max, Provenance::easy);
}

TaskSequence generate_median(int n_classes, int k_tasks, std::uint64_t seed) {
    if (k_tasks < 1 || n_classes < 1 || n_classes % k_tasks != 0)
        throw ValidationError("median draw needs K | N");
    const int m = n_classes / k_tasks;
    std::vector<int> classes(static_cast<std::size_t>(n_classes));
    std::iota(classes.begin(), classes.end(), 0);
    rng::Engine eng(seed);
    rng::shuffle(classes, eng);
    TaskSequence seq;
    seq.provenance = Provenance::median;
    seq.tasks.reserve(static_cast<std::size_t>(k_tasks));
    for (int t = 0; t < k_tasks; ++t)
        seq.tasks.emplace_back(classes.begin() + static_cast<std::ptrdiff_t>(t) * m,
                               classes.begin() + static_cast<std::ptrdiff_t>(t + 1) * m);
    seq.canonicalize();
    return seq;
}

}  // namespace edge::seqgen
