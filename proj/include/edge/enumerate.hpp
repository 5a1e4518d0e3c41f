#pragma once

// Exact counting and streaming enumeration of the canonical sequence space,
// exhaustive score sweeps (OpenMP kernel plus a serial reference kept for
// testing), and ground-truth distribution construction.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "edge/types.hpp"

namespace edge::enumerate {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

// |Omega| = N! / (M!)^K, exact.
BigInt count_sequences(int n_classes, int k_tasks);

struct CoverageFraction {
    double value = 0.0;     // may underflow to 0 for very large spaces
    std::string text;       // exact-rational rendering, e.g. "1.2728e-92"
};

// L / |Omega| as an arbitrary-precision rational rendered in scientific
// notation.
CoverageFraction coverage_fraction(std::uint64_t samples, int n_classes, int k_tasks);

// Random access into the lexicographically ordered canonical sequence space.
class SequenceSpace {
  public:
    SequenceSpace(int n_classes, int k_tasks, std::uint64_t cap = kDefaultCap);

    int n_classes() const { return n_; }
    int k_tasks() const { return k_; }
    int task_size() const { return m_; }
    std::uint64_t size() const { return size_; }

    // index-th sequence in lexicographic order of the canonical form.
    TaskSequence at(std::uint64_t index) const;

  private:
    int n_ = 0, k_ = 0, m_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> suffix_count_;       // completions below level
    std::vector<std::vector<std::uint64_t>> binom_; // C(a, b) table
};

struct ScoreSweep {
    TaskSequence min_sequence, max_sequence;
    double min_score = 0.0, max_score = 0.0;
    std::uint64_t min_index = 0, max_index = 0;
    std::vector<double> scores;  // per sequence, in enumeration order
};

// Exact global argmin/argmax of S(O) over the whole space; ties take the
// first index in enumeration order.
ScoreSweep extremes_by_score(const SimilarityMatrix& sim, int k_tasks,
                             std::uint64_t cap = kDefaultCap);
// Reference implementation, single-threaded; bit-identical results.
ScoreSweep extremes_by_score_serial(const SimilarityMatrix& sim, int k_tasks,
                                    std::uint64_t cap = kDefaultCap);

// Closed-form mean of S(O) over the whole space (adjacency-probability
// argument); equals the enumerated mean without enumerating.
double mean_score_exact(const SimilarityMatrix& sim, int k_tasks);

enum class DistributionSource { truth, rs, edge, surrogate };

struct EmpiricalDistribution {
    std::vector<double> samples;
    DistributionSource source = DistributionSource::truth;

    double min() const;
    double max() const;
    double mean() const;
    double population_variance() const;
};

// Requires exactly one record per sequence of the space; reports the first
// missing canonical sequence or any duplicate.
EmpiricalDistribution true_distribution(const AccuracyRecordSet& records,
                                        std::uint64_t cap = kDefaultCap);

}  // namespace edge::enumerate
