#include "edge/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "edge/seqgen.hpp"

namespace edge::enumerate {

namespace {

void check_shape(int n, int k) {
    if (n < 1 || k < 1)
        throw ValidationError("need positive class and task counts");
    if (n % k != 0)
        throw ValidationError("N = " + std::to_string(n) +
                              " not divisible by K = " + std::to_string(k));
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

BigInt count_sequences(int n_classes, int k_tasks) {
    check_shape(n_classes, k_tasks);
    const int m = n_classes / k_tasks;
    BigInt denom = 1;
    const BigInt mf = factorial(m);
    for (int t = 0; t < k_tasks; ++t) denom *= mf;
    return factorial(n_classes) / denom;
}

CoverageFraction coverage_fraction(std::uint64_t samples, int n_classes, int k_tasks) {
    const BigInt omega = count_sequences(n_classes, k_tasks);
    CoverageFraction out;
    if (samples == 0) {
        out.value = 0.0;
        out.text = "0";
        return out;
    }
    // mantissa/exponent of samples/omega via scaled integer division
    const BigInt num = BigInt(samples);
    const std::string num_s = num.str();
    const std::string den_s = omega.str();
    const int shift = static_cast<int>(den_s.size()) - static_cast<int>(num_s.size()) + 17;
    BigInt scaled = num;
    for (int i = 0; i < shift; ++i) scaled *= 10;
    const BigInt q = scaled / omega;  // ~17-18 significant digits
    const std::string q_s = q.str();
    // value = q * 10^-shift; exponent of the leading digit:
    const int exp10 = static_cast<int>(q_s.size()) - 1 - shift;
    std::ostringstream text;
    text << q_s[0];
    if (q_s.size() > 1) text << '.' << q_s.substr(1, 4);
    text << 'e' << exp10;
    out.text = text.str();
    out.value = std::stod(out.text);
    return out;
}

SequenceSpace::SequenceSpace(int n_classes, int k_tasks, std::uint64_t cap)
    : n_(n_classes), k_(k_tasks) {
    check_shape(n_classes, k_tasks);
    m_ = n_ / k_;
    const BigInt total = count_sequences(n_, k_);
    if (total > BigInt(cap))
        throw CapExceededError(
            "sequence space of size " + total.str() + " exceeds cap " +
                std::to_string(cap),
            total.str());
    size_ = total.convert_to<std::uint64_t>();

    binom_.assign(static_cast<std::size_t>(n_) + 1,
                  std::vector<std::uint64_t>(static_cast<std::size_t>(n_) + 1, 0));
    for (int a = 0; a <= n_; ++a) {
        binom_[static_cast<std::size_t>(a)][0] = 1;
        for (int b = 1; b <= a; ++b) {
            const auto& prev = binom_[static_cast<std::size_t>(a) - 1];
            binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                prev[static_cast<std::size_t>(b) - 1] +
                (b <= a - 1 ? prev[static_cast<std::size_t>(b)] : 0);
        }
    }
    // suffix_count_[t] = number of ways to fill tasks t..K-1
    suffix_count_.assign(static_cast<std::size_t>(k_) + 1, 1);
    for (int t = k_ - 1; t >= 0; --t) {
        const int remaining = n_ - t * m_;
        suffix_count_[static_cast<std::size_t>(t)] =
            suffix_count_[static_cast<std::size_t>(t) + 1] *
            binom_[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(m_)];
    }
}

TaskSequence SequenceSpace::at(std::uint64_t index) const {
    if (index >= size_)
        throw ValidationError("sequence index " + std::to_string(index) +
                              " out of range");
    std::vector<int> remaining(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) remaining[static_cast<std::size_t>(i)] = i;

    TaskSequence seq;
    seq.provenance = Provenance::enumerated;
    seq.tasks.reserve(static_cast<std::size_t>(k_));
    for (int t = 0; t < k_; ++t) {
        const std::uint64_t per_choice = suffix_count_[static_cast<std::size_t>(t) + 1];
        std::uint64_t rank = index / per_choice;  // which M-combination
        index %= per_choice;

        // Unrank the combination in lexicographic order over `remaining`.
        TaskList task;
        task.reserve(static_cast<std::size_t>(m_));
        int avail = static_cast<int>(remaining.size());
        int cursor = 0;
        for (int chosen = 0; chosen < m_; ++chosen) {
            for (;;) {
                const int after = avail - cursor - 1;
                const std::uint64_t with_this =
                    binom_[static_cast<std::size_t>(after)]
                          [static_cast<std::size_t>(m_ - chosen - 1)];
                if (rank < with_this) break;
                rank -= with_this;
                ++cursor;
            }
            task.push_back(remaining[static_cast<std::size_t>(cursor)]);
            ++cursor;
        }
        for (int c : task)
            remaining.erase(std::find(remaining.begin(), remaining.end(), c));
        seq.tasks.push_back(std::move(task));
    }
    return seq;
}

namespace {

// Raw-pointer score kernel shared by the sweeps; identical arithmetic order
// in serial and parallel paths.
double score_raw(const TaskSequence& seq, const double* sim, int n, int k) {
    double total = 0.0;
    for (int t = 0; t + 1 < k; ++t)
        for (int a : seq.tasks[static_cast<std::size_t>(t)])
            for (int b : seq.tasks[static_cast<std::size_t>(t) + 1])
                total += sim[static_cast<std::size_t>(a) * n + b];
    return total * k / (static_cast<double>(k - 1) * n);
}

ScoreSweep finish_sweep(const SequenceSpace& space, std::vector<double> scores) {
    ScoreSweep out;
    out.scores = std::move(scores);
    out.min_index = 0;
    out.max_index = 0;
    for (std::uint64_t i = 1; i < out.scores.size(); ++i) {
        if (out.scores[i] < out.scores[out.min_index]) out.min_index = i;
        if (out.scores[i] > out.scores[out.max_index]) out.max_index = i;
    }
    out.min_score = out.scores[out.min_index];
    out.max_score = out.scores[out.max_index];
    out.min_sequence = space.at(out.min_index);
    out.max_sequence = space.at(out.max_index);
    return out;
}

}  // namespace

ScoreSweep extremes_by_score(const SimilarityMatrix& sim, int k_tasks,
                             std::uint64_t cap) {
    sim.validate();
    if (k_tasks < 2) throw ValidationError("score sweep needs K >= 2");
    const SequenceSpace space(sim.n(), k_tasks, cap);
    const std::int64_t count = static_cast<std::int64_t>(space.size());
    std::vector<double> scores(static_cast<std::size_t>(count));
    const double* data = sim.entries.data();
    const int n = sim.n();

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const TaskSequence seq = space.at(static_cast<std::uint64_t>(i));
        scores[static_cast<std::size_t>(i)] = score_raw(seq, data, n, k_tasks);
    }
    return finish_sweep(space, std::move(scores));
}

ScoreSweep extremes_by_score_serial(const SimilarityMatrix& sim, int k_tasks,
                                    std::uint64_t cap) {
    sim.validate();
    if (k_tasks < 2) throw ValidationError("score sweep needs K >= 2");
    const SequenceSpace space(sim.n(), k_tasks, cap);
    std::vector<double> scores(space.size());
    const double* data = sim.entries.data();
    const int n = sim.n();
    for (std::uint64_t i = 0; i < space.size(); ++i)
        scores[i] = score_raw(space.at(i), data, n, k_tasks);
    return finish_sweep(space, std::move(scores));
}

double mean_score_exact(const SimilarityMatrix& sim, int k_tasks) {
    sim.validate();
    const int n = sim.n();
    check_shape(n, k_tasks);
    if (k_tasks < 2) throw ValidationError("mean score needs K >= 2");
    const int m = n / k_tasks;
    double off_diag = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) off_diag += sim.at(i, j);
    // Every ordered cross pair sits in consecutive tasks with probability
    // (K-1) M^2 / (N (N-1)); the Eq.(3) prefactor K/((K-1)N) cancels K-1.
    return off_diag * k_tasks * m * m /
           (static_cast<double>(n) * n * (n - 1));
}

double EmpiricalDistribution::min() const {
    if (samples.empty()) throw ValidationError("empty distribution");
    return *std::min_element(samples.begin(), samples.end());
}

double EmpiricalDistribution::max() const {
    if (samples.empty()) throw ValidationError("empty distribution");
    return *std::max_element(samples.begin(), samples.end());
}

double EmpiricalDistribution::mean() const {
    if (samples.empty()) throw ValidationError("empty distribution");
    double s = 0.0;
    for (double x : samples) s += x;
    return s / static_cast<double>(samples.size());
}

double EmpiricalDistribution::population_variance() const {
    const double mu = mean();
    double s = 0.0;
    for (double x : samples) s += (x - mu) * (x - mu);
    return s / static_cast<double>(samples.size());
}

EmpiricalDistribution true_distribution(const AccuracyRecordSet& records,
                                        std::uint64_t cap) {
    records.validate();
    const SequenceSpace space(records.n_classes, records.n_tasks, cap);
    std::unordered_set<std::string> seen;
    seen.reserve(records.records.size());
    for (const auto& r : records.records) {
        if (!seen.insert(r.sequence.to_text()).second)
            throw ValidationError("duplicate record for sequence " +
                                  r.sequence.to_text());
    }
    if (records.records.size() != space.size()) {
        for (std::uint64_t i = 0; i < space.size(); ++i) {
            const std::string key = space.at(i).to_text();
            if (!seen.count(key))
                throw ValidationError("missing record for sequence " + key);
        }
        throw ValidationError("record count " + std::to_string(records.records.size()) +
                              " does not match |Omega| = " + std::to_string(space.size()));
    }
    EmpiricalDistribution dist;
    dist.source = DistributionSource::truth;
    dist.samples.reserve(records.records.size());
    for (const auto& r : records.records) dist.samples.push_back(r.accuracy);
    return dist;
}

}  // namespace edge::enumerate
