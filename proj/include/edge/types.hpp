#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edge {

// Base error for all validation and computation failures in this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data violates a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

// A file could not be parsed; carries 1-based line/column of the first error.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int line_, int column_ = 0)
        : Error(what), line(line_), column(column_) {}
};

// Enumeration of a sequence space larger than the configured cap was refused.
struct CapExceededError : Error {
    std::string omega_text;  // exact |Omega| as decimal digits
    CapExceededError(const std::string& what, std::string omega)
        : Error(what), omega_text(std::move(omega)) {}
};

// Dense square matrix of doubles, row-major.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, double fill = 0.0)
        : n_(n), v_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }
    double& at(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
    const double* data() const { return v_.data(); }
    double* data() { return v_.data(); }

    bool symmetric(double tol) const;
    double max_abs() const;

  private:
    int n_ = 0;
    std::vector<double> v_;
};

using TaskList = std::vector<int>;

// Unordered division of N classes into K disjoint tasks of equal size.
// Canonical form keeps each task's class indices sorted ascending.
struct TaskPartition {
    std::vector<TaskList> tasks;

    int n_classes() const;
    int n_tasks() const { return static_cast<int>(tasks.size()); }
    void canonicalize();
    // Checks disjointness, coverage of 0..n-1, and equal task sizes.
    void validate(int expect_classes = -1, int expect_tasks = -1) const;
};

enum class Provenance { hard, easy, median, enumerated, external };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// Ordered task partition. Task order is significant; within-task order is not
// and is kept canonical (ascending).
struct TaskSequence {
    std::vector<TaskList> tasks;
    Provenance provenance = Provenance::external;

    TaskSequence() = default;
    TaskSequence(std::vector<TaskList> t, Provenance p);
    static TaskSequence from_partition(const TaskPartition& part,
                                       std::span<const int> order, Provenance p);

    int n_classes() const;
    int n_tasks() const { return static_cast<int>(tasks.size()); }
    void canonicalize();
    void validate(int expect_classes = -1, int expect_tasks = -1) const;

    // Text form "0,1|2,3|4,5"; identity of the canonical sequence.
    std::string to_text() const;
    static TaskSequence from_text(const std::string& text,
                                  Provenance p = Provenance::external);
    // FNV-1a over the canonical form; stable across platforms.
    std::uint64_t canonical_hash() const;

    bool operator==(const TaskSequence& other) const { return tasks == other.tasks; }
};

// N class labels and their d-dimensional semantic vectors.
struct EmbeddingSet {
    std::vector<std::string> labels;
    std::vector<double> vectors;  // row-major, n() x dim
    int dim = 0;

    int n() const { return static_cast<int>(labels.size()); }
    std::span<const double> row(int i) const {
        return {vectors.data() + static_cast<std::size_t>(i) * dim,
                static_cast<std::size_t>(dim)};
    }
    void validate() const;
};

// Symmetric class-to-class similarity with labels.
struct SimilarityMatrix {
    std::vector<std::string> labels;
    SquareMatrix entries;
    bool diag_zeroed = false;

    int n() const { return entries.size(); }
    double at(int i, int j) const { return entries.at(i, j); }
    void validate() const;
    // Copy with the diagonal set to zero and the flag recorded.
    SimilarityMatrix zeroed_diagonal() const;
};

// Per-sequence accuracies sharing one (N, K) shape.
struct AccuracyRecord {
    TaskSequence sequence;
    double accuracy = 0.0;  // fraction in [0, 1]
};

struct AccuracyRecordSet {
    std::vector<AccuracyRecord> records;
    int n_classes = 0;
    int n_tasks = 0;

    void validate() const;
};

// 64-bit FNV-1a.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64_ints(std::span<const int> values, std::uint64_t seed_state);

}  // namespace edge
