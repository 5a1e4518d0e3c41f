#include "edge/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

namespace edge {

bool SquareMatrix::symmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::fabs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::fabs(x));
    return m;
}

namespace {

int count_classes(const std::vector<TaskList>& tasks) {
    int n = 0;
    for (const auto& t : tasks) n += static_cast<int>(t.size());
    return n;
}

void canonicalize_tasks(std::vector<TaskList>& tasks) {
    for (auto& t : tasks) std::sort(t.begin(), t.end());
}

void validate_tasks(const std::vector<TaskList>& tasks, int expect_classes,
                    int expect_tasks) {
    if (tasks.empty()) throw ValidationError("partition has no tasks");
    if (expect_tasks >= 0 && static_cast<int>(tasks.size()) != expect_tasks)
        throw ValidationError("partition has " + std::to_string(tasks.size()) +
                              " tasks, expected " + std::to_string(expect_tasks));
    const int n = count_classes(tasks);
    if (expect_classes >= 0 && n != expect_classes)
        throw ValidationError("partition covers " + std::to_string(n) +
                              " classes, expected " + std::to_string(expect_classes));
    const std::size_t m = tasks.front().size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& t : tasks) {
        if (t.size() != m)
            throw ValidationError("tasks are not of equal size");
        for (int c : t) {
            if (c < 0 || c >= n)
                throw ValidationError("class index " + std::to_string(c) +
                                      " out of range 0.." + std::to_string(n - 1));
            if (seen[static_cast<std::size_t>(c)])
                throw ValidationError("class index " + std::to_string(c) +
                                      " assigned to more than one task");
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
}

}  // namespace

int TaskPartition::n_classes() const { return count_classes(tasks); }
void TaskPartition::canonicalize() { canonicalize_tasks(tasks); }
void TaskPartition::validate(int expect_classes, int expect_tasks) const {
    validate_tasks(tasks, expect_classes, expect_tasks);
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::hard: return "hard";
        case Provenance::easy: return "easy";
        case Provenance::median: return "median";
        case Provenance::enumerated: return "enumerated";
        case Provenance::external: return "external";
    }
    return "external";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "hard") return Provenance::hard;
    if (s == "easy") return Provenance::easy;
    if (s == "median") return Provenance::median;
    if (s == "enumerated") return Provenance::enumerated;
    if (s == "external") return Provenance::external;
    throw ValidationError("unknown provenance: " + s);
}

TaskSequence::TaskSequence(std::vector<TaskList> t, Provenance p)
    : tasks(std::move(t)), provenance(p) {
    canonicalize();
}

TaskSequence TaskSequence::from_partition(const TaskPartition& part,
                                          std::span<const int> order, Provenance p) {
    TaskSequence seq;
    seq.provenance = p;
    seq.tasks.reserve(order.size());
    for (int t : order) seq.tasks.push_back(part.tasks.at(static_cast<std::size_t>(t)));
    seq.canonicalize();
    return seq;
}

int TaskSequence::n_classes() const { return count_classes(tasks); }
void TaskSequence::canonicalize() { canonicalize_tasks(tasks); }
void TaskSequence::validate(int expect_classes, int expect_tasks) const {
    validate_tasks(tasks, expect_classes, expect_tasks);
}

std::string TaskSequence::to_text() const {
    std::ostringstream out;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (t) out << '|';
        for (std::size_t c = 0; c < tasks[t].size(); ++c) {
            if (c) out << ',';
            out << tasks[t][c];
        }
    }
    return out.str();
}

TaskSequence TaskSequence::from_text(const std::string& text, Provenance p) {
    TaskSequence seq;
    seq.provenance = p;
    TaskList current;
    std::string token;
    auto flush_token = [&](std::size_t pos) {
        if (token.empty())
            throw ParseError("empty class index in sequence", 1,
                             static_cast<int>(pos) + 1);
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("bad class index '" + token + "'", 1,
                             static_cast<int>(pos) + 1);
        }
        if (used != token.size() || value < 0)
            throw ParseError("bad class index '" + token + "'", 1,
                             static_cast<int>(pos) + 1);
        current.push_back(value);
        token.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == ',') {
            flush_token(i);
        } else if (ch == '|') {
            flush_token(i);
            seq.tasks.push_back(std::move(current));
            current.clear();
        } else if (ch >= '0' && ch <= '9') {
            token.push_back(ch);
        } else {
            throw ParseError(std::string("unexpected character '") + ch +
                                 "' in sequence",
                             1, static_cast<int>(i) + 1);
        }
    }
    flush_token(text.size());
    seq.tasks.push_back(std::move(current));
    seq.canonicalize();
    return seq;
}

std::uint64_t TaskSequence::canonical_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<std::uint64_t>((v >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    };
    for (const auto& task : tasks) {
        for (int c : task) mix(c);
        mix(-1);  // task separator
    }
    return h;
}

void EmbeddingSet::validate() const {
    if (labels.empty()) throw ValidationError("embedding set is empty");
    if (dim < 1) throw ValidationError("embedding dimension must be >= 1");
    if (vectors.size() != static_cast<std::size_t>(n()) * dim)
        throw ValidationError("embedding vector storage size mismatch");
    for (int i = 0; i < n(); ++i) {
        double norm2 = 0.0;
        for (double x : row(i)) norm2 += x * x;
        if (!(norm2 > 0.0))
            throw ValidationError("zero-norm embedding vector for label '" +
                                  labels[static_cast<std::size_t>(i)] + "'");
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw ValidationError("duplicate label '" + labels[i] + "'");
}

void SimilarityMatrix::validate() const {
    const int nn = n();
    if (nn < 2) throw ValidationError("similarity matrix needs at least 2 classes");
    if (!labels.empty() && static_cast<int>(labels.size()) != nn)
        throw ValidationError("similarity label count does not match matrix size");
    if (!entries.symmetric(1e-9))
        throw ValidationError("similarity matrix is asymmetric beyond 1e-9");
    constexpr double slack = 1.0 + 1e-9;
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            const double v = entries.at(i, j);
            if (!(v >= -slack && v <= slack))
                throw ValidationError("similarity entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") = " + std::to_string(v) +
                                      " outside [-1, 1]");
        }
}

SimilarityMatrix SimilarityMatrix::zeroed_diagonal() const {
    SimilarityMatrix out = *this;
    for (int i = 0; i < out.n(); ++i) out.entries.at(i, i) = 0.0;
    out.diag_zeroed = true;
    return out;
}

void AccuracyRecordSet::validate() const {
    for (const auto& r : records) {
        if (!(r.accuracy >= 0.0 && r.accuracy <= 1.0))
            throw ValidationError("accuracy " + std::to_string(r.accuracy) +
                                  " outside [0, 1] for sequence " +
                                  r.sequence.to_text());
        r.sequence.validate(n_classes, n_tasks);
    }
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a64_ints(std::span<const int> values, std::uint64_t seed_state) {
    std::uint64_t h = seed_state ^ 1469598103934665603ull;
    for (int v : values) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<std::uint64_t>((v >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace edge
