#include "edge/simio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace edge::simio {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

double parse_double(const std::string& token, int line, int col) {
    if (token.empty()) throw ParseError("empty numeric field", line, col);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size())
        throw ParseError("bad numeric value '" + token + "'", line, col);
    if (!std::isfinite(v))
        throw ParseError("non-finite value '" + token + "'", line, col);
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

EmbeddingSet load_embeddings(const std::filesystem::path& path) {
    const auto lines = split_lines(read_file(path));
    EmbeddingSet set;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int lineno = static_cast<int>(li) + 1;
        if (blank(lines[li])) continue;
        std::istringstream in(lines[li]);
        std::string label;
        in >> label;
        std::vector<double> row;
        std::string token;
        while (in >> token)
            row.push_back(parse_double(token, lineno, 0));
        if (row.empty())
            throw ParseError("record has no vector components", lineno, 1);
        if (set.labels.empty()) {
            set.dim = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != set.dim) {
            throw ParseError("vector of length " + std::to_string(row.size()) +
                                 ", expected " + std::to_string(set.dim),
                             lineno, 1);
        }
        set.labels.push_back(label);
        set.vectors.insert(set.vectors.end(), row.begin(), row.end());
    }
    set.validate();
    return set;
}

SimilarityMatrix cosine_similarity(const EmbeddingSet& embeddings) {
    embeddings.validate();
    const int n = embeddings.n();
    std::vector<double> norms(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (double x : embeddings.row(i)) s += x * x;
        norms[static_cast<std::size_t>(i)] = std::sqrt(s);
    }
    SimilarityMatrix m;
    m.labels = embeddings.labels;
    m.entries = SquareMatrix(n);
    for (int i = 0; i < n; ++i) {
        m.entries.at(i, i) = 1.0;
        const auto ri = embeddings.row(i);
        for (int j = i + 1; j < n; ++j) {
            const auto rj = embeddings.row(j);
            double dot = 0.0;
            for (int k = 0; k < embeddings.dim; ++k)
                dot += ri[static_cast<std::size_t>(k)] * rj[static_cast<std::size_t>(k)];
            const double c = dot / (norms[static_cast<std::size_t>(i)] *
                                    norms[static_cast<std::size_t>(j)]);
            m.entries.at(i, j) = c;
            m.entries.at(j, i) = c;
        }
    }
    m.validate();
    return m;
}

SimilarityMatrix load_similarity(const std::filesystem::path& path) {
    const auto all = split_lines(read_file(path));
    std::vector<std::pair<int, std::string>> rows;  // (lineno, content)
    for (std::size_t li = 0; li < all.size(); ++li)
        if (!blank(all[li])) rows.emplace_back(static_cast<int>(li) + 1, all[li]);
    if (rows.empty()) throw ParseError("empty similarity file", 1, 1);

    const auto header = split_csv(rows.front().second);
    if (header.size() < 3)
        throw ParseError("similarity header needs at least 2 labels",
                         rows.front().first, 1);
    std::vector<std::string> labels;
    for (std::size_t c = 1; c < header.size(); ++c) labels.push_back(trim(header[c]));
    const int n = static_cast<int>(labels.size());

    if (static_cast<int>(rows.size()) - 1 != n)
        throw ParseError("table is not square: " + std::to_string(rows.size() - 1) +
                             " data rows for " + std::to_string(n) + " labels",
                         rows.back().first, 1);

    SimilarityMatrix m;
    m.labels = labels;
    m.entries = SquareMatrix(n);
    for (int i = 0; i < n; ++i) {
        const auto& [lineno, content] = rows[static_cast<std::size_t>(i) + 1];
        const auto cells = split_csv(content);
        if (static_cast<int>(cells.size()) != n + 1)
            throw ParseError("row has " + std::to_string(cells.size() - 1) +
                                 " values, expected " + std::to_string(n),
                             lineno, 1);
        if (trim(cells[0]) != labels[static_cast<std::size_t>(i)])
            throw ParseError("row label '" + trim(cells[0]) +
                                 "' does not match header label '" +
                                 labels[static_cast<std::size_t>(i)] + "'",
                             lineno, 1);
        for (int j = 0; j < n; ++j)
            m.entries.at(i, j) =
                parse_double(trim(cells[static_cast<std::size_t>(j) + 1]), lineno, j + 2);
    }
    m.validate();
    bool all_zero = true;
    for (int i = 0; i < n && all_zero; ++i) all_zero = m.entries.at(i, i) == 0.0;
    m.diag_zeroed = all_zero;
    return m;
}

void save_similarity(const std::filesystem::path& path, const SimilarityMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& l : m.labels) out << ',' << l;
    out << '\n';
    for (int i = 0; i < m.n(); ++i) {
        out << m.labels[static_cast<std::size_t>(i)];
        for (int j = 0; j < m.n(); ++j) out << ',' << m.at(i, j);
        out << '\n';
    }
    atomic_write_text(path, out.str());
}

AccuracyRecordSet load_accuracies(const std::filesystem::path& path) {
    const auto lines = split_lines(read_file(path));
    AccuracyRecordSet set;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int lineno = static_cast<int>(li) + 1;
        if (blank(lines[li])) continue;
        std::istringstream in(lines[li]);
        std::string seq_text, acc_text, extra;
        in >> seq_text >> acc_text;
        if (acc_text.empty())
            throw ParseError("record needs a sequence and an accuracy", lineno, 1);
        if (in >> extra)
            throw ParseError("trailing garbage '" + extra + "'", lineno, 1);
        TaskSequence seq;
        try {
            seq = TaskSequence::from_text(seq_text);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno, e.column);
        }
        const double acc = parse_double(acc_text, lineno, 0);
        if (!(acc >= 0.0 && acc <= 1.0))
            throw ParseError("accuracy " + acc_text + " outside [0, 1]", lineno, 1);
        if (set.records.empty()) {
            set.n_classes = seq.n_classes();
            set.n_tasks = seq.n_tasks();
        } else if (seq.n_classes() != set.n_classes || seq.n_tasks() != set.n_tasks) {
            throw ParseError("sequence shape (" + std::to_string(seq.n_classes()) +
                                 "," + std::to_string(seq.n_tasks()) +
                                 ") differs from earlier records (" +
                                 std::to_string(set.n_classes) + "," +
                                 std::to_string(set.n_tasks) + ")",
                             lineno, 1);
        }
        set.records.push_back({std::move(seq), acc});
    }
    if (set.records.empty()) throw ParseError("no accuracy records", 1, 1);
    set.validate();
    return set;
}

void save_accuracies(const std::filesystem::path& path, const AccuracyRecordSet& set) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& r : set.records)
        out << r.sequence.to_text() << ' ' << r.accuracy << '\n';
    atomic_write_text(path, out.str());
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write file: " + tmp);
        out << content;
        if (!out) throw Error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace edge::simio
