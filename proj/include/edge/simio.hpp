#pragma once

// File ingestion and validation for embeddings, similarity matrices and
// per-sequence accuracy records.
//
// Formats (line oriented, diffable):
//   embeddings:  one record per line, "<label> v1 v2 ... vd"
//   similarity:  comma-separated square table; first row and first column
//                carry the labels, values written with 17 significant digits
//   accuracies:  one record per line, "<sequence> <accuracy>" where the
//                sequence is "0,1|2,3|4,5"
// Readers reject trailing garbage and report the line/column of the first
// error. Blank lines are permitted.

#include <filesystem>
#include <string>

#include "edge/types.hpp"

namespace edge::simio {

EmbeddingSet load_embeddings(const std::filesystem::path& path);

// Cosine of every vector pair; unit diagonal, symmetric by construction.
SimilarityMatrix cosine_similarity(const EmbeddingSet& embeddings);

SimilarityMatrix load_similarity(const std::filesystem::path& path);
void save_similarity(const std::filesystem::path& path, const SimilarityMatrix& m);

AccuracyRecordSet load_accuracies(const std::filesystem::path& path);
void save_accuracies(const std::filesystem::path& path, const AccuracyRecordSet& set);

// Writes via a temp file in the same directory, then renames.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace edge::simio
