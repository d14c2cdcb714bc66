#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "activityvec/corpus.hpp"
#include "activityvec/errors.hpp"

namespace activityvec {

// How the term-frequency factor is derived from activity counts:
// `binary` records presence (0/1), `raw_count` the aggregated action count.
enum class TfMode { binary, raw_count };

// tf values, documents x actors, in corpus order.
struct TermFrequencyMatrix {
  std::vector<ObjectId> objects;  // row labels, document order
  std::vector<ActorId> actors;    // column labels, vocabulary order
  std::vector<std::vector<std::int64_t>> values;

  std::size_t rows() const { return objects.size(); }
  std::size_t cols() const { return actors.size(); }
};

// idf per vocabulary entry, vocabulary order.
using IdfVector = std::vector<double>;

// TF-IDF weights, documents x actors. Row i is the vector for document i.
struct WeightMatrix {
  std::vector<ObjectId> objects;
  std::vector<ActorId> actors;
  std::vector<std::vector<double>> values;

  std::size_t rows() const { return objects.size(); }
  std::size_t cols() const { return actors.size(); }
};

inline TermFrequencyMatrix term_frequency(const ActivityCorpus& corpus,
                                          TfMode mode = TfMode::binary) {
  if (corpus.empty())
    throw EmptyCorpusError("term_frequency needs a non-empty corpus");

  TermFrequencyMatrix tf;
  tf.objects.reserve(corpus.document_count());
  for (const Document& doc : corpus.documents()) tf.objects.push_back(doc.id);
  tf.actors = corpus.vocabulary();
  tf.values.assign(corpus.document_count(),
                   std::vector<std::int64_t>(corpus.vocabulary_size(), 0));

  for (std::size_t i = 0; i < corpus.document_count(); ++i) {
    for (const DocumentEntry& entry : corpus.documents()[i].entries) {
      const std::size_t j = *corpus.actor_index(entry.actor);
      tf.values[i][j] = mode == TfMode::binary ? 1 : entry.count;
    }
  }
  return tf;
}

// idf_j = log2(|D| / df_j) where df_j is the number of documents the actor
// appears in. Exactly 0 for actors present in every document; finite for
// all vocabulary entries since each appears in at least one document.
inline IdfVector inverse_document_frequency(const ActivityCorpus& corpus) {
  if (corpus.empty())
    throw EmptyCorpusError("inverse_document_frequency needs a non-empty corpus");

  std::vector<std::int64_t> doc_freq(corpus.vocabulary_size(), 0);
  for (const Document& doc : corpus.documents())
    for (const DocumentEntry& entry : doc.entries)
      ++doc_freq[*corpus.actor_index(entry.actor)];

  IdfVector idf(corpus.vocabulary_size(), 0.0);
  const double total = static_cast<double>(corpus.document_count());
  for (std::size_t j = 0; j < idf.size(); ++j)
    idf[j] = std::log2(total / static_cast<double>(doc_freq[j]));
  return idf;
}

// w_{j,i} = tf_{j,i} * idf_j, full double precision.
inline WeightMatrix tfidf(const TermFrequencyMatrix& tf, const IdfVector& idf) {
  if (tf.cols() != idf.size())
    throw ShapeError("tf has " + std::to_string(tf.cols()) +
                     " columns but idf has " + std::to_string(idf.size()) +
                     " entries");

  WeightMatrix weights;
  weights.objects = tf.objects;
  weights.actors = tf.actors;
  weights.values.reserve(tf.rows());
  for (const auto& row : tf.values) {
    std::vector<double> out(row.size(), 0.0);
    for (std::size_t j = 0; j < row.size(); ++j)
      out[j] = static_cast<double>(row[j]) * idf[j];
    weights.values.push_back(std::move(out));
  }
  return weights;
}

// Convenience: corpus straight to weights.
inline WeightMatrix tfidf(const ActivityCorpus& corpus,
                          TfMode mode = TfMode::binary) {
  return tfidf(term_frequency(corpus, mode), inverse_document_frequency(corpus));
}

// The full weight row for one document, vocabulary order, zeros included.
inline std::vector<std::pair<ActorId, double>> document_vector(
    const WeightMatrix& weights, const ObjectId& object) {
  for (std::size_t i = 0; i < weights.objects.size(); ++i) {
    if (weights.objects[i] != object) continue;
    std::vector<std::pair<ActorId, double>> row;
    row.reserve(weights.cols());
    for (std::size_t j = 0; j < weights.cols(); ++j)
      row.emplace_back(weights.actors[j], weights.values[i][j]);
    return row;
  }
  throw NotFoundError("no document \"" + object + "\" in the weight matrix");
}

// How weights are rendered to text. `full` rounds half-to-even at six
// decimals; `paper` truncates toward zero at three. Exact zero prints "0"
// in both modes.
enum class DisplayMode { full, paper };

inline std::string format_weight(double value, DisplayMode mode) {
  if (value == 0.0) return "0";
  char buf[64];
  if (mode == DisplayMode::paper) {
    std::snprintf(buf, sizeof buf, "%.3f", std::trunc(value * 1000.0) / 1000.0);
  } else {
    std::snprintf(buf, sizeof buf, "%.6f", value);
  }
  return buf;
}

}  // namespace activityvec
