#pragma once

#include <cctype>
#include <cstdint>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "activityvec/errors.hpp"

namespace activityvec {

using ActorId = std::string;
using ObjectId = std::string;

// One log event: `actor` performed `count` actions (views, likes,
// comments, ...) on the posted `object`.
struct ActivityRecord {
  ObjectId object;
  ActorId actor;
  std::int64_t count = 1;
};

// Aggregated actions of one actor on one object. `first_seen` is the
// position of the first record that mentioned this (object, actor) pair;
// the canonical CSV emitter replays entries in that order so a corpus
// serializes and re-parses to the same document and vocabulary orders.
struct DocumentEntry {
  ActorId actor;
  std::int64_t count = 0;
  std::size_t first_seen = 0;
};

// One posted object and every actor that acted on it, in the order the
// actors first appeared.
struct Document {
  ObjectId id;
  std::vector<DocumentEntry> entries;
  std::size_t first_seen = 0;

  const DocumentEntry* find(const ActorId& actor) const {
    for (const auto& entry : entries)
      if (entry.actor == actor) return &entry;
    return nullptr;
  }
};

// The document set D. Documents are ordered by first appearance of their
// object id, the vocabulary by first appearance of each actor id, so every
// downstream matrix is deterministic for a given input stream.
class ActivityCorpus {
 public:
  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<ActorId>& vocabulary() const { return vocabulary_; }

  std::size_t document_count() const { return documents_.size(); }
  // N of the vector model: number of distinct actors.
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  bool empty() const { return documents_.empty(); }

  std::optional<std::size_t> document_index(const ObjectId& id) const {
    auto it = document_index_.find(id);
    if (it == document_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> actor_index(const ActorId& id) const {
    auto it = actor_index_.find(id);
    if (it == actor_index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const ActivityCorpus& a, const ActivityCorpus& b) {
    if (a.vocabulary_ != b.vocabulary_) return false;
    if (a.documents_.size() != b.documents_.size()) return false;
    for (std::size_t i = 0; i < a.documents_.size(); ++i) {
      const Document& da = a.documents_[i];
      const Document& db = b.documents_[i];
      if (da.id != db.id || da.entries.size() != db.entries.size()) return false;
      for (std::size_t j = 0; j < da.entries.size(); ++j) {
        if (da.entries[j].actor != db.entries[j].actor) return false;
        if (da.entries[j].count != db.entries[j].count) return false;
      }
    }
    return true;
  }

  friend bool operator!=(const ActivityCorpus& a, const ActivityCorpus& b) {
    return !(a == b);
  }

  friend ActivityCorpus build_corpus(const std::vector<ActivityRecord>& records);

 private:
  std::vector<Document> documents_;
  std::vector<ActorId> vocabulary_;
  std::unordered_map<ObjectId, std::size_t> document_index_;
  std::unordered_map<ActorId, std::size_t> actor_index_;
};

namespace detail {

inline bool is_blank(std::string_view line) {
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Identifiers are compared by exact byte equality, so sloppy tokens are
// rejected rather than normalized.
inline void validate_id(const std::string& value, const char* field,
                        std::size_t line = 0) {
  if (value.empty())
    throw ValidationError(std::string(field) + " id must be non-empty", line);
  if (std::isspace(static_cast<unsigned char>(value.front())) ||
      std::isspace(static_cast<unsigned char>(value.back())))
    throw ValidationError(std::string(field) + " id \"" + value +
                              "\" has leading or trailing whitespace",
                          line);
  if (value.find('\n') != std::string::npos ||
      value.find('\r') != std::string::npos)
    throw ValidationError(std::string(field) + " id must not contain line breaks",
                          line);
}

inline void validate_record(const ActivityRecord& rec, std::size_t line = 0) {
  validate_id(rec.object, "object", line);
  validate_id(rec.actor, "actor", line);
  if (rec.count < 1)
    throw ValidationError("count must be >= 1, got " + std::to_string(rec.count),
                          line);
}

// Splits one CSV record. Double-quoted fields may contain commas and
// embedded "" escapes; multi-line fields are not supported.
inline std::vector<std::string> split_csv_row(const std::string& line,
                                              std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"' && field.empty() && !was_quoted) {
      in_quotes = true;
      was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      field += ch;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", line_no);
  fields.push_back(std::move(field));
  return fields;
}

inline std::int64_t parse_count_field(const std::string& text,
                                      std::size_t line_no) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ValidationError("count must be an integer, got \"" + text + "\"",
                          line_no);
  if (value < 1)
    throw ValidationError("count must be >= 1, got " + text, line_no);
  return value;
}

}  // namespace detail

// Reads activity records from JSON-lines text: one object per line,
// {"object": "...", "actor": "...", "count": n}. "count" defaults to 1.
// Accepts LF or CRLF and skips blank lines.
inline std::vector<ActivityRecord> parse_jsonl(std::istream& in) {
  std::vector<ActivityRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::is_blank(line)) continue;

    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    if (!doc.is_object())
      throw ParseError("expected a JSON object", line_no);
    if (!doc.contains("object"))
      throw SchemaError("missing \"object\" field", line_no);
    if (!doc.contains("actor"))
      throw SchemaError("missing \"actor\" field", line_no);
    if (!doc["object"].is_string())
      throw SchemaError("\"object\" must be a string", line_no);
    if (!doc["actor"].is_string())
      throw SchemaError("\"actor\" must be a string", line_no);

    ActivityRecord rec;
    rec.object = doc["object"].get<std::string>();
    rec.actor = doc["actor"].get<std::string>();
    if (doc.contains("count")) {
      if (!doc["count"].is_number_integer())
        throw ValidationError("\"count\" must be an integer", line_no);
      rec.count = doc["count"].get<std::int64_t>();
    }
    detail::validate_record(rec, line_no);
    records.push_back(std::move(rec));
  }
  return records;
}

inline std::vector<ActivityRecord> parse_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_jsonl(in);
}

// Reads activity records from CSV with the exact header
// `object_id,actor_id,count`; the count column may be omitted entirely
// (header `object_id,actor_id`), in which case every count is 1.
inline std::vector<ActivityRecord> parse_csv(std::istream& in) {
  std::vector<ActivityRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool has_count = false;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::is_blank(line)) continue;

    auto fields = detail::split_csv_row(line, line_no);
    if (!header_seen) {
      if (fields == std::vector<std::string>{"object_id", "actor_id", "count"})
        has_count = true;
      else if (fields == std::vector<std::string>{"object_id", "actor_id"})
        has_count = false;
      else
        throw FormatError(
            "expected header \"object_id,actor_id,count\" or "
            "\"object_id,actor_id\"",
            line_no);
      header_seen = true;
      continue;
    }

    const std::size_t expected = has_count ? 3 : 2;
    if (fields.size() != expected)
      throw ParseError("expected " + std::to_string(expected) +
                           " fields, got " + std::to_string(fields.size()),
                       line_no);
    ActivityRecord rec;
    rec.object = std::move(fields[0]);
    rec.actor = std::move(fields[1]);
    if (has_count) rec.count = detail::parse_count_field(fields[2], line_no);
    detail::validate_record(rec, line_no);
    records.push_back(std::move(rec));
  }
  if (!header_seen) throw FormatError("missing CSV header line");
  return records;
}

inline std::vector<ActivityRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

// Aggregates records into a corpus. Records with the same (object, actor)
// pair are merged by summing counts; permuting the input never changes a
// count, only the resulting orders.
inline ActivityCorpus build_corpus(const std::vector<ActivityRecord>& records) {
  if (records.empty())
    throw EmptyCorpusError("cannot build a corpus from zero records");

  ActivityCorpus corpus;
  // Per-document actor -> entry index, parallel to corpus.documents_.
  std::vector<std::unordered_map<ActorId, std::size_t>> entry_index;

  for (std::size_t pos = 0; pos < records.size(); ++pos) {
    const ActivityRecord& rec = records[pos];
    detail::validate_record(rec);

    auto [doc_it, doc_inserted] = corpus.document_index_.try_emplace(
        rec.object, corpus.documents_.size());
    if (doc_inserted) {
      corpus.documents_.push_back(Document{rec.object, {}, pos});
      entry_index.emplace_back();
    }
    const std::size_t doc = doc_it->second;

    if (corpus.actor_index_.try_emplace(rec.actor, corpus.vocabulary_.size())
            .second)
      corpus.vocabulary_.push_back(rec.actor);

    auto [entry_it, entry_inserted] =
        entry_index[doc].try_emplace(rec.actor, corpus.documents_[doc].entries.size());
    if (entry_inserted)
      corpus.documents_[doc].entries.push_back(DocumentEntry{rec.actor, 0, pos});
    corpus.documents_[doc].entries[entry_it->second].count += rec.count;
  }
  return corpus;
}

}  // namespace activityvec
