#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace senti {

enum class Dataset { Olist, Buscape, B2W, UtlcApps, UtlcMovies };

inline constexpr std::array<Dataset, 5> kAllDatasets = {
    Dataset::Olist, Dataset::Buscape, Dataset::B2W, Dataset::UtlcApps,
    Dataset::UtlcMovies};

// Lowercase name used as the stable join key in files.
std::string_view dataset_name(Dataset d);
std::optional<Dataset> dataset_from_name(std::string_view name);

// 1,2 -> 0; 4,5 -> 1; 3 -> absent. Throws DomainError outside 1..5.
std::optional<int> assign_polarity(int rating);

struct Review {
  std::string id;
  Dataset dataset = Dataset::Olist;
  std::string text;
  int rating = 0;  // 1..5
  std::optional<int> polarity;
  std::optional<int> fold;  // 1..10
  std::optional<std::vector<std::string>> tokens;
};

// Ordered, immutable-after-build container of reviews with unique ids.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::string name) : name_(std::move(name)) {}

  // Validates the review invariants (rating range, non-blank text, polarity
  // consistent with rating, fold range, unique id). Throws DomainError.
  void add(Review review);

  const std::string& name() const { return name_; }
  const std::vector<Review>& reviews() const { return reviews_; }
  std::size_t size() const { return reviews_.size(); }
  bool empty() const { return reviews_.empty(); }
  const Review& operator[](std::size_t i) const { return reviews_[i]; }

 private:
  std::string name_;
  std::vector<Review> reviews_;
  std::unordered_set<std::string> ids_;
};

struct ColumnMap {
  std::string text = "review_text";
  std::string rating = "rating";
  std::string id;  // empty: ids are generated from the data row number
};

// Per-rule drop counters. Rules apply in fixed priority order:
// malformed > empty text > invalid (null/zero/out-of-range) rating.
struct IngestCounters {
  std::size_t rows_in = 0;
  std::size_t kept = 0;
  std::size_t malformed = 0;
  std::size_t empty_text = 0;
  std::size_t invalid_rating = 0;
  std::vector<std::string> notes;  // first few row-numbered drop messages
};

// Reads a raw per-dataset CSV (header row required). Ids are prefixed with
// the dataset name; in-file duplicates get a "#k" suffix.
Corpus ingest_raw(const std::string& path, Dataset dataset,
                  const ColumnMap& columns, IngestCounters* counters = nullptr);

inline constexpr std::string_view kConsolidatedHeader[] = {
    "id", "dataset", "review_text", "rating", "polarity", "kfold", "tokens"};

// Writes the consolidated CSV (LF newlines, RFC 4180 escaping). Tokens must
// be computed for every review; folds too unless require_folds is false
// (the prepare stage writes before partitioning). Byte-identical across runs.
void write_consolidated(const Corpus& corpus, const std::string& path,
                        bool require_folds = true);

// Strict inverse of write_consolidated; schema mismatches are fatal.
Corpus read_consolidated(const std::string& path);

// Keeps only reviews with a polarity label, preserving order.
Corpus filter_polarity_task(const Corpus& corpus);

// Concatenates corpora in the given order under a new name.
Corpus concat(std::string name, const std::vector<const Corpus*>& parts);

// Splits by origin dataset, in kAllDatasets order; absent datasets omitted.
std::vector<Corpus> split_by_dataset(const Corpus& corpus);

}  // namespace senti
