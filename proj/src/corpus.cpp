#include "senti/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "senti/csv.hpp"
#include "senti/errors.hpp"
#include "senti/textprep.hpp"

namespace senti {

namespace {

constexpr std::size_t kMaxIngestNotes = 50;

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

// Integer ratings only; fractional or garbage values are malformed rows.
enum class RatingParse { Ok, Null, Malformed };

RatingParse parse_rating(std::string_view raw, int& value) {
  const std::string_view t = trim(raw);
  if (t.empty()) return RatingParse::Null;
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') i = 1;
  if (i == t.size()) return RatingParse::Malformed;
  long v = 0;
  for (; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') return RatingParse::Malformed;
    v = v * 10 + (t[i] - '0');
    if (v > 1000000) break;
  }
  value = static_cast<int>(t[0] == '-' ? -v : v);
  return RatingParse::Ok;
}

void note(IngestCounters* c, const std::string& msg) {
  if (c && c->notes.size() < kMaxIngestNotes) c->notes.push_back(msg);
}

bool is_normalized_token(std::string_view tok) {
  if (tok.empty()) return false;
  return std::all_of(tok.begin(), tok.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9');
  });
}

}  // namespace

std::string_view dataset_name(Dataset d) {
  switch (d) {
    case Dataset::Olist: return "olist";
    case Dataset::Buscape: return "buscape";
    case Dataset::B2W: return "b2w";
    case Dataset::UtlcApps: return "utlc_apps";
    case Dataset::UtlcMovies: return "utlc_movies";
  }
  return "olist";
}

std::optional<Dataset> dataset_from_name(std::string_view name) {
  for (Dataset d : kAllDatasets)
    if (dataset_name(d) == name) return d;
  return std::nullopt;
}

std::optional<int> assign_polarity(int rating) {
  if (rating < 1 || rating > 5)
    throw DomainError("rating outside 1..5: " + std::to_string(rating));
  if (rating <= 2) return 0;
  if (rating >= 4) return 1;
  return std::nullopt;
}

void Corpus::add(Review review) {
  if (review.rating < 1 || review.rating > 5)
    throw DomainError("review " + review.id + ": rating outside 1..5");
  if (is_blank(review.text))
    throw DomainError("review " + review.id + ": blank text");
  if (review.polarity != assign_polarity(review.rating))
    throw DomainError("review " + review.id +
                      ": polarity inconsistent with rating " +
                      std::to_string(review.rating));
  if (review.fold && (*review.fold < 1 || *review.fold > 10))
    throw DomainError("review " + review.id + ": fold outside 1..10");
  if (!ids_.insert(review.id).second)
    throw DomainError("duplicate review id: " + review.id);
  reviews_.push_back(std::move(review));
}

Corpus ingest_raw(const std::string& path, Dataset dataset,
                  const ColumnMap& columns, IngestCounters* counters) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open raw CSV: " + path);

  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw IoError(path + ": empty file, no header row");

  const auto find_col = [&](const std::string& want) -> std::size_t {
    for (std::size_t i = 0; i < fields.size(); ++i)
      if (fields[i] == want) return i;
    std::ostringstream msg;
    msg << path << ": mapped column \"" << want << "\" not found; header has:";
    for (const auto& f : fields) msg << " \"" << f << "\"";
    throw IoError(msg.str());
  };

  const std::size_t text_col = find_col(columns.text);
  const std::size_t rating_col = find_col(columns.rating);
  const bool has_id_col = !columns.id.empty();
  const std::size_t id_col = has_id_col ? find_col(columns.id) : 0;
  const std::size_t n_cols = fields.size();

  Corpus corpus(std::string(dataset_name(dataset)));
  std::unordered_map<std::string, std::size_t> id_uses;
  IngestCounters local;
  IngestCounters& c = counters ? *counters : local;

  std::size_t data_row = 0;
  while (true) {
    bool ok;
    try {
      ok = reader.next(fields);
    } catch (const IoError& e) {
      ++c.rows_in;
      ++c.malformed;
      note(&c, e.what());
      break;  // an unterminated quote consumes the rest of the stream
    }
    if (!ok) break;
    ++data_row;
    ++c.rows_in;

    if (fields.size() != n_cols) {
      ++c.malformed;
      note(&c, path + ": row " + std::to_string(data_row) + ": expected " +
                   std::to_string(n_cols) + " fields, got " +
                   std::to_string(fields.size()));
      continue;
    }

    int rating = 0;
    const RatingParse rp = parse_rating(fields[rating_col], rating);
    if (rp == RatingParse::Malformed) {
      ++c.malformed;
      note(&c, path + ": row " + std::to_string(data_row) +
                   ": non-integer rating \"" + fields[rating_col] + "\"");
      continue;
    }
    if (!is_valid_utf8(fields[text_col])) {
      ++c.malformed;
      note(&c, path + ": row " + std::to_string(data_row) +
                   ": text is not valid UTF-8");
      continue;
    }
    if (is_blank(fields[text_col])) {
      ++c.empty_text;
      continue;
    }
    if (rp == RatingParse::Null || rating < 1 || rating > 5) {
      ++c.invalid_rating;
      continue;
    }

    std::string id(dataset_name(dataset));
    id += ':';
    id += has_id_col ? std::string(trim(fields[id_col]))
                     : std::to_string(data_row);
    const std::size_t uses = ++id_uses[id];
    if (uses > 1) id += "#" + std::to_string(uses);

    Review review;
    review.id = std::move(id);
    review.dataset = dataset;
    review.text = fields[text_col];
    review.rating = rating;
    review.polarity = assign_polarity(rating);
    corpus.add(std::move(review));
    ++c.kept;
  }
  return corpus;
}

void write_consolidated(const Corpus& corpus, const std::string& path,
                        bool require_folds) {
  for (const Review& r : corpus.reviews()) {
    if (!r.tokens)
      throw DomainError("review " + r.id + ": tokens not computed");
    if (require_folds && !r.fold)
      throw DomainError("review " + r.id + ": fold not assigned");
  }
  atomic_write(path, [&](std::ostream& out) {
    std::vector<std::string> row(std::begin(kConsolidatedHeader),
                                 std::end(kConsolidatedHeader));
    csv::write_row(out, row);
    for (const Review& r : corpus.reviews()) {
      row[0] = r.id;
      row[1] = std::string(dataset_name(r.dataset));
      row[2] = r.text;
      row[3] = std::to_string(r.rating);
      row[4] = r.polarity ? std::to_string(*r.polarity) : "";
      row[5] = r.fold ? std::to_string(*r.fold) : "";
      std::string joined;
      for (const auto& t : *r.tokens) {
        if (!joined.empty()) joined += ' ';
        joined += t;
      }
      row[6] = std::move(joined);
      csv::write_row(out, row);
    }
  });
}

Corpus read_consolidated(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open consolidated CSV: " + path);

  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw IoError(path + ": empty file");

  const std::size_t n_cols = std::size(kConsolidatedHeader);
  bool header_ok = fields.size() == n_cols;
  for (std::size_t i = 0; header_ok && i < n_cols; ++i)
    header_ok = fields[i] == kConsolidatedHeader[i];
  if (!header_ok) {
    std::ostringstream msg;
    msg << path << ": consolidated schema mismatch; expected columns";
    for (const auto& col : kConsolidatedHeader) msg << " \"" << col << "\"";
    msg << ", found";
    for (const auto& f : fields) msg << " \"" << f << "\"";
    throw IoError(msg.str());
  }

  Corpus corpus(std::string(std::filesystem::path(path).stem()));
  while (reader.next(fields)) {
    const std::string where =
        path + ": record " + std::to_string(reader.record_number());
    if (fields.size() != n_cols)
      throw IoError(where + ": expected " + std::to_string(n_cols) +
                    " fields, got " + std::to_string(fields.size()));

    Review r;
    r.id = fields[0];
    const auto ds = dataset_from_name(fields[1]);
    if (!ds) throw IoError(where + ": unknown dataset \"" + fields[1] + "\"");
    r.dataset = *ds;
    r.text = fields[2];

    int rating = 0;
    if (parse_rating(fields[3], rating) != RatingParse::Ok || rating < 1 ||
        rating > 5)
      throw IoError(where + ": bad rating \"" + fields[3] + "\"");
    r.rating = rating;

    if (fields[4].empty()) {
      r.polarity = std::nullopt;
    } else if (fields[4] == "0" || fields[4] == "1") {
      r.polarity = fields[4][0] - '0';
    } else {
      throw IoError(where + ": bad polarity \"" + fields[4] + "\"");
    }
    if (r.polarity != assign_polarity(rating))
      throw IoError(where + ": polarity \"" + fields[4] +
                    "\" inconsistent with rating " + fields[3]);

    if (!fields[5].empty()) {
      int fold = 0;
      if (parse_rating(fields[5], fold) != RatingParse::Ok || fold < 1 ||
          fold > 10)
        throw IoError(where + ": bad kfold \"" + fields[5] + "\"");
      r.fold = fold;
    }

    std::vector<std::string> tokens;
    const std::string& joined = fields[6];
    std::size_t start = 0;
    while (start <= joined.size() && !joined.empty()) {
      std::size_t end = joined.find(' ', start);
      if (end == std::string::npos) end = joined.size();
      const std::string_view tok(joined.data() + start, end - start);
      if (!is_normalized_token(tok))
        throw IoError(where + ": bad token \"" + std::string(tok) + "\"");
      tokens.emplace_back(tok);
      start = end + 1;
      if (end == joined.size()) break;
    }
    r.tokens = std::move(tokens);

    try {
      corpus.add(std::move(r));
    } catch (const DomainError& e) {
      throw IoError(where + ": " + e.what());
    }
  }
  return corpus;
}

Corpus filter_polarity_task(const Corpus& corpus) {
  Corpus out(corpus.name());
  for (const Review& r : corpus.reviews())
    if (r.polarity) out.add(r);
  return out;
}

Corpus concat(std::string name, const std::vector<const Corpus*>& parts) {
  Corpus out(std::move(name));
  for (const Corpus* part : parts)
    for (const Review& r : part->reviews()) out.add(r);
  return out;
}

std::vector<Corpus> split_by_dataset(const Corpus& corpus) {
  std::vector<Corpus> out;
  for (Dataset d : kAllDatasets) {
    Corpus part(std::string(dataset_name(d)));
    for (const Review& r : corpus.reviews())
      if (r.dataset == d) part.add(r);
    if (!part.empty()) out.push_back(std::move(part));
  }
  return out;
}

}  // namespace senti
