#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace senti::csv {

// RFC 4180 record reader. Accepts LF and CRLF row endings and quoted fields
// containing commas, doubled quotes, and embedded newlines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads one record into fields; returns false at end of input. Throws
  // IoError on an unterminated quoted field (detectable only at EOF).
  bool next(std::vector<std::string>& fields);

  // 1-based number of the record most recently returned.
  std::size_t record_number() const { return record_number_; }

 private:
  std::istream& in_;
  std::size_t record_number_ = 0;
};

// Quotes a field iff it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

// Writes one record terminated by a single LF.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace senti::csv

namespace senti {

// Writes via a temp file in the target directory, then renames into place,
// so a failed run never leaves a partial output behind.
void atomic_write(const std::string& path,
                  const std::function<void(std::ostream&)>& writer);

}  // namespace senti
