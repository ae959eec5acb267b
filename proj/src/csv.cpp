#include "senti/csv.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

#include "senti/errors.hpp"

namespace senti::csv {

bool Reader::next(std::vector<std::string>& fields) {
  fields.clear();
  int c = in_.get();
  if (c == EOF) return false;
  ++record_number_;

  std::string field;
  bool in_quotes = false;
  bool quoted_field = false;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    quoted_field = false;
  };

  while (true) {
    if (c == EOF) {
      if (in_quotes)
        throw IoError("csv: unterminated quoted field in record " +
                      std::to_string(record_number_));
      end_field();
      return true;
    }
    const char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        const int peek = in_.peek();
        if (peek == '"') {
          in_.get();
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"' && field.empty() && !quoted_field) {
      in_quotes = true;
      quoted_field = true;
    } else if (ch == ',') {
      end_field();
    } else if (ch == '\n') {
      end_field();
      return true;
    } else if (ch == '\r' && in_.peek() == '\n') {
      in_.get();
      end_field();
      return true;
    } else {
      field += ch;
    }
    c = in_.get();
  }
}

std::string escape(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace senti::csv

namespace senti {

void atomic_write(const std::string& path,
                  const std::function<void(std::ostream&)>& writer) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    writer(out);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename " + tmp.string() + " to " + target.string() +
                  ": " + ec.message());
  }
}

}  // namespace senti
