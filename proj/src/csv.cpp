#include "cutdg/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace cutdg {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), columns_(header.size()) {
  for (const auto& h : header) *this << std::string_view(h);
  end_row();
}

void CsvWriter::field(std::string_view text, bool raw) {
  if (current_ == columns_) {
    throw std::logic_error("CSV row has more fields than the header");
  }
  if (current_ > 0) os_ << ',';
  ++current_;
  if (raw || text.find_first_of(",\"\r\n") == std::string_view::npos) {
    os_ << text;
    return;
  }
  os_ << '"';
  for (char c : text) {
    if (c == '"') os_ << '"';
    os_ << c;
  }
  os_ << '"';
}

CsvWriter& CsvWriter::operator<<(double v) {
  field(format_double(v), true);
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::int64_t v) {
  field(std::to_string(v), true);
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::uint64_t v) {
  field(std::to_string(v), true);
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::string_view s) {
  field(s, false);
  return *this;
}

void CsvWriter::end_row() {
  if (current_ != columns_) {
    throw std::logic_error("CSV row has fewer fields than the header");
  }
  os_ << "\r\n";
  current_ = 0;
}

}  // namespace cutdg
