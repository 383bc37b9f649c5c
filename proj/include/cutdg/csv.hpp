#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cutdg {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// RFC 4180 style writer: header row first, fields quoted only when needed.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(std::int64_t v);
  CsvWriter& operator<<(std::uint64_t v);
  CsvWriter& operator<<(int v) { return *this << static_cast<std::int64_t>(v); }
  CsvWriter& operator<<(std::string_view s);
  /// Terminates the row; throws std::logic_error on a field count mismatch.
  void end_row();

 private:
  void field(std::string_view text, bool raw);

  std::ostream& os_;
  std::size_t columns_;
  std::size_t current_ = 0;
};

}  // namespace cutdg
