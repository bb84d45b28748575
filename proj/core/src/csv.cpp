#include "cbpsk/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace cbpsk {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) {
    throw std::invalid_argument("format_double: value not representable");
  }
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& t) {
  std::string out;
  out.reserve(256 + t.rows.size() * (t.columns.size() + 1) * 16);
  for (const auto& [key, value] : t.metadata) {
    out += "# ";
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("to_csv: row width does not match header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cbpsk
