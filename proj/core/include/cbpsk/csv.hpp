#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cbpsk {

// Column-major-typed, row-major-stored numeric table with a key/value
// metadata block.  Rendering is fully deterministic: floats are emitted in
// their shortest round-trip decimal form and lines end in LF.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Shortest decimal representation that parses back to exactly this double.
std::string format_double(double v);

// Renders metadata as '#'-prefixed "key = value" lines, then the header row,
// then the data rows.  Throws std::invalid_argument on ragged rows.
std::string to_csv(const Table& t);

}  // namespace cbpsk
