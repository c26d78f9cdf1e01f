#include "askey/oracle.hpp"

#include <charconv>
#include <istream>
#include <string>

namespace askey {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double field(std::string_view text, std::size_t line) {
  text = trim(text);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("measure CSV line " + std::to_string(line) + ": cannot parse '" +
                     std::string(text) + "'");
  }
  return v;
}

}  // namespace

DiscreteMeasure<double> read_discrete_measure_csv(std::istream& in) {
  std::vector<double> points, weights;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("measure CSV line " + std::to_string(line) + ": expected 'point,weight'");
    }
    // Optional header.
    if (points.empty() && trim(s.substr(0, comma)) == "point") continue;
    points.push_back(field(s.substr(0, comma), line));
    weights.push_back(field(s.substr(comma + 1), line));
  }
  return DiscreteMeasure<double>(std::move(points), std::move(weights));
}

}  // namespace askey
