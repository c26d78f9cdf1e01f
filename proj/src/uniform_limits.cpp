#include "askey/uniform_limits.hpp"

#include <array>

namespace askey {

namespace {

constexpr unsigned kD = kDInfinite, kNu = kNuInfinite, kB = kBInfinite, kA = kAlphaInfinite;

constexpr std::array<SpecializationRow, 16> kRows{{
    {0, FamilyTag::Racah},
    {kD, FamilyTag::Hahn},
    {kNu, FamilyTag::Jacobi},
    {kB, FamilyTag::Meixner},
    {kA, FamilyTag::Krawtchouk},
    {kD | kNu, FamilyTag::Jacobi},
    {kD | kB, FamilyTag::Meixner},
    {kD | kA, FamilyTag::Krawtchouk},
    {kNu | kB, FamilyTag::Laguerre},
    {kNu | kA, FamilyTag::Hermite},
    {kB | kA, FamilyTag::Charlier},
    {kD | kNu | kB, FamilyTag::Laguerre},
    {kD | kNu | kA, FamilyTag::Hermite},
    {kD | kB | kA, FamilyTag::Charlier},
    {kNu | kB | kA, FamilyTag::Hermite},
    {kD | kNu | kB | kA, FamilyTag::Hermite},
}};

// Canonical name order.
constexpr std::array<std::pair<unsigned, std::string_view>, 4> kNames{{
    {kD, "d"}, {kNu, "nu"}, {kB, "b"}, {kA, "alpha"}}};

}  // namespace

std::string SpecializationRow::name() const {
  if (zero_set == 0) return "interior";
  std::string out;
  for (const auto& [bit, label] : kNames) {
    if (!(zero_set & bit)) continue;
    if (!out.empty()) out += ',';
    out += label;
  }
  return out + "=inf";
}

std::span<const SpecializationRow> theorem_rows() { return kRows; }

unsigned parse_zero_set(std::string_view name) {
  if (name == "interior") return 0;
  constexpr std::string_view suffix = "=inf";
  if (name.size() <= suffix.size() || name.substr(name.size() - suffix.size()) != suffix) {
    throw ParseError("row name '" + std::string(name) + "' must be 'interior' or end in =inf");
  }
  std::string_view body = name.substr(0, name.size() - suffix.size());
  unsigned zs = 0;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    unsigned bit = 0;
    for (const auto& [b, label] : kNames) {
      if (item == label) bit = b;
    }
    if (bit == 0) throw ParseError("unknown parameter '" + std::string(item) + "' in row name");
    if (zs & bit) throw ParseError("parameter '" + std::string(item) + "' repeated in row name");
    zs |= bit;
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return zs;
}

std::optional<SpecializationRow> find_row(std::string_view name) {
  unsigned zs = 0;
  try {
    zs = parse_zero_set(name);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  for (const auto& row : kRows) {
    if (row.zero_set == zs) return row;
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out{"jacobi-symmetric-to-hermite", "jacobi-to-laguerre",
                               "laguerre-to-hermite", "jacobi-uniform-diagonal",
                               "jacobi-uniform-alpha-axis"};
  for (const auto& row : kRows) {
    if (row.zero_set != 0) out.push_back("row:" + row.name());
  }
  return out;
}

}  // namespace askey
