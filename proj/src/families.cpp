#include "askey/families.hpp"

#include <charconv>
#include <map>
#include <set>
#include <string>

namespace askey {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("cannot parse " + std::string(what) + " value '" + std::string(text) + "'");
  }
  return value;
}

std::map<std::string, double, std::less<>> parse_assignments(std::string_view family,
                                                             std::string_view body) {
  std::map<std::string, double, std::less<>> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(std::string(family) + ": expected name=value, got '" + std::string(item) +
                       "'");
    }
    std::string key(item.substr(0, eq));
    if (out.count(key)) throw ParseError(std::string(family) + ": duplicate parameter " + key);
    out.emplace(key, parse_number(item.substr(eq + 1), key));
  }
  return out;
}

double take(std::map<std::string, double, std::less<>>& kv, std::string_view family,
            const char* key) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw ParseError(std::string(family) + ": missing parameter " + key);
  }
  const double v = it->second;
  kv.erase(it);
  return v;
}

}  // namespace

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Hermite: return "hermite";
    case FamilyTag::Laguerre: return "laguerre";
    case FamilyTag::Jacobi: return "jacobi";
    case FamilyTag::Racah: return "racah";
    case FamilyTag::Hahn: return "hahn";
    case FamilyTag::Meixner: return "meixner";
    case FamilyTag::Krawtchouk: return "krawtchouk";
    case FamilyTag::Charlier: return "charlier";
  }
  return "unknown";
}

FamilyId parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view body =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto kv = parse_assignments(name, body);

  FamilyId result;
  if (name == "hermite") {
    result = HermiteParams<>{};
  } else if (name == "laguerre") {
    result = LaguerreParams<>{take(kv, name, "alpha")};
  } else if (name == "jacobi") {
    const double a = take(kv, name, "alpha");
    result = JacobiParams<>{a, take(kv, name, "beta")};
  } else if (name == "racah") {
    const double a = take(kv, name, "alpha");
    const double b = take(kv, name, "beta");
    const double d = take(kv, name, "delta");
    result = RacahParams<>{a, b, d, take(kv, name, "N")};
  } else if (name == "hahn") {
    const double a = take(kv, name, "alpha");
    const double b = take(kv, name, "beta");
    result = HahnParams<>{a, b, take(kv, name, "N")};
  } else if (name == "meixner") {
    const double b = take(kv, name, "beta");
    result = MeixnerParams<>{b, take(kv, name, "c")};
  } else if (name == "krawtchouk") {
    const double p = take(kv, name, "p");
    result = KrawtchoukParams<>{p, take(kv, name, "N")};
  } else if (name == "charlier") {
    result = CharlierParams<>{take(kv, name, "a")};
  } else {
    throw ParseError("unknown family '" + std::string(name) + "'");
  }
  if (!kv.empty()) {
    throw ParseError(std::string(name) + ": unknown parameter " + kv.begin()->first);
  }
  return result;
}

std::string format_family(const FamilyId& family) {
  auto kv = [](const char* k, double v) { return std::string(k) + "=" + number_string(v); };
  return std::visit(
      [&](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HermiteParams<>>) {
          return "hermite";
        } else if constexpr (std::is_same_v<P, LaguerreParams<>>) {
          return "laguerre:" + kv("alpha", p.alpha);
        } else if constexpr (std::is_same_v<P, JacobiParams<>>) {
          return "jacobi:" + kv("alpha", p.alpha) + "," + kv("beta", p.beta);
        } else if constexpr (std::is_same_v<P, RacahParams<>>) {
          return "racah:" + kv("alpha", p.alpha) + "," + kv("beta", p.beta) + "," +
                 kv("delta", p.delta) + "," + kv("N", p.n_big);
        } else if constexpr (std::is_same_v<P, HahnParams<>>) {
          return "hahn:" + kv("alpha", p.alpha) + "," + kv("beta", p.beta) + "," +
                 kv("N", p.n_big);
        } else if constexpr (std::is_same_v<P, MeixnerParams<>>) {
          return "meixner:" + kv("beta", p.beta) + "," + kv("c", p.c);
        } else if constexpr (std::is_same_v<P, KrawtchoukParams<>>) {
          return "krawtchouk:" + kv("p", p.p) + "," + kv("N", p.n_big);
        } else {
          return "charlier:" + kv("a", p.a);
        }
      },
      family);
}

}  // namespace askey
