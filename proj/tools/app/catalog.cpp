#include "catalog.hpp"

#include <algorithm>
#include <charconv>

#include "plocal/errors.hpp"

namespace plocal::app {

namespace {

constexpr std::size_t kMaxCatalogDegree = 6;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

Permutation cycle(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = first; i < last; ++i) images[i] = static_cast<Point>(i + 1);
  images[last] = static_cast<Point>(first);
  return Permutation::from_images(std::move(images));
}

GroupSpec symmetric(std::size_t n) {
  if (n < 1 || n > kMaxCatalogDegree) throw Error("sym:n needs 1 <= n <= 6");
  GroupSpec g{"", n, {}};
  if (n >= 2) g.generators.push_back(cycle(n, 0, 1));
  if (n >= 3) g.generators.push_back(cycle(n, 0, n - 1));
  return g;
}

GroupSpec alternating(std::size_t n) {
  if (n < 1 || n > kMaxCatalogDegree) throw Error("alt:n needs 1 <= n <= 6");
  GroupSpec g{"", n, {}};
  for (std::size_t i = 3; i <= n; ++i) {
    g.generators.push_back(Permutation::from_cycles("(1 2 " + std::to_string(i) + ")", n));
  }
  return g;
}

GroupSpec cyclic(std::size_t n) {
  if (n < 1) throw Error("cyc:n needs n >= 1");
  GroupSpec g{"", n, {}};
  if (n >= 2) g.generators.push_back(cycle(n, 0, n - 1));
  return g;
}

GroupSpec dihedral(std::size_t m) {
  if (m < 4 || m % 2 != 0) throw Error("dih:m needs an even order m >= 4");
  const std::size_t n = m / 2;
  if (n == 2) {
    return {"", 4, {Permutation::from_cycles("(1 2)(3 4)", 4), Permutation::from_cycles("(1 3)(2 4)", 4)}};
  }
  GroupSpec g{"", n, {cycle(n, 0, n - 1)}};
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(n - 1 - i);
  g.generators.push_back(Permutation::from_images(std::move(images)));
  return g;
}

GroupSpec explicit_generators(std::string_view body) {
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) throw Error("gens:n:<cycles>;... expected");
  GroupSpec g{"", parse_size(body.substr(0, colon), "degree"), {}};
  if (g.degree < 1) throw Error("degree must be positive");
  std::string_view rest = body.substr(colon + 1);
  while (!trim(rest).empty()) {
    const auto semi = rest.find(';');
    g.generators.push_back(Permutation::from_cycles(trim(rest.substr(0, semi)), g.degree));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  return g;
}

GroupSpec factor(std::string_view text) {
  text = trim(text);
  if (text == "triv") return {"", 1, {}};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("unknown group '" + std::string(text) + "'");
  const auto family = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (family == "gens") return explicit_generators(arg);
  const std::size_t n = parse_size(arg, "group parameter");
  if (family == "sym") return symmetric(n);
  if (family == "alt") return alternating(n);
  if (family == "cyc") return cyclic(n);
  if (family == "dih") return dihedral(n);
  throw Error("unknown group family '" + std::string(family) + "'");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec out;
  out.text = std::string(trim(text));
  out.degree = 0;
  std::string_view rest = out.text;
  while (true) {
    const auto sep = rest.find(" x ");
    GroupSpec f = factor(rest.substr(0, sep));
    for (const auto& g : f.generators) out.generators.push_back(g.shifted(out.degree, out.degree + f.degree));
    out.degree += f.degree;
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + 3);
  }
  std::vector<Permutation> gens;
  for (auto& g : out.generators) gens.push_back(g.extended(out.degree));
  out.generators = std::move(gens);
  return out;
}

GroupPtr build_group(const GroupSpec& spec, std::size_t order_bound) {
  return PermutationGroup::enumerate(spec.degree, spec.generators, order_bound);
}

Permutation parse_cycles(std::string_view text) {
  return Permutation::from_cycles(text, std::max<std::size_t>(1, max_point_in_cycles(text)));
}

std::vector<CatalogFamily> catalog_families() {
  return {
      {"sym:n", "symmetric group on n points, n <= 6"},
      {"alt:n", "alternating group on n points, n <= 6"},
      {"cyc:n", "cyclic group of order n"},
      {"dih:m", "dihedral group of order m (m even, m >= 4)"},
      {"triv", "trivial group"},
      {"gens:n:<c1>;<c2>;...", "group on n points generated by permutations in cycle notation"},
      {"<A> x <B>", "direct product of any of the above"},
  };
}

std::vector<std::string> acceptance_groups() {
  return {"sym:3", "sym:4", "alt:4", "dih:8", "dih:12", "cyc:6", "sym:3 x cyc:3"};
}

}  // namespace plocal::app
