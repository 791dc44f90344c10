#include "plocal/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "plocal/errors.hpp"

namespace plocal {

namespace {

struct CycleToken {
  std::vector<std::vector<std::size_t>> cycles;  // 1-based points
};

CycleToken tokenize_cycles(std::string_view text) {
  CycleToken out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty permutation text", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      }
      std::size_t value = 0;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > std::numeric_limits<Point>::max()) throw ParseError("point too large", start);
        ++i;
      }
      if (value == 0) throw OutOfRangePoint("point 0 at position " + std::to_string(start));
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end()) {
        throw ParseError("repeated point " + std::to_string(value) + " in cycle", start);
      }
      cycle.push_back(value);
    }
    out.cycles.push_back(std::move(cycle));
    skip_space();
  }
  return out;
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) throw InvalidPermutation("images do not form a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  if (degree > std::numeric_limits<Point>::max()) throw InvalidPermutation("degree too large");
  const CycleToken tokens = tokenize_cycles(text);
  Permutation result = identity(degree);
  for (const auto& cycle : tokens.cycles) {
    std::vector<Point> images = identity(degree).images_;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t from = cycle[k];
      const std::size_t to = cycle[(k + 1) % cycle.size()];
      if (from > degree || to > degree) {
        throw OutOfRangePoint("point " + std::to_string(std::max(from, to)) + " exceeds degree " +
                              std::to_string(degree));
      }
      images[from - 1] = static_cast<Point>(to - 1);
    }
    result = result * Permutation(std::move(images));
  }
  return result;
}

std::size_t max_point_in_cycles(std::string_view text) {
  std::size_t best = 0;
  for (const auto& cycle : tokenize_cycles(text).cycles) {
    for (std::size_t x : cycle) best = std::max(best, x);
  }
  return best;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw InvalidPermutation("cannot shrink a permutation");
  Permutation out = identity(degree);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree) throw InvalidPermutation("shift exceeds degree");
  Permutation out = identity(degree);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i + offset] = static_cast<Point>(images_[i] + offset);
  }
  return out;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidPermutation("degree mismatch in product");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace plocal
