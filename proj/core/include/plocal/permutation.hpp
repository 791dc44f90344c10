#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plocal {

/// Points are stored 0-based; cycle notation in and out is 1-based.
using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Products apply the left factor first:
/// (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// Throws InvalidPermutation unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Parses cycle notation such as "(1 2)(3 4)"; cycles are multiplied left
  /// to right. Throws ParseError or OutOfRangePoint.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Relabels point x as x + offset on a point set of size `degree`.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

/// Largest point mentioned in a cycle string (1-based), or 0 for "()".
std::size_t max_point_in_cycles(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace plocal
