#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wss {

using Point = std::uint32_t;

/// A bijection of {0..degree-1}, stored as its image array.
///
/// Points are 0-based in memory and 1-based in cycle notation. Products are
/// read left to right: compose(p, q) applies p first, then q.
class Perm {
 public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);

  /// Parses a product of cycles such as "(1 2)(3 4 5)" or "(1,2,3)"; "()" is
  /// the identity. Adjacent cycles are multiplied left to right.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// Disjoint-cycle form, 1-based, e.g. "(1 2)(3 4)"; identity prints "()".
  std::string to_cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// x -> q(p(x)). Throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }
Perm inverse(const Perm& p);
/// Least k >= 1 with p^k = identity (lcm of the cycle lengths).
std::uint64_t element_order(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace wss
