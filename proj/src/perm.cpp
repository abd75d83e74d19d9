#include "wss/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "wss/errors.hpp"

namespace wss {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[x] = true;
  }
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  Perm result(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, pos + 1); };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) {
          pos = start;
          fail("point exceeds degree " + std::to_string(degree));
        }
        ++pos;
      }
      if (value == 0) {
        pos = start;
        fail("points are 1-based");
      }
      Point point = static_cast<Point>(value - 1);
      for (Point seen : cycle) {
        if (seen == point) {
          pos = start;
          fail("point repeated within a cycle");
        }
      }
      cycle.push_back(point);
    }
    if (cycle.size() > 1) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      result = compose(result, Perm(std::move(images)));
    }
    skip_ws();
  }
  return result;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    Point x = start;
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

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  }
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = q.images_[p.images_[x]];
  return Perm(Perm::Unchecked{}, std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[p.images_[x]] = static_cast<Point>(x);
  return Perm(Perm::Unchecked{}, std::move(images));
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t order = 1;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t length = 0;
    for (Point x = start; !done[x]; x = p(x)) {
      done[x] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wss
