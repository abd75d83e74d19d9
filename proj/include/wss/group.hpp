#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wss/element_set.hpp"
#include "wss/perm.hpp"

namespace wss {

inline constexpr std::size_t kDefaultGroupCap = 2000;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// True when n = p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// A closed permutation group with its multiplication table.
///
/// Elements are sorted lexicographically by image tuple, so the identity is
/// always element 0. Copies share the same immutable data; two Group values
/// describe the same parent iff same_as() holds.
class Group {
 public:
  Group() = default;

  std::size_t degree() const noexcept { return d_->degree; }
  std::size_t order() const noexcept { return d_->elements.size(); }
  const std::vector<Perm>& generators() const noexcept { return d_->generators; }
  /// Generators as element indices, in the order given to close_generators.
  const std::vector<Elem>& generator_indices() const noexcept { return d_->generator_indices; }
  const std::vector<Perm>& elements() const noexcept { return d_->elements; }
  const Perm& element(Elem e) const { return d_->elements[e]; }
  std::optional<Elem> index_of(const Perm& p) const;
  const std::vector<PrimePower>& prime_factorization() const noexcept { return d_->factorization; }

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return d_->table[static_cast<std::size_t>(a) * order() + b]; }
  Elem inv(Elem a) const noexcept { return d_->inverses[a]; }
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inv(g), x), g); }
  Elem power(Elem a, std::uint64_t k) const noexcept;
  std::uint64_t element_order(Elem a) const noexcept { return d_->orders[a]; }

  bool same_as(const Group& other) const noexcept { return d_ == other.d_; }
  explicit operator bool() const noexcept { return static_cast<bool>(d_); }

  friend Group close_generators(std::size_t degree, std::vector<Perm> gens, std::size_t cap);

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Perm> generators;
    std::vector<Elem> generator_indices;
    std::vector<Perm> elements;
    std::vector<Elem> table;
    std::vector<Elem> inverses;
    std::vector<std::uint64_t> orders;
    std::vector<PrimePower> factorization;
    std::unordered_map<Perm, Elem, PermHash> lookup;
  };
  std::shared_ptr<const Data> d_;
};

/// Smallest group containing `gens`; deterministic element order. Throws
/// CapExceeded as soon as the closure would pass `cap` elements and
/// std::invalid_argument when a generator has the wrong degree.
Group close_generators(std::size_t degree, std::vector<Perm> gens, std::size_t cap = kDefaultGroupCap);

}  // namespace wss
