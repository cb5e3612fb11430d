#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dessins {

using Label = std::uint32_t;
using Cycle = std::vector<Label>;
using BigInt = boost::multiprecision::cpp_int;

/// A bijection of {1..E}. All public accessors speak 1-based labels; storage
/// is 0-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// images[i] is the image of label i+1 (1-based values).
  static Permutation from_images(std::vector<Label> images);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<Cycle>& cycles);
  /// Cycle notation such as "(1,16)(2,15)"; whitespace is ignored and "()"
  /// denotes the identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return map_.size(); }

  Label operator()(Label label) const { return map_[label - 1] + 1; }

  // 0-based access for hot loops.
  Label image0(std::size_t i) const noexcept { return map_[i]; }
  std::span<const Label> images0() const noexcept { return map_; }

  /// 1-based image sequence.
  std::vector<Label> images() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  explicit Permutation(std::vector<Label> zero_based)
      : map_(std::move(zero_based)) {}
  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<Label> map_;
};

/// compose(p, q)(i) = p(q(i)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Permutation power(const Permutation& p, long long n);

struct CycleStructure {
  /// Each cycle starts at its minimal label; cycles sorted by that label;
  /// fixed points appear as 1-cycles.
  std::vector<Cycle> cycles;
  /// Sorted ascending.
  std::vector<std::size_t> cycle_type;
};

CycleStructure cycle_decomposition(const Permutation& p);
std::vector<std::size_t> cycle_type(const Permutation& p);
std::size_t cycle_count(const Permutation& p);
/// lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);

/// Cycle notation with fixed points written out, e.g. "(1)(2,3,4)".
std::string to_cycle_string(const Permutation& p);

std::vector<std::vector<Label>> orbits(std::span<const Permutation> generators);
bool is_transitive(std::span<const Permutation> generators);

/// Exact order of <generators> via a Schreier-Sims stabilizer chain.
BigInt group_order(std::span<const Permutation> generators);

/// Uniformly random permutation (Fisher-Yates over rng()).
template <class Rng>
Permutation random_permutation(std::size_t degree, Rng& rng) {
  std::vector<Label> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Label>(i + 1);
  for (std::size_t i = degree; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace dessins
