#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

/// A dessin d'enfant given by its permutation representation: sigma0 rotates
/// the edges around white vertices, sigma1 around black vertices. The pair
/// always generates a transitive group.
class Dessin {
 public:
  /// Throws Error("degree_mismatch") or Error("intransitive").
  Dessin(Permutation sigma0, Permutation sigma1);

  std::size_t degree() const noexcept { return sigma0_.degree(); }
  const Permutation& sigma0() const noexcept { return sigma0_; }
  const Permutation& sigma1() const noexcept { return sigma1_; }
  /// Face rotation, the inverse of compose(sigma1, sigma0).
  const Permutation& sigma_inf() const noexcept { return sigma_inf_; }

  friend bool operator==(const Dessin& a, const Dessin& b) {
    return a.sigma0_ == b.sigma0_ && a.sigma1_ == b.sigma1_;
  }

 private:
  Permutation sigma0_;
  Permutation sigma1_;
  Permutation sigma_inf_;
};

Dessin make_dessin(std::size_t degree, std::string_view sigma0_cycles,
                   std::string_view sigma1_cycles);

Permutation sigma_infinity(const Dessin& d);

struct Passport {
  std::vector<std::size_t> white_degrees;  // sorted ascending
  std::vector<std::size_t> black_degrees;
  std::vector<std::size_t> face_degrees;
  std::array<std::size_t, 3> type_triple{};  // lcm of each multiset
  std::size_t degree = 0;

  friend bool operator==(const Passport&, const Passport&) = default;
};

Passport passport(const Dessin& d);

/// From 2g - 2 = E - W - B - F.
std::size_t genus(const Dessin& d);

struct DessinClassification {
  std::size_t genus = 0;
  bool is_clean = false;
  bool is_uniform = false;
  bool is_regular = false;
  BigInt monodromy_order = 1;
};

DessinClassification classify(const Dessin& d);

bool is_uniform(const Dessin& d);
bool is_clean(const Dessin& d);

/// Relabeling-invariant encoding; equal for two dessins iff they are
/// equivalent. Each label is written as 4 big-endian bytes after a degree
/// prefix, so byte order agrees with numeric order.
std::string canonical_form(const Dessin& d);

bool are_equivalent(const Dessin& a, const Dessin& b);

/// (tau sigma0 tau^-1, tau sigma1 tau^-1).
Dessin conjugate(const Dessin& d, const Permutation& tau);

/// Human-readable passport, e.g. "(2^8; 4^4; 8^2)".
std::string passport_string(const Passport& p);

}  // namespace dessins
