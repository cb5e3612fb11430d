#pragma once

#include <random>
#include <string>

#include "dessins/dessin.hpp"
#include "dessins/error.hpp"
#include "oracle.hpp"

namespace test {

inline oracle::Perm bridge(const dessins::Permutation& p) {
  oracle::Perm out{0};
  for (dessins::Label v : p.images()) out.push_back(static_cast<int>(v));
  return out;
}

inline dessins::Permutation bridge(const oracle::Perm& p) {
  std::vector<dessins::Label> images(p.begin() + 1, p.end());
  return dessins::Permutation::from_images(images);
}

/// Random transitive pair of the given degree (rejection sampling).
template <class Rng>
dessins::Dessin random_dessin(std::size_t degree, Rng& rng) {
  for (;;) {
    auto a = dessins::random_permutation(degree, rng);
    auto b = dessins::random_permutation(degree, rng);
    if (oracle::transitive(bridge(a), bridge(b))) return dessins::Dessin(a, b);
  }
}

/// Code of the dessins::Error thrown by f, or "" if none.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const dessins::Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace test
