#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

/// Clean uniform type (2, 2m, k).
struct CleanType {
  std::size_t m = 0;
  std::size_t k = 0;

  std::array<std::size_t, 3> triple() const { return {2, 2 * m, k}; }
};

/// Parses "2,4,12"; the first entry must be 2.
CleanType parse_clean_type(std::string_view text);

/// Degree E with E (1 - 1/2 - 1/2m - 1/k) = 2g - 2; throws Error("non_integral")
/// when no uniform dessin of that type and genus can exist.
std::size_t degree_for(CleanType type, std::size_t genus);

struct EnumerationResult {
  CleanType type;
  std::size_t genus = 0;
  std::size_t degree = 0;
  /// One representative per equivalence class, sorted by canonical form.
  std::vector<Dessin> classes;
  std::size_t filling_count = 0;
  /// component count r -> number of classes
  std::map<std::size_t, std::size_t> component_histogram;
};

struct EnumerateOptions {
  std::size_t jobs = 1;
  /// Called as (finished subtrees, total subtrees) from worker threads.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Complete list of clean uniform dessins of the given type and genus up to
/// equivalence. Dessins are grown label by label in breadth-first discovery
/// order (sigma0 before sigma1), so each class is generated once per base
/// edge; partial vertex and face cycles are pruned against 2m and k.
EnumerationResult enumerate_uniform(CleanType type, std::size_t genus,
                                    const EnumerateOptions& options = {});

/// Slower second route: sigma1 fixed to (1..2m)(2m+1..4m)..., backtracking
/// over fixed-point-free involutions sigma0 with face-length pruning, dedupe
/// by canonical form. `reverse_order` flips the candidate order. Returns the
/// sorted canonical forms.
std::vector<std::string> enumerate_fixed_black(CleanType type, std::size_t genus,
                                               bool reverse_order = false);

struct ClassSummary {
  std::string passport;
  std::vector<std::size_t> straight_through_cycle_type;  // sigma1^m sigma0
  std::string straight_through;                          // cycle notation
  std::size_t r = 0;
  bool filling = false;
  double min_length = 0;
};

/// One row per class, in the order of res.classes.
std::vector<ClassSummary> summarize(const EnumerationResult& res);

}  // namespace dessins
