#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

enum class SurgeryCase { same_face, different_faces };

inline const char* to_string(SurgeryCase c) {
  return c == SurgeryCase::same_face ? "same_face" : "different_faces";
}

struct FaceDegreeChange {
  std::size_t old_degree;
  std::size_t new_degree;
};

struct SurgeryOutcome {
  Dessin result;
  SurgeryCase face_case;
  /// Only the faces whose degree changed, ordered by increase.
  std::vector<FaceDegreeChange> face_degree_delta;
};

/// Genus-raising surgery on a dessin whose white vertices all have degree 2
/// and black vertices all have degree 4. (a, b) must be a 2-cycle of sigma0
/// with a and b in different 4-cycles of sigma1. Eight edges E+1..E+8 are
/// added exactly as
///   sigma0~ = sigma0' (a,E+5)(E+1,E+6)(E+2,E+7)(E+3,E+8)(E+4,b)
///   sigma1~ = sigma1 (E+5,E+1,E+3,E+7)(E+4,E+2,E+6,E+8)
/// where sigma0' drops (a,b). Every structural invariant is rechecked and a
/// violation throws Error("invariant_violation").
SurgeryOutcome apply_surgery(const Dessin& d, Label a, Label b);

/// Candidate (a, b) pairs in lexicographic order of (min, max); each pair is
/// listed with a < b first and then swapped.
std::vector<std::pair<Label, Label>> surgery_candidates(const Dessin& d);

/// Starting dessins for genus/face pairs (2,1), (2,2), (3,2), (4,3).
Dessin seed_dessin(std::size_t genus, std::size_t faces);

/// Repeated surgery up to `target_genus`, one surgery per step for n = 1, two
/// for n = 2, three for n = 3, each block ending in a uniform filling curve.
/// Throws Error("search_exhausted") when no candidate sequence works.
Dessin grow(const Dessin& d, std::size_t target_genus, std::size_t faces);

/// Same as grow() but also returns the dessin reached after every block.
std::vector<Dessin> grow_trace(const Dessin& d, std::size_t target_genus,
                               std::size_t faces);

}  // namespace dessins
