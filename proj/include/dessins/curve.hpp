#pragma once

#include <cstddef>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/hypgeom.hpp"

namespace dessins {

/// A filling multicurve read off a uniform dessin: each component is the
/// cyclic sequence of dessin edges met while walking straight through every
/// black vertex.
struct CurveSystem {
  std::vector<Cycle> components;
  std::size_t r = 0;
  std::size_t m = 0;  // half the black degree
  std::size_t l = 1;  // half the white degree (1 when clean)
};

/// Straight-through traversal. Requires a uniform dessin with even white and
/// black degrees.
CurveSystem decompose(const Dessin& d);

/// The walk's step permutation sigma1^m sigma0^l for a uniform dessin.
Permutation straight_through(const Dessin& d);

/// Half the cycle count of sigma1^m sigma0^l; independent of decompose().
std::size_t component_count_from_cycles(const Dessin& d);

/// True iff sigma1^m sigma0 is two cycles of length E/2. Requires a clean
/// uniform dessin.
bool is_filling_curve(const Dessin& d);

/// Every black vertex has degree 4. Requires a clean dessin.
bool is_general_position(const Dessin& d);

/// (sigma0, sigma_inf): swaps black vertices and faces.
Dessin dual(const Dessin& d);

/// Medial surgery: edge e splits into halves e and E+e joined by a new white
/// vertex; all old vertices become black.
Dessin medial(const Dessin& d);

/// Minimal total length of the multicurve of a uniform dessin: the clean
/// formula with d = E/2 arcs when white degrees are 2, otherwise the
/// bipartite one with d = E.
LengthReport<double> min_length(const Dessin& d);

}  // namespace dessins
