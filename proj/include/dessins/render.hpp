#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/fuchsian.hpp"
#include "dessins/hypgeom.hpp"

namespace dessins {

using Point = std::complex<double>;

/// Geodesic segment of the unit disk: an arc of a circle orthogonal to the
/// unit circle, or a straight segment when it nearly passes the origin.
struct GeodesicArc {
  Point from, to;
  bool straight = false;
  Point center;
  double radius = 0;
};

GeodesicArc geodesic_arc(Point from, Point to);

/// Midpoint in the hyperbolic metric, computed by moving `from` to 0.
Point hyperbolic_midpoint(Point from, Point to);

enum class Layer { quad, face, edge };

struct Tile {
  Label label;
  CMat2<double> placement;
  /// Placed w_b, w_c, x(w_b), w_a.
  std::array<Point, 4> corners;
};

struct FacePolygon {
  Label entry;
  /// 2k points alternating white and black vertices.
  std::vector<Point> vertices;
};

struct EdgeSegment {
  Label label;
  Point white, black;
  std::size_t component;
};

struct SceneChecks {
  double orthogonality = 0;  // worst | |c|^2 - r^2 - 1 | and midpoint offset
  double coincidence = 0;    // worst shared-corner mismatch along tree edges
  double radius = 0;         // base face radii against the closed forms
};

struct RenderScene {
  std::size_t a = 0, b = 0, c = 0;
  std::vector<Tile> tiles;  // in tree order
  std::vector<FacePolygon> faces;
  std::vector<EdgeSegment> edges;
  std::vector<std::string> palette;
  SceneChecks checks;
};

/// Places one copy of the base quadrilateral per label along the face-first
/// spanning tree, with the face centre of label 1 at the origin. Throws
/// Error("placement_invariant") when a geometric check exceeds 1e-6.
RenderScene build_scene(const Dessin& d);

struct RenderOptions {
  double size = 800;  // pixels
  bool quads = true;
  bool faces = true;
  bool edges = true;
};

/// SVG 1.1 document; coordinates are unit-disk values under a scaling
/// transform with the y axis pointing up.
std::string render_svg(const RenderScene& scene, const RenderOptions& options = {});
std::string render_svg(const Dessin& d, const RenderOptions& options = {});

}  // namespace dessins
