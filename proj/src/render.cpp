#include "dessins/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "dessins/curve.hpp"
#include "dessins/error.hpp"

namespace dessins {

namespace {

constexpr double kGeometryTol = 1e-6;
constexpr double kRadiusTol = 1e-9;
constexpr double kStraight = 1e-9;

double cross(Point p, Point q) { return p.real() * q.imag() - p.imag() * q.real(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(v) < 1e-15 ? 0.0 : v);
  return buf;
}

std::string xy(Point p) { return num(p.real()) + "," + num(p.imag()); }

void append_arc(std::string& path, const GeodesicArc& g) {
  if (g.straight) {
    path += " L" + xy(g.to);
    return;
  }
  const int sweep = cross(g.from - g.center, g.to - g.center) > 0 ? 1 : 0;
  path += " A" + num(g.radius) + "," + num(g.radius) + " 0 0 " + std::to_string(sweep) + " " +
          xy(g.to);
}

std::string polygon_path(const std::vector<Point>& pts) {
  std::string path = "M" + xy(pts.front());
  for (std::size_t i = 0; i < pts.size(); ++i)
    append_arc(path, geodesic_arc(pts[i], pts[(i + 1) % pts.size()]));
  return path + " Z";
}

std::string component_color(std::size_t i) {
  static const char* base[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                               "#17becf", "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f"};
  if (i < std::size(base)) return base[i];
  char buf[40];
  std::snprintf(buf, sizeof buf, "hsl(%d,70%%,45%%)", static_cast<int>((i * 137) % 360));
  return buf;
}

double arc_error(const GeodesicArc& g) {
  double err = std::max(0.0, std::max(std::abs(g.from), std::abs(g.to)) - 1.0);
  const Point mid = hyperbolic_midpoint(g.from, g.to);
  if (g.straight) {
    // The midpoint must stay on the chord.
    const Point dir = g.to - g.from;
    return std::max(err, std::abs(cross(mid - g.from, dir)) / std::abs(dir));
  }
  err = std::max(err, std::abs(std::norm(g.center) - g.radius * g.radius - 1.0));
  return std::max(err, std::abs(std::abs(mid - g.center) - g.radius));
}

}  // namespace

GeodesicArc geodesic_arc(Point p, Point q) {
  GeodesicArc g{p, q, false, {}, 0};
  const double chord = std::abs(q - p);
  if (chord == 0 || std::abs(cross(p, q)) / chord < kStraight) {
    g.straight = true;
    return g;
  }
  // Orthogonal circle: 2 Re(conj(c) p) = |p|^2 + 1, same for q.
  const double rp = (std::norm(p) + 1) / 2, rq = (std::norm(q) + 1) / 2;
  const double det = cross(p, q);
  g.center = {(rp * q.imag() - rq * p.imag()) / det, (p.real() * rq - q.real() * rp) / det};
  g.radius = std::sqrt(std::norm(g.center) - 1);
  return g;
}

Point hyperbolic_midpoint(Point p, Point q) {
  // T(z) = (z - p) / (1 - conj(p) z) sends p to 0.
  const Point moved = (q - p) / (1.0 - std::conj(p) * q);
  const double rho = std::abs(moved);
  if (rho == 0) return p;
  const double dist = 2 * std::atanh(rho);
  const Point half = moved / rho * std::tanh(dist / 4);
  return (half + p) / (1.0 + std::conj(p) * half);
}

RenderScene build_scene(const Dessin& d) {
  if (!is_clean(d) || !is_uniform(d))
    throw Error("precondition", "render needs a uniform clean dessin");
  const auto [a, b, c] = passport(d).type_triple;
  require_hyperbolic(a, b, c);
  const TriangleGroup<double> tg = triangle_group_matrices<double>(a, b, c);
  const SpanningTree tree = spanning_tree(d, TreeOrder::face_first);
  const CurveSystem curves = decompose(d);

  RenderScene s;
  s.a = a;
  s.b = b;
  s.c = c;
  const std::size_t n = d.degree();
  std::vector<CMat2<double>> place(n, CMat2<double>::Identity());
  const Point xb = mobius(tg.x_disk, tg.w_b);
  for (Label i : tree.order) {
    if (const Label p = tree.parent[i - 1]; p != 0) {
      const Gen g = tree.via[i - 1];
      place[i - 1] = place[p - 1] * (g == Gen::x ? tg.x_disk : g == Gen::y ? tg.y_disk : tg.z_disk);
    }
    const CMat2<double>& m = place[i - 1];
    s.tiles.push_back({i, m, {mobius(m, tg.w_b), mobius(m, tg.w_c), mobius(m, xb), mobius(m, tg.w_a)}});
  }
  std::vector<std::size_t> tile_of(n);
  for (std::size_t t = 0; t < s.tiles.size(); ++t) tile_of[s.tiles[t].label - 1] = t;

  // Faces: the 2k-gon around the placed w_c of the face's entry label.
  std::vector<bool> face_done(n, false);
  for (Label i : tree.order) {
    if (face_done[i - 1]) continue;
    FacePolygon f{i, {}};
    CMat2<double> m = place[i - 1];
    Label j = i;
    do {
      face_done[j - 1] = true;
      f.vertices.push_back(mobius(m, tg.w_a));
      f.vertices.push_back(mobius(m, tg.w_b));
      m = m * tg.z_disk;
      j = d.sigma_inf()(j);
    } while (j != i);
    s.faces.push_back(std::move(f));
  }

  std::vector<std::size_t> component(n, 0);
  for (std::size_t k = 0; k < curves.components.size(); ++k)
    for (Label e : curves.components[k]) component[e - 1] = k;
  for (Label e = 1; e <= n; ++e) {
    const Tile& t = s.tiles[tile_of[e - 1]];
    s.edges.push_back({e, t.corners[3], t.corners[0], component[e - 1]});
  }
  for (std::size_t k = 0; k < curves.r; ++k) s.palette.push_back(component_color(k));

  // Geometric checks.
  auto track = [](double& worst, double v) { worst = std::max(worst, v); };
  for (const Tile& t : s.tiles)
    for (std::size_t k = 0; k < 4; ++k)
      track(s.checks.orthogonality, arc_error(geodesic_arc(t.corners[k], t.corners[(k + 1) % 4])));
  for (const FacePolygon& f : s.faces)
    for (std::size_t k = 0; k < f.vertices.size(); ++k)
      track(s.checks.orthogonality,
            arc_error(geodesic_arc(f.vertices[k], f.vertices[(k + 1) % f.vertices.size()])));
  for (const Tile& t : s.tiles) {
    const Label p = tree.parent[t.label - 1];
    if (p == 0) continue;
    const Tile& q = s.tiles[tile_of[p - 1]];
    // x shares w_b and x(w_b) swapped; z maps the x(w_b) side onto the w_b side.
    const bool via_x = tree.via[t.label - 1] == Gen::x;
    const std::array<std::pair<int, int>, 2> pairs =
        via_x ? std::array<std::pair<int, int>, 2>{{{0, 2}, {2, 0}}}
              : std::array<std::pair<int, int>, 2>{{{1, 1}, {2, 0}}};
    for (auto [u, v] : pairs) track(s.checks.coincidence, std::abs(t.corners[u] - q.corners[v]));
  }
  const double pi = std::numbers::pi;
  const double m = double(b) / 2, k = double(c);
  const double white_r = std::acosh(std::cos(pi / (2 * m)) / std::sin(pi / k));
  const double black_r = std::acosh(1 / (std::tan(pi / k) * std::tan(pi / (2 * m))));
  const FacePolygon& base = s.faces.front();
  for (std::size_t v = 0; v < base.vertices.size(); ++v)
    track(s.checks.radius,
          std::abs(disk_distance(Point(0), base.vertices[v]) - (v % 2 == 0 ? white_r : black_r)));

  if (s.checks.orthogonality > kGeometryTol || s.checks.coincidence > kGeometryTol ||
      s.checks.radius > kRadiusTol)
    throw Error("placement_invariant",
                "placement check failed: orthogonality " + num(s.checks.orthogonality) +
                    ", coincidence " + num(s.checks.coincidence) + ", radius " +
                    num(s.checks.radius));
  return s;
}

std::string render_svg(const RenderScene& s, const RenderOptions& o) {
  std::ostringstream svg;
  const double half = o.size / 2;
  // Pixel-independent stroke widths in disk units.
  const double unit = 1.0 / half;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(o.size)
      << "\" height=\"" << num(o.size) << "\" viewBox=\"0 0 " << num(o.size) << " " << num(o.size)
      << "\">\n"
      << "<metadata>{\"type\":[" << s.a << "," << s.b << "," << s.c << "],\"quads\":"
      << s.tiles.size() << ",\"faces\":" << s.faces.size() << ",\"components\":"
      << s.palette.size() << ",\"orthogonality\":" << num(s.checks.orthogonality)
      << ",\"coincidence\":" << num(s.checks.coincidence) << "}</metadata>\n"
      << "<g transform=\"translate(" << num(half) << "," << num(half) << ") scale("
      << num(half * 0.98) << "," << num(-half * 0.98) << ")\">\n"
      << "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"#f8f8f8\" stroke=\"#000\" "
         "stroke-width=\""
      << num(2 * unit) << "\"/>\n";
  if (o.quads)
    for (const Tile& t : s.tiles)
      svg << "<path class=\"quad\" data-label=\"" << t.label << "\" d=\""
          << polygon_path({t.corners.begin(), t.corners.end()})
          << "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"" << num(unit) << "\"/>\n";
  if (o.faces)
    for (const FacePolygon& f : s.faces)
      svg << "<path class=\"face\" data-entry=\"" << f.entry << "\" d=\"" << polygon_path(f.vertices)
          << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"" << num(1.5 * unit) << "\"/>\n";
  if (o.edges) {
    for (const EdgeSegment& e : s.edges) {
      std::string path = "M" + xy(e.white);
      append_arc(path, geodesic_arc(e.white, e.black));
      svg << "<path class=\"edge\" data-label=\"" << e.label << "\" data-component=\""
          << e.component << "\" d=\"" << path << "\" fill=\"none\" stroke=\""
          << s.palette[e.component] << "\" stroke-width=\"" << num(3 * unit) << "\"/>\n";
    }
    for (const EdgeSegment& e : s.edges) {
      svg << "<circle class=\"white\" cx=\"" << num(e.white.real()) << "\" cy=\""
          << num(e.white.imag()) << "\" r=\"" << num(4 * unit)
          << "\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"" << num(unit) << "\"/>\n";
      svg << "<circle class=\"black\" cx=\"" << num(e.black.real()) << "\" cy=\""
          << num(e.black.imag()) << "\" r=\"" << num(4 * unit) << "\" fill=\"#000\"/>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::string render_svg(const Dessin& d, const RenderOptions& options) {
  return render_svg(build_scene(d), options);
}

}  // namespace dessins
