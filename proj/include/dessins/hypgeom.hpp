#pragma once

// Closed-form length minima, the Gauss-Bonnet face constraint and a numeric
// realization of triangle groups. Numeric code is templated on the scalar
// type; everything is instantiated for double in the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "dessins/error.hpp"

namespace dessins {

template <class Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <class Scalar>
using CMat2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

namespace tol {
inline constexpr double kClosedForm = 1e-12;
inline constexpr double kMatrixRelation = 1e-9;
inline constexpr double kTraceBand = 1e-7;
inline constexpr double kUnimodular = 1e-9;
}  // namespace tol

/// 1/a + 1/b + 1/c < 1, decided in integers.
inline bool is_hyperbolic_type(std::size_t a, std::size_t b, std::size_t c) {
  if (a == 0 || b == 0 || c == 0) return false;
  return b * c + a * c + a * b < a * b * c;
}

inline void require_hyperbolic(std::size_t a, std::size_t b, std::size_t c) {
  if (!is_hyperbolic_type(a, b, c))
    throw Error("not_hyperbolic", "type (" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + ") is not hyperbolic");
}

enum class LengthFormula { clean, bipartite };

template <class Scalar = double>
struct LengthReport {
  std::size_t m = 0;
  std::size_t k = 0;  // face degree (clean)
  std::size_t l = 1;  // bipartite only
  std::size_t j = 0;  // bipartite only
  std::size_t d = 0;  // number of arcs
  /// Clean: length of one dessin edge (half an arc). Bipartite: one arc.
  Scalar edge_length = 0;
  Scalar total = 0;
  LengthFormula formula_used = LengthFormula::clean;
};

/// Length of the side opposite pi/k in the (pi/2, pi/2m, pi/k) triangle,
/// i.e. one dessin edge of a clean uniform (2,2m,k) dessin.
template <class Scalar = double>
Scalar clean_edge_length(std::size_t m, std::size_t k) {
  using std::acosh, std::cos, std::sin;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  return acosh(cos(pi / Scalar(k)) / sin(pi / Scalar(2 * m)));
}

/// Minimal total length d * acosh((cos^2(pi/2m) + cos(2pi/k)) / sin^2(pi/2m)),
/// cross-checked against 2d * acosh(cos(pi/k) / sin(pi/2m)).
template <class Scalar = double>
LengthReport<Scalar> min_length_clean(std::size_t m, std::size_t k, std::size_t d) {
  using std::abs, std::acosh, std::cos, std::sin;
  if (m < 1 || k < 1 || d < 1)
    throw Error("bad_parameter", "m, k and d must all be >= 1");
  require_hyperbolic(2, 2 * m, k);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar c = cos(pi / Scalar(2 * m));
  const Scalar s = sin(pi / Scalar(2 * m));
  const Scalar arc_form = Scalar(d) * acosh((c * c + cos(2 * pi / Scalar(k))) / (s * s));
  const Scalar edge = clean_edge_length<Scalar>(m, k);
  const Scalar edge_form = Scalar(2 * d) * edge;
  if (abs(arc_form - edge_form) > Scalar(tol::kClosedForm) * abs(arc_form))
    throw Error("formula_mismatch", "the two closed forms of the clean minimum disagree");
  LengthReport<Scalar> r;
  r.m = m;
  r.k = k;
  r.d = d;
  r.edge_length = edge;
  r.total = arc_form;
  r.formula_used = LengthFormula::clean;
  return r;
}

/// Minimum for a bipartite multicurve whose dessin has type (2l, 2m, j).
template <class Scalar = double>
LengthReport<Scalar> min_length_bipartite(std::size_t l, std::size_t m, std::size_t j,
                                          std::size_t d) {
  using std::acosh, std::cos, std::sin;
  if (l < 1 || m < 1 || j < 1 || d < 1)
    throw Error("bad_parameter", "l, m, j and d must all be >= 1");
  require_hyperbolic(2 * l, 2 * m, j);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar cm = cos(pi / Scalar(2 * m)), sm = sin(pi / Scalar(2 * m));
  const Scalar cl = cos(pi / Scalar(2 * l)), sl = sin(pi / Scalar(2 * l));
  const Scalar arc = acosh((cm * cl + cos(pi / Scalar(j))) / (sm * sl));
  LengthReport<Scalar> r;
  r.m = m;
  r.l = l;
  r.j = j;
  r.d = d;
  r.edge_length = arc;
  r.total = Scalar(d) * arc;
  r.formula_used = LengthFormula::bipartite;
  return r;
}

/// Face degree k solving 8g - 8 = n(k - 4); throws when k is not integral.
inline std::size_t face_constraint(std::size_t g, std::size_t n) {
  if (g < 2 || n < 1) throw Error("bad_parameter", "need g >= 2 and n >= 1");
  const std::size_t lhs = 8 * g - 8;
  if (lhs % n != 0)
    throw Error("non_integral", "8g-8 = " + std::to_string(lhs) +
                                    " is not divisible by n = " + std::to_string(n));
  return lhs / n + 4;
}

template <class Scalar = double>
struct UpperBound {
  Scalar value = 0;
  bool strict = true;
};

/// Strict upper bound on the minimum of a non-uniform filling multicurve of
/// type (2,2m,k) with d arcs; the same value as the uniform minimum.
template <class Scalar = double>
UpperBound<Scalar> nonuniform_upper_bound(std::size_t m, std::size_t k, std::size_t d) {
  return {min_length_clean<Scalar>(m, k, d).total, true};
}

// ---------------------------------------------------------------------------
// Isometries

enum class IsometryKind { identity, elliptic, parabolic, hyperbolic };

inline const char* to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::identity: return "identity";
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// An orientation-preserving isometry as a unimodular real matrix acting on
/// the upper half-plane, defined up to sign.
template <class Scalar = double>
struct Isometry {
  Mat2<Scalar> matrix = Mat2<Scalar>::Identity();
  IsometryKind kind = IsometryKind::identity;
  Scalar translation_length = 0;  // hyperbolic only

  Scalar trace() const { return matrix.trace(); }
};

template <class Scalar = double>
Isometry<Scalar> classify_isometry(const Mat2<Scalar>& m) {
  using std::abs, std::acosh;
  if (abs(m.determinant() - Scalar(1)) > Scalar(tol::kUnimodular))
    throw Error("not_unimodular", "determinant differs from 1");
  Isometry<Scalar> iso;
  iso.matrix = m;
  const Scalar t = abs(m.trace());
  const Scalar eps = Scalar(tol::kTraceBand);
  const Mat2<Scalar> id = Mat2<Scalar>::Identity();
  const bool is_id = (m - id).cwiseAbs().maxCoeff() < eps ||
                     (m + id).cwiseAbs().maxCoeff() < eps;
  if (is_id) {
    iso.kind = IsometryKind::identity;
  } else if (t < Scalar(2) - eps) {
    iso.kind = IsometryKind::elliptic;
  } else if (t <= Scalar(2) + eps) {
    iso.kind = IsometryKind::parabolic;
  } else {
    iso.kind = IsometryKind::hyperbolic;
    iso.translation_length = 2 * acosh(t / 2);
  }
  return iso;
}

/// True when a == b or a == -b entrywise within `eps`.
template <class Derived1, class Derived2, class Scalar>
bool equal_up_to_sign(const Eigen::MatrixBase<Derived1>& a,
                      const Eigen::MatrixBase<Derived2>& b, Scalar eps) {
  return (a - b).cwiseAbs().maxCoeff() < eps || (a + b).cwiseAbs().maxCoeff() < eps;
}

// ---------------------------------------------------------------------------
// Unit disk helpers

/// Cayley transform H -> D, z -> (z - i)/(z + i).
template <class Scalar>
CMat2<Scalar> cayley() {
  using C = std::complex<Scalar>;
  CMat2<Scalar> c;
  c << C(1, 0), C(0, -1), C(1, 0), C(0, 1);
  return c;
}

/// Disk-model matrix (SU(1,1) up to scale) -> real unimodular half-plane matrix.
template <class Scalar>
Mat2<Scalar> disk_to_half_plane(const CMat2<Scalar>& disk) {
  using std::sqrt;
  const CMat2<Scalar> c = cayley<Scalar>();
  CMat2<Scalar> h = c.inverse() * disk * c;
  h /= sqrt(h.determinant());
  // Remove a global unit phase so the result is real.
  std::size_t bi = 0, bj = 0;
  h.cwiseAbs().maxCoeff(&bi, &bj);
  const std::complex<Scalar> big = h(bi, bj);
  const std::complex<Scalar> phase = big / std::abs(big);
  Mat2<Scalar> out = (h / phase).real();
  // Projective sign: keep the largest entry positive.
  if (out(bi, bj) < 0) out = -out;
  return out;
}

template <class Scalar>
CMat2<Scalar> half_plane_to_disk(const Mat2<Scalar>& half) {
  const CMat2<Scalar> c = cayley<Scalar>();
  CMat2<Scalar> d = c * half.template cast<std::complex<Scalar>>() * c.inverse();
  using std::sqrt;
  d /= sqrt(d.determinant());
  return d;
}

/// Action of a (complex) Moebius matrix on a point.
template <class Scalar>
std::complex<Scalar> mobius(const CMat2<Scalar>& m, std::complex<Scalar> z) {
  return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

/// Hyperbolic distance in the unit disk (curvature -1).
template <class Scalar>
Scalar disk_distance(std::complex<Scalar> z, std::complex<Scalar> w) {
  using std::abs, std::atanh;
  return 2 * atanh(abs(z - w) / abs(Scalar(1) - std::conj(z) * w));
}

// ---------------------------------------------------------------------------
// Triangle groups

/// Generators x, y, z of Delta(a,b,c): rotations by 2pi/a, 2pi/b, 2pi/c about
/// the vertices w_a, w_b, w_c of a triangle with angles pi/a, pi/b, pi/c, with
/// x y z = 1. The triangle sits in the unit disk with w_c at the origin and
/// w_a on the positive real axis; w_a, w_b, w_c run counterclockwise.
template <class Scalar = double>
struct TriangleGroup {
  std::size_t a = 0, b = 0, c = 0;
  Isometry<Scalar> x, y, z;
  CMat2<Scalar> x_disk, y_disk, z_disk;
  std::complex<Scalar> w_a, w_b, w_c;
};

namespace detail {

/// Anti-Moebius matrix of the reflection in the geodesic through p and q
/// (|p|,|q| < 1), normalized to determinant -1; acts as z -> (A conj(z) + B)/(C conj(z) + D).
template <class Scalar>
CMat2<Scalar> reflection_through(std::complex<Scalar> p, std::complex<Scalar> q) {
  using C = std::complex<Scalar>;
  using std::abs, std::sqrt;
  CMat2<Scalar> r;
  const Scalar cross = p.real() * q.imag() - p.imag() * q.real();
  const Scalar scale = std::max<Scalar>({Scalar(1), abs(p), abs(q)});
  if (abs(cross) < Scalar(1e-14) * scale * scale) {
    // Diameter through the origin at angle theta: z -> e^{2i theta} conj(z).
    const C dir = abs(p) > abs(q) ? p : q;
    const C rot = (dir / abs(dir)) * (dir / abs(dir));
    r << rot, C(0), C(0), C(1);
    // det = rot; rescale to det -1.
    r /= sqrt(-r.determinant());
    return r;
  }
  // Circle orthogonal to the unit circle through p and q: center c solves
  // 2 Re(conj(c) p) = |p|^2 + 1 and likewise for q.
  const Scalar rp = (std::norm(p) + 1) / 2, rq = (std::norm(q) + 1) / 2;
  const Scalar det = p.real() * q.imag() - p.imag() * q.real();
  const C center((rp * q.imag() - rq * p.imag()) / det,
                 (p.real() * rq - q.real() * rp) / det);
  const Scalar radius = sqrt(std::norm(center) - 1);
  r << center, C(-1), C(1), -std::conj(center);
  r /= radius;
  return r;
}

/// Moebius matrix of the composition (first reflect in r2, then in r1).
template <class Scalar>
CMat2<Scalar> compose_reflections(const CMat2<Scalar>& r1, const CMat2<Scalar>& r2) {
  CMat2<Scalar> m = r1 * r2.conjugate();
  using std::sqrt;
  m /= sqrt(m.determinant());
  return m;
}

}  // namespace detail

template <class Scalar = double>
TriangleGroup<Scalar> triangle_group_matrices(std::size_t a, std::size_t b, std::size_t c) {
  using std::acosh, std::cos, std::sin, std::tanh, std::polar;
  require_hyperbolic(a, b, c);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar alpha = pi / Scalar(a), beta = pi / Scalar(b), gamma = pi / Scalar(c);
  // Angle-angle-angle: cosh of the side opposite each vertex.
  const Scalar cosh_ca = (cos(beta) + cos(alpha) * cos(gamma)) / (sin(alpha) * sin(gamma));
  const Scalar cosh_cb = (cos(alpha) + cos(beta) * cos(gamma)) / (sin(beta) * sin(gamma));
  const Scalar r_a = tanh(acosh(cosh_ca) / 2);
  const Scalar r_b = tanh(acosh(cosh_cb) / 2);

  TriangleGroup<Scalar> t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.w_c = {0, 0};
  t.w_a = {r_a, 0};
  t.w_b = polar(r_b, gamma);

  const CMat2<Scalar> r_ab = detail::reflection_through(t.w_a, t.w_b);
  const CMat2<Scalar> r_bc = detail::reflection_through(t.w_b, t.w_c);
  const CMat2<Scalar> r_ca = detail::reflection_through(t.w_c, t.w_a);
  t.x_disk = detail::compose_reflections(r_ca, r_ab);
  t.y_disk = detail::compose_reflections(r_ab, r_bc);
  t.z_disk = detail::compose_reflections(r_bc, r_ca);
  t.x = classify_isometry<Scalar>(disk_to_half_plane(t.x_disk));
  t.y = classify_isometry<Scalar>(disk_to_half_plane(t.y_disk));
  t.z = classify_isometry<Scalar>(disk_to_half_plane(t.z_disk));
  return t;
}

}  // namespace dessins
