#include "dessins/surgery.hpp"

#include <algorithm>

#include "dessins/curve.hpp"
#include "dessins/error.hpp"
#include "dessins/hypgeom.hpp"

namespace dessins {

namespace {

void require_type_24(const Dessin& d) {
  for (auto len : cycle_type(d.sigma0()))
    if (len != 2) throw Error("precondition", "surgery needs all white degrees equal to 2");
  for (auto len : cycle_type(d.sigma1()))
    if (len != 4) throw Error("precondition", "surgery needs all black degrees equal to 4");
}

bool same_cycle(const Permutation& p, Label a, Label b) {
  Label x = a;
  do {
    if (x == b) return true;
    x = p(x);
  } while (x != a);
  return false;
}

// Index of the cycle of p containing each label (0-based labels).
std::vector<std::size_t> cycle_index(const Permutation& p) {
  std::vector<std::size_t> idx(p.degree(), static_cast<std::size_t>(-1));
  std::size_t k = 0;
  for (std::size_t s = 0; s < p.degree(); ++s) {
    if (idx[s] != static_cast<std::size_t>(-1)) continue;
    for (std::size_t j = s; idx[j] == static_cast<std::size_t>(-1); j = p.image0(j)) idx[j] = k;
    ++k;
  }
  return idx;
}

void check(bool ok, const char* what) {
  if (!ok) throw Error("invariant_violation", std::string("surgery invariant failed: ") + what);
}

Permutation extend(const Permutation& p, std::size_t degree) {
  std::vector<Label> im = p.images();
  for (std::size_t i = im.size(); i < degree; ++i) im.push_back(static_cast<Label>(i + 1));
  return Permutation::from_images(std::move(im));
}

}  // namespace

SurgeryOutcome apply_surgery(const Dessin& d, Label a, Label b) {
  require_type_24(d);
  const std::size_t e = d.degree();
  if (a < 1 || a > e || b < 1 || b > e)
    throw Error("label_out_of_range", "surgery labels must lie in 1..E");
  if (d.sigma0()(a) != b || a == b)
    throw Error("precondition", "(" + std::to_string(a) + "," + std::to_string(b) +
                                    ") is not a 2-cycle of sigma0");
  if (same_cycle(d.sigma1(), a, b))
    throw Error("precondition", "a and b lie in the same cycle of sigma1");

  const std::size_t n = e + 8;
  const auto E = static_cast<Label>(e);
  std::vector<Label> w = d.sigma0().images();
  w.resize(n);
  auto pair = [&](Label p, Label q) {
    w[p - 1] = q;
    w[q - 1] = p;
  };
  pair(a, E + 5);
  pair(E + 1, E + 6);
  pair(E + 2, E + 7);
  pair(E + 3, E + 8);
  pair(E + 4, b);

  std::vector<Label> k = d.sigma1().images();
  k.resize(n);
  auto cycle4 = [&](Label p, Label q, Label r, Label s) {
    k[p - 1] = q;
    k[q - 1] = r;
    k[r - 1] = s;
    k[s - 1] = p;
  };
  cycle4(E + 5, E + 1, E + 3, E + 7);
  cycle4(E + 4, E + 2, E + 6, E + 8);

  SurgeryOutcome out{Dessin(Permutation::from_images(std::move(w)),
                            Permutation::from_images(std::move(k))),
                     same_cycle(d.sigma_inf(), a, b) ? SurgeryCase::same_face
                                                     : SurgeryCase::different_faces,
                     {}};
  const Dessin& r = out.result;

  // Face bookkeeping: every old face keeps its old labels inside one new face.
  const auto old_idx = cycle_index(d.sigma_inf());
  const auto new_idx = cycle_index(r.sigma_inf());
  const std::size_t faces = cycle_count(d.sigma_inf());
  check(cycle_count(r.sigma_inf()) == faces, "face count preserved");
  std::vector<std::size_t> old_size(faces, 0), image(faces, static_cast<std::size_t>(-1));
  std::vector<std::size_t> new_size(faces, 0);
  for (std::size_t i = 0; i < e; ++i) {
    ++old_size[old_idx[i]];
    if (image[old_idx[i]] == static_cast<std::size_t>(-1)) image[old_idx[i]] = new_idx[i];
    check(image[old_idx[i]] == new_idx[i], "old face stays inside one new face");
  }
  for (std::size_t i = 0; i < n; ++i) ++new_size[new_idx[i]];
  for (std::size_t f = 0; f < faces; ++f) {
    const std::size_t now = new_size[image[f]];
    if (now != old_size[f]) out.face_degree_delta.push_back({old_size[f], now});
  }
  std::sort(out.face_degree_delta.begin(), out.face_degree_delta.end(),
            [](const FaceDegreeChange& x, const FaceDegreeChange& y) {
              return x.new_degree - x.old_degree < y.new_degree - y.old_degree;
            });
  const auto& delta = out.face_degree_delta;
  if (out.face_case == SurgeryCase::same_face) {
    check(delta.size() == 1 && delta[0].new_degree == delta[0].old_degree + 8,
          "same-face case adds 8 to one face");
  } else {
    check(delta.size() == 2 && delta[0].new_degree == delta[0].old_degree + 2 &&
              delta[1].new_degree == delta[1].old_degree + 6,
          "different-faces case adds 2 and 6");
  }

  check(r.degree() == e + 8, "degree + 8");
  check(genus(r) == genus(d) + 1, "genus + 1");
  require_type_24(r);

  // sigma1~ sigma0~ is conjugate to sigma1 sigma0 (a,E+5,E+6,E+3,E+2,E+1,E+8)(b,E+4,E+7).
  const Permutation tail = Permutation::from_cycles(
      n, {{a, E + 5, E + 6, E + 3, E + 2, E + 1, E + 8}, {b, E + 4, E + 7}});
  const Permutation product = compose(compose(extend(d.sigma1(), n), extend(d.sigma0(), n)), tail);
  check(cycle_type(product) == cycle_type(compose(r.sigma1(), r.sigma0())),
        "product identity for sigma1~ sigma0~");

  check(cycle_count(compose(power(r.sigma1(), 2), r.sigma0())) ==
            cycle_count(compose(power(d.sigma1(), 2), d.sigma0())),
        "cycle count of sigma1^2 sigma0 preserved");
  return out;
}

std::vector<std::pair<Label, Label>> surgery_candidates(const Dessin& d) {
  std::vector<std::pair<Label, Label>> out;
  const auto black = cycle_index(d.sigma1());
  for (Label a = 1; a <= d.degree(); ++a) {
    const Label b = d.sigma0()(a);
    if (b <= a) continue;
    if (black[a - 1] == black[b - 1]) continue;
    out.emplace_back(a, b);
    out.emplace_back(b, a);
  }
  return out;
}

Dessin seed_dessin(std::size_t genus, std::size_t faces) {
  if (genus == 2 && faces == 1)
    return make_dessin(12, "(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)",
                       "(1,4,7,10)(2,6,12,8)(3,5,11,9)");
  if (genus == 2 && faces == 2)
    return make_dessin(16, "(1,16)(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)",
                       "(1,6,9,12)(2,10,16,8)(3,13,15,5)(4,7,14,11)");
  if (genus == 3 && faces == 2)
    return make_dessin(
        24,
        "(1,13)(2,24)(3,23)(4,22)(5,21)(6,20)(7,19)(8,18)(9,17)(10,16)(11,15)(12,14)",
        "(1,3,14,24)(2,4,13,23)(5,9,22,18)(6,16,21,11)(7,17,20,10)(8,15,19,12)");
  if (genus == 4 && faces == 3) {
    std::vector<Cycle> white;
    for (Label i = 1; i <= 36; i += 2) white.push_back({i, i + 1});
    return Dessin(Permutation::from_cycles(36, white),
                  Permutation::parse(36,
                                     "(1,3,9,5)(2,4,6,7)(8,11,17,13)(10,12,19,15)"
                                     "(14,21,29,23)(16,25,24,27)(18,26,31,20)"
                                     "(22,33,35,28)(30,32,34,36)"));
  }
  throw Error("unsupported", "no seed dessin for genus " + std::to_string(genus) +
                                 " with " + std::to_string(faces) + " faces");
}

namespace {

bool is_uniform_filling(const Dessin& d, std::size_t faces) {
  return is_uniform(d) && cycle_count(d.sigma_inf()) == faces && is_filling_curve(d);
}

// Depth-first search for `steps` consecutive surgeries ending in a uniform
// filling curve whose faces all have degree `target_k`.
bool search_block(const Dessin& d, std::size_t steps, std::size_t faces,
                  std::size_t target_k, Dessin& found) {
  if (steps == 0) {
    if (!is_uniform_filling(d, faces)) return false;
    if (cycle_type(d.sigma_inf()).front() != target_k) return false;
    found = d;
    return true;
  }
  for (const auto& [a, b] : surgery_candidates(d)) {
    SurgeryOutcome next = apply_surgery(d, a, b);
    const auto degrees = cycle_type(next.result.sigma_inf());
    if (degrees.back() > target_k) continue;
    if (search_block(next.result, steps - 1, faces, target_k, found)) return true;
  }
  return false;
}

}  // namespace

std::vector<Dessin> grow_trace(const Dessin& d, std::size_t target_genus,
                               std::size_t faces) {
  if (faces < 1 || faces > 3)
    throw Error("unsupported", "grow handles 1, 2 or 3 faces");
  if (!is_clean(d) || !is_uniform(d) || !is_general_position(d) || !is_filling_curve(d))
    throw Error("precondition", "grow needs a uniform clean filling curve in general position");
  if (cycle_count(d.sigma_inf()) != faces)
    throw Error("precondition", "dessin does not have " + std::to_string(faces) + " faces");
  const std::size_t g0 = genus(d);
  if (target_genus <= g0)
    throw Error("precondition", "target genus must exceed the current genus");
  const std::size_t block = faces;
  if ((target_genus - g0) % block != 0)
    throw Error("precondition", "genus can only grow in steps of " + std::to_string(block) +
                                    " with " + std::to_string(faces) + " faces");

  std::vector<Dessin> trace{d};
  Dessin cur = d;
  for (std::size_t g = g0; g < target_genus; g += block) {
    const std::size_t target_k = face_constraint(g + block, faces);
    Dessin next = cur;
    if (!search_block(cur, block, faces, target_k, next))
      throw Error("search_exhausted", "no surgery sequence reaches a uniform filling curve of genus " +
                                          std::to_string(g + block));
    if (8 * genus(next) - 8 != faces * (target_k - 4))
      throw Error("invariant_violation", "8g - 8 = n(k - 4) fails after growth");
    cur = std::move(next);
    trace.push_back(cur);
  }
  return trace;
}

Dessin grow(const Dessin& d, std::size_t target_genus, std::size_t faces) {
  return grow_trace(d, target_genus, faces).back();
}

}  // namespace dessins
