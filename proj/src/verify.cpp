#include "dessins/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "dessins/curve.hpp"
#include "dessins/error.hpp"
#include "dessins/fixtures.hpp"
#include "dessins/fuchsian.hpp"
#include "dessins/hypgeom.hpp"
#include "dessins/render.hpp"

namespace dessins {

const char* to_string(CheckStatus s) {
  return s == CheckStatus::pass ? "pass" : s == CheckStatus::fail ? "fail" : "skip";
}

namespace {

using Outcome = std::pair<CheckStatus, std::string>;

Outcome ok(bool pass, std::string detail) {
  return {pass ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

Outcome skip(std::string why) { return {CheckStatus::skip, std::move(why)}; }

bool even_uniform(const Dessin& d) {
  if (!is_uniform(d)) return false;
  return cycle_type(d.sigma0()).front() % 2 == 0 && cycle_type(d.sigma1()).front() % 2 == 0;
}

bool hyperbolic(const Dessin& d) {
  const auto t = passport(d).type_triple;
  return is_hyperbolic_type(t[0], t[1], t[2]);
}

Outcome euler_parity(const Dessin& d) {
  const long long e = static_cast<long long>(d.degree());
  const long long chi = static_cast<long long>(cycle_count(d.sigma0()) + cycle_count(d.sigma1()) +
                                               cycle_count(d.sigma_inf())) - e;
  return ok(chi % 2 == 0, "W + B + F - E = " + std::to_string(chi));
}

Outcome face_relation(const Dessin& d) {
  if (!is_clean(d) || !is_uniform(d) || !is_general_position(d))
    return skip("needs a uniform clean dessin with black degree 4");
  const std::size_t g = genus(d), n = cycle_count(d.sigma_inf());
  const std::size_t k = cycle_type(d.sigma_inf()).front();
  return ok(8 * g - 8 == n * (k - 4), "8g - 8 = " + std::to_string(8 * g - 8) + ", n(k - 4) = " +
                                          std::to_string(n * (k - 4)));
}

Outcome components(const Dessin& d) {
  if (!even_uniform(d)) return skip("needs a uniform dessin with even vertex degrees");
  const std::size_t walked = decompose(d).r, counted = component_count_from_cycles(d);
  return ok(walked == counted,
            "traversal r = " + std::to_string(walked) + ", cycle count r = " + std::to_string(counted));
}

Outcome dual_components(const Dessin& d) {
  const Dessin t = dual(d);
  if (!even_uniform(t)) return skip("dual is not uniform with even degrees");
  const std::size_t walked = decompose(t).r, counted = component_count_from_cycles(t);
  return ok(walked == counted, "dual r = " + std::to_string(walked));
}

Outcome length_forms(const Dessin& d) {
  if (!even_uniform(d) || !hyperbolic(d)) return skip("needs a hyperbolic uniform dessin with even degrees");
  const LengthReport<double> r = min_length(d);
  if (r.formula_used == LengthFormula::clean) {
    const double other = 2.0 * static_cast<double>(r.d) * r.edge_length;
    const double rel = std::abs(other - r.total) / r.total;
    return ok(rel <= tol::kClosedForm, "relative gap " + std::to_string(rel));
  }
  if (r.l != r.m) return skip("bipartite with l != m has a single closed form");
  // Medial comparison: l*(2m,2m,j,d) = l(2m,2j,d).
  const double clean = min_length_clean(r.m, 2 * r.j, r.d).total;
  const double rel = std::abs(clean - r.total) / r.total;
  return ok(rel <= tol::kClosedForm, "relative gap to the medial value " + std::to_string(rel));
}

Outcome medial_genus(const Dessin& d) {
  const std::size_t g = genus(d), gm = genus(medial(d));
  return ok(g == gm, "genus " + std::to_string(g) + " vs medial " + std::to_string(gm));
}

Outcome canonical_invariance(const Dessin& d) {
  std::mt19937_64 rng(0x5eed);
  const std::string base = canonical_form(d);
  for (int i = 0; i < 50; ++i)
    if (canonical_form(conjugate(d, random_permutation(d.degree(), rng))) != base)
      return ok(false, "conjugate " + std::to_string(i) + " changed the canonical form");
  return ok(true, "50 random conjugates");
}

Outcome triangle_relations(const Dessin& d) {
  if (!hyperbolic(d)) return skip("type is not hyperbolic");
  const auto [a, b, c] = passport(d).type_triple;
  const auto tg = triangle_group_matrices<double>(a, b, c);
  const Mat2<double> id = Mat2<double>::Identity();
  auto pw = [](const Mat2<double>& m, std::size_t n) {
    Mat2<double> r = Mat2<double>::Identity();
    for (std::size_t i = 0; i < n; ++i) r = r * m;
    return r;
  };
  const double eps = tol::kMatrixRelation;
  const bool good = equal_up_to_sign(pw(tg.x.matrix, a), id, eps) &&
                    equal_up_to_sign(pw(tg.y.matrix, b), id, eps) &&
                    equal_up_to_sign(pw(tg.z.matrix, c), id, eps) &&
                    equal_up_to_sign(Mat2<double>(tg.x.matrix * tg.y.matrix * tg.z.matrix), id, eps);
  return ok(good, "x^a, y^b, z^c, xyz");
}

Outcome word_relation(const Dessin& d) {
  const Word xyz = parse_word("xyz");
  return ok(eval_word_perm(xyz, d).is_identity(), "xyz acts trivially on labels");
}

Outcome stabilizer_words(const Dessin& d) {
  if (!(d == fixtures::two_octagons())) return skip("only for the bundled two_octagons labelling");
  const auto tg = triangle_group_matrices<double>(2, 4, 8);
  for (const auto& w : fixtures::stabilizer_words()) {
    const Word word = parse_word(w.word);
    if (!in_K(word, d)) return ok(false, std::string(w.word) + " moves label 1");
    if (eval_word_matrix(word, tg).kind != IsometryKind::hyperbolic)
      return ok(false, std::string(w.word) + " is not hyperbolic");
  }
  if (in_K(parse_word("x"), d)) return ok(false, "x fixes label 1");
  return ok(true, "7 words fix label 1 and are hyperbolic; x does not fix 1");
}

Outcome pairings(const Dessin& d) {
  if (!is_clean(d) || !is_uniform(d) || genus(d) < 2) return skip("needs a uniform clean dessin of genus >= 2");
  try {
    const auto sp = side_pairings(d);
    return ok(true, std::to_string(sp.size()) + " Schreier generators in K, none elliptic");
  } catch (const Error& e) {
    return ok(false, e.what());
  }
}

Outcome placement(const Dessin& d) {
  if (!is_clean(d) || !is_uniform(d) || !hyperbolic(d)) return skip("needs a hyperbolic uniform clean dessin");
  try {
    const RenderScene s = build_scene(d);
    return ok(true, "orthogonality " + std::to_string(s.checks.orthogonality) + ", coincidence " +
                        std::to_string(s.checks.coincidence));
  } catch (const Error& e) {
    return ok(false, e.what());
  }
}

}  // namespace

std::vector<CheckResult> verify_dessin(const Dessin& d) {
  const std::vector<std::pair<const char*, std::function<Outcome(const Dessin&)>>> suite{
      {"euler_parity", euler_parity},
      {"face_count_relation", face_relation},
      {"component_count", components},
      {"dual_component_count", dual_components},
      {"length_closed_forms", length_forms},
      {"medial_genus", medial_genus},
      {"canonical_form_invariance", canonical_invariance},
      {"xyz_relation_on_labels", word_relation},
      {"triangle_group_relations", triangle_relations},
      {"stabilizer_words", stabilizer_words},
      {"side_pairings", pairings},
      {"render_placement", placement},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suite) {
    Outcome o;
    try {
      o = fn(d);
    } catch (const Error& e) {
      o = {CheckStatus::fail, e.code() + ": " + e.what()};
    }
    out.push_back({name, o.first, std::move(o.second)});
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

}  // namespace dessins
