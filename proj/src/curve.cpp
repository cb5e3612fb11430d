#include "dessins/curve.hpp"

#include "dessins/error.hpp"

namespace dessins {

namespace {

struct HalfOrders {
  std::size_t m;
  std::size_t l;
};

HalfOrders half_orders(const Dessin& d) {
  if (!is_uniform(d))
    throw Error("not_uniform", "curve decomposition needs a uniform dessin");
  const std::size_t white = cycle_type(d.sigma0()).front();
  const std::size_t black = cycle_type(d.sigma1()).front();
  if (white % 2 != 0 || black % 2 != 0)
    throw Error("odd_degree", "white degree " + std::to_string(white) +
                                  " / black degree " + std::to_string(black) +
                                  " admit no straight-through direction");
  return {black / 2, white / 2};
}

}  // namespace

Permutation straight_through(const Dessin& d) {
  const auto [m, l] = half_orders(d);
  return compose(power(d.sigma1(), static_cast<long long>(m)),
                 power(d.sigma0(), static_cast<long long>(l)));
}

CurveSystem decompose(const Dessin& d) {
  const auto [m, l] = half_orders(d);
  const Permutation white_step = power(d.sigma0(), static_cast<long long>(l));
  const Permutation black_step = power(d.sigma1(), static_cast<long long>(m));

  CurveSystem cs;
  cs.m = m;
  cs.l = l;
  const std::size_t n = d.degree();
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Cycle comp;
    std::size_t cur = start;
    do {
      for (std::size_t e : {cur, static_cast<std::size_t>(white_step.image0(cur))}) {
        if (seen[e])
          throw Error("traversal_overlap",
                      "edge " + std::to_string(e + 1) + " met twice while walking a curve");
        seen[e] = true;
        comp.push_back(static_cast<Label>(e + 1));
      }
      cur = black_step.image0(white_step.image0(cur));
    } while (cur != start);
    cs.components.push_back(std::move(comp));
  }
  cs.r = cs.components.size();
  return cs;
}

std::size_t component_count_from_cycles(const Dessin& d) {
  return cycle_count(straight_through(d)) / 2;
}

bool is_filling_curve(const Dessin& d) {
  if (!is_clean(d) || !is_uniform(d))
    throw Error("precondition", "filling-curve test needs a clean uniform dessin");
  const auto ct = cycle_type(straight_through(d));
  return ct.size() == 2 && ct[0] == d.degree() / 2 && ct[1] == d.degree() / 2;
}

bool is_general_position(const Dessin& d) {
  if (!is_clean(d)) throw Error("not_clean", "general position needs a clean dessin");
  for (auto len : cycle_type(d.sigma1()))
    if (len != 4) return false;
  return true;
}

Dessin dual(const Dessin& d) { return Dessin(d.sigma0(), d.sigma_inf()); }

Dessin medial(const Dessin& d) {
  const std::size_t n = d.degree();
  std::vector<Label> white(2 * n), black(2 * n);
  for (std::size_t e = 0; e < n; ++e) {
    white[e] = static_cast<Label>(n + e + 1);
    white[n + e] = static_cast<Label>(e + 1);
    black[e] = d.sigma1().image0(e) + 1;
    black[n + e] = static_cast<Label>(n + d.sigma0().image0(e) + 1);
  }
  return Dessin(Permutation::from_images(std::move(white)),
                Permutation::from_images(std::move(black)));
}

LengthReport<double> min_length(const Dessin& d) {
  const auto [m, l] = half_orders(d);
  const std::size_t faces = cycle_type(d.sigma_inf()).front();
  if (l == 1) return min_length_clean(m, faces, d.degree() / 2);
  return min_length_bipartite(l, m, faces, d.degree());
}

}  // namespace dessins
