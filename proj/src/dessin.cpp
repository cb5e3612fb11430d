#include "dessins/dessin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dessins/error.hpp"

namespace dessins {

Dessin::Dessin(Permutation sigma0, Permutation sigma1)
    : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.degree() != sigma1_.degree())
    throw Error("degree_mismatch",
                "sigma0 has degree " + std::to_string(sigma0_.degree()) +
                    " but sigma1 has degree " + std::to_string(sigma1_.degree()));
  const std::array gens{sigma0_, sigma1_};
  if (!is_transitive(gens))
    throw Error("intransitive",
                "sigma0 and sigma1 generate an intransitive group (disconnected graph)");
  sigma_inf_ = compose(sigma1_, sigma0_).inverse();
}

Dessin make_dessin(std::size_t degree, std::string_view sigma0_cycles,
                   std::string_view sigma1_cycles) {
  return Dessin(Permutation::parse(degree, sigma0_cycles),
                Permutation::parse(degree, sigma1_cycles));
}

Permutation sigma_infinity(const Dessin& d) { return d.sigma_inf(); }

namespace {

std::size_t lcm_of(const std::vector<std::size_t>& xs) {
  std::size_t l = 1;
  for (auto x : xs) l = std::lcm(l, x);
  return l;
}

bool constant(const std::vector<std::size_t>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

}  // namespace

Passport passport(const Dessin& d) {
  Passport p;
  p.white_degrees = cycle_type(d.sigma0());
  p.black_degrees = cycle_type(d.sigma1());
  p.face_degrees = cycle_type(d.sigma_inf());
  p.type_triple = {lcm_of(p.white_degrees), lcm_of(p.black_degrees),
                   lcm_of(p.face_degrees)};
  p.degree = d.degree();
  return p;
}

std::size_t genus(const Dessin& d) {
  const long long e = static_cast<long long>(d.degree());
  const long long w = static_cast<long long>(cycle_count(d.sigma0()));
  const long long b = static_cast<long long>(cycle_count(d.sigma1()));
  const long long f = static_cast<long long>(cycle_count(d.sigma_inf()));
  const long long twice = e - w - b - f + 2;
  if (twice < 0 || twice % 2 != 0)
    throw Error("euler_parity", "E - W - B - F + 2 = " + std::to_string(twice) +
                                    " is not a nonnegative even number");
  return static_cast<std::size_t>(twice / 2);
}

bool is_uniform(const Dessin& d) {
  return constant(cycle_type(d.sigma0())) && constant(cycle_type(d.sigma1())) &&
         constant(cycle_type(d.sigma_inf()));
}

bool is_clean(const Dessin& d) {
  for (auto len : cycle_type(d.sigma0()))
    if (len != 2) return false;
  return true;
}

DessinClassification classify(const Dessin& d) {
  DessinClassification c;
  c.genus = genus(d);
  c.is_clean = is_clean(d);
  c.is_uniform = is_uniform(d);
  const std::array gens{d.sigma0(), d.sigma1()};
  c.monodromy_order = group_order(gens);
  c.is_regular = c.monodromy_order == BigInt(d.degree());
  return c;
}

namespace {

// Breadth-first relabeling from `base`, exploring sigma0 then sigma1; writes
// the relabeled image sequences into `code` (0-based values).
void encode_from(const Dessin& d, Label base, std::vector<Label>& relabel,
                 std::vector<Label>& order, std::vector<Label>& code) {
  const std::size_t n = d.degree();
  constexpr Label kUnset = ~Label{0};
  relabel.assign(n, kUnset);
  order.clear();
  relabel[base] = 0;
  order.push_back(base);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Label v = order[head];
    for (const Permutation* p : {&d.sigma0(), &d.sigma1()}) {
      const Label w = p->image0(v);
      if (relabel[w] == kUnset) {
        relabel[w] = static_cast<Label>(order.size());
        order.push_back(w);
      }
    }
  }
  code.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    code[i] = relabel[d.sigma0().image0(order[i])];
    code[n + i] = relabel[d.sigma1().image0(order[i])];
  }
}

}  // namespace

std::string canonical_form(const Dessin& d) {
  const std::size_t n = d.degree();
  std::vector<Label> relabel, order, code, best;
  for (Label b = 0; b < n; ++b) {
    encode_from(d, b, relabel, order, code);
    if (best.empty() || code < best) best = code;
  }
  std::string bytes;
  bytes.reserve(4 * (best.size() + 1));
  auto put = [&](std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
      bytes.push_back(static_cast<char>((v >> shift) & 0xFFu));
  };
  put(static_cast<std::uint32_t>(n));
  for (Label v : best) put(v + 1);
  return bytes;
}

bool are_equivalent(const Dessin& a, const Dessin& b) {
  return a.degree() == b.degree() && canonical_form(a) == canonical_form(b);
}

Dessin conjugate(const Dessin& d, const Permutation& tau) {
  const Permutation inv = tau.inverse();
  return Dessin(compose(tau, compose(d.sigma0(), inv)),
                compose(tau, compose(d.sigma1(), inv)));
}

std::string passport_string(const Passport& p) {
  auto part = [](const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size();) {
      std::size_t j = i;
      while (j < xs.size() && xs[j] == xs[i]) ++j;
      if (!s.empty()) s += ' ';
      s += std::to_string(xs[i]);
      if (j - i > 1) s += '^' + std::to_string(j - i);
      i = j;
    }
    return s;
  };
  return "(" + part(p.white_degrees) + "; " + part(p.black_degrees) + "; " +
         part(p.face_degrees) + ")";
}

}  // namespace dessins
