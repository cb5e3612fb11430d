#include "dessins/fuchsian.hpp"

#include <cctype>
#include <deque>

namespace dessins {

char to_char(Gen g) { return g == Gen::x ? 'x' : g == Gen::y ? 'y' : 'z'; }

Word normalize(std::vector<Letter> letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.exp == 0) continue;
    if (!w.letters.empty() && w.letters.back().gen == l.gen) {
      w.letters.back().exp += l.exp;
      if (w.letters.back().exp == 0) w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'y' && c != 'z')
      throw Error("parse_error", std::string("unknown character '") + c + "' in word");
    const Gen g = c == 'x' ? Gen::x : c == 'y' ? Gen::y : Gen::z;
    ++i;
    long long sign = 1, exp = 1;
    if (i < text.size() && text[i] == '-') {
      sign = -1;
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("parse_error", "'-' must be followed by digits");
    }
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1'000'000) throw Error("parse_error", "exponent too large");
        ++i;
      }
      if (exp == 0) throw Error("parse_error", "zero exponent");
    }
    letters.push_back({g, sign * exp});
  }
  return normalize(std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters) {
    s += to_char(l.gen);
    if (l.exp != 1) s += std::to_string(l.exp);
  }
  return s;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> all = a.letters;
  all.insert(all.end(), b.letters.begin(), b.letters.end());
  return normalize(std::move(all));
}

Word inverse(const Word& w) {
  std::vector<Letter> inv;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) inv.push_back({it->gen, -it->exp});
  return normalize(std::move(inv));
}

Word reduce(const Word& w, std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Letter> letters = w.letters;
  // Reducing can make neighbours merge, so repeat until stable.
  for (;;) {
    bool changed = false;
    for (Letter& l : letters) {
      const auto order = static_cast<long long>(l.gen == Gen::x ? a : l.gen == Gen::y ? b : c);
      const long long r = ((l.exp % order) + order) % order;
      if (r != l.exp) changed = true;
      l.exp = r;
    }
    Word n = normalize(std::move(letters));
    letters = std::move(n.letters);
    if (!changed) return Word{std::move(letters)};
  }
}

Permutation eval_word_perm(const Word& w, const Dessin& d) {
  const std::size_t n = d.degree();
  std::vector<Label> images(n);
  for (Label e = 1; e <= n; ++e) images[e - 1] = e;
  for (const Letter& l : w.letters) {
    const Permutation& g = l.gen == Gen::x ? d.sigma0() : l.gen == Gen::y ? d.sigma1() : d.sigma_inf();
    const Permutation step = power(g, l.exp);
    for (Label& e : images) e = step(e);
  }
  return Permutation::from_images(std::move(images));
}

bool in_K(const Word& w, const Dessin& d, Label base) {
  if (base < 1 || base > d.degree())
    throw Error("label_out_of_range", "base label must lie in 1..E");
  Label e = base;
  for (const Letter& l : w.letters) {
    const Permutation& g = l.gen == Gen::x ? d.sigma0() : l.gen == Gen::y ? d.sigma1() : d.sigma_inf();
    const Permutation& step = l.exp > 0 ? g : g.inverse();
    for (long long i = 0, k = l.exp > 0 ? l.exp : -l.exp; i < k; ++i) e = step(e);
  }
  return e == base;
}

void require_type(const Dessin& d, std::size_t a, std::size_t b, std::size_t c) {
  const auto t = passport(d).type_triple;
  if (t[0] != a || t[1] != b || t[2] != c)
    throw Error("type_mismatch", "dessin has type (" + std::to_string(t[0]) + "," +
                                     std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                     "), triangle group is (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
}

namespace {

const Permutation& action(const Dessin& d, Gen g) {
  return g == Gen::x ? d.sigma0() : g == Gen::y ? d.sigma1() : d.sigma_inf();
}

void require_surface(const Dessin& d) {
  if (!is_clean(d) || !is_uniform(d))
    throw Error("precondition", "side pairings need a uniform clean dessin");
  if (genus(d) < 2) throw Error("precondition", "side pairings need genus at least 2");
}

}  // namespace

SpanningTree spanning_tree(const Dessin& d, TreeOrder order) {
  const std::size_t n = d.degree();
  SpanningTree t;
  t.parent.assign(n, 0);
  t.via.assign(n, Gen::x);
  t.word.assign(n, Word{});
  std::vector<bool> seen(n, false);
  auto attach = [&](Label from, Gen g, Label to) {
    seen[to - 1] = true;
    t.parent[to - 1] = from;
    t.via[to - 1] = g;
    t.word[to - 1] = concat(t.word[from - 1], Word{{{g, 1}}});
  };
  std::deque<Label> queue{1};
  seen[0] = true;
  if (order == TreeOrder::breadth_first) {
    while (!queue.empty()) {
      const Label i = queue.front();
      queue.pop_front();
      t.order.push_back(i);
      for (Gen g : {Gen::x, Gen::y, Gen::z}) {
        const Label j = action(d, g)(i);
        if (seen[j - 1]) continue;
        attach(i, g, j);
        queue.push_back(j);
      }
    }
    return t;
  }
  // Queue of face entry labels.
  const Permutation& z = d.sigma_inf();
  while (!queue.empty()) {
    const Label entry = queue.front();
    queue.pop_front();
    std::vector<Label> face{entry};
    for (Label j = z(entry); j != entry; j = z(j)) {
      attach(face.back(), Gen::z, j);
      face.push_back(j);
    }
    t.order.insert(t.order.end(), face.begin(), face.end());
    for (Label i : face) {
      const Label j = d.sigma0()(i);
      if (seen[j - 1]) continue;
      attach(i, Gen::x, j);
      // Claim the whole face so it is entered once.
      for (Label k = z(j); k != j; k = z(k)) seen[k - 1] = true;
      queue.push_back(j);
    }
  }
  return t;
}

std::vector<SidePairing> side_pairings(const Dessin& d, TreeOrder order) {
  require_surface(d);
  const auto [a, b, c] = passport(d).type_triple;
  const TriangleGroup<double> tg = triangle_group_matrices<double>(a, b, c);
  const SpanningTree tree = spanning_tree(d, order);
  std::vector<SidePairing> out;
  for (Label i = 1; i <= d.degree(); ++i) {
    for (Gen g : {Gen::x, Gen::y, Gen::z}) {
      const Label j = action(d, g)(i);
      if (tree.parent[j - 1] == i && tree.via[j - 1] == g) continue;
      if (g == Gen::x && j <= i) continue;  // x pairs are symmetric
      const Word w = reduce(concat(concat(tree.word[i - 1], Word{{{g, 1}}}), inverse(tree.word[j - 1])),
                            a, b, c);
      if (w.empty()) continue;
      if (!in_K(w, d))
        throw Error("invariant_violation", "Schreier word " + to_string(w) + " moves label 1");
      Isometry<double> iso = eval_word_matrix(w, tg);
      if (iso.kind != IsometryKind::hyperbolic && iso.kind != IsometryKind::identity)
        throw Error("invariant_violation",
                    "Schreier word " + to_string(w) + " is " + to_string(iso.kind));
      out.push_back({{i, j}, g, w, std::move(iso)});
    }
  }
  return out;
}

}  // namespace dessins
