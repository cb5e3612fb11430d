#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/error.hpp"
#include "dessins/hypgeom.hpp"

namespace dessins {

/// Triangle group generator; x, y, z act on labels as sigma0, sigma1, sigma_inf.
enum class Gen : std::uint8_t { x, y, z };

struct Letter {
  Gen gen;
  long long exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Normalized word: nonzero exponents, neighbouring letters use different
/// generators.
struct Word {
  std::vector<Letter> letters;

  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

char to_char(Gen g);

/// Merges neighbouring powers of one generator and drops zero exponents.
Word normalize(std::vector<Letter> letters);

/// "z3xz", "xz5xz6", "y-1x"; throws Error("parse_error").
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);

/// Exponents taken modulo the generator orders (a, b, c), then renormalized.
Word reduce(const Word& w, std::size_t a, std::size_t b, std::size_t c);

/// Label action of w: letters are read left to right, e <- g^exp(e).
Permutation eval_word_perm(const Word& w, const Dessin& d);

/// Whether w lies in the stabilizer of `base` under the label action.
bool in_K(const Word& w, const Dessin& d, Label base = 1);

/// Throws Error("type_mismatch") unless d has type (a, b, c).
void require_type(const Dessin& d, std::size_t a, std::size_t b, std::size_t c);

/// Disk-model matrix of w, multiplied in written order.
template <class Scalar = double>
CMat2<Scalar> eval_word_disk(const Word& w, const TriangleGroup<Scalar>& t) {
  CMat2<Scalar> m = CMat2<Scalar>::Identity();
  for (const Letter& l : w.letters) {
    const CMat2<Scalar>& g = l.gen == Gen::x ? t.x_disk : l.gen == Gen::y ? t.y_disk : t.z_disk;
    const CMat2<Scalar> step = l.exp > 0 ? g : CMat2<Scalar>(g.inverse());
    for (long long i = 0, n = l.exp > 0 ? l.exp : -l.exp; i < n; ++i) m = m * step;
  }
  return m;
}

/// Half-plane matrix of w, classified.
template <class Scalar = double>
Isometry<Scalar> eval_word_matrix(const Word& w, const TriangleGroup<Scalar>& t) {
  Mat2<Scalar> m = Mat2<Scalar>::Identity();
  for (const Letter& l : w.letters) {
    const Mat2<Scalar>& g = (l.gen == Gen::x ? t.x : l.gen == Gen::y ? t.y : t.z).matrix;
    const Mat2<Scalar> step = l.exp > 0 ? g : Mat2<Scalar>(g.inverse());
    for (long long i = 0, n = l.exp > 0 ? l.exp : -l.exp; i < n; ++i) m = m * step;
  }
  return classify_isometry<Scalar>(m);
}

/// Same, after checking that the triangle group matches the dessin's type.
template <class Scalar = double>
Isometry<Scalar> eval_word_matrix(const Word& w, const TriangleGroup<Scalar>& t, const Dessin& d) {
  require_type(d, t.a, t.b, t.c);
  return eval_word_matrix(w, t);
}

/// breadth_first: BFS over the quadrilateral adjacency from label 1, trying
/// x, y, z in that order. face_first: each face is entered once and walked
/// along z; faces are joined across x, so every face stays contiguous.
enum class TreeOrder { breadth_first, face_first };

/// Spanning tree of the quadrilateral adjacency rooted at label 1.
struct SpanningTree {
  std::vector<Label> order;   // labels in discovery order
  std::vector<Label> parent;  // parent[label - 1], 0 for the root
  std::vector<Gen> via;       // generator from the parent
  std::vector<Word> word;     // word[label - 1] sends 1 to label
};

SpanningTree spanning_tree(const Dessin& d, TreeOrder order = TreeOrder::breadth_first);

struct SidePairing {
  std::pair<Label, Label> side_pair;
  Gen generator;
  Word word;
  Isometry<double> matrix;
};

/// Schreier generators of K from the non-tree adjacencies. Every word is
/// checked to fix label 1 and to act as a hyperbolic isometry or the identity.
std::vector<SidePairing> side_pairings(const Dessin& d,
                                       TreeOrder order = TreeOrder::breadth_first);

}  // namespace dessins
