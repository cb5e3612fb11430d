#include "dessins/fixtures.hpp"

#include <array>

#include "dessins/error.hpp"
#include "dessins/surgery.hpp"

namespace dessins::fixtures {

namespace {

constexpr std::string_view kTwelveSigma0 = "(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)";

// Row 2 is reconstructed: its last 4-cycle is (4,6,8,7), so that the three
// cycles partition 1..12 and sigma1^2 sigma0 keeps the listed product.
constexpr std::array<std::string_view, 6> kTwelveSigma1{
    "(1,3,12,11)(2,6,9,8)(4,5,10,7)", "(1,3,12,11)(2,5,10,9)(4,6,8,7)",
    "(1,3,12,11)(2,4,8,10)(5,7,9,6)", "(1,6,9,8)(2,10,12,4)(3,7,11,5)",
    "(1,11,8,3)(2,5,12,9)(4,7,10,6)", "(1,4,7,10)(2,6,12,8)(3,5,11,9)"};

}  // namespace

Dessin two_octagons() {
  return make_dessin(16, "(1,16)(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)",
                     "(1,6,9,12)(2,10,16,8)(3,13,15,5)(4,7,14,11)");
}

std::string_view twelve_edge_sigma1(std::size_t row) {
  if (row < 1 || row > kTwelveSigma1.size())
    throw Error("bad_parameter", "row must lie in 1..6");
  return kTwelveSigma1[row - 1];
}

Dessin twelve_edge(std::size_t row) { return make_dessin(12, kTwelveSigma0, twelve_edge_sigma1(row)); }

Dessin hexagon_pair() {
  return make_dessin(12, "(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)", "(1,2,3,4,5,6)(7,8,9,10,11,12)");
}

Dessin dual_source() {
  return make_dessin(12, "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", "(1,7,4,2,3,6)(5,11,8,9,12,10)");
}

const std::vector<StabilizerWord>& stabilizer_words() {
  static const std::vector<StabilizerWord> words{
      {2, 15, "xz5xz6"}, {3, 14, "xz3xz3"}, {4, 13, "xz6xz6x"}, {5, 12, "z6xz7"},
      {6, 11, "xz7xz4"}, {7, 10, "xz4xz7x"}, {8, 9, "z3xz"}};
  return words;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{
      "two_octagons",  "twelve_edge_1", "twelve_edge_2", "twelve_edge_3", "twelve_edge_4",
      "twelve_edge_5", "twelve_edge_6", "hexagon_pair",  "dual_source",   "seed_g2_n1",
      "seed_g2_n2",    "seed_g3_n2",    "seed_g4_n3"};
  return all;
}

Dessin by_name(std::string_view name) {
  if (name == "two_octagons") return two_octagons();
  if (name == "hexagon_pair") return hexagon_pair();
  if (name == "dual_source") return dual_source();
  if (name.starts_with("twelve_edge_") && name.size() == 13 && name[12] >= '1' && name[12] <= '6')
    return twelve_edge(static_cast<std::size_t>(name[12] - '0'));
  if (name == "seed_g2_n1") return seed_dessin(2, 1);
  if (name == "seed_g2_n2") return seed_dessin(2, 2);
  if (name == "seed_g3_n2") return seed_dessin(3, 2);
  if (name == "seed_g4_n3") return seed_dessin(4, 3);
  throw Error("unknown_fixture", "no fixture named \"" + std::string(name) + "\"");
}

}  // namespace dessins::fixtures
