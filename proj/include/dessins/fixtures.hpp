#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins::fixtures {

/// Genus 2, type (2,4,8): a single filling curve with 16 edges and two
/// octagonal faces.
Dessin two_octagons();

/// The six genus 2 dessins of type (2,4,12) with
/// sigma0 = (1,12)(2,11)(3,10)(4,9)(5,8)(6,7); row in 1..6.
Dessin twelve_edge(std::size_t row);
/// sigma1 of each row, cycle notation.
std::string_view twelve_edge_sigma1(std::size_t row);

/// Genus 2, type (2,6,6): three curves on y^2 = x^6 - 1.
Dessin hexagon_pair();

/// Genus 2 dessin with three curves whose dual has two.
Dessin dual_source();

struct StabilizerWord {
  Label side_a, side_b;
  std::string_view word;
};

/// Side-pairing words for the fundamental domain of two_octagons().
const std::vector<StabilizerWord>& stabilizer_words();

/// Names accepted by by_name(): "two_octagons", "twelve_edge_1".."twelve_edge_6",
/// "hexagon_pair", "dual_source", "seed_g2_n1", "seed_g2_n2", "seed_g3_n2",
/// "seed_g4_n3".
const std::vector<std::string>& names();
Dessin by_name(std::string_view name);

}  // namespace dessins::fixtures
