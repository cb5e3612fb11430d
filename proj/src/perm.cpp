#include "dessins/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dessins/error.hpp"

namespace dessins {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw Error("bad_degree", "permutation degree must be >= 1");
  std::vector<Label> m(degree);
  std::iota(m.begin(), m.end(), Label{0});
  return Permutation(std::move(m));
}

Permutation Permutation::from_images(std::vector<Label> images) {
  const std::size_t n = images.size();
  if (n == 0) throw Error("bad_degree", "permutation degree must be >= 1");
  std::vector<bool> seen(n, false);
  for (auto& v : images) {
    if (v < 1 || v > n)
      throw Error("label_out_of_range",
                  "image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v - 1])
      throw Error("duplicate_label", "image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    --v;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<Cycle>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (Label l : c) {
      if (l < 1 || l > degree)
        throw Error("label_out_of_range", "label " + std::to_string(l) +
                                              " outside 1.." + std::to_string(degree));
      if (used[l - 1])
        throw Error("duplicate_label", "label " + std::to_string(l) + " repeated");
      used[l - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.map_[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw Error("parse_error", "cycle notation: " + what + " at offset " +
                                   std::to_string(i) + " in \"" + std::string(text) + "\"");
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    Cycle c;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected label");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 0xFFFFFFFFul) fail("label too large");
        ++i;
      }
      c.push_back(static_cast<Label>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(c));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

std::vector<Label> Permutation::images() const {
  std::vector<Label> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = map_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Label> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<Label>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("degree_mismatch", "cannot compose permutations of degree " +
                                       std::to_string(p.degree()) + " and " +
                                       std::to_string(q.degree()));
  std::vector<Label> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.map_[q.map_[i]];
  return Permutation(std::move(r));
}

Permutation power(const Permutation& p, long long n) {
  Permutation base = n < 0 ? p.inverse() : p;
  unsigned long long e = n < 0 ? 0ull - static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  Permutation result = Permutation::identity(p.degree());
  while (e) {
    if (e & 1ull) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

CycleStructure cycle_decomposition(const Permutation& p) {
  CycleStructure cs;
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    std::size_t j = start;
    do {
      seen[j] = true;
      c.push_back(static_cast<Label>(j + 1));
      j = p.image0(j);
    } while (j != start);
    cs.cycle_type.push_back(c.size());
    cs.cycles.push_back(std::move(c));
  }
  std::sort(cs.cycle_type.begin(), cs.cycle_type.end());
  return cs;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  return cycle_decomposition(p).cycle_type;
}

std::size_t cycle_count(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t j = start; !seen[j]; j = p.image0(j)) seen[j] = true;
  }
  return count;
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t l = 1;
  for (auto len : cycle_type(p)) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

std::string to_cycle_string(const Permutation& p) {
  std::string s;
  for (const auto& c : cycle_decomposition(p).cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

namespace {

std::size_t common_degree(std::span<const Permutation> gens) {
  if (gens.empty()) throw Error("empty_generators", "generator list is empty");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n)
      throw Error("degree_mismatch", "generators have different degrees");
  return n;
}

}  // namespace

std::vector<std::vector<Label>> orbits(std::span<const Permutation> generators) {
  const std::size_t n = common_degree(generators);
  std::vector<int> id(n, -1);
  std::vector<std::vector<Label>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (id[s] >= 0) continue;
    const int k = static_cast<int>(out.size());
    std::vector<Label> orbit{static_cast<Label>(s)};
    id[s] = k;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : generators) {
        Label t = g.image0(orbit[head]);
        if (id[t] < 0) {
          id[t] = k;
          orbit.push_back(t);
        }
      }
    for (auto& v : orbit) ++v;
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(std::span<const Permutation> generators) {
  return orbits(generators).size() == 1;
}

namespace {

// One level of a stabilizer chain: the base point, the generators fixing all
// earlier base points, and a transversal u[b] with u[b](base) = b.
struct ChainLevel {
  Label base;
  std::vector<Permutation> gens;
  std::vector<Label> orbit;
  std::vector<int> slot;  // point -> index into transversal, -1 if outside
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;

  void rebuild(std::size_t n) {
    slot.assign(n, -1);
    orbit.assign(1, base);
    transversal.assign(1, Permutation::identity(n));
    transversal_inv.assign(1, Permutation::identity(n));
    slot[base] = 0;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Label b = orbit[head];
      const Permutation ub = transversal[static_cast<std::size_t>(slot[b])];
      for (const auto& g : gens) {
        const Label c = g.image0(b);
        if (slot[c] >= 0) continue;
        slot[c] = static_cast<int>(orbit.size());
        orbit.push_back(c);
        Permutation uc = compose(g, ub);
        transversal_inv.push_back(uc.inverse());
        transversal.push_back(std::move(uc));
      }
    }
  }
};

Label first_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g.image0(i) != i) return static_cast<Label>(i);
  return 0;
}

}  // namespace

BigInt group_order(std::span<const Permutation> generators) {
  const std::size_t n = common_degree(generators);
  std::vector<ChainLevel> chain;

  auto append_level = [&](const Permutation& moved_by) {
    ChainLevel lvl;
    lvl.base = first_moved_point(moved_by);
    chain.push_back(std::move(lvl));
  };

  // Sift h from `level`; returns the level where it dropped out (or
  // chain.size() if it survived every level) together with the residue.
  auto sift = [&](Permutation h, std::size_t level) {
    for (; level < chain.size(); ++level) {
      const ChainLevel& lvl = chain[level];
      const Label b = h.image0(lvl.base);
      if (lvl.slot[b] < 0) break;
      h = compose(lvl.transversal_inv[static_cast<std::size_t>(lvl.slot[b])], h);
    }
    return std::pair{level, std::move(h)};
  };

  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    bool fixes_base = true;
    for (const auto& lvl : chain)
      if (g.image0(lvl.base) != lvl.base) {
        fixes_base = false;
        break;
      }
    if (fixes_base) append_level(g);
    for (auto& lvl : chain) {
      lvl.gens.push_back(g);
      if (g.image0(lvl.base) != lvl.base) break;
    }
  }
  if (chain.empty()) return BigInt{1};
  for (auto& lvl : chain) lvl.rebuild(n);

  std::size_t i = chain.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t oi = 0; oi < chain[i].orbit.size() && !restarted; ++oi) {
      const Label b = chain[i].orbit[oi];
      for (std::size_t gi = 0; gi < chain[i].gens.size(); ++gi) {
        const ChainLevel& lvl = chain[i];
        const Permutation& s = lvl.gens[gi];
        const Label c = s.image0(b);
        Permutation h = compose(lvl.transversal_inv[static_cast<std::size_t>(lvl.slot[c])],
                                compose(s, lvl.transversal[oi]));
        auto [j, residue] = sift(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        if (j == chain.size()) append_level(residue);
        for (std::size_t l = i + 1; l <= j; ++l) {
          chain[l].gens.push_back(residue);
          chain[l].rebuild(n);
        }
        i = j + 1;  // the loop decrement lands on level j
        restarted = true;
        break;
      }
    }
  }

  BigInt total = 1;
  for (const auto& lvl : chain) total *= static_cast<unsigned>(lvl.orbit.size());
  return total;
}

}  // namespace dessins
