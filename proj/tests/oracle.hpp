#pragma once

// Reference implementations kept independent of the library: plain vectors,
// brute force, no shared helpers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <regex>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// 1-based images; index 0 unused.
using Perm = std::vector<int>;

inline Perm identity(int n) {
  Perm p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  return p;
}

inline Perm parse(int n, const std::string& text) {
  Perm p = identity(n);
  static const std::regex cyc(R"(\(([^)]*)\))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), cyc); it != std::sregex_iterator(); ++it) {
    std::vector<int> xs;
    std::string body = (*it)[1];
    std::size_t at = 0;
    while (at < body.size()) {
      std::size_t end = body.find(',', at);
      if (end == std::string::npos) end = body.size();
      xs.push_back(std::stoi(body.substr(at, end - at)));
      at = end + 1;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) p[xs[i]] = xs[(i + 1) % xs.size()];
  }
  return p;
}

/// (p q)(i) = p(q(i)).
inline Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline Perm pow(const Perm& p, int e) {
  Perm r = identity(static_cast<int>(p.size()) - 1);
  const Perm base = e >= 0 ? p : inv(p);
  for (int i = 0; i < std::abs(e); ++i) r = mul(base, r);
  return r;
}

inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 1; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(s); !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(c);
  }
  return out;
}

inline std::size_t count(const Perm& p) { return cycles(p).size(); }

inline std::vector<std::size_t> lengths(const Perm& p) {
  std::vector<std::size_t> out;
  for (const auto& c : cycles(p)) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string str(const Perm& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += ")";
  }
  return s;
}

/// Full closure of a generated group; only for small groups.
inline std::size_t closure_order(const std::vector<Perm>& gens) {
  const int n = static_cast<int>(gens.front().size()) - 1;
  std::set<Perm> seen{identity(n)};
  std::vector<Perm> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& g : frontier)
      for (const Perm& s : gens) {
        Perm h = mul(s, g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Whether some bijection tau satisfies tau a_i tau^-1 = b_i, trying every tau
/// that fixes the image of label 1 and extending along the generators.
inline bool equivalent(const Perm& a0, const Perm& a1, const Perm& b0, const Perm& b1) {
  const int n = static_cast<int>(a0.size()) - 1;
  if (static_cast<int>(b0.size()) - 1 != n) return false;
  for (int t = 1; t <= n; ++t) {
    std::vector<int> tau(n + 1, 0);
    tau[1] = t;
    std::vector<int> stack{1};
    bool ok = true;
    while (!stack.empty() && ok) {
      const int i = stack.back();
      stack.pop_back();
      for (int g = 0; g < 2 && ok; ++g) {
        const Perm& a = g ? a1 : a0;
        const Perm& b = g ? b1 : b0;
        const int j = a[i], image = b[tau[i]];
        if (tau[j] == 0) {
          tau[j] = image;
          stack.push_back(j);
        } else if (tau[j] != image) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> sorted(tau.begin() + 1, tau.end());
    std::sort(sorted.begin(), sorted.end());
    bool bijective = sorted.front() == 1;
    for (int i = 1; i < n; ++i) bijective = bijective && sorted[i] == sorted[i - 1] + 1;
    if (bijective) return true;
  }
  return false;
}

inline bool transitive(const Perm& a, const Perm& b) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j : {a[i], b[i]})
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == n;
}

// Closed forms, written out directly.
inline double arc_form(int m, int k, int d) {
  const double pi = std::numbers::pi;
  const double c = std::cos(pi / (2 * m)), s = std::sin(pi / (2 * m));
  return d * std::acosh((c * c + std::cos(2 * pi / k)) / (s * s));
}

inline double edge_form(int m, int k, int d) {
  const double pi = std::numbers::pi;
  return 2 * d * std::acosh(std::cos(pi / k) / std::sin(pi / (2 * m)));
}

inline double star_form(int l, int m, int j, int d) {
  const double pi = std::numbers::pi;
  return d * std::acosh((std::cos(pi / (2 * m)) * std::cos(pi / (2 * l)) + std::cos(pi / j)) /
                        (std::sin(pi / (2 * m)) * std::sin(pi / (2 * l))));
}

}  // namespace oracle
