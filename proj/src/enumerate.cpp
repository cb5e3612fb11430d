#include "dessins/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <set>
#include <thread>

#include "dessins/curve.hpp"
#include "dessins/error.hpp"
#include "dessins/hypgeom.hpp"

namespace dessins {

CleanType parse_clean_type(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view tok = text.substr(i, j - i);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      throw Error("parse_error", "bad type \"" + std::string(text) + "\", expected a,b,c");
    parts.push_back(v);
    i = j + 1;
  }
  if (parts.size() != 3) throw Error("parse_error", "type needs exactly three entries");
  if (parts[0] != 2) throw Error("unsupported", "only clean types (2,2m,k) can be enumerated");
  if (parts[1] % 2 != 0 || parts[1] == 0)
    throw Error("unsupported", "black degree must be even");
  return {parts[1] / 2, parts[2]};
}

std::size_t degree_for(CleanType type, std::size_t genus) {
  const std::size_t m = type.m, k = type.k;
  if (m == 0 || k == 0) throw Error("bad_parameter", "m and k must be positive");
  require_hyperbolic(2, 2 * m, k);
  if (genus < 1) throw Error("non_integral", "hyperbolic uniform dessins have genus >= 2");
  // E (mk - k - 2m) / (2mk) = 2g - 2
  const std::size_t denom = m * k - k - 2 * m;
  const std::size_t numer = (2 * genus - 2) * 2 * m * k;
  if (numer == 0 || numer % denom != 0)
    throw Error("non_integral", "no integral degree for this type and genus");
  const std::size_t e = numer / denom;
  if (e % 2 != 0 || e % (2 * m) != 0 || e % k != 0)
    throw Error("non_integral", "degree " + std::to_string(e) +
                                    " is not divisible by every vertex and face degree");
  return e;
}

namespace {

constexpr int kNone = -1;

// Length of the chain of a partial injective map through x, or 0 when the
// chain is closed with a length different from `want`, or want+1 when it is
// open and too long.
template <class Next, class Prev>
bool chain_ok(int x, int want, Next next, Prev prev) {
  int len = 1;
  int y = next(x);
  while (y != kNone && y != x) {
    ++len;
    if (len > want) return false;
    y = next(y);
  }
  if (y == x) return len == want;
  for (int z = prev(x); z != kNone; z = prev(z)) {
    ++len;
    if (len > want) return false;
  }
  return true;
}

Dessin decode_canonical(const std::string& bytes) {
  auto get = [&](std::size_t i) {
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 8) | static_cast<unsigned char>(bytes[4 * i + b]);
    return static_cast<Label>(v);
  };
  const std::size_t n = get(0);
  std::vector<Label> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    s0[i] = get(1 + i);
    s1[i] = get(1 + n + i);
  }
  return Dessin(Permutation::from_images(std::move(s0)), Permutation::from_images(std::move(s1)));
}

// Labels are created in breadth-first discovery order from label 0; when
// label v is processed its sigma0 image is chosen (phase 0), then its sigma1
// image (phase 1). A new label is always the next unused one.
struct BfsState {
  int n = 0, black = 0, face = 0;
  std::vector<int> s0, s1, s1inv;
  int next = 1;
  int v = 0;
  int phase = 0;

  int phi(int x) const { return s0[x] == kNone ? kNone : s1[s0[x]]; }
  int phi_inv(int y) const { return s1inv[y] == kNone ? kNone : s0[s1inv[y]]; }
};

class BfsGenerator {
 public:
  BfsGenerator(BfsState st, std::set<std::string>& out, std::size_t split_depth,
               std::vector<BfsState>* tasks)
      : st_(std::move(st)), out_(out), split_depth_(split_depth), tasks_(tasks) {}

  void run() { rec(0); }

 private:
  void rec(std::size_t depth) {
    BfsState& s = st_;
    if (tasks_ && depth == split_depth_) {
      tasks_->push_back(s);
      return;
    }
    if (s.v == s.n) {
      leaf();
      return;
    }
    if (s.v >= s.next) return;  // discovery ran out: cannot reach all labels
    const int v = s.v;
    if (s.phase == 0) {
      if (s.s0[v] != kNone) {
        s.phase = 1;
        rec(depth);
        s.phase = 0;
        return;
      }
      const int last = s.next < s.n ? s.next : s.next - 1;
      for (int w = v + 1; w <= last; ++w) {
        if (s.s0[w] != kNone) continue;
        const bool fresh = w == s.next;
        s.s0[v] = w;
        s.s0[w] = v;
        if (fresh) ++s.next;
        s.phase = 1;
        rec(depth + 1);
        s.phase = 0;
        if (fresh) --s.next;
        s.s0[v] = s.s0[w] = kNone;
      }
      return;
    }
    const int last = s.next < s.n ? s.next : s.next - 1;
    for (int w = 0; w <= last; ++w) {
      if (s.s1inv[w] != kNone) continue;
      const bool fresh = w == s.next;
      s.s1[v] = w;
      s.s1inv[w] = v;
      if (fresh) ++s.next;
      if (black_ok(v) && chain_ok(s.s0[v], s.face, [&](int x) { return s.phi(x); },
                                  [&](int y) { return s.phi_inv(y); })) {
        s.v = v + 1;
        s.phase = 0;
        rec(depth + 1);
        s.v = v;
        s.phase = 1;
      }
      if (fresh) --s.next;
      s.s1[v] = s.s1inv[w] = kNone;
    }
  }

  bool black_ok(int v) const {
    const BfsState& s = st_;
    return chain_ok(v, s.black, [&](int x) { return s.s1[x]; },
                    [&](int y) { return s.s1inv[y]; });
  }

  void leaf() {
    const BfsState& s = st_;
    std::vector<Label> a(static_cast<std::size_t>(s.n)), b(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) {
      a[static_cast<std::size_t>(i)] = static_cast<Label>(s.s0[i] + 1);
      b[static_cast<std::size_t>(i)] = static_cast<Label>(s.s1[i] + 1);
    }
    Dessin d(Permutation::from_images(std::move(a)), Permutation::from_images(std::move(b)));
    out_.insert(canonical_form(d));
  }

  BfsState st_;
  std::set<std::string>& out_;
  std::size_t split_depth_;
  std::vector<BfsState>* tasks_;
};

EnumerationResult finish(CleanType type, std::size_t genus, std::size_t degree,
                         const std::set<std::string>& forms) {
  EnumerationResult res;
  res.type = type;
  res.genus = genus;
  res.degree = degree;
  for (const auto& f : forms) {
    Dessin d = decode_canonical(f);
    if (is_filling_curve(d)) ++res.filling_count;
    ++res.component_histogram[decompose(d).r];
    res.classes.push_back(std::move(d));
  }
  return res;
}

}  // namespace

EnumerationResult enumerate_uniform(CleanType type, std::size_t genus,
                                    const EnumerateOptions& options) {
  const std::size_t degree = degree_for(type, genus);
  BfsState init;
  init.n = static_cast<int>(degree);
  init.black = static_cast<int>(2 * type.m);
  init.face = static_cast<int>(type.k);
  init.s0.assign(degree, kNone);
  init.s1.assign(degree, kNone);
  init.s1inv.assign(degree, kNone);

  // Split the tree into independent subtrees, deep enough to give every
  // worker several of them. Leaves above the split depth land in `forms`.
  std::vector<BfsState> tasks;
  std::set<std::string> forms;
  for (std::size_t depth = 4; depth <= 4 * degree; depth += 2) {
    tasks.clear();
    forms.clear();
    BfsGenerator(init, forms, depth, &tasks).run();
    if (tasks.size() >= 64) break;
  }

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<std::set<std::string>> partial(jobs);
  std::atomic<std::size_t> cursor{0}, done{0};
  std::mutex progress_mutex;
  auto worker = [&](std::size_t id) {
    for (std::size_t t; (t = cursor.fetch_add(1)) < tasks.size();) {
      BfsGenerator(tasks[t], partial[id], static_cast<std::size_t>(-1), nullptr).run();
      const std::size_t finished = done.fetch_add(1) + 1;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(finished, tasks.size());
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  for (auto& p : partial) forms.merge(p);
  return finish(type, genus, degree, forms);
}

std::vector<std::string> enumerate_fixed_black(CleanType type, std::size_t genus,
                                               bool reverse_order) {
  const std::size_t degree = degree_for(type, genus);
  const int n = static_cast<int>(degree);
  const int black = static_cast<int>(2 * type.m);
  const int face = static_cast<int>(type.k);
  std::vector<int> s1(degree), s1inv(degree), s0(degree, kNone);
  for (int i = 0; i < n; ++i) {
    const int base = i - i % black;
    s1[i] = base + (i - base + 1) % black;
    s1inv[s1[i]] = i;
  }
  auto phi = [&](int x) { return s0[x] == kNone ? kNone : s1[s0[x]]; };
  auto phi_inv = [&](int y) { return s0[s1inv[y]]; };
  const Permutation sigma1 = Permutation::from_images([&] {
    std::vector<Label> im(degree);
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = static_cast<Label>(s1[i] + 1);
    return im;
  }());

  std::set<std::string> forms;
  auto rec = [&](auto&& self, int last) -> void {
    // Prefer extending the open face chain through the last assignment.
    int t = kNone;
    if (last != kNone) {
      int y = last;
      while (phi(y) != kNone && phi(y) != last) y = phi(y);
      if (phi(y) == kNone) t = y;
    }
    if (t == kNone)
      for (int i = 0; i < n; ++i)
        if (s0[i] == kNone) {
          t = i;
          break;
        }
    if (t == kNone) {
      std::vector<Label> im(degree);
      for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = static_cast<Label>(s0[i] + 1);
      const std::array gens{Permutation::from_images(im), sigma1};
      if (!is_transitive(gens)) return;
      forms.insert(canonical_form(Dessin(gens[0], gens[1])));
      return;
    }
    for (int step = 0; step < n; ++step) {
      const int u = reverse_order ? n - 1 - step : step;
      if (u == t || s0[u] != kNone) continue;
      s0[t] = u;
      s0[u] = t;
      if (chain_ok(t, face, phi, phi_inv) && chain_ok(u, face, phi, phi_inv)) self(self, t);
      s0[t] = s0[u] = kNone;
    }
  };
  rec(rec, kNone);
  return {forms.begin(), forms.end()};
}

std::vector<ClassSummary> summarize(const EnumerationResult& res) {
  std::vector<ClassSummary> rows;
  for (const auto& d : res.classes) {
    ClassSummary row;
    row.passport = passport_string(passport(d));
    const Permutation walk = straight_through(d);
    row.straight_through = to_cycle_string(walk);
    row.straight_through_cycle_type = cycle_type(walk);
    row.r = decompose(d).r;
    row.filling = is_filling_curve(d);
    row.min_length = min_length_clean(res.type.m, res.type.k, d.degree() / 2).total;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dessins
