#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>

#include "dessins/curve.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/fixtures.hpp"
#include "support.hpp"

using namespace dessins;

namespace {

std::vector<std::string> forms(const EnumerationResult& res) {
  std::vector<std::string> out;
  for (const Dessin& d : res.classes) out.push_back(canonical_form(d));
  return out;
}

}  // namespace

TEST_CASE("type parsing and degree") {
  const CleanType t = parse_clean_type("2,4,12");
  CHECK(t.m == 2);
  CHECK(t.k == 12);
  CHECK(degree_for(t, 2) == 12);
  CHECK(degree_for(parse_clean_type("2,4,8"), 2) == 16);
  CHECK(degree_for(parse_clean_type("2,4,6"), 2) == 24);
  CHECK(degree_for(parse_clean_type("2,6,6"), 2) == 12);
  CHECK(test::error_code([] { parse_clean_type("3,4,12"); }) == "unsupported");
  CHECK(test::error_code([] { parse_clean_type("2,3,12"); }) == "unsupported");
  CHECK(test::error_code([] { parse_clean_type("2,4"); }) == "parse_error");
  CHECK(test::error_code([] { parse_clean_type("2,4,x"); }) == "parse_error");
  CHECK(test::error_code([] { degree_for(parse_clean_type("2,4,7"), 2); }) == "non_integral");
  CHECK(test::error_code([] { degree_for(parse_clean_type("2,4,12"), 1); }) == "non_integral");
}

TEST_CASE("genus 2, type (2,4,12): six classes, one filling") {
  const auto res = enumerate_uniform(parse_clean_type("2,4,12"), 2);
  CHECK(res.degree == 12);
  CHECK(res.classes.size() == 6);
  CHECK(res.filling_count == 1);
  CHECK(res.component_histogram == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}, {3, 2}, {4, 1}});
}

TEST_CASE("every listed (2,4,12) dessin matches exactly one class") {
  const auto res = enumerate_uniform(parse_clean_type("2,4,12"), 2);
  std::vector<int> hits(res.classes.size(), 0);
  for (std::size_t row = 1; row <= 6; ++row) {
    const Dessin d = fixtures::twelve_edge(row);
    int matches = 0;
    for (std::size_t c = 0; c < res.classes.size(); ++c) {
      const Dessin& e = res.classes[c];
      if (oracle::equivalent(test::bridge(d.sigma0()), test::bridge(d.sigma1()),
                             test::bridge(e.sigma0()), test::bridge(e.sigma1()))) {
        ++matches;
        ++hits[c];
      }
    }
    CHECK(matches == 1);
  }
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("genus 2, type (2,4,8): nineteen classes, four filling") {
  const auto res = enumerate_uniform(parse_clean_type("2,4,8"), 2);
  CHECK(res.classes.size() == 19);
  CHECK(res.filling_count == 4);
  bool found = false;
  for (const Dessin& d : res.classes) found = found || are_equivalent(d, fixtures::two_octagons());
  CHECK(found);
}

TEST_CASE("genus 2, type (2,4,6): forty classes, none filling") {
  const auto res = enumerate_uniform(parse_clean_type("2,4,6"), 2);
  CHECK(res.degree == 24);
  CHECK(res.classes.size() == 40);
  CHECK(res.filling_count == 0);
  for (const Dessin& d : res.classes) {
    REQUIRE(cycle_type(d.sigma0()) == std::vector<std::size_t>(12, 2));
    REQUIRE(cycle_type(d.sigma1()) == std::vector<std::size_t>(6, 4));
    REQUIRE(cycle_type(d.sigma_inf()) == std::vector<std::size_t>(4, 6));
    REQUIRE(cycle_type(straight_through(d)) != std::vector<std::size_t>{12, 12});
  }
}

TEST_CASE("classes are distinct, valid and sorted") {
  for (const char* type : {"2,4,12", "2,4,8", "2,6,6", "2,4,6"}) {
    CAPTURE(type);
    const CleanType t = parse_clean_type(type);
    const auto res = enumerate_uniform(t, 2);
    const auto f = forms(res);
    CHECK(std::is_sorted(f.begin(), f.end()));
    CHECK(std::adjacent_find(f.begin(), f.end()) == f.end());
    for (const Dessin& d : res.classes) {
      REQUIRE(genus(d) == 2);
      REQUIRE(is_clean(d));
      REQUIRE(is_uniform(d));
      REQUIRE(passport(d).type_triple == t.triple());
    }
    // Pairwise inequivalence by brute force on the smaller types.
    if (res.degree <= 12)
      for (std::size_t i = 0; i < res.classes.size(); ++i)
        for (std::size_t j = i + 1; j < res.classes.size(); ++j)
          REQUIRE_FALSE(oracle::equivalent(
              test::bridge(res.classes[i].sigma0()), test::bridge(res.classes[i].sigma1()),
              test::bridge(res.classes[j].sigma0()), test::bridge(res.classes[j].sigma1())));
  }
}

TEST_CASE("the fixed-black-vertex route gives the same classes") {
  for (const char* type : {"2,4,12", "2,4,8", "2,6,6"}) {
    CAPTURE(type);
    const CleanType t = parse_clean_type(type);
    const auto expected = forms(enumerate_uniform(t, 2));
    CHECK(enumerate_fixed_black(t, 2) == expected);
    CHECK(enumerate_fixed_black(t, 2, true) == expected);
  }
}

TEST_CASE("worker count does not change the output") {
  for (const char* type : {"2,4,8", "2,4,6"}) {
    CAPTURE(type);
    const CleanType t = parse_clean_type(type);
    const auto one = enumerate_uniform(t, 2);
    for (std::size_t jobs : {2, 4, 7}) {
      EnumerateOptions o;
      o.jobs = jobs;
      std::atomic<std::size_t> calls{0}, last_total{0};
      o.progress = [&](std::size_t, std::size_t total) {
        ++calls;
        last_total = total;
      };
      const auto many = enumerate_uniform(t, 2, o);
      REQUIRE(many.classes == one.classes);
      CHECK(many.component_histogram == one.component_histogram);
      CHECK(calls.load() == last_total.load());
    }
  }
}

TEST_CASE("summaries") {
  const auto res = enumerate_uniform(parse_clean_type("2,4,12"), 2);
  const auto rows = summarize(res);
  REQUIRE(rows.size() == 6);
  std::size_t filling = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].passport == "(2^6; 4^3; 12)");
    CHECK(rows[i].r == decompose(res.classes[i]).r);
    CHECK(rows[i].straight_through == to_cycle_string(straight_through(res.classes[i])));
    CHECK(rows[i].min_length == doctest::Approx(oracle::arc_form(2, 12, 6)).epsilon(1e-12));
    filling += rows[i].filling;
  }
  CHECK(filling == 1);
}
