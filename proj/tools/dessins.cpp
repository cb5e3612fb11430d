#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>

#include "dessins/curve.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/error.hpp"
#include "dessins/fixtures.hpp"
#include "dessins/fuchsian.hpp"
#include "dessins/io.hpp"
#include "dessins/render.hpp"
#include "dessins/surgery.hpp"
#include "dessins/verify.hpp"

using namespace dessins;

namespace {

// A path, "-" for standard input, or "fixture:NAME".
Dessin read_input(const std::string& source) {
  if (source.starts_with("fixture:")) return fixtures::by_name(source.substr(8));
  if (source == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return parse_dessin(text);
  }
  return load_dessin(source);
}

std::array<std::size_t, 3> parse_triple(const std::string& text) {
  std::array<std::size_t, 3> t{};
  std::size_t i = 0, at = 0;
  for (; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', at) : text.size();
    if (end == std::string::npos) break;
    auto [p, ec] = std::from_chars(text.data() + at, text.data() + end, t[i]);
    if (ec != std::errc() || p != text.data() + end) break;
    at = end + 1;
  }
  if (i != 3) throw Error("parse_error", "expected a,b,c but got \"" + text + "\"");
  return t;
}

void emit(const Json& j) { std::cout << dump(j); }
void emit(const Dessin& d) { std::cout << dessin_text(d); }

void fail(const std::string& code, const std::string& message) {
  Json e;
  e["error"] = code;
  e["message"] = message;
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filling curves as dessins d'enfants"};
  app.require_subcommand(1);
  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "dessin JSON file, - for stdin, or fixture:NAME")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "passport, type, genus and classification");
  add_input(analyze);
  auto* components = app.add_subcommand("components", "curve components by traversal");
  add_input(components);
  auto* minlength = app.add_subcommand("minlength", "minimal total length of the multicurve");
  add_input(minlength);
  auto* dual_cmd = app.add_subcommand("dual", "swap black vertices and faces");
  add_input(dual_cmd);
  auto* medial_cmd = app.add_subcommand("medial", "insert white vertices mid-edge");
  add_input(medial_cmd);

  auto* surgery = app.add_subcommand("surgery", "genus-raising surgery at a white vertex");
  add_input(surgery);
  Label sa = 0, sb = 0;
  surgery->add_option("--a", sa, "first label of the 2-cycle")->required();
  surgery->add_option("--b", sb, "second label of the 2-cycle")->required();

  auto* seed = app.add_subcommand("seed", "starting dessin of a growth family");
  std::size_t seed_genus = 0, seed_faces = 0;
  seed->add_option("--genus", seed_genus)->required();
  seed->add_option("--faces", seed_faces)->required();

  auto* grow_cmd = app.add_subcommand("grow", "repeat surgery up to a target genus");
  add_input(grow_cmd);
  std::size_t grow_genus = 0, grow_faces = 0;
  bool grow_trace_flag = false;
  grow_cmd->add_option("--genus", grow_genus, "target genus")->required();
  grow_cmd->add_option("--faces", grow_faces, "number of faces n (1, 2 or 3)")->required();
  grow_cmd->add_flag("--trace", grow_trace_flag, "emit every intermediate dessin");

  auto* enumerate = app.add_subcommand("enumerate", "all uniform clean dessins of a type and genus");
  std::string type_text;
  std::size_t en_genus = 0, jobs = 1;
  bool progress = false;
  enumerate->add_option("--type", type_text, "2,2m,k")->required();
  enumerate->add_option("--genus", en_genus)->required();
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  enumerate->add_flag("--progress", progress, "report finished subtrees on stderr");

  auto* word_cmd = app.add_subcommand("word", "evaluate a word in x, y, z");
  std::string word_text, word_type;
  Label base = 1;
  word_cmd->add_option("word", word_text)->required();
  add_input(word_cmd);
  word_cmd->add_option("--type", word_type, "a,b,c for the matrix evaluation");
  word_cmd->add_option("--base", base, "base label");

  auto* pairings = app.add_subcommand("pairings", "side pairings generating the surface group");
  add_input(pairings);
  std::string tree_name = "bfs";
  pairings->add_option("--tree", tree_name, "bfs or face")->check(CLI::IsMember({"bfs", "face"}));

  auto* render = app.add_subcommand("render", "SVG of the fundamental domain");
  add_input(render);
  std::string out_path;
  double size = 800;
  render->add_option("-o,--output", out_path, "output file (default stdout)");
  render->add_option("--size", size, "pixels")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_input(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("usage", e.what());
    return 2;
  }

  try {
    if (analyze->parsed()) {
      const Dessin d = read_input(input);
      Json j;
      j["passport"] = to_json(passport(d));
      j["classification"] = to_json(classify(d));
      emit(j);
    } else if (components->parsed()) {
      emit(to_json(decompose(read_input(input))));
    } else if (minlength->parsed()) {
      emit(to_json(min_length(read_input(input))));
    } else if (dual_cmd->parsed()) {
      emit(dual(read_input(input)));
    } else if (medial_cmd->parsed()) {
      emit(medial(read_input(input)));
    } else if (surgery->parsed()) {
      emit(to_json(apply_surgery(read_input(input), sa, sb)));
    } else if (seed->parsed()) {
      emit(seed_dessin(seed_genus, seed_faces));
    } else if (grow_cmd->parsed()) {
      const auto trace = grow_trace(read_input(input), grow_genus, grow_faces);
      if (grow_trace_flag) {
        Json steps = Json::array();
        for (const Dessin& d : trace) {
          Json s;
          s["genus"] = genus(d);
          s["face_degree"] = cycle_type(d.sigma_inf()).front();
          s["dessin"] = to_json(d);
          steps.push_back(std::move(s));
        }
        emit(steps);
      } else {
        emit(trace.back());
      }
    } else if (enumerate->parsed()) {
      EnumerateOptions options;
      options.jobs = jobs;
      std::size_t last_reported = 0;
      if (progress)
        options.progress = [&](std::size_t done, std::size_t total) {
          const std::size_t pct = 100 * done / total;
          if (pct != last_reported || done == total) {
            std::cerr << "subtrees " << done << "/" << total << "\n";
            last_reported = pct;
          }
        };
      emit(to_json(enumerate_uniform(parse_clean_type(type_text), en_genus, options)));
    } else if (word_cmd->parsed()) {
      const Dessin d = read_input(input);
      const Word w = parse_word(word_text);
      Json j;
      j["word"] = to_string(w);
      j["permutation"] = to_cycle_string(eval_word_perm(w, d));
      j["base"] = base;
      j["in_K"] = in_K(w, d, base);
      if (!word_type.empty()) {
        const auto [a, b, c] = parse_triple(word_type);
        j["isometry"] = to_json(eval_word_matrix(w, triangle_group_matrices<double>(a, b, c), d));
      }
      emit(j);
    } else if (pairings->parsed()) {
      const auto order = tree_name == "face" ? TreeOrder::face_first : TreeOrder::breadth_first;
      Json j = Json::array();
      for (const auto& sp : side_pairings(read_input(input), order)) j.push_back(to_json(sp));
      emit(j);
    } else if (render->parsed()) {
      RenderOptions options;
      options.size = size;
      const std::string svg = render_svg(read_input(input), options);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path);
        if (!out) throw Error("io", "cannot write " + out_path);
        out << svg;
      }
    } else if (verify->parsed()) {
      const auto checks = verify_dessin(read_input(input));
      Json j;
      Json list = Json::array();
      for (const auto& c : checks) {
        Json row;
        row["check"] = c.name;
        row["status"] = to_string(c.status);
        row["detail"] = c.detail;
        list.push_back(std::move(row));
      }
      j["checks"] = list;
      j["passed"] = all_passed(checks);
      emit(j);
      if (!all_passed(checks)) return 1;
    }
  } catch (const Error& e) {
    fail(e.code(), e.what());
    return 1;
  } catch (const std::exception& e) {
    fail("internal", e.what());
    return 1;
  }
  return 0;
}
