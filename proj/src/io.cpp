#include "dessins/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dessins/error.hpp"

namespace dessins {

namespace {

Permutation cycles_from_json(const Json& j, std::size_t degree, const char* key) {
  if (!j.is_array()) throw Error("schema", std::string(key) + " must be an array of cycles");
  std::vector<Cycle> cycles;
  for (const Json& c : j) {
    if (!c.is_array() || c.empty())
      throw Error("schema", std::string(key) + " cycles must be non-empty arrays");
    Cycle cyc;
    for (const Json& v : c) {
      if (!v.is_number_integer()) throw Error("schema", std::string(key) + " entries must be integers");
      const auto x = v.get<long long>();
      if (x < 1 || static_cast<std::size_t>(x) > degree)
        throw Error("schema", std::string(key) + " entry " + std::to_string(x) + " outside 1.." +
                                  std::to_string(degree));
      cyc.push_back(static_cast<Label>(x));
    }
    cycles.push_back(std::move(cyc));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw Error("schema", std::string(key) + ": " + e.what());
  }
}

Json cycles_to_json(const Permutation& p) {
  Json out = Json::array();
  for (const Cycle& c : cycle_decomposition(p).cycles)
    if (c.size() > 1) out.push_back(c);
  return out;
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Dessin dessin_from_json(const Json& j) {
  if (!j.is_object()) throw Error("schema", "dessin must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "degree" && key != "sigma0" && key != "sigma1")
      throw Error("schema", "unknown key \"" + key + "\"");
  for (const char* key : {"degree", "sigma0", "sigma1"})
    if (!j.contains(key)) throw Error("schema", std::string("missing key \"") + key + "\"");
  if (!j["degree"].is_number_integer() || j["degree"].get<long long>() < 1)
    throw Error("schema", "degree must be a positive integer");
  const auto degree = j["degree"].get<std::size_t>();
  return Dessin(cycles_from_json(j["sigma0"], degree, "sigma0"),
                cycles_from_json(j["sigma1"], degree, "sigma1"));
}

Json to_json(const Dessin& d) {
  Json j;
  j["degree"] = d.degree();
  j["sigma0"] = cycles_to_json(d.sigma0());
  j["sigma1"] = cycles_to_json(d.sigma1());
  return j;
}

Dessin parse_dessin(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("parse_error", e.what());
  }
  return dessin_from_json(j);
}

Dessin load_dessin(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dessin(buf.str());
}

void save_dessin(const Dessin& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path.string());
  out << dessin_text(d);
}

std::string dessin_text(const Dessin& d) {
  const Json j = to_json(d);
  return "{\n  \"degree\": " + j["degree"].dump() + ",\n  \"sigma0\": " + j["sigma0"].dump() +
         ",\n  \"sigma1\": " + j["sigma1"].dump() + "\n}\n";
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json to_json(const CurveSystem& cs) {
  Json j;
  j["r"] = cs.r;
  j["m"] = cs.m;
  j["l"] = cs.l;
  j["components"] = cs.components;
  return j;
}

Json to_json(const LengthReport<double>& r) {
  Json j;
  j["formula_used"] = r.formula_used == LengthFormula::clean ? "clean" : "bipartite";
  j["m"] = r.m;
  if (r.formula_used == LengthFormula::clean) {
    j["k"] = r.k;
  } else {
    j["l"] = r.l;
    j["j"] = r.j;
  }
  j["d"] = r.d;
  j["edge_length"] = round15(r.edge_length);
  j["total"] = round15(r.total);
  return j;
}

Json to_json(const Passport& p) {
  Json j;
  j["degree"] = p.degree;
  j["white_degrees"] = sizes(p.white_degrees);
  j["black_degrees"] = sizes(p.black_degrees);
  j["face_degrees"] = sizes(p.face_degrees);
  j["type"] = p.type_triple;
  j["passport"] = passport_string(p);
  return j;
}

Json to_json(const DessinClassification& c) {
  Json j;
  j["genus"] = c.genus;
  j["clean"] = c.is_clean;
  j["uniform"] = c.is_uniform;
  j["regular"] = c.is_regular;
  j["monodromy_order"] = c.monodromy_order.str();
  return j;
}

Json to_json(const SurgeryOutcome& s) {
  Json j;
  j["case"] = to_string(s.face_case);
  Json deltas = Json::array();
  for (const auto& f : s.face_degree_delta) deltas.push_back({f.old_degree, f.new_degree});
  j["face_degree_delta"] = deltas;
  j["genus"] = genus(s.result);
  j["dessin"] = to_json(s.result);
  return j;
}

Json to_json(const Isometry<double>& iso) {
  Json j;
  j["kind"] = to_string(iso.kind);
  j["matrix"] = {{round15(iso.matrix(0, 0)), round15(iso.matrix(0, 1))},
                 {round15(iso.matrix(1, 0)), round15(iso.matrix(1, 1))}};
  j["trace"] = round15(iso.trace());
  if (iso.kind == IsometryKind::hyperbolic) j["translation_length"] = round15(iso.translation_length);
  return j;
}

Json to_json(const SidePairing& sp) {
  Json j;
  j["sides"] = {sp.side_pair.first, sp.side_pair.second};
  j["generator"] = std::string(1, to_char(sp.generator));
  j["word"] = to_string(sp.word);
  j["isometry"] = to_json(sp.matrix);
  return j;
}

Json to_json(const EnumerationResult& res) {
  Json j;
  j["type"] = res.type.triple();
  j["genus"] = res.genus;
  j["degree"] = res.degree;
  j["count"] = res.classes.size();
  j["filling_count"] = res.filling_count;
  Json hist = Json::object();
  for (const auto& [r, n] : res.component_histogram) hist[std::to_string(r)] = n;
  j["component_histogram"] = hist;
  const auto rows = summarize(res);
  Json classes = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json c;
    c["passport"] = rows[i].passport;
    c["straight_through"] = rows[i].straight_through;
    c["straight_through_cycle_type"] = rows[i].straight_through_cycle_type;
    c["r"] = rows[i].r;
    c["filling"] = rows[i].filling;
    c["min_length"] = round15(rows[i].min_length);
    c["dessin"] = to_json(res.classes[i]);
    classes.push_back(std::move(c));
  }
  j["classes"] = classes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dessins
