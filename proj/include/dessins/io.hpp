#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dessins/curve.hpp"
#include "dessins/dessin.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/fuchsian.hpp"
#include "dessins/hypgeom.hpp"
#include "dessins/surgery.hpp"

namespace dessins {

using Json = nlohmann::ordered_json;

/// {"degree": E, "sigma0": [[...],...], "sigma1": [[...],...]}; fixed points
/// may be omitted, unknown keys are rejected. Throws Error("schema").
Dessin dessin_from_json(const Json& j);
/// Writes non-trivial cycles only.
Json to_json(const Dessin& d);

/// Throws Error("io") or Error("parse_error") besides the schema errors.
Dessin load_dessin(const std::filesystem::path& path);
void save_dessin(const Dessin& d, const std::filesystem::path& path);
Dessin parse_dessin(const std::string& text);
/// File layout: one line per key, cycles kept on the same line.
std::string dessin_text(const Dessin& d);

/// Reals rounded to 15 significant digits.
double round15(double v);

Json to_json(const CurveSystem& cs);
Json to_json(const LengthReport<double>& r);
Json to_json(const Passport& p);
Json to_json(const DessinClassification& c);
Json to_json(const SurgeryOutcome& s);
Json to_json(const Isometry<double>& iso);
Json to_json(const SidePairing& sp);
Json to_json(const EnumerationResult& res);

/// Stable text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace dessins
