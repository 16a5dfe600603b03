#include "slopenorm/manifold_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace slopenorm {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

/// Runs `step`, turning any exception into a recorded problem.
template <typename F>
void collect(std::vector<std::string>& problems, const std::string& where, F&& step) {
  try {
    std::invoke(std::forward<F>(step));
  } catch (const std::exception& e) {
    problems.push_back(where + ": " + e.what());
  }
}

const json& field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw std::invalid_argument(std::string("missing \"") + key + "\"");
  }
  return object.at(key);
}

std::string string_field(const json& object, const char* key) {
  const json& value = field(object, key);
  if (!value.is_string()) throw std::invalid_argument(std::string("\"") + key + "\" must be a string");
  return value.get<std::string>();
}

std::int64_t integer_field(const json& object, const char* key) {
  const json& value = field(object, key);
  if (!value.is_number_integer()) {
    throw std::invalid_argument(std::string("\"") + key + "\" must be an integer");
  }
  return value.get<std::int64_t>();
}

bool bool_field(const json& object, const char* key, bool fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (!value.is_boolean()) throw std::invalid_argument(std::string("\"") + key + "\" must be a boolean");
  return value.get<bool>();
}

Slope slope_from(const json& value) {
  if (!value.is_string()) throw std::invalid_argument("slope must be a \"p/q\" string");
  return parse_slope(value.get<std::string>());
}

const json& array_field(const json& object, const char* key) {
  const json& value = field(object, key);
  if (!value.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  return value;
}

}  // namespace

ManifoldFormatError::ManifoldFormatError(std::vector<std::string> problems)
    : std::runtime_error("invalid manifold document: " + join(problems)),
      problems_(std::move(problems)) {}

ManifoldData parse_manifold(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifoldFormatError({std::string("malformed document: ") + e.what()});
  }
  if (!doc.is_object()) throw ManifoldFormatError({"malformed document: top level must be an object"});

  std::vector<std::string> problems;
  std::string name;
  std::optional<CuspLatticeQ> cusp;
  std::optional<CSNormData> norm;
  std::optional<BoundarySlopeSet> boundary;
  std::vector<SurfaceData> surfaces;
  std::optional<std::int64_t> certified;

  collect(problems, "name", [&] { name = string_field(doc, "name"); });

  collect(problems, "boundary_slopes", [&] {
    std::vector<Slope> slopes;
    for (const json& s : array_field(doc, "boundary_slopes")) slopes.push_back(slope_from(s));
    boundary.emplace(std::move(slopes));
  });

  if (doc.contains("cusp")) {
    collect(problems, "cusp", [&] {
      const json& c = doc.at("cusp");
      const Rational g_mm = parse_rational(string_field(c, "g_mm"));
      const Rational g_ml = parse_rational(string_field(c, "g_ml"));
      const Rational g_ll = parse_rational(string_field(c, "g_ll"));
      cusp = make_cusp_lattice(g_mm, g_ml, g_ll, bool_field(c, "maximal", false));
    });
  }

  if (doc.contains("culler_shalen")) {
    collect(problems, "culler_shalen", [&] {
      std::vector<NormTerm> terms;
      std::vector<std::string> term_problems;
      for (const json& t : array_field(doc.at("culler_shalen"), "terms")) {
        collect(term_problems, "term", [&] {
          terms.push_back({slope_from(field(t, "slope")), integer_field(t, "weight")});
        });
      }
      if (!term_problems.empty()) throw std::invalid_argument(join(term_problems));
      norm.emplace(std::move(terms));
    });
  }

  if (doc.contains("surfaces")) {
    collect(problems, "surfaces", [&] {
      for (const json& s : array_field(doc, "surfaces")) {
        collect(problems, "surface", [&] {
          SurfaceData surface;
          surface.slope = slope_from(field(s, "slope"));
          surface.euler = integer_field(s, "euler");
          surface.boundary_components = integer_field(s, "boundary_components");
          surface.strict = bool_field(s, "strict", false);
          surface.ideal_point = bool_field(s, "ideal_point", false);
          surfaces.push_back(surface);
        });
      }
    });
  }

  if (doc.contains("certified_meridian_norm")) {
    collect(problems, "certified_meridian_norm",
            [&] { certified = integer_field(doc, "certified_meridian_norm"); });
  }

  if (!problems.empty() || !boundary) throw ManifoldFormatError(std::move(problems));

  ManifoldData manifold{
      .name = std::move(name),
      .cusp = std::move(cusp),
      .norm = std::move(norm),
      .boundary_slopes = std::move(*boundary),
      .surfaces = std::move(surfaces),
      .certified_meridian_norm = certified,
  };
  if (auto cross = validation_errors(manifold); !cross.empty()) {
    throw ManifoldFormatError(std::move(cross));
  }
  return manifold;
}

std::string dump_manifold(const ManifoldData& manifold) {
  json doc;
  doc["name"] = manifold.name;
  json slopes = json::array();
  for (const Slope& s : manifold.boundary_slopes.slopes()) slopes.push_back(to_string(s));
  doc["boundary_slopes"] = std::move(slopes);
  if (manifold.cusp) {
    doc["cusp"] = {{"g_mm", to_string(manifold.cusp->g_mm())},
                   {"g_ml", to_string(manifold.cusp->g_ml())},
                   {"g_ll", to_string(manifold.cusp->g_ll())},
                   {"maximal", manifold.cusp->maximal}};
  }
  if (manifold.norm) {
    json terms = json::array();
    for (const NormTerm& t : manifold.norm->terms()) {
      terms.push_back({{"slope", to_string(t.slope)}, {"weight", t.weight}});
    }
    doc["culler_shalen"] = {{"terms", std::move(terms)}};
  }
  if (!manifold.surfaces.empty()) {
    json surfaces = json::array();
    for (const SurfaceData& s : manifold.surfaces) {
      surfaces.push_back({{"slope", to_string(s.slope)},
                          {"euler", s.euler},
                          {"boundary_components", s.boundary_components},
                          {"strict", s.strict},
                          {"ideal_point", s.ideal_point}});
    }
    doc["surfaces"] = std::move(surfaces);
  }
  if (manifold.certified_meridian_norm) {
    doc["certified_meridian_norm"] = *manifold.certified_meridian_norm;
  }
  return doc.dump(2) + "\n";
}

ManifoldData load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifoldFormatError({"cannot read " + path.string()});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifold(buffer.str());
}

void save(const ManifoldData& manifold, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_manifold(manifold);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace slopenorm
