#include "helly/instance_io.hpp"

#include <set>

namespace helly {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed, bool lenient,
                std::vector<std::string>& warnings) {
  for (const auto& [key, _] : obj.items()) {
    if (allowed.contains(key)) continue;
    if (!lenient) fail(path, "unknown field \"" + key + "\"");
    warnings.push_back(path + ": ignoring unknown field \"" + key + "\"");
  }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) fail(path, "missing field \"" + key + "\"");
  return obj.at(key);
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long long>();
}

Rat as_coord(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "coordinates must be strings (integer, decimal or p/q)");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

}  // namespace

json spec_to_json(const GenSpec& spec) {
  return json{{"d", spec.d},
              {"points_per_level", spec.points_per_level},
              {"coord_lo", spec.coord_lo},
              {"coord_hi", spec.coord_hi},
              {"n", spec.n},
              {"presence", spec.presence},
              {"max_width", spec.max_width},
              {"seed", spec.seed},
              {"stream", spec.stream},
              {"families", spec.families}};
}

GenSpec spec_from_json(const json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path, "expected an object");
  std::vector<std::string> warnings;
  check_keys(doc, path,
             {"d", "points_per_level", "coord_lo", "coord_hi", "n", "presence", "max_width", "seed", "stream",
              "families"},
             false, warnings);
  GenSpec spec;
  auto get_int = [&](const char* key, auto& slot) {
    if (doc.contains(key)) slot = static_cast<std::remove_reference_t<decltype(slot)>>(as_integer(doc.at(key), path + "." + key));
  };
  get_int("d", spec.d);
  get_int("coord_lo", spec.coord_lo);
  get_int("coord_hi", spec.coord_hi);
  get_int("n", spec.n);
  get_int("max_width", spec.max_width);
  get_int("families", spec.families);
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer()) fail(path + ".seed", "expected an integer");
    spec.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("stream")) {
    if (!doc.at("stream").is_number_integer()) fail(path + ".stream", "expected an integer");
    spec.stream = doc.at("stream").get<std::uint64_t>();
  }
  if (doc.contains("presence")) {
    if (!doc.at("presence").is_number()) fail(path + ".presence", "expected a number");
    spec.presence = doc.at("presence").get<double>();
  }
  if (doc.contains("points_per_level")) {
    const auto& arr = doc.at("points_per_level");
    if (!arr.is_array()) fail(path + ".points_per_level", "expected an array");
    spec.points_per_level.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      spec.points_per_level.push_back(static_cast<int>(as_integer(arr[i], path + ".points_per_level[" + std::to_string(i) + "]")));
    }
  }
  try {
    spec.validate();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return spec;
}

ParsedInstance parse_instance(const json& doc, const ParseOptions& options) {
  ParsedInstance out;
  if (!doc.is_object()) fail("$", "expected an object");
  check_keys(doc, "$", {"d", "points", "sets", "families", "spec"}, options.lenient, out.warnings);

  const long long d = as_integer(require(doc, "$", "d"), "$.d");
  if (d < 1 || d > 64) fail("$.d", "d must lie in [1, 64]");

  const auto& points = require(doc, "$", "points");
  if (!points.is_array()) fail("$.points", "expected an array");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string path = "$.points[" + std::to_string(i) + "]";
    const auto& p = points[i];
    if (!p.is_array() || p.size() != 2) fail(path, "expected [coordString, level]");
    Rat c = as_coord(p[0], path + "[0]");
    long long level = as_integer(p[1], path + "[1]");
    if (level < 1 || level > d) fail(path + "[1]", "level outside [1, d]");
    pts.push_back({std::move(c), static_cast<int>(level)});
  }
  try {
    out.instance.ground = share(PointSet::from_points(static_cast<int>(d), std::move(pts)));
  } catch (const InputError& e) {
    fail("$.points", e.what());
  }

  const auto& sets = require(doc, "$", "sets");
  if (!sets.is_array()) fail("$.sets", "expected an array");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const std::string path = "$.sets[" + std::to_string(j) + "]";
    const auto& s = sets[j];
    if (!s.is_object()) fail(path, "expected an object");
    check_keys(s, path, {"name", "levels"}, options.lenient, out.warnings);
    std::string name = "C" + std::to_string(j + 1);
    if (s.contains("name")) {
      if (!s.at("name").is_string()) fail(path + ".name", "expected a string");
      name = s.at("name").get<std::string>();
    }
    DInterval iv;
    iv.levels.resize(static_cast<std::size_t>(d));
    std::set<long long> seen;
    const auto& levels = require(s, path, "levels");
    if (!levels.is_array()) fail(path + ".levels", "expected an array");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const std::string lp = path + ".levels[" + std::to_string(i) + "]";
      const auto& l = levels[i];
      if (!l.is_object()) fail(lp, "expected an object");
      check_keys(l, lp, {"level", "lo", "hi"}, options.lenient, out.warnings);
      long long level = as_integer(require(l, lp, "level"), lp + ".level");
      if (level < 1 || level > d) fail(lp + ".level", "level outside [1, d]");
      if (!seen.insert(level).second) fail(lp + ".level", "level listed twice");
      Rat lo = as_coord(require(l, lp, "lo"), lp + ".lo");
      Rat hi = as_coord(require(l, lp, "hi"), lp + ".hi");
      if (lo > hi) fail(lp, "set \"" + name + "\" has lo > hi on level " + std::to_string(level));
      iv.levels[level - 1] = LevelInterval{std::move(lo), std::move(hi)};
    }
    out.instance.sets.push_back(trace_of(iv, out.instance.ground));
    out.instance.names.push_back(std::move(name));
  }

  if (doc.contains("families")) {
    const auto& fams = doc.at("families");
    if (!fams.is_array()) fail("$.families", "expected an array");
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const std::string path = "$.families[" + std::to_string(i) + "]";
      if (!fams[i].is_array()) fail(path, "expected an array of set indices");
      std::vector<std::size_t> cls;
      for (std::size_t k = 0; k < fams[i].size(); ++k) {
        long long idx = as_integer(fams[i][k], path + "[" + std::to_string(k) + "]");
        if (idx < 0 || static_cast<std::size_t>(idx) >= out.instance.sets.size()) {
          fail(path + "[" + std::to_string(k) + "]", "set index out of range");
        }
        cls.push_back(static_cast<std::size_t>(idx));
      }
      out.instance.families.push_back(std::move(cls));
    }
  }
  if (doc.contains("spec")) out.instance.spec = spec_from_json(doc.at("spec"));
  return out;
}

ParsedInstance parse_instance_text(const std::string& text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("$: malformed JSON: ") + e.what());
  }
  return parse_instance(doc, options);
}

json serialize_instance(const Instance& instance) {
  json doc;
  doc["d"] = instance.ground->dims();
  json points = json::array();
  for (const auto& p : instance.ground->points()) points.push_back(json::array({to_string(p.coord), p.level}));
  doc["points"] = std::move(points);
  json sets = json::array();
  for (std::size_t j = 0; j < instance.sets.size(); ++j) {
    json levels = json::array();
    const auto box = minimal_dinterval(instance.sets[j]);
    for (int level = 1; level <= box.dims(); ++level) {
      const auto& iv = box.levels[level - 1];
      if (iv.is_empty()) continue;
      levels.push_back({{"level", level}, {"lo", to_string(*iv.lo)}, {"hi", to_string(*iv.hi)}});
    }
    const std::string name = j < instance.names.size() ? instance.names[j] : "C" + std::to_string(j + 1);
    sets.push_back({{"name", name}, {"levels", std::move(levels)}});
  }
  doc["sets"] = std::move(sets);
  if (!instance.families.empty()) doc["families"] = instance.families;
  if (instance.spec) doc["spec"] = spec_to_json(*instance.spec);
  return doc;
}

}  // namespace helly
