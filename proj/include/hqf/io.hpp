#pragma once

#include "hqf/axis.hpp"
#include "hqf/characters.hpp"
#include "hqf/fields.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqf {

using Json = nlohmann::json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json poly_to_json(const Polynomial3& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"e", {m.e[0], m.e[1], m.e[2]}}, {"c", to_string(c)}});
  return terms;
}

inline Polynomial3 poly_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of terms");
  Polynomial3 p;
  for (const auto& t : j) {
    if (!t.contains("e") || !t.contains("c"))
      throw FormatError("polynomial term needs 'e' and 'c'");
    const auto& e = t.at("e");
    if (!e.is_array() || e.size() != 3) throw FormatError("'e' must be a triple");
    Monomial m;
    for (int k = 0; k < 3; ++k) {
      const long v = e.at(static_cast<size_t>(k)).get<long>();
      if (v < 0) throw FormatError("exponents must be nonnegative");
      m.e[static_cast<unsigned>(k)] = static_cast<unsigned>(v);
    }
    Rational c;
    try {
      c = parse_rational(t.at("c").get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
    p.add_term(m, c);
  }
  return p;
}

inline Json vec3_to_json(const Vec3& v) {
  return Json::array({to_string(v(0)), to_string(v(1)), to_string(v(2))});
}

inline Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("vector must be a triple");
  Vec3 v;
  for (int k = 0; k < 3; ++k) {
    try {
      v(k) = parse_rational(j.at(static_cast<size_t>(k)).get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return v;
}

inline Json field_to_json(const QuaternionPolyField& p) {
  return {{"alpha", poly_to_json(p.alpha)},
          {"u", {poly_to_json(p.u.c1), poly_to_json(p.u.c2), poly_to_json(p.u.c3)}}};
}

inline QuaternionPolyField field_from_json(const Json& j) {
  if (!j.contains("alpha") || !j.contains("u"))
    throw FormatError("field needs 'alpha' and 'u'");
  const auto& u = j.at("u");
  if (!u.is_array() || u.size() != 3) throw FormatError("'u' must hold three components");
  return {poly_from_json(j.at("alpha")),
          {poly_from_json(u.at(0)), poly_from_json(u.at(1)), poly_from_json(u.at(2))}};
}

/// On-disk document: a field plus optional frame and axes blocks.
struct FieldFile {
  QuaternionPolyField field;
  std::optional<Frame> frame;
  std::vector<Axis> axes;

  static constexpr int kFormatVersion = 1;
};

inline Json field_file_to_json(const FieldFile& f) {
  Json j{{"format_version", FieldFile::kFormatVersion}, {"field", field_to_json(f.field)}};
  if (f.frame)
    j["frame"] = {vec3_to_json(f.frame->w1), vec3_to_json(f.frame->w2),
                  vec3_to_json(f.frame->w3)};
  if (!f.axes.empty()) {
    Json axes = Json::array();
    for (const Axis& a : f.axes) axes.push_back(vec3_to_json(a.v));
    j["axes"] = axes;
  }
  return j;
}

inline FieldFile field_file_from_json(const Json& j) {
  if (!j.contains("format_version") || j.at("format_version").get<int>() != FieldFile::kFormatVersion)
    throw FormatError("unrecognized format_version");
  if (!j.contains("field")) throw FormatError("missing 'field' block");
  FieldFile f;
  f.field = field_from_json(j.at("field"));
  if (j.contains("frame")) {
    const auto& fr = j.at("frame");
    if (!fr.is_array() || fr.size() != 3) throw FormatError("'frame' must hold three vectors");
    try {
      f.frame.emplace(vec3_from_json(fr.at(0)), vec3_from_json(fr.at(1)), vec3_from_json(fr.at(2)));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  if (j.contains("axes"))
    for (const auto& av : j.at("axes")) {
      try {
        f.axes.emplace_back(vec3_from_json(av));
      } catch (const std::invalid_argument& ex) {
        throw FormatError(ex.what());
      }
    }
  return f;
}

inline FieldFile read_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("JSON parse error: ") + ex.what());
  }
  return field_file_from_json(j);
}

inline void write_field_file(const std::string& path, const FieldFile& f) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open file for writing: " + path);
  out << field_file_to_json(f).dump(2) << "\n";
}

}  // namespace hqf
