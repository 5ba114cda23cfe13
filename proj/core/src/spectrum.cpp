// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include "coexact/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coexact/errors.hpp"

namespace coexact {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kIterateTolerance = 1e-9;
constexpr double kInjectivitySlack = 1e-6;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& require(const json& object, const std::string& key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double read_real(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(path, "not a finite number");
  return x;
}

double read_positive(const json& value, const std::string& path) {
  const double x = read_real(value, path);
  if (!(x > 0.0)) fail(path, "must be positive");
  return x;
}

long long read_integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<long long>();
}

bool read_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) fail(path, "expected a boolean");
  return value.get<bool>();
}

void reject_unknown(const json& object, std::initializer_list<std::string_view> allowed,
                    const std::string& path) {
  for (const auto& [key, _] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(path + "." + key, "unknown field");
    }
  }
}

GeodesicClass parse_geodesic(const json& entry, const std::string& path) {
  if (!entry.is_object()) fail(path, "expected an object");
  reject_unknown(entry, {"length", "holonomy", "multiplicity", "is_primitive", "primitive_length"},
                 path);
  GeodesicClass g;
  g.length = read_positive(require(entry, "length", path), path + ".length");
  g.holonomy = normalize_holonomy(read_real(require(entry, "holonomy", path), path + ".holonomy"));
  const long long m = read_integer(require(entry, "multiplicity", path), path + ".multiplicity");
  if (m < 1 || m > 1'000'000'000) fail(path + ".multiplicity", "must be a positive integer");
  g.multiplicity = static_cast<int>(m);
  g.is_primitive = read_bool(require(entry, "is_primitive", path), path + ".is_primitive");
  if (auto it = entry.find("primitive_length"); it != entry.end()) {
    g.primitive_length = read_positive(*it, path + ".primitive_length");
  } else if (g.is_primitive) {
    g.primitive_length = g.length;
  } else {
    fail(path + ".primitive_length", "required for non-primitive entries");
  }
  return g;
}

void validate_geodesic(const GeodesicClass& g, double cutoff, const std::string& path) {
  if (!(g.length > 0.0) || !std::isfinite(g.length)) fail(path + ".length", "must be positive");
  if (!(g.primitive_length > 0.0) || !std::isfinite(g.primitive_length)) {
    fail(path + ".primitive_length", "must be positive");
  }
  if (g.length > cutoff) fail(path + ".length", "exceeds cutoff");
  if (g.multiplicity < 1) fail(path + ".multiplicity", "must be a positive integer");
  if (!(g.holonomy > -std::numbers::pi && g.holonomy <= std::numbers::pi)) {
    fail(path + ".holonomy", "not normalized into (-pi, pi]");
  }
  const double ratio = g.length / g.primitive_length;
  if (ratio < 1.0 - kIterateTolerance || std::abs(ratio - std::round(ratio)) > kIterateTolerance) {
    fail(path + ".length", "not a positive integer multiple of primitive_length");
  }
  if (g.is_primitive && std::round(ratio) != 1.0) {
    fail(path + ".is_primitive", "primitive entry with length != primitive_length");
  }
}

}  // namespace

double normalize_holonomy(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

void validate(const ManifoldData& data) {
  if (!(data.volume > 0.0) || !std::isfinite(data.volume)) fail("$.volume", "must be positive");
  if (!(data.cutoff > 0.0) || !std::isfinite(data.cutoff)) fail("$.cutoff", "must be positive");
  if (data.orientation_factor != 1 && data.orientation_factor != 2) {
    fail("$.orientation_factor", "must be 1 or 2");
  }
  if (data.injectivity_radius && !(*data.injectivity_radius > 0.0)) {
    fail("$.injectivity_radius", "must be positive");
  }
  for (std::size_t i = 0; i < data.geodesics.size(); ++i) {
    const std::string path = "$.geodesics[" + std::to_string(i) + "]";
    const auto& g = data.geodesics[i];
    validate_geodesic(g, data.cutoff, path);
    if (data.primitives_only && !g.is_primitive) {
      fail(path + ".is_primitive", "document declares primitives_only");
    }
    if (i > 0 && g.length < data.geodesics[i - 1].length) {
      fail(path + ".length", "geodesics not sorted by length");
    }
    if (data.injectivity_radius && g.length < 2.0 * *data.injectivity_radius - kInjectivitySlack) {
      fail(path + ".length", "shorter than twice the injectivity radius");
    }
  }
}

ManifoldData parse_manifold(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("$: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected an object");
  reject_unknown(doc,
                 {"label", "volume", "cutoff", "primitives_only", "orientation_factor",
                  "injectivity_radius", "geodesics", "metadata"},
                 "$");

  ManifoldData data;
  const json& label = require(doc, "label", "$");
  if (!label.is_string()) fail("$.label", "expected a string");
  data.label = label.get<std::string>();
  data.volume = read_positive(require(doc, "volume", "$"), "$.volume");
  data.cutoff = read_positive(require(doc, "cutoff", "$"), "$.cutoff");
  data.primitives_only = read_bool(require(doc, "primitives_only", "$"), "$.primitives_only");
  if (auto it = doc.find("orientation_factor"); it != doc.end()) {
    const long long f = read_integer(*it, "$.orientation_factor");
    if (f != 1 && f != 2) fail("$.orientation_factor", "must be 1 or 2");
    data.orientation_factor = static_cast<int>(f);
  }
  if (auto it = doc.find("injectivity_radius"); it != doc.end() && !it->is_null()) {
    data.injectivity_radius = read_positive(*it, "$.injectivity_radius");
  }
  const json& list = require(doc, "geodesics", "$");
  if (!list.is_array()) fail("$.geodesics", "expected an array");
  data.geodesics.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    data.geodesics.push_back(parse_geodesic(list[i], "$.geodesics[" + std::to_string(i) + "]"));
  }
  std::stable_sort(data.geodesics.begin(), data.geodesics.end(),
                   [](const GeodesicClass& a, const GeodesicClass& b) { return a.length < b.length; });
  validate(data);
  return data;
}

ManifoldData load_manifold(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifold(buffer.str());
}

std::string serialize_manifold(const ManifoldData& data) {
  json doc;
  doc["label"] = data.label;
  doc["volume"] = data.volume;
  doc["cutoff"] = data.cutoff;
  doc["primitives_only"] = data.primitives_only;
  doc["orientation_factor"] = data.orientation_factor;
  if (data.injectivity_radius) doc["injectivity_radius"] = *data.injectivity_radius;
  json list = json::array();
  for (const auto& g : data.geodesics) {
    list.push_back({{"length", g.length},
                    {"holonomy", g.holonomy},
                    {"multiplicity", g.multiplicity},
                    {"is_primitive", g.is_primitive},
                    {"primitive_length", g.primitive_length}});
  }
  doc["geodesics"] = std::move(list);
  return doc.dump(1);
}

ManifoldData expand_powers(const ManifoldData& data) {
  ManifoldData out = data;
  out.primitives_only = false;
  out.geodesics.clear();
  for (std::size_t i = 0; i < data.geodesics.size(); ++i) {
    const auto& g = data.geodesics[i];
    if (!g.is_primitive) {
      fail("$.geodesics[" + std::to_string(i) + "].is_primitive",
           "expand_powers requires primitive entries");
    }
    for (int n = 1;; ++n) {
      const double length = n * g.length;
      if (length > data.cutoff) break;
      out.geodesics.push_back({.primitive_length = g.length,
                               .length = length,
                               .holonomy = normalize_holonomy(n * g.holonomy),
                               .multiplicity = g.multiplicity,
                               .is_primitive = n == 1});
    }
  }
  std::stable_sort(out.geodesics.begin(), out.geodesics.end(),
                   [](const GeodesicClass& a, const GeodesicClass& b) { return a.length < b.length; });
  return out;
}

ManifoldData with_all_iterates(const ManifoldData& data) {
  return data.primitives_only ? expand_powers(data) : data;
}

std::size_t expected_iterate_count(const ManifoldData& data) {
  std::size_t count = 0;
  for (const auto& g : data.geodesics) {
    if (g.is_primitive) count += static_cast<std::size_t>(std::floor(data.cutoff / g.length));
  }
  return count;
}

double geodesic_weight(const GeodesicClass& g, int orientation_factor) {
  // 2 (cosh l - cos t) = 4 (sinh^2(l/2) + sin^2(t/2)), free of cancellation.
  const double sh = std::sinh(0.5 * g.length);
  const double sn = std::sin(0.5 * g.holonomy);
  const double denominator = 4.0 * (sh * sh + sn * sn);
  const double c = std::cos(g.holonomy);
  return orientation_factor * g.multiplicity * g.primitive_length * c / denominator;
}

}  // namespace coexact
