// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coexact {

/// One term of the geometric side: a conjugacy class (or a bundle of
/// `multiplicity` classes sharing the same complex length).
struct GeodesicClass {
  double primitive_length = 0.0;  ///< length of the underlying primitive
  double length = 0.0;            ///< real length of this iterate
  double holonomy = 0.0;          ///< rotation angle, normalized to (-pi, pi]
  int multiplicity = 1;
  bool is_primitive = true;

  friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
};

/// Volume and complex length spectrum of a closed hyperbolic 3-manifold,
/// enumerated up to real length `cutoff`.
///
/// `orientation_factor` is the number of conjugacy classes represented by
/// each listed entry. Exporters that list unoriented geodesics (SnapPy) need
/// 2, since g and g^-1 are never conjugate in a torsion-free cocompact group.
struct ManifoldData {
  std::string label;
  double volume = 0.0;
  double cutoff = 0.0;
  bool primitives_only = false;
  int orientation_factor = 1;
  std::optional<double> injectivity_radius;
  std::vector<GeodesicClass> geodesics;

  friend bool operator==(const ManifoldData&, const ManifoldData&) = default;
};

/// Maps an angle into (-pi, pi].
double normalize_holonomy(double theta);

/// Parses and validates a manifold document. Holonomies are normalized and
/// geodesics sorted by length. Throws ParseError naming the offending field.
ManifoldData parse_manifold(std::string_view json_text);

/// Reads `path` and parses it.
ManifoldData load_manifold(const std::string& path);

/// Serializes to the same schema parse_manifold accepts; round-trips exactly.
std::string serialize_manifold(const ManifoldData& data);

/// Checks every invariant of ManifoldData, throwing ParseError on violation.
void validate(const ManifoldData& data);

/// Adds all iterates n*l0 <= cutoff of every primitive entry.
/// Throws ParseError if an entry is not primitive.
ManifoldData expand_powers(const ManifoldData& data);

/// Returns the data ready for summation: expanded when the document lists
/// primitives only, unchanged otherwise.
ManifoldData with_all_iterates(const ManifoldData& data);

/// Coefficient of H(l(g)) on the geometric side:
///   factor * m * l0 * cos(theta) / (|1 - e^{l+i theta}| |1 - e^{-l-i theta}|).
/// The denominator equals 2 (cosh l - cos theta), which stays accurate for
/// all lengths where cosh does not overflow.
double geodesic_weight(const GeodesicClass& g, int orientation_factor);

/// Number of entries expand_powers produces: sum over primitives of
/// floor(cutoff / l0).
std::size_t expected_iterate_count(const ManifoldData& data);

}  // namespace coexact
