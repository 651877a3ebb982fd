#pragma once

#include <json.hpp>
#include <string>

#include "minimorph/fibergeo.hpp"
#include "minimorph/poly.hpp"
#include "minimorph/variety.hpp"

namespace minimorph {

using Json = nlohmann::ordered_json;

/// Canonical JSON forms.  Rationals are serialized as exact
/// numerator/denominator strings so round trips never round; term order
/// follows the polynomial's canonical ordering.
Json to_json(const GaussRat& v);
Json to_json(const MultiPoly& p);
Json to_json(const Quintuple& q);

GaussRat gaussrat_from_json(const Json& j);
MultiPoly multipoly_from_json(const Json& j);
Quintuple quintuple_from_json(const Json& j);

Json to_json(const CurvatureReport& rep);
Json to_json(const CompactnessReport& rep);
Json to_json(const CriticalScanReport& rep);

/// ASCII PLY point cloud: per-vertex float x1..x5 plus the mean-curvature
/// scalar.  The comment block records provenance (spec, alpha, h, seed
/// point) and the identities the surface realizes.
void write_patch_ply(const SurfacePatch& patch, const std::string& path);

/// CSV with header x1..x5,residual,mean_curvature_norm.
void write_patch_csv(const SurfacePatch& patch, const std::string& path);

Json patch_to_json(const SurfacePatch& patch);

std::string format_complex(Complex v);

}  // namespace minimorph
