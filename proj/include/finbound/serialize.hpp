#pragma once

// JSON forms of objects, morphisms and symbolic objects. Layouts are listed
// in docs/formats.md.

#include <json.hpp>

#include "finbound/fqvec.hpp"
#include "finbound/hausdorff.hpp"
#include "finbound/nominal.hpp"
#include "finbound/superfin.hpp"
#include "finbound/symbolic.hpp"

namespace finbound {

using json = nlohmann::json;

json groupoid_to_json(const FiniteGroupoid& g);
std::shared_ptr<const FiniteGroupoid> groupoid_from_json(const json& j);

json to_json(const cats::Obj& x);
cats::Obj obj_from_json(const json& j);

json to_json(const cats::Mor& f);
cats::Mor mor_from_json(const json& j);

json to_json(const cats::SymbolicObject& s);
cats::SymbolicObject symbolic_from_json(const json& j);

json to_json(const cats::AnyObject& a);
cats::AnyObject any_from_json(const json& j);

json to_json(const fqvec::LinMap& f);
fqvec::LinMap linmap_from_json(const json& j);

/// {"n", "values", "action"}: action[k][kp][i] is Fg for the i-th g : k -> kp.
json to_json(const superfin::Presentation& p);
superfin::Presentation presentation_from_json(const json& j);

json to_json(const nominal::OrbitSpec& o);
nominal::OrbitSpec orbit_from_json(const json& j);
json to_json(const nominal::NominalSetSpec& x);
nominal::NominalSetSpec nominal_set_from_json(const json& j);
json to_json(const nominal::NomElement& e);
nominal::NomElement nom_element_from_json(const json& j);
json to_json(const nominal::EquivariantMap& f);
nominal::EquivariantMap equivariant_map_from_json(const json& j);

/// Rationals as "p/q" strings.
json to_json(const hausdorff::Q& q);
hausdorff::Q rational_from_json(const json& j);
/// {"points", "d"}: row i of d lists d(i, 0..i-1).
json to_json(const hausdorff::FinMetricSpace& x);
hausdorff::FinMetricSpace space_from_json(const json& j);

}  // namespace finbound
