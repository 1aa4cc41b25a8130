#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "augframes/complexes.hpp"
#include "augframes/homology.hpp"
#include "augframes/lattice.hpp"
#include "augframes/quadring.hpp"
#include "augframes/unitgeometry.hpp"

namespace augframes {

// Big integers travel as decimal strings, rationals as "p/q" (or "p").
// Parsing failures throw ParseError.

nlohmann::json to_json(const RingElement& a);
RingElement ring_element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FieldElement& a);
FieldElement field_element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Line& l);
// Recomputes the canonical line and rejects a stored key that disagrees.
Line line_from_json(const nlohmann::json& j, const Ring& ring);

// "d=<integer>"
Ring ring_from_spec(const std::string& spec);

nlohmann::json to_json(const SweepReport& r);

nlohmann::json to_json(const FrameComplex& fc);
FrameComplex frame_complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HomologyProfile& h);

nlohmann::json ring_info_json(const Ring& ring);

mpz_class parse_integer(const nlohmann::json& j);

}  // namespace augframes
