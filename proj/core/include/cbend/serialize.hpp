#pragma once

#include <string>

#include "cbend/certificate.hpp"
#include "cbend/holonomy.hpp"
#include "cbend/realization.hpp"
#include "cbend/surface.hpp"

namespace cbend {

// Throw Error(Schema) on malformed input; unknown keys are rejected.
std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

// {"edges": {"<id>": {"re": x, "im": y}}}, with {"modulus": r, "angle": a} also
// accepted per edge, or {"theta": t, "moduli": {"<id>": r}}. Angles in radians.
std::string decoration_to_json(const Decoration& d);
Decoration decoration_from_json(const std::string& text, const Triangulation& t);

std::string realization_to_json(const BentRealization& rl);
std::string realization_to_csv(const BentRealization& rl);

std::string certificate_to_csv(const CertificateReport& r);

}  // namespace cbend
