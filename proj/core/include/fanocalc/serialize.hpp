#pragma once

#include <string>

#include <json.hpp>

#include "fanocalc/forms.hpp"
#include "fanocalc/hodge.hpp"
#include "fanocalc/monomials.hpp"
#include "fanocalc/weights.hpp"

namespace fano::io {

using nlohmann::json;

// Weights serialize as plain JSON arrays of integers, e.g. [4,0].
json to_json(const IntWeight& w);
json to_json(const Partition& p);
IntWeight weight_from_json(const json& j);
Partition partition_from_json(const json& j);  // enforces non-negativity

// Rationals as "num/den" strings ("num" when integral).
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Alternating forms: {"p":., "n":., "terms":[{"indices":[1-based increasing],
// "coeff":"num/den"}]}.
json to_json(const forms::AltForm& f);
forms::AltForm alt_form_from_json(const json& j);

// Homogeneous rational forms: {"n_vars":., "degree":., "terms":[{"exponents":
// [..], "coeff":"num/den"}]}.
json to_json(const FormQ& f);
FormQ form_q_from_json(const json& j);

// FNV-1a 64-bit digest of a canonical dump, as fixed-width hex.
std::string digest(const json& j);

}  // namespace fano::io
