#pragma once

// JSON exchange format for forms and polynomials.
//
//   {"kind": "multilinear", "m": 2, "dims": [2, 2], "entries": [[0, 0, 1.0], [1, 1, -1.0, 0.5]]}
//   {"kind": "polynomial", "m": 2, "n": 2, "entries": [[2, 0, 1.0], [1, 1, -1.0]]}
//
// Multilinear entries list 0-based indices then the real part and an
// optional imaginary part; polynomial entries list the exponents alpha.
// Missing entries are zero. A form is real unless some entry has a nonzero
// imaginary part.

#include "bhc/forms.hpp"
#include "bhc/report.hpp"

#include <string>
#include <variant>

namespace bhc {

using FormInput = std::variant<MultilinearForm, HomogeneousPolynomial>;

/// ParseError on malformed documents, DomainError on out-of-range indices.
FormInput parse_form(const Json& doc);
FormInput load_form(const std::string& path);

Json to_json(const MultilinearForm& form);
Json to_json(const HomogeneousPolynomial& poly);

} // namespace bhc
