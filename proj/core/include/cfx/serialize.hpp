#pragma once

#include <string>
#include <string_view>

#include "cfx/coerce.hpp"
#include "cfx/coercion.hpp"
#include "cfx/tree.hpp"

namespace cfx {

// Trees and coercion terms are exchanged as JSON records with a `tag`
// field. Object keys are sorted and no whitespace is emitted, so encoding a
// decoded record reproduces it byte for byte. Decoders throw FormatError.

std::string tree_to_json(const ParseTree& p);
ParseTree tree_from_json(std::string_view text);

/// Prim nodes carry their direction, source and target, looked up in
/// `prims`; an unknown or signature-less primitive is a FormatError.
std::string term_to_json(const Term& c, const PrimRegistry& prims);
/// Validates arities and pattern linearity.
Term term_from_json(std::string_view text);

std::string coercion_to_json(const Coercion& c);
/// Rebuilds the primitives from the signatures stored in the Prim nodes.
Coercion coercion_from_json(std::string_view text);

}  // namespace cfx
