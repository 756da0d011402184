#pragma once

#include <string>
#include <string_view>

#include "castella/instances.hpp"
#include "castella/word.hpp"

namespace castella {

// element := "1" | term (sep term)*
// term    := "p" digits ("^" digits)?      sep := whitespace | "*"
// Terms multiply left to right.  Errors are ParseError with a byte offset.
Element parse_element(std::string_view text);

/// "p0^2 p1 p4"; the identity renders as "1".
std::string render(const Element& u);
/// "[0,0,1,4]".
std::string render_word(const Word& w);

/// Same grammar, read commutatively; a bare positive integer is factored instead.
AbelianElement parse_abelian(std::string_view text, const FreeAbelianMonoid& m);

/// element := "1" | ("U" | "V") ("^" digits)? (sep ...)*
UVElement parse_uv(std::string_view text);
/// "U^2 V^3"; the identity renders as "1".
std::string render_uv(const UVElement& u);

}  // namespace castella
