#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "effmodel/ring/base_element.hpp"
#include "effmodel/ring/mpoly.hpp"

namespace effmodel::ring {

/// Parse the expression syntax shared by the printer and the CLI:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' ['-'] integer]
///   atom   := integer | identifier | '(' expr ')'
///
/// `pi` denotes the uniformizer; negative exponents are accepted on
/// monomials in pi only. Throws UsageError on malformed text or unknown
/// variables.
MPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Parse an expression that may only mention pi.
BaseElement parse_base(std::string_view text, std::uint32_t p);

/// Identifiers other than `pi`, in order of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace effmodel::ring
