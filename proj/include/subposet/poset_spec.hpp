#pragma once

#include "subposet/poset.hpp"

#include <iosfwd>
#include <string>

namespace subposet {

/// Parses the poset DSL:
///   chain:3  diamond:2  K:2,2,2  antichain:4
///   product:(diamond:1,diamond:2)      left-associative, two or more factors
///   edges:path/to/file                 `size N` header, then `u < v` lines
/// Malformed text and invalid sizes raise ParseError.
Poset parse_poset_spec(const std::string& text);

/// Edge-list format used by `edges:`; '#' starts a comment.
Poset read_edge_list(std::istream& is);

void write_edge_list(std::ostream& os, const Poset& p);

}  // namespace subposet
