#ifndef MOUFANG_FORMATS_HPP_
#define MOUFANG_FORMATS_HPP_

#include <string>
#include <string_view>

#include "moufang/magma.hpp"
#include "moufang/triality.hpp"

namespace moufang {

// Cayley file:
//   n
//   n lines of n space-separated 0-based entries
// `#` starts a comment, blank lines are ignored.
CayleyTable parse_cayley(std::string_view text);
std::string emit_cayley(CayleyTable const& tbl);

// Triple file:
//   n m
//   for each g in 0..n-1: an S line, a T line, a P line
// Each map line is an optional letter (S, T or P, in that order) followed
// by the m images. Comments and blank lines as for Cayley files.
TranslationTriple parse_triple(std::string_view text);
std::string emit_triple(TranslationTriple const& triple);

}  // namespace moufang

#endif  // MOUFANG_FORMATS_HPP_
