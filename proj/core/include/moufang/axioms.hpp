#ifndef MOUFANG_AXIOMS_HPP_
#define MOUFANG_AXIOMS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "moufang/magma.hpp"

namespace moufang {

// Exhaustive law checkers over a Cayley table. Each scans its quantified
// variables in lexicographic order and stops at the first violation, so the
// witness is deterministic.

CheckReport check_quasigroup(CayleyTable const& tbl);

// Quasigroup with a two-sided unit. When the unit is missing the witness is
// (0, h) with h refuting element 0 as a unit.
CheckReport check_loop(CayleyTable const& tbl);

// (gh)(kg) = (g(hk))g = g((hk)g) for all g,h,k; both bracketings of the
// right-hand side are required. Throws Errc::not_a_loop if `tbl` is not a
// loop.
CheckReport check_moufang(CayleyTable const& tbl);

// (gh)g = g(hg) for all g,h.
CheckReport check_flexible(CayleyTable const& tbl);

// g^-1(gh) = h and (hg)g^-1 = h. Witness (g,h). A missing two-sided inverse
// fails with witness (g). Throws Errc::not_a_loop.
CheckReport check_inverse_property(CayleyTable const& tbl);

// (gh)^-1 = h^-1 g^-1. Throws Errc::not_a_loop when there is no unit and
// Errc::missing_inverse (witness: g) when g has no two-sided inverse.
CheckReport check_antiautomorphism(CayleyTable const& tbl);

CheckReport check_associative(CayleyTable const& tbl);

// Commutativity is not a rung of the ladder; it is reported by the CLI.
CheckReport check_commutative(CayleyTable const& tbl);

// inverse[g] is the unique x with gx = xg = e, or nullopt if some element
// lacks one. Throws Errc::not_a_loop when there is no unit.
std::optional<std::vector<Element>> two_sided_inverses(CayleyTable const& tbl);

enum class Rung { groupoid, quasigroup, loop, ip_loop, moufang_loop, group };

std::string_view to_string(Rung rung) noexcept;
std::optional<Rung> rung_from_string(std::string_view name) noexcept;

struct Classification {
  Rung rung = Rung::groupoid;
  // The report that stopped the climb; empty when the table is a group.
  std::optional<CheckReport> stopped_by;
};

// Climbs groupoid -> quasigroup -> loop -> IP-loop -> Moufang loop -> group.
Classification classify(CayleyTable const& tbl);

}  // namespace moufang

#endif  // MOUFANG_AXIOMS_HPP_
