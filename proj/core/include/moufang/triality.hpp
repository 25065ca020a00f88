#ifndef MOUFANG_TRIALITY_HPP_
#define MOUFANG_TRIALITY_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "moufang/magma.hpp"
#include "moufang/perm.hpp"

namespace moufang {

// Three maps S, T, P from a groupoid of n elements into the permutations of
// m points. For a loop, S_g is the left translation, T_g the right
// translation and P_g = (S_g T_g)^-1.
class TranslationTriple {
 public:
  // Throws Errc::dimension_mismatch unless all three arrays have the same
  // nonzero length and every permutation has the same degree.
  TranslationTriple(std::vector<Perm> s, std::vector<Perm> t, std::vector<Perm> p);

  std::size_t size() const noexcept { return s_.size(); }
  std::size_t degree() const noexcept { return s_.front().degree(); }

  Perm const& s(Element g) const { return s_[g]; }
  Perm const& t(Element g) const { return t_[g]; }
  Perm const& p(Element g) const { return p_[g]; }

  std::vector<Perm> const& s_maps() const noexcept { return s_; }
  std::vector<Perm> const& t_maps() const noexcept { return t_; }
  std::vector<Perm> const& p_maps() const noexcept { return p_; }

  friend bool operator==(TranslationTriple const&, TranslationTriple const&) = default;

 private:
  std::vector<Perm> s_;
  std::vector<Perm> t_;
  std::vector<Perm> p_;
};

// bar[g] is the element whose S and T images are the inverses of S_g, T_g.
struct BarMap {
  std::vector<Element> bar;

  Element operator[](Element g) const { return bar.at(g); }
  std::size_t size() const noexcept { return bar.size(); }
};

struct HypothesisReport {
  CheckReport h1;                  // S_g T_g P_g = E
  CheckReport h2;                  // bar element exists
  std::array<CheckReport, 6> h3;   // relations (3a-c), (4a-c)
  CheckReport h4;                  // (S_g, T_g) determines g
  bool overall = false;

  std::vector<CheckReport> all() const;
};

struct MoufangCertificate {
  Element unit = 0;
  std::vector<Element> inverse;
  std::vector<CheckReport> reports;
};

enum class Side { left, right };

// Builds (L_g, R_g, (L_g R_g)^-1) from any Latin table, without checking
// the Moufang law. Throws Errc::not_a_translation.
TranslationTriple translation_triple(CayleyTable const& tbl);

// translation_triple guarded by check_moufang. Throws
// Errc::extraction_refused carrying the failing report's witness.
TranslationTriple extract_triple(CayleyTable const& tbl);

// Throws Errc::hypothesis_violated (witness: g) when no bar candidate exists
// and Errc::separation_violated (witness: g, two candidates) when several do.
BarMap derive_bar(TranslationTriple const& triple);

// Checks the four hypotheses of the reconstruction theorem, reading the
// products bar(g)*h and h*bar(g) from `tbl`. Throws Errc::dimension_mismatch
// if the triple and table disagree on n.
HypothesisReport verify_hypotheses(TranslationTriple const& triple, CayleyTable const& tbl);

// Recovers g*h as the unique k with
//   S_k = P_bar(g) S_h T_bar(g),   T_k = S_bar(g) T_h P_bar(g).
// Throws Errc::reconstruction_failed (witness: g, h) when no k matches or
// when S_g T_g P_g != E, and Errc::separation_violated when the pair map is
// not injective.
CayleyTable reconstruct_multiplication(TranslationTriple const& triple);

// e = 0 * bar(0), then checks g*bar(g) = bar(g)*g = e, eg = ge = g and
// bar(e) = e for all g. Throws Errc::certificate_failed with the witness.
MoufangCertificate derive_unit_and_inverses(CayleyTable const& tbl, BarMap const& bar);

// Permutation identities that hold for every element: P_bar(g) = P_g^-1,
// P_bar(g) = S_g T_g, S_g T_g = T_g S_g, T_g P_g = P_g T_g, P_g S_g = S_g P_g,
// and S_e = T_e = P_e = E for the element e with S_e = T_e = E.
std::vector<CheckReport> check_group_element_identities(TranslationTriple const& triple,
                                                         BarMap const& bar);

// S_g S_h S_g = S_(gh)g and likewise for T and P. Throws
// Errc::precondition_violated if `tbl` is not flexible.
CheckReport check_triple_closure(TranslationTriple const& triple, CayleyTable const& tbl);

// Left: x = g^-1 h solves gx = h. Right: x = h g^-1 solves xg = h. Both
// verify the solution is the only one. Throws Errc::certificate_inconsistent.
Element solve_in_loop(CayleyTable const& tbl, MoufangCertificate const& cert, Side side,
                      Element g, Element h);

// Every proposition derived from the hypotheses, one named report each.
// Throws Errc::precondition_violated unless verify_hypotheses passes.
std::vector<CheckReport> run_proposition_suite(TranslationTriple const& triple,
                                               CayleyTable const& tbl);

}  // namespace moufang

#endif  // MOUFANG_TRIALITY_HPP_
