#ifndef MOUFANG_MAGMA_HPP_
#define MOUFANG_MAGMA_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moufang/perm.hpp"

namespace moufang {

// Elements of a finite groupoid are identified with their table index.
using Element = std::size_t;

// The multiplication table of a groupoid of order n: (*this)(g, h) is g*h.
class CayleyTable {
 public:
  // Throws Errc::invalid_table if `rows` is empty, not square, or has an
  // entry outside 0..n-1.
  explicit CayleyTable(std::vector<std::vector<Element>> const& rows);
  CayleyTable(std::initializer_list<std::initializer_list<Element>> rows)
      : CayleyTable(std::vector<std::vector<Element>>(rows.begin(), rows.end())) {}

  static CayleyTable from_function(std::size_t order,
                                   std::function<Element(Element, Element)> const& product);

  std::size_t order() const noexcept { return order_; }

  Element operator()(Element g, Element h) const { return cells_[g * order_ + h]; }

  std::span<Element const> row(Element g) const {
    return {cells_.data() + g * order_, order_};
  }

  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

 private:
  CayleyTable() = default;

  std::size_t order_ = 0;
  std::vector<Element> cells_;
};

// Verdict of an exhaustive law check. A failed report always carries the
// lexicographically first falsifying tuple.
struct CheckReport {
  std::string law;
  bool passed = true;
  std::vector<Element> witness;
  std::string detail;

  static CheckReport pass(std::string law);
  static CheckReport fail(std::string law, std::vector<Element> witness, std::string detail);
};

std::ostream& operator<<(std::ostream& os, CheckReport const& report);

// h -> g*h. Throws Errc::not_a_translation (witness: g, repeated value) if
// row g is not a bijection.
Perm left_translation(CayleyTable const& tbl, Element g);

// h -> h*g, the column counterpart of left_translation.
Perm right_translation(CayleyTable const& tbl, Element g);

// Witness on failure is (0 = row | 1 = column, index, duplicated value).
// Rows are scanned before columns.
CheckReport is_latin_square(CayleyTable const& tbl);

// The two-sided unit, if any. Throws Errc::invalid_table if two distinct
// two-sided units exist (impossible in any groupoid, kept as a guard).
std::optional<Element> find_unit(CayleyTable const& tbl);

}  // namespace moufang

#endif  // MOUFANG_MAGMA_HPP_
