#include "moufang/magma.hpp"

#include <ostream>
#include <string>

#include "moufang/error.hpp"

namespace moufang {

CayleyTable::CayleyTable(std::vector<std::vector<Element>> const& rows) : order_(rows.size()) {
  if (order_ == 0) throw Error(Errc::invalid_table, "table order must be positive");
  cells_.reserve(order_ * order_);
  for (std::size_t g = 0; g < order_; ++g) {
    if (rows[g].size() != order_) {
      throw Error(Errc::invalid_table,
                  "row " + std::to_string(g) + " has " + std::to_string(rows[g].size()) +
                      " entries, expected " + std::to_string(order_),
                  {g});
    }
    for (std::size_t h = 0; h < order_; ++h) {
      if (rows[g][h] >= order_) {
        throw Error(Errc::invalid_table,
                    "entry (" + std::to_string(g) + "," + std::to_string(h) + ") = " +
                        std::to_string(rows[g][h]) + " is out of range",
                    {g, h});
      }
      cells_.push_back(rows[g][h]);
    }
  }
}

CayleyTable CayleyTable::from_function(std::size_t order,
                                       std::function<Element(Element, Element)> const& product) {
  std::vector<std::vector<Element>> rows(order, std::vector<Element>(order));
  for (Element g = 0; g < order; ++g) {
    for (Element h = 0; h < order; ++h) rows[g][h] = product(g, h);
  }
  return CayleyTable(rows);
}

std::vector<std::vector<Element>> CayleyTable::rows() const {
  std::vector<std::vector<Element>> out;
  out.reserve(order_);
  for (Element g = 0; g < order_; ++g) out.emplace_back(row(g).begin(), row(g).end());
  return out;
}

CheckReport CheckReport::pass(std::string law) {
  return CheckReport{std::move(law), true, {}, {}};
}

CheckReport CheckReport::fail(std::string law, std::vector<Element> witness, std::string detail) {
  return CheckReport{std::move(law), false, std::move(witness), std::move(detail)};
}

std::ostream& operator<<(std::ostream& os, CheckReport const& report) {
  os << (report.passed ? "PASS " : "FAIL ") << report.law;
  if (!report.passed) {
    os << " witness=(";
    for (std::size_t i = 0; i < report.witness.size(); ++i) {
      if (i) os << ',';
      os << report.witness[i];
    }
    os << ')';
    if (!report.detail.empty()) os << ": " << report.detail;
  }
  return os;
}

namespace {

// Returns the first repeated value among `values`, or nullopt.
template <typename Get>
std::optional<Element> first_repeat(std::size_t n, Get get) {
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Element const v = get(i);
    if (seen[v]) return v;
    seen[v] = true;
  }
  return std::nullopt;
}

Perm translation(CayleyTable const& tbl, Element g, bool left) {
  std::size_t const n = tbl.order();
  if (g >= n) {
    throw Error(Errc::not_a_translation, "element " + std::to_string(g) + " out of range", {g});
  }
  std::vector<Element> images(n);
  for (Element h = 0; h < n; ++h) images[h] = left ? tbl(g, h) : tbl(h, g);
  if (auto dup = first_repeat(n, [&](std::size_t i) { return images[i]; })) {
    throw Error(Errc::not_a_translation,
                std::string(left ? "row " : "column ") + std::to_string(g) +
                    " repeats value " + std::to_string(*dup),
                {g, *dup});
  }
  return Perm(std::move(images));
}

}  // namespace

Perm left_translation(CayleyTable const& tbl, Element g) { return translation(tbl, g, true); }

Perm right_translation(CayleyTable const& tbl, Element g) { return translation(tbl, g, false); }

CheckReport is_latin_square(CayleyTable const& tbl) {
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    if (auto dup = first_repeat(n, [&](Element h) { return tbl(g, h); })) {
      return CheckReport::fail("latin square", {0, g, *dup},
                               "row " + std::to_string(g) + " repeats " + std::to_string(*dup));
    }
  }
  for (Element h = 0; h < n; ++h) {
    if (auto dup = first_repeat(n, [&](Element g) { return tbl(g, h); })) {
      return CheckReport::fail("latin square", {1, h, *dup},
                               "column " + std::to_string(h) + " repeats " + std::to_string(*dup));
    }
  }
  return CheckReport::pass("latin square");
}

std::optional<Element> find_unit(CayleyTable const& tbl) {
  std::size_t const n = tbl.order();
  std::optional<Element> unit;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element h = 0; h < n && ok; ++h) ok = tbl(e, h) == h && tbl(h, e) == h;
    if (!ok) continue;
    if (unit) {
      throw Error(Errc::invalid_table, "two distinct two-sided units", {*unit, e});
    }
    unit = e;
  }
  return unit;
}

}  // namespace moufang
