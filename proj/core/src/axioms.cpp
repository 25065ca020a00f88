#include "moufang/axioms.hpp"

#include <string>

#include "moufang/error.hpp"

namespace moufang {

namespace {

Element require_unit(CayleyTable const& tbl, std::string_view what) {
  if (!is_latin_square(tbl).passed) {
    throw Error(Errc::not_a_loop, std::string(what) + " requires a loop: table is not a quasigroup");
  }
  auto unit = find_unit(tbl);
  if (!unit) throw Error(Errc::not_a_loop, std::string(what) + " requires a loop: no unit");
  return *unit;
}

}  // namespace

CheckReport check_quasigroup(CayleyTable const& tbl) {
  CheckReport report = is_latin_square(tbl);
  report.law = "quasigroup";
  return report;
}

CheckReport check_loop(CayleyTable const& tbl) {
  CheckReport latin = check_quasigroup(tbl);
  if (!latin.passed) {
    latin.law = "loop";
    return latin;
  }
  if (find_unit(tbl)) return CheckReport::pass("loop");
  std::size_t const n = tbl.order();
  for (Element h = 0; h < n; ++h) {
    if (tbl(0, h) != h || tbl(h, 0) != h) {
      return CheckReport::fail("loop", {0, h},
                               "no two-sided unit; e.g. 0 fails as a unit at " + std::to_string(h));
    }
  }
  return CheckReport::fail("loop", {0}, "no two-sided unit");  // unreachable
}

CheckReport check_moufang(CayleyTable const& tbl) {
  require_unit(tbl, "Moufang check");
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      Element const gh = tbl(g, h);
      for (Element k = 0; k < n; ++k) {
        Element const lhs = tbl(gh, tbl(k, g));
        Element const hk = tbl(h, k);
        Element const right_first = tbl(tbl(g, hk), g);
        Element const left_first = tbl(g, tbl(hk, g));
        if (lhs != right_first || lhs != left_first) {
          return CheckReport::fail(
              "moufang", {g, h, k},
              "(gh)(kg)=" + std::to_string(lhs) + ", (g(hk))g=" + std::to_string(right_first) +
                  ", g((hk)g)=" + std::to_string(left_first));
        }
      }
    }
  }
  return CheckReport::pass("moufang");
}

CheckReport check_flexible(CayleyTable const& tbl) {
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      Element const lhs = tbl(tbl(g, h), g);
      Element const rhs = tbl(g, tbl(h, g));
      if (lhs != rhs) {
        return CheckReport::fail("flexible", {g, h},
                                 "(gh)g=" + std::to_string(lhs) + ", g(hg)=" + std::to_string(rhs));
      }
    }
  }
  return CheckReport::pass("flexible");
}

std::optional<std::vector<Element>> two_sided_inverses(CayleyTable const& tbl) {
  auto unit = find_unit(tbl);
  if (!unit) throw Error(Errc::not_a_loop, "inverses require a unit");
  std::size_t const n = tbl.order();
  std::vector<Element> inv(n);
  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element x = 0; x < n && !found; ++x) {
      if (tbl(g, x) == *unit && tbl(x, g) == *unit) {
        inv[g] = x;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return inv;
}

namespace {

// Index of the first element with no two-sided inverse.
Element first_without_inverse(CayleyTable const& tbl, Element unit) {
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element x = 0; x < n && !found; ++x) found = tbl(g, x) == unit && tbl(x, g) == unit;
    if (!found) return g;
  }
  return n;
}

}  // namespace

CheckReport check_inverse_property(CayleyTable const& tbl) {
  Element const unit = require_unit(tbl, "inverse property check");
  auto inv = two_sided_inverses(tbl);
  if (!inv) {
    Element const g = first_without_inverse(tbl, unit);
    return CheckReport::fail("inverse property", {g},
                             "element " + std::to_string(g) + " has no two-sided inverse");
  }
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      Element const left = tbl((*inv)[g], tbl(g, h));
      Element const right = tbl(tbl(h, g), (*inv)[g]);
      if (left != h || right != h) {
        return CheckReport::fail("inverse property", {g, h},
                                 "g^-1(gh)=" + std::to_string(left) +
                                     ", (hg)g^-1=" + std::to_string(right));
      }
    }
  }
  return CheckReport::pass("inverse property");
}

CheckReport check_antiautomorphism(CayleyTable const& tbl) {
  auto unit = find_unit(tbl);
  if (!unit) throw Error(Errc::not_a_loop, "antiautomorphism check requires a unit");
  auto inv = two_sided_inverses(tbl);
  if (!inv) {
    Element const g = first_without_inverse(tbl, *unit);
    throw Error(Errc::missing_inverse,
                "element " + std::to_string(g) + " has no two-sided inverse", {g});
  }
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      Element const lhs = (*inv)[tbl(g, h)];
      Element const rhs = tbl((*inv)[h], (*inv)[g]);
      if (lhs != rhs) {
        return CheckReport::fail("antiautomorphism", {g, h},
                                 "(gh)^-1=" + std::to_string(lhs) +
                                     ", h^-1 g^-1=" + std::to_string(rhs));
      }
    }
  }
  return CheckReport::pass("antiautomorphism");
}

CheckReport check_associative(CayleyTable const& tbl) {
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      Element const gh = tbl(g, h);
      for (Element k = 0; k < n; ++k) {
        Element const lhs = tbl(gh, k);
        Element const rhs = tbl(g, tbl(h, k));
        if (lhs != rhs) {
          return CheckReport::fail("associative", {g, h, k},
                                   "(gh)k=" + std::to_string(lhs) + ", g(hk)=" + std::to_string(rhs));
        }
      }
    }
  }
  return CheckReport::pass("associative");
}

CheckReport check_commutative(CayleyTable const& tbl) {
  std::size_t const n = tbl.order();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (tbl(g, h) != tbl(h, g)) {
        return CheckReport::fail("commutative", {g, h},
                                 "gh=" + std::to_string(tbl(g, h)) + ", hg=" + std::to_string(tbl(h, g)));
      }
    }
  }
  return CheckReport::pass("commutative");
}

std::string_view to_string(Rung rung) noexcept {
  switch (rung) {
    case Rung::groupoid: return "groupoid";
    case Rung::quasigroup: return "quasigroup";
    case Rung::loop: return "loop";
    case Rung::ip_loop: return "IP-loop";
    case Rung::moufang_loop: return "Moufang loop";
    case Rung::group: return "group";
  }
  return "unknown";
}

std::optional<Rung> rung_from_string(std::string_view name) noexcept {
  if (name == "groupoid") return Rung::groupoid;
  if (name == "quasigroup") return Rung::quasigroup;
  if (name == "loop") return Rung::loop;
  if (name == "ip-loop" || name == "IP-loop") return Rung::ip_loop;
  if (name == "moufang" || name == "Moufang loop") return Rung::moufang_loop;
  if (name == "group") return Rung::group;
  return std::nullopt;
}

Classification classify(CayleyTable const& tbl) {
  Classification c;
  if (auto r = check_quasigroup(tbl); !r.passed) {
    c.stopped_by = std::move(r);
    return c;
  }
  c.rung = Rung::quasigroup;
  if (auto r = check_loop(tbl); !r.passed) {
    c.stopped_by = std::move(r);
    return c;
  }
  c.rung = Rung::loop;
  if (auto r = check_inverse_property(tbl); !r.passed) {
    c.stopped_by = std::move(r);
    return c;
  }
  c.rung = Rung::ip_loop;
  if (auto r = check_moufang(tbl); !r.passed) {
    c.stopped_by = std::move(r);
    return c;
  }
  c.rung = Rung::moufang_loop;
  if (auto r = check_associative(tbl); !r.passed) {
    c.stopped_by = std::move(r);
    return c;
  }
  c.rung = Rung::group;
  return c;
}

}  // namespace moufang
