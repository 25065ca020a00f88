#include "moufang/fixtures.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "moufang/axioms.hpp"
#include "moufang/error.hpp"

namespace moufang::fixtures {

CayleyTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_degree, "cyclic group order must be positive");
  return CayleyTable::from_function(n, [n](Element g, Element h) { return (g + h) % n; });
}

CayleyTable symmetric_group_3() {
  std::vector<Perm> elems;
  std::vector<std::size_t> images{0, 1, 2};
  do {
    elems.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  auto index_of = [&](Perm const& p) {
    return static_cast<Element>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  return CayleyTable::from_function(
      elems.size(), [&](Element g, Element h) { return index_of(elems[g] * elems[h]); });
}

CayleyTable chein_double(CayleyTable const& group) {
  if (CheckReport a = check_associative(group); !a.passed) {
    throw Error(Errc::not_a_group, "Chein doubling needs a group: " + a.detail, a.witness);
  }
  if (!check_quasigroup(group).passed || !find_unit(group)) {
    throw Error(Errc::not_a_group, "Chein doubling needs a group: no unit or not Latin");
  }
  std::vector<Element> const inv = *two_sided_inverses(group);
  std::size_t const n = group.order();
  CayleyTable doubled = CayleyTable::from_function(2 * n, [&](Element x, Element y) -> Element {
    bool const xu = x >= n;
    bool const yu = y >= n;
    Element const g = xu ? x - n : x;
    Element const h = yu ? y - n : y;
    if (!xu && !yu) return group(g, h);
    if (!xu && yu) return n + group(h, g);
    if (xu && !yu) return n + group(g, inv[h]);
    return group(inv[h], g);
  });
  if (CheckReport m = check_moufang(doubled); !m.passed) {
    throw Error(Errc::not_a_group, "Chein double failed its Moufang self-check: " + m.detail,
                m.witness);
  }
  return doubled;
}

namespace {

// Fills the cells (r, c), r, c >= 1, of a square whose first row and
// column are fixed to 0..n-1, in row-major order.
class LoopCompleter {
 public:
  explicit LoopCompleter(std::size_t n)
      : n_(n),
        cells_(n, std::vector<Element>(n)),
        row_used_(n, std::vector<bool>(n, false)),
        col_used_(n, std::vector<bool>(n, false)) {
    for (Element i = 0; i < n; ++i) {
      place(0, i, i);
      if (i) place(i, 0, i);
    }
  }

  // `order` permutes the ascending candidate list in place before trying it.
  // `visit` returns false to stop. Returns false if stopped.
  template <typename Order, typename Visit>
  bool fill(std::size_t cell, Order& order, Visit& visit) {
    std::size_t const inner = n_ - 1;
    if (cell == inner * inner) return visit(CayleyTable(cells_));
    Element const r = 1 + cell / inner;
    Element const c = 1 + cell % inner;
    std::vector<Element> candidates;
    for (Element v = 0; v < n_; ++v) {
      if (!row_used_[r][v] && !col_used_[c][v]) candidates.push_back(v);
    }
    order(candidates);
    for (Element v : candidates) {
      place(r, c, v);
      bool const go_on = fill(cell + 1, order, visit);
      unplace(r, c, v);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  void place(Element r, Element c, Element v) {
    cells_[r][c] = v;
    row_used_[r][v] = true;
    col_used_[c][v] = true;
  }
  void unplace(Element r, Element c, Element v) {
    row_used_[r][v] = false;
    col_used_[c][v] = false;
  }

  std::size_t n_;
  std::vector<std::vector<Element>> cells_;
  std::vector<std::vector<bool>> row_used_;
  std::vector<std::vector<bool>> col_used_;
};

}  // namespace

CayleyTable random_loop(std::size_t n, std::uint32_t seed) {
  if (n == 0) throw Error(Errc::invalid_degree, "loop order must be positive");
  std::minstd_rand rng(seed);
  auto shuffle = [&rng](std::vector<Element>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t const j = rng() % i;
      std::swap(v[i - 1], v[j]);
    }
  };
  std::optional<CayleyTable> result;
  auto keep_first = [&result](CayleyTable const& t) {
    result = t;
    return false;
  };
  LoopCompleter completer(n);
  completer.fill(0, shuffle, keep_first);
  return *result;  // a Latin square with fixed first row and column always completes
}

std::size_t for_each_loop(std::size_t n, std::function<bool(CayleyTable const&)> const& visit) {
  if (n == 0) throw Error(Errc::invalid_degree, "loop order must be positive");
  std::size_t count = 0;
  auto ascending = [](std::vector<Element>&) {};
  auto counted = [&](CayleyTable const& t) {
    ++count;
    return visit(t);
  };
  LoopCompleter completer(n);
  completer.fill(0, ascending, counted);
  return count;
}

}  // namespace moufang::fixtures
