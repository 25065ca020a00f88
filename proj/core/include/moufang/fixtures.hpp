#ifndef MOUFANG_FIXTURES_HPP_
#define MOUFANG_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "moufang/magma.hpp"

namespace moufang::fixtures {

// Z_n with g*h = (g+h) mod n. Throws Errc::invalid_degree for n = 0.
CayleyTable cyclic_group(std::size_t n);

// The six permutations of {0,1,2} in lexicographic order of their image
// lists:
//   0 = [0,1,2]  1 = [0,2,1]  2 = [1,0,2]  3 = [1,2,0]  4 = [2,0,1]  5 = [2,1,0]
// with g*h = g after h.
CayleyTable symmetric_group_3();

// The Chein double M(G,2) on G u Gu. Index g < n is g, index n+g is gu.
//   g*h = gh,  g*(hu) = (hg)u,  (gu)*h = (gh^-1)u,  (gu)*(hu) = h^-1 g
// Throws Errc::not_a_group unless `group` is associative with a unit.
CayleyTable chein_double(CayleyTable const& group);

// A loop of order n with unit 0, completed by backtracking.
//
// Row 0 and column 0 are the identity. The remaining cells are filled in
// row-major order; on entering a cell the candidate values (those unused in
// its row and column, ascending) are shuffled by Fisher-Yates, swapping
// position i with position rng() % (i+1) for i from last down to 1, where
// rng is std::minstd_rand (x' = 48271 x mod 2^31-1) seeded with `seed`.
CayleyTable random_loop(std::size_t n, std::uint32_t seed);

// Calls `visit` for every Latin square of order n whose first row and
// column are 0..n-1 in order, i.e. every loop on {0..n-1} with unit 0.
// Squares are visited in lexicographic order of their cells. Returns the
// number visited. `visit` may return false to stop early.
std::size_t for_each_loop(std::size_t n, std::function<bool(CayleyTable const&)> const& visit);

}  // namespace moufang::fixtures

#endif  // MOUFANG_FIXTURES_HPP_
