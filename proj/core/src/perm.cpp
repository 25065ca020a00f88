#include "moufang/perm.hpp"

#include <numeric>
#include <ostream>
#include <string>

#include "moufang/error.hpp"

namespace moufang {

Perm::Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(Errc::invalid_degree, "permutation degree must be positive");
  }
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    std::size_t const y = images_[x];
    if (y >= images_.size()) {
      throw Error(Errc::invalid_permutation,
                  "image " + std::to_string(y) + " of point " + std::to_string(x) +
                      " is out of range",
                  {x, y});
    }
    if (seen[y]) {
      throw Error(Errc::invalid_permutation,
                  "image " + std::to_string(y) + " is repeated", {x, y});
    }
    seen[y] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  if (degree == 0) {
    throw Error(Errc::invalid_degree, "permutation degree must be positive");
  }
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Perm(std::move(images), Unchecked{});
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Perm compose(Perm const& a, Perm const& b) {
  if (a.degree() != b.degree()) {
    throw Error(Errc::incompatible_degree,
                "cannot compose permutations of degree " + std::to_string(a.degree()) +
                    " and " + std::to_string(b.degree()),
                {a.degree(), b.degree()});
  }
  std::vector<std::size_t> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a.images_[b.images_[x]];
  return Perm(std::move(images), Perm::Unchecked{});
}

Perm inverse(Perm const& a) {
  std::vector<std::size_t> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[a.images_[x]] = x;
  return Perm(std::move(images), Perm::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, Perm const& p) {
  os << '[';
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (x) os << ',';
    os << p(x);
  }
  return os << ']';
}

}  // namespace moufang
