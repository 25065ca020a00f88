#ifndef MOUFANG_PERM_HPP_
#define MOUFANG_PERM_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace moufang {

// A bijection on {0, ..., degree-1}, stored as its image list.
//
// Products follow the apply-right-first convention: (a * b)(x) = a(b(x)).
// Every identity between translations in this library is evaluated under
// that convention.
class Perm {
 public:
  // Throws Errc::invalid_degree for an empty list and
  // Errc::invalid_permutation if `images` is not a bijection.
  explicit Perm(std::vector<std::size_t> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<std::size_t const> images() const noexcept { return images_; }
  std::size_t operator()(std::size_t x) const { return images_[x]; }

  bool is_identity() const noexcept;

  friend bool operator==(Perm const&, Perm const&) = default;
  friend auto operator<=>(Perm const&, Perm const&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<std::size_t> images, Unchecked) : images_(std::move(images)) {}

  friend Perm compose(Perm const& a, Perm const& b);
  friend Perm inverse(Perm const& a);

  std::vector<std::size_t> images_;
};

// c(x) = a(b(x)). Throws Errc::incompatible_degree on mismatched degrees.
Perm compose(Perm const& a, Perm const& b);
Perm inverse(Perm const& a);

inline Perm operator*(Perm const& a, Perm const& b) { return compose(a, b); }

std::ostream& operator<<(std::ostream& os, Perm const& p);

}  // namespace moufang

#endif  // MOUFANG_PERM_HPP_
