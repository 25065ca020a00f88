#ifndef MOUFANG_ERROR_HPP_
#define MOUFANG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moufang {

enum class Errc {
  invalid_degree,
  incompatible_degree,
  invalid_permutation,
  invalid_table,
  not_a_translation,
  not_a_loop,
  not_a_group,
  missing_inverse,
  extraction_refused,
  hypothesis_violated,
  separation_violated,
  dimension_mismatch,
  reconstruction_failed,
  certificate_failed,
  certificate_inconsistent,
  precondition_violated,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

// Every error raised by the library. `witness` holds the element indices
// (or permutation points) the failure is about, when there are any.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  std::vector<std::size_t> const& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::size_t> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace moufang

#endif  // MOUFANG_ERROR_HPP_
