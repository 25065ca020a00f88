#include "moufang/error.hpp"

namespace moufang {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_degree: return "invalid-degree";
    case Errc::incompatible_degree: return "incompatible-degree";
    case Errc::invalid_permutation: return "invalid-permutation";
    case Errc::invalid_table: return "invalid-table";
    case Errc::not_a_translation: return "not-a-translation";
    case Errc::not_a_loop: return "not-a-loop";
    case Errc::not_a_group: return "not-a-group";
    case Errc::missing_inverse: return "missing-inverse";
    case Errc::extraction_refused: return "extraction-refused";
    case Errc::hypothesis_violated: return "hypothesis-violated";
    case Errc::separation_violated: return "separation-violated";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::reconstruction_failed: return "reconstruction-failed";
    case Errc::certificate_failed: return "certificate-failed";
    case Errc::certificate_inconsistent: return "certificate-inconsistent";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace moufang
