#pragma once

#include <stdexcept>
#include <string>

namespace ddc {

enum class errc {
  zero_residue,
  duplicate_generator,
  disconnected,
  invalid_dimension,
  unsupported_degree,
  diameter_too_small,
  diameter_below_threshold,
  residue_class_unavailable,
  too_large,
  not_a_unit,
  unstable_classification,
  verification_failed,
  invariant_violated,
  methods_disagree,
  ceiling_below_known_witness,
  bad_parameter,
};

const char* errc_name(errc c);

// Every failure in the library surfaces as one of these. The code is kept
// machine readable so callers (the CLI in particular) can map it to an exit
// status without string matching.
class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

}  // namespace ddc
