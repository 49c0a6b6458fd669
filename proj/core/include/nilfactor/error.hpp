#pragma once

#include <stdexcept>
#include <string>

namespace nilfactor {

/// Machine-readable failure categories. The CLI maps these onto exit codes,
/// so names are part of the tool's output contract.
enum class Errc {
  InvalidOrder,
  GroupTooLarge,
  InvalidPermutation,
  NotAGroup,
  NotNilpotent,
  ChainStepFailed,
  SizesMismatch,
  SizeTooSmall,
  KTooSmall,
  NormalizerTrivial,
  ParseError,
  InvalidArgument,
  IoError,
};

const char* errc_name(Errc code);

class GroupError : public std::runtime_error {
 public:
  GroupError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw GroupError(code, message);
}

}  // namespace nilfactor
