#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace swimlab {

enum class Errc {
  // field / scene
  InvalidFrequency,
  EmptyScene,
  InvalidArgument,
  // lock-in
  NotSettled,
  AliasingRisk,
  // scan paths
  DegeneratePath,
  InvalidExtent,
  ReferenceMismatch,
  // rendering
  EmptyFrame,
  PathKindMismatch,
  // analysis
  NoOscillation,
  InsufficientFringes,
  // configuration
  MissingField,
  UnknownField,
  InvalidValue,
  // filesystem
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace swimlab
