#pragma once

#include <stdexcept>
#include <string>

namespace campedelli {

enum class Errc {
  IdenticalLines,
  DuplicateLine,
  DegenerateArrangement,
  NotSimple,
  NotCampedelli,
  InconsistentEquipment,
  MalformedGluing,
  CannotPerturb,
  NotATriangle,
  DependentSides,
  Concurrent,
  Degenerate,
  InvalidMultiplicity,
  InvalidLabel,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace campedelli
