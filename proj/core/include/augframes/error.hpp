#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace augframes {

enum class Errc {
  NotSquarefree,
  DegenerateD,
  DivisionByZero,
  NotEuclidean,
  SearchExhausted,
  BothZero,
  FundamentalUnitNotFound,
  NotImaginary,
  PreconditionViolated,
  NoWitness,
  ZeroVector,
  NotPrimitive,
  RingNotEuclidean,
  DegenerateSimplex,
  RankTooLarge,
  BoundTooLarge,
  NotASimplex,
  VertexAbsent,
  QTooLarge,
  EmptyComplex,
  MalformedPath,
  PathNotFound,
  NoDetourExpected,
  NotABasis,
  SlotOutOfRange,
  RankMismatch,
  MultiplePassages,
  NotALoop,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message adds context for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace augframes
