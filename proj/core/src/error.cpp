#include "augframes/error.hpp"

namespace augframes {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::DegenerateD: return "DegenerateD";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotEuclidean: return "NotEuclidean";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::BothZero: return "BothZero";
    case Errc::FundamentalUnitNotFound: return "FundamentalUnitNotFound";
    case Errc::NotImaginary: return "NotImaginary";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NoWitness: return "NoWitness";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::RingNotEuclidean: return "RingNotEuclidean";
    case Errc::DegenerateSimplex: return "DegenerateSimplex";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::NotASimplex: return "NotASimplex";
    case Errc::VertexAbsent: return "VertexAbsent";
    case Errc::QTooLarge: return "QTooLarge";
    case Errc::EmptyComplex: return "EmptyComplex";
    case Errc::MalformedPath: return "MalformedPath";
    case Errc::PathNotFound: return "PathNotFound";
    case Errc::NoDetourExpected: return "NoDetourExpected";
    case Errc::NotABasis: return "NotABasis";
    case Errc::SlotOutOfRange: return "SlotOutOfRange";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::MultiplePassages: return "MultiplePassages";
    case Errc::NotALoop: return "NotALoop";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace augframes
