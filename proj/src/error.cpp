#include "qkz/error.hpp"

namespace qkz {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ring_mismatch: return "RingMismatch";
    case errc::inexact_division: return "InexactDivision";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::non_square: return "NonSquare";
    case errc::not_skew_symmetric: return "NotSkewSymmetric";
    case errc::odd_dimension: return "OddDimension";
    case errc::insufficient_vanishing: return "InsufficientVanishing";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::invalid_word: return "InvalidWord";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::ballot_violation: return "BallotViolation";
    case errc::unsupported_parameters: return "UnsupportedParameters";
    case errc::bad_tau_value: return "BadTauValue";
    case errc::inconsistent_derivation: return "InconsistentDerivation";
    case errc::non_unique_solution: return "NonUniqueSolution";
    case errc::positivity_uncertified: return "PositivityUncertified";
    case errc::degenerate_alternant: return "DegenerateAlternant";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::non_integer_coefficient: return "NonIntegerCoefficient";
    case errc::non_integer: return "NonInteger";
    case errc::format_version_mismatch: return "FormatVersionMismatch";
    case errc::corrupt_cache: return "CorruptCache";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace qkz
