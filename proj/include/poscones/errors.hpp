#pragma once

#include <stdexcept>
#include <string>

namespace poscones {

// Base class for every error the library throws deliberately.
// Callers that want one catch-all can catch poscones::Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different rings.
struct RingMismatch : Error { using Error::Error; };
// Graded pieces of different codimension were combined, or an operation
// required a specific codimension (e.g. degree needs codim == dimension).
struct CodimMismatch : Error { using Error::Error; };
// A partition does not fit in (or relate correctly to) the ambient box.
struct BoxViolation : Error { using Error::Error; };
// Harder-Narasimhan data is malformed (empty, bad ranks, slopes not
// strictly increasing).
struct InvalidHN : Error { using Error::Error; };
// An index or numeric argument is outside its documented domain.
struct RangeError : Error { using Error::Error; };
// A zero vector was supplied where a ray is required.
struct ZeroVector : Error { using Error::Error; };
// A pairing matrix is not invertible.
struct SingularPairing : Error { using Error::Error; };
// Vector/matrix sizes do not match the ambient dimension.
struct DimMismatch : Error { using Error::Error; };
// A symmetric matrix was required.
struct NotSymmetric : Error { using Error::Error; };
// An expression referenced a bundle or monomial that is not registered.
struct UnboundSymbol : Error { using Error::Error; };
// The pliant cone was requested but no registered bundle is flagged
// globally generated.
struct NoGGBundles : Error { using Error::Error; };
// An operation needs known effective-cone data the model does not carry.
struct MissingEff : Error { using Error::Error; };
// Malformed input text: expressions, rational literals, model documents.
struct ParseError : Error { using Error::Error; };
// A model document is well-formed but semantically inconsistent
// (duplicate bundle names, Chern classes above the rank, ...).
struct ModelError : Error { using Error::Error; };

}  // namespace poscones
