// Structured errors.  Every failure carries a kind so the CLI can map it to
// an exit code and tests can assert on the failure mode rather than on
// message strings.

#ifndef MIPF_ERROR_HPP
#define MIPF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mipf {

enum class ErrKind {
  InvalidInput,     // bad arguments, labels out of range, parse failures
  Existence,        // a construction's existence condition fails (e.g. a
                    // simple current whose invariant cannot be modular)
  FixedPoint,       // extension needs fixed-point resolution (unsupported)
  AutomorphismType, // asked to block-decompose a pure automorphism invariant
  Verification,     // a verification predicate failed (residual too large,
                    // non-integer fusion, inconsistent T within a block, ...)
  Internal          // invariant the code itself guarantees was violated
};

class MipfError : public std::runtime_error {
 public:
  MipfError(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind(kind) {}
  ErrKind kind;
};

inline const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::InvalidInput: return "invalid-input";
    case ErrKind::Existence: return "existence";
    case ErrKind::FixedPoint: return "fixed-point";
    case ErrKind::AutomorphismType: return "automorphism-type";
    case ErrKind::Verification: return "verification";
    case ErrKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace mipf

#endif  // MIPF_ERROR_HPP
