#include "psmod/error.hpp"

namespace psmod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "domain_mismatch";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::InvalidDivisor: return "invalid_divisor";
    case ErrorKind::UnsupportedEnumeration: return "unsupported_enumeration";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::RankMismatch: return "rank_mismatch";
    case ErrorKind::NotPrimal: return "not_primal";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace psmod
