#include "dangsim/error.hpp"

namespace dangsim {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeOutOfRange:
      return "SizeOutOfRange";
    case ErrorKind::AlignmentError:
      return "AlignmentError";
    case ErrorKind::NotAPointer:
      return "NotAPointer";
    case ErrorKind::OutOfSimMemory:
      return "OutOfSimMemory";
    case ErrorKind::WildStore:
      return "WildStore";
    case ErrorKind::DuplicateID:
      return "DuplicateID";
    case ErrorKind::AccountingBug:
      return "AccountingBug";
    case ErrorKind::UseAfterRelease:
      return "UseAfterRelease";
    case ErrorKind::InvalidFree:
      return "InvalidFree";
    case ErrorKind::PrematureFree:
      return "PrematureFree";
    case ErrorKind::SettlementMismatch:
      return "SettlementMismatch";
  }
  return "UnknownError";
}

}  // namespace dangsim
