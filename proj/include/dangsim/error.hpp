#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dangsim {

enum class ErrorKind {
  SizeOutOfRange,
  AlignmentError,
  NotAPointer,
  OutOfSimMemory,
  WildStore,
  DuplicateID,
  AccountingBug,
  UseAfterRelease,
  InvalidFree,
  PrematureFree,
  SettlementMismatch,
};

const char* to_string(ErrorKind kind);

// Violation of a runtime-model contract. Carries a machine-checkable kind so
// tests can assert on the exact failure class.
class SimError : public std::runtime_error {
 public:
  SimError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed trace text.
class ParseError : public std::runtime_error {
 public:
  ParseError(uint32_t line, uint32_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  uint32_t line() const { return line_; }
  uint32_t column() const { return column_; }

 private:
  uint32_t line_;
  uint32_t column_;
};

// A trace event that failed during execution: a failed expect assertion or a
// model error surfaced by the event. Aborts the run at that event.
class TraceError : public std::runtime_error {
 public:
  TraceError(size_t event_index, uint32_t line, const std::string& what,
             std::optional<ErrorKind> cause = std::nullopt)
      : std::runtime_error("event " + std::to_string(event_index) + " (line " +
                           std::to_string(line) + "): " + what),
        event_index_(event_index),
        line_(line),
        cause_(cause) {}

  size_t event_index() const { return event_index_; }
  uint32_t line() const { return line_; }
  std::optional<ErrorKind> cause() const { return cause_; }

 private:
  size_t event_index_;
  uint32_t line_;
  std::optional<ErrorKind> cause_;
};

}  // namespace dangsim
