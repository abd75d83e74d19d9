#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wss {

/// Raised when a construction would exceed a configured size cap.
/// Never recovered from silently: callers surface it (exit code 3 in the CLI).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::size_t cap, std::size_t requested)
      : std::runtime_error(cap_name + " cap exceeded: limit " + std::to_string(cap) +
                           ", needed at least " + std::to_string(requested)),
        cap_name_(std::move(cap_name)), cap_(cap), requested_(requested) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
  std::size_t requested_;
};

/// Malformed text input (cycle notation, group files, CLI parameters).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wss
