#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace il {

using vertex = std::uint32_t;

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph, bad model, invalid certificate, parse failure.
class input_error : public error {
 public:
  using error::error;
};

/// A configured size bound would be exceeded.
class limit_exceeded : public error {
 public:
  limit_exceeded(const std::string& what, std::size_t required, std::size_t limit)
      : error(what + ": requires " + std::to_string(required) + ", limit is " +
              std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t required_;
  std::size_t limit_;
};

class parse_error : public input_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when recognition finds an induced P4 a-b-c-d.
class not_a_cograph : public input_error {
 public:
  explicit not_a_cograph(std::array<vertex, 4> p4)
      : input_error("not a cograph: induced P4 " + format(p4)), witness_(p4) {}

  const std::array<vertex, 4>& witness() const noexcept { return witness_; }

 private:
  static std::string format(const std::array<vertex, 4>& p) {
    return std::to_string(p[0]) + "-" + std::to_string(p[1]) + "-" +
           std::to_string(p[2]) + "-" + std::to_string(p[3]);
  }
  std::array<vertex, 4> witness_;
};

/// Raised when a graph has no split partition; witness induces 2K2, C4 or C5.
class not_a_splitgraph : public input_error {
 public:
  not_a_splitgraph(std::string kind, std::vector<vertex> witness)
      : input_error("not a splitgraph: induced " + kind + " on" + format(witness)),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<vertex>& witness() const noexcept { return witness_; }

 private:
  static std::string format(const std::vector<vertex>& w) {
    std::string s;
    for (auto v : w) s += " " + std::to_string(v);
    return s;
  }
  std::string kind_;
  std::vector<vertex> witness_;
};

class invalid_decomposition : public input_error {
 public:
  using input_error::input_error;
};

/// An internal consistency check failed. Never expected on valid input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace il
