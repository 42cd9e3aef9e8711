#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdham {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 / DSL / edge-list input. `offset` is the byte position
/// of the offending character in the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact search was asked for a graph above its hard order limit.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& op, std::size_t n, std::size_t limit)
      : Error(op + ": order " + std::to_string(n) + " exceeds limit " +
              std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  std::size_t order() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// A distance was requested between two vertices in different components.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::size_t u, std::size_t v)
      : Error("graph is disconnected: vertex " + std::to_string(v) +
              " unreachable from vertex " + std::to_string(u)),
        u_(u),
        v_(v) {}
  std::size_t source() const { return u_; }
  std::size_t unreached() const { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

}  // namespace qdham
