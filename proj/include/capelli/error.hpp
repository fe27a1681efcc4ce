#pragma once

#include <stdexcept>
#include <string>

namespace capelli {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  Pole,
  Internal,
  Io,
  Cap,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a rational function is evaluated at one of its poles.
class PoleError : public Error {
 public:
  PoleError(int order, const std::string& what) : Error(ErrorCode::Pole, what), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::Internal, what);
}

}  // namespace capelli
