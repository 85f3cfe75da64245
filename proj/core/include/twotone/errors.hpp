#pragma once

#include <stdexcept>
#include <string>

namespace twotone {

// Base class for everything this library throws on purpose. The code()
// string is stable and machine-parsable; the CLI maps it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Bad user-supplied values (negative rates, empty grids, ...). CLI exit 1.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error("InvalidInput", msg) {}
};

// g_plus >= g_minus: the squeeze parameter r is undefined.
struct UnstableRatio : Error {
  explicit UnstableRatio(const std::string& msg) : Error("UnstableRatio", msg) {}
};

struct NotHurwitz : Error {
  explicit NotHurwitz(const std::string& msg) : Error("NotHurwitz", msg) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& msg) : Error("SingularSystem", msg) {}
};

struct NonFinite : Error {
  explicit NonFinite(const std::string& msg) : Error("NonFinite", msg) {}
};

struct NotConverged : Error {
  explicit NotConverged(const std::string& msg) : Error("NotConverged", msg) {}
};

// Lindblad reduced dynamics with gamma_down <= gamma_up.
struct UnstableReduced : Error {
  explicit UnstableReduced(const std::string& msg) : Error("UnstableReduced", msg) {}
};

struct QuadratureNotConverged : Error {
  explicit QuadratureNotConverged(const std::string& msg)
      : Error("QuadratureNotConverged", msg) {}
};

struct SingularResponse : Error {
  explicit SingularResponse(const std::string& msg) : Error("SingularResponse", msg) {}
};

}  // namespace twotone
