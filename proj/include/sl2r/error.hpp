#pragma once

#include <stdexcept>
#include <string>

namespace sl2r {

enum class Errc {
  invalid_argument,
  non_interior_point,
  at_infinity,
  inadmissible_q,
  no_convergence,
  degenerate_plane,
  not_rescalable,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sl2r
