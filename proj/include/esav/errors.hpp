#ifndef ESAV_ERRORS_HPP
#define ESAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace esav {

// Raised when the SAV radicand H2+C0 (with orientation folded in) is not
// positive, i.e. the square-root reformulation is infeasible for this state.
class reformulation_error : public std::runtime_error {
 public:
  explicit reformulation_error(const std::string& what) : std::runtime_error(what) {}
};

// exp() argument out of double range while materializing e = exp(r).
class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

class singular_operator_error : public std::runtime_error {
 public:
  explicit singular_operator_error(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-point sweep hit the iteration cap without meeting TOL where the
// scheme contract treats that as fatal (fully implicit Gauss).
class nonconvergence_error : public std::runtime_error {
 public:
  nonconvergence_error(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual;
};

// Solution lost finiteness mid-run.
class diverged_error : public std::runtime_error {
 public:
  diverged_error(const std::string& what, double t_) : std::runtime_error(what), t(t_) {}
  double t;
};

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace esav

#endif
