#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubsched {

/// Machine-readable failure categories surfaced by the library.
enum class Errc {
  malformed_input,
  invalid_order,
  odd_order,
  not_cubic,
  not_simple,
  generation_exhausted,
  is_k4,
  excluded_graph,
  already_minimal_width,
  target_unreachable,
  precondition_too_small,
  search_exhausted,
  not_bipartite,
  not_bicubic,
  not_tricubic,
  unsupported_speeds,
  unsupported_structure,
  component_excluded,
  infeasible,
  budget_exceeded,
  size_mismatch,
  no_feasible_candidate,
};

std::string_view errc_name(Errc code);

/// Exception type for all recoverable library failures.  The code
/// distinguishes usage errors (bad input) from structural outcomes
/// (e.g. a graph the solver deliberately refuses).
class SolverError : public std::runtime_error {
public:
  SolverError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw SolverError(code, message);
}

}  // namespace cubsched
