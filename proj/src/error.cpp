#include "cubsched/error.hpp"

namespace cubsched {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_input: return "malformed_input";
    case Errc::invalid_order: return "invalid_order";
    case Errc::odd_order: return "odd_order";
    case Errc::not_cubic: return "not_cubic";
    case Errc::not_simple: return "not_simple";
    case Errc::generation_exhausted: return "generation_exhausted";
    case Errc::is_k4: return "is_k4";
    case Errc::excluded_graph: return "excluded_graph";
    case Errc::already_minimal_width: return "already_minimal_width";
    case Errc::target_unreachable: return "target_unreachable";
    case Errc::precondition_too_small: return "precondition_too_small";
    case Errc::search_exhausted: return "search_exhausted";
    case Errc::not_bipartite: return "not_bipartite";
    case Errc::not_bicubic: return "not_bicubic";
    case Errc::not_tricubic: return "not_tricubic";
    case Errc::unsupported_speeds: return "unsupported_speeds";
    case Errc::unsupported_structure: return "unsupported_structure";
    case Errc::component_excluded: return "component_excluded";
    case Errc::infeasible: return "infeasible";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::size_mismatch: return "size_mismatch";
    case Errc::no_feasible_candidate: return "no_feasible_candidate";
  }
  return "unknown";
}

}  // namespace cubsched
