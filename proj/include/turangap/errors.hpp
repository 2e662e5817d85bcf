#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace turangap {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a solver is asked for an instance beyond its exact-size cap.
struct CapExceeded : std::runtime_error {
  CapExceeded(const std::string& what_solver, int size, int cap)
      : std::runtime_error(what_solver + ": instance size " +
                           std::to_string(size) + " exceeds exact cap " +
                           std::to_string(cap)),
        size(size),
        cap(cap) {}
  int size;
  int cap;
};

/// Thrown by krfree_from_parts when the cross-edge subgraph still contains
/// a K_r; carries the offending clique.
struct CliqueSurvives : std::runtime_error {
  CliqueSurvives(int r, std::vector<int> clique)
      : std::runtime_error("K_" + std::to_string(r) +
                           " survives in the cross-edge subgraph"),
        r(r),
        witness(std::move(clique)) {}
  int r;
  std::vector<int> witness;
};

}  // namespace turangap
