#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "logarr/graph.hpp"
#include "logarr/types.hpp"

namespace logarr {

struct CouplingParams {
  int vectors = 5;   // R random test vectors
  int sweeps = 20;   // k JOR iterations per vector
  double omega = 0.5;
  std::uint64_t seed = 0;
};

/// One Jacobi over-relaxation sweep: chi'_i = (1-w)chi_i + w*(sum_j w_ij
/// chi_j)/d_ii. Isolated nodes (d_ii = 0) pass through unchanged. With
/// omega in [0,1] this is a convex average, so the value range shrinks.
std::vector<double> jor_sweep(const LaplacianView& L,
                              std::span<const double> chi, double omega);

/// Random test vectors after k sweeps, entries drawn uniformly from
/// [-1/2, 1/2) with a pinned generator (vector-major fill order).
struct TestVectorSet {
  std::vector<std::vector<double>> chi;  // R relaxed vectors of length n
  int sweeps = 0;
};
TestVectorSet relax_test_vectors(const Graph& g, const CouplingParams& p);

/// Per-edge coupling strength, aligned with g.edges(). Strength is the
/// negated log-sum of endpoint differences, so larger = more strongly
/// coupled and every value is positive.
struct CouplingMap {
  std::vector<double> rho;
  double strength(EdgeId e) const { return rho[static_cast<std::size_t>(e)]; }
};

/// rho_ij = -sum_r lg(max(|chi_i^r - chi_j^r|, 1e-12)); test seam taking
/// already-relaxed vectors.
CouplingMap couplings_from_vectors(
    const Graph& g, const std::vector<std::vector<double>>& chi);

CouplingMap compute_couplings(const Graph& g, const CouplingParams& p);

}  // namespace logarr
