#pragma once

#include <cstddef>
#include <vector>

#include "logarr/types.hpp"

namespace logarr {

/// Already-placed neighbors of one node: positions with edge weights acting
/// as sample probabilities. Placement operations require ascending position
/// order; call sort_ascending() (or build via of()) first.
class NeighborSample {
 public:
  static NeighborSample of(std::vector<double> positions,
                           std::vector<double> weights);

  void clear() { e_.clear(); }
  void add(double position, double weight) { e_.push_back({position, weight}); }
  void sort_ascending();

  std::size_t size() const { return e_.size(); }
  double position(std::size_t t) const { return e_[t].first; }
  double weight(std::size_t t) const { return e_[t].second; }

 private:
  std::vector<std::pair<double, double>> e_;
};

/// Energy of parking the node on sample position k: sum over the other
/// samples of w_j * lg(max(|x_k - x_j|, 1e-12)).
double candidate_energy(const NeighborSample& s, std::size_t k);

/// Exact one-node rule: the sample position of minimum energy, O(k^2);
/// ties go to the smaller position.
double place_exact(const NeighborSample& s);

/// Weighted kernel density at every sample point with kernel 2^(-|dx|/h),
/// via one left-to-right and one right-to-left prefix pass (O(k)). The
/// 1/(kh) normalization is dropped; it cannot move the argmax.
std::vector<double> estimate_density(const NeighborSample& s, double h);

/// Bandwidth h = N/(2 lg N) with N the sample position range; h = 1 when
/// the range is too small for the formula (N <= 1).
double density_bandwidth(const NeighborSample& s);

/// Reusable buffer for the density passes in hot loops.
struct PlacementScratch {
  std::vector<double> right;
};

/// Sample position maximizing the estimated density; ties go to the
/// smaller position.
double place_density(const NeighborSample& s, PlacementScratch& scratch);
double place_density(const NeighborSample& s);

/// Dispatch: exact rule for small samples (size <= tau), density rule
/// otherwise, keeping total work linear in the neighborhood size.
inline constexpr int kExactPlacementThreshold = 32;
double place(const NeighborSample& s, int tau, PlacementScratch& scratch);
double place(const NeighborSample& s, int tau = kExactPlacementThreshold);

}  // namespace logarr
