#include "logarr/placement.hpp"

#include <algorithm>
#include <cmath>

#include "logarr/error.hpp"

namespace logarr {

NeighborSample NeighborSample::of(std::vector<double> positions,
                                  std::vector<double> weights) {
  if (positions.size() != weights.size())
    throw ContractViolation("NeighborSample: position/weight size mismatch");
  if (positions.empty())
    throw ValidationError("NeighborSample: needs at least one entry");
  NeighborSample s;
  s.e_.reserve(positions.size());
  for (std::size_t t = 0; t < positions.size(); ++t) {
    if (!std::isfinite(positions[t]))
      throw ValidationError("NeighborSample: position is not finite");
    if (!(weights[t] >= 0.0))
      throw ValidationError("NeighborSample: negative weight");
    s.e_.push_back({positions[t], weights[t]});
  }
  s.sort_ascending();
  return s;
}

void NeighborSample::sort_ascending() { std::sort(e_.begin(), e_.end()); }

double candidate_energy(const NeighborSample& s, std::size_t k) {
  double energy = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j == k) continue;
    const double d = std::fabs(s.position(k) - s.position(j));
    energy +=
        s.weight(j) * std::log2(d < kDistanceFloor ? kDistanceFloor : d);
  }
  return energy;
}

double place_exact(const NeighborSample& s) {
  if (s.size() == 0)
    throw ContractViolation("place_exact: empty sample");
  std::size_t best = 0;
  double best_energy = candidate_energy(s, 0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double e = candidate_energy(s, k);
    if (e < best_energy) {  // strict: ties keep the smaller position
      best_energy = e;
      best = k;
    }
  }
  return s.position(best);
}

namespace {

// Fills `right` with the right-to-left pass r_t = p_t + r_{t+1} *
// 2^((x_t - x_{t+1})/h); the caller folds in the left pass on the fly.
void right_pass(const NeighborSample& s, double h, std::vector<double>& right) {
  const std::size_t k = s.size();
  right.resize(k);
  right[k - 1] = s.weight(k - 1);
  for (std::size_t t = k - 1; t-- > 0;)
    right[t] = s.weight(t) +
               right[t + 1] * std::exp2((s.position(t) - s.position(t + 1)) / h);
}

}  // namespace

std::vector<double> estimate_density(const NeighborSample& s, double h) {
  if (h <= 0.0) throw ValidationError("estimate_density: h must be positive");
  if (s.size() == 0)
    throw ContractViolation("estimate_density: empty sample");
  std::vector<double> right;
  right_pass(s, h, right);
  std::vector<double> density(s.size());
  double left = 0.0;  // s_t accumulated incrementally
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t == 0)
      left = s.weight(0);
    else
      left = s.weight(t) +
             left * std::exp2((s.position(t - 1) - s.position(t)) / h);
    density[t] = left + right[t] - s.weight(t);
  }
  return density;
}

double density_bandwidth(const NeighborSample& s) {
  const double range = s.position(s.size() - 1) - s.position(0);
  if (range <= 1.0) return 1.0;  // lg(range) would be <= 0
  return range / (2.0 * std::log2(range));
}

double place_density(const NeighborSample& s, PlacementScratch& scratch) {
  if (s.size() == 0)
    throw ContractViolation("place_density: empty sample");
  const double h = density_bandwidth(s);
  right_pass(s, h, scratch.right);
  std::size_t best = 0;
  double best_density = 0.0;
  double left = 0.0;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t == 0)
      left = s.weight(0);
    else
      left = s.weight(t) +
             left * std::exp2((s.position(t - 1) - s.position(t)) / h);
    const double d = left + scratch.right[t] - s.weight(t);
    if (d > best_density || t == 0) {  // strict: ties keep smaller position
      best_density = d;
      best = t;
    }
  }
  return s.position(best);
}

double place_density(const NeighborSample& s) {
  PlacementScratch scratch;
  return place_density(s, scratch);
}

double place(const NeighborSample& s, int tau, PlacementScratch& scratch) {
  if (tau < 0) throw ValidationError("place: tau must be >= 0");
  if (s.size() <= static_cast<std::size_t>(tau)) return place_exact(s);
  return place_density(s, scratch);
}

double place(const NeighborSample& s, int tau) {
  PlacementScratch scratch;
  return place(s, tau, scratch);
}

}  // namespace logarr
