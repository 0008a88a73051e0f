#pragma once

// End-to-end reconstruction of a binary matrix from prescribed row and
// column sums: greedy fill seed, then flow augmentation until the marginals
// are met or proven unreachable. Small-instance oracles for cross-checking
// live here as well.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "taxiray/discrete.hpp"
#include "taxiray/flow.hpp"

namespace taxiray {

struct ReconstructResult {
  bool feasible = false;
  std::optional<BinaryMatrix> matrix;  // present iff feasible
  LavResult lav;                       // seed stage, with its event log
  MaxFlowRun flow_run;                 // augmentation stage
};

/// Reconstructs a 0/1 matrix with row sums R and column sums S, or reports
/// infeasibility. Incompatible inputs (sum of R differing from sum of S) are
/// rejected up front. The greedy seed never exceeds a marginal, so it embeds
/// as a valid flow; the marginals are realizable exactly when the maximal
/// flow saturates every source edge. The optional callback fires after each
/// augmentation with the current matrix.
inline ReconstructResult reconstruct(
    const SumVectors& sums,
    const std::function<void(const BinaryMatrix&, int)>& on_augment = {}) {
  if (!sums.compatible()) {
    throw std::invalid_argument(
        "row sums and column sums have different totals");
  }
  ReconstructResult res{false, std::nullopt, lav_fill(sums), {}};

  FlowNetwork net = build_network(sums);
  net.seed(res.lav.matrix);
  if (on_augment) {
    res.flow_run = max_flow(net, [&](int len) { on_augment(net.to_matrix(), len); });
  } else {
    res.flow_run = max_flow(net);
  }
  res.feasible = res.flow_run.flow_size == sums.total_rows();
  if (res.feasible) res.matrix = net.to_matrix();
  return res;
}

/// All 0/1 matrices with the given marginals, by exhaustive enumeration.
/// Intended as a test oracle; requires m*n <= 16.
inline std::vector<BinaryMatrix> brute_force_solutions(const SumVectors& sums) {
  const int m = sums.rows();
  const int n = sums.cols();
  if (m * n > 16) {
    throw std::invalid_argument("brute force limited to m*n <= 16");
  }
  std::vector<BinaryMatrix> out;
  const std::uint32_t lim = 1u << (m * n);
  for (std::uint32_t mask = 0; mask < lim; ++mask) {
    BinaryMatrix a(m, n);
    for (int b = 0; b < m * n; ++b) {
      if (mask & (1u << b)) a.set(b / n, b % n, 1);
    }
    if (a.row_sums() == sums.row_sums && a.col_sums() == sums.col_sums) {
      out.push_back(std::move(a));
    }
  }
  return out;
}

/// Feasibility via the subset inequality |I| * |J| >= sum_{i in I} r_i -
/// sum_{j not in J} s_j over all row subsets I and column subsets J,
/// evaluated literally over all 2^m * 2^n pairs. Requires m, n <= 12.
inline bool mirsky_feasible(const SumVectors& sums) {
  const int m = sums.rows();
  const int n = sums.cols();
  if (m > 12 || n > 12) {
    throw std::invalid_argument("subset enumeration limited to m, n <= 12");
  }
  const std::uint32_t rm = 1u << m;
  const std::uint32_t cm = 1u << n;
  std::vector<long long> rsum(rm, 0);
  for (std::uint32_t mask = 1; mask < rm; ++mask) {
    int b = std::countr_zero(mask);
    rsum[mask] = rsum[mask & (mask - 1)] + sums.row_sums[static_cast<std::size_t>(b)];
  }
  std::vector<long long> csum(cm, 0);
  for (std::uint32_t mask = 1; mask < cm; ++mask) {
    int b = std::countr_zero(mask);
    csum[mask] = csum[mask & (mask - 1)] + sums.col_sums[static_cast<std::size_t>(b)];
  }
  const long long stotal = sums.total_cols();
  for (std::uint32_t mi = 0; mi < rm; ++mi) {
    const long long ri = rsum[mi];
    const long long pi = std::popcount(mi);
    for (std::uint32_t mj = 0; mj < cm; ++mj) {
      const long long pj = std::popcount(mj);
      if (pi * pj < ri - (stotal - csum[mj])) return false;
    }
  }
  return true;
}

}  // namespace taxiray
