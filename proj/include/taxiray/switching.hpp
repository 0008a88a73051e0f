#pragma once

// Switching chains: alternating sequences of matrix cells that move a 1 from
// one cell to another position in the same column without disturbing any row
// or column sum. Used to vacate a cell so a blocked fill can proceed.

#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "taxiray/discrete.hpp"

namespace taxiray {

/// A chain (i_0, j_0), ..., (i_l, j_l) of matrix cells with l odd, where:
/// consecutive cells alternate sharing a row (even links) and a column (odd
/// links), the chain returns to the starting column (j_l = j_0) but in a
/// different row (i_l != i_0), even-indexed cells hold 1 and odd-indexed
/// cells hold 0. Toggling every cell keeps all row sums and all column sums
/// except that the 1 at (i_0, j_0) moves to (i_l, j_0).
struct SwitchingChain {
  std::vector<std::pair<int, int>> cells;
};

/// Checks the chain against the matrix: odd length of links, alternating
/// row/column sharing with strict movement, closure into the starting
/// column in a new row, and the 1/0 pattern on even/odd positions.
inline bool is_valid_switching_chain(const BinaryMatrix& a,
                                     const SwitchingChain& chain) {
  const auto& c = chain.cells;
  if (c.size() < 2 || c.size() % 2 != 0) return false;  // l = size-1 must be odd
  for (const auto& [i, j] : c) {
    if (i < 0 || i >= a.rows() || j < 0 || j >= a.cols()) return false;
  }
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (k % 2 == 0) {
      if (c[k].first != c[k + 1].first) return false;   // share a row
      if (c[k].second == c[k + 1].second) return false;  // move to a new column
    } else {
      if (c[k].second != c[k + 1].second) return false;  // share a column
      if (c[k].first == c[k + 1].first) return false;    // move to a new row
    }
  }
  if (c.back().second != c.front().second) return false;
  if (c.back().first == c.front().first) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    int want = k % 2 == 0 ? 1 : 0;
    if (a.at(c[k].first, c[k].second) != want) return false;
  }
  return true;
}

/// Finds a shortest switching chain starting at cell (i, j), which must hold
/// a 1. Breadth-first labeling: label 0 on (i, j); from even labels, label
/// the unlabeled 0-cells in their rows; from odd labels, label the unlabeled
/// 1-cells in their columns. The search stops as soon as column j receives
/// an odd label; the chain is read off by backtracking, preferring the
/// smallest row (or column) index at every step. Returns nothing when no
/// chain exists.
inline std::optional<SwitchingChain> find_switching_chain(
    const BinaryMatrix& a, int i, int j) {
  if (i < 0 || i >= a.rows() || j < 0 || j >= a.cols()) {
    throw std::out_of_range("chain start outside the matrix");
  }
  if (a.at(i, j) != 1) {
    throw std::invalid_argument("chain start must hold a 1");
  }
  const int m = a.rows();
  const int n = a.cols();
  std::vector<int> label(
      static_cast<std::size_t>(m) * static_cast<std::size_t>(n), -1);
  auto lab = [&](int r, int c) -> int& {
    return label[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
  };

  lab(i, j) = 0;
  std::vector<std::pair<int, int>> frontier{{i, j}};
  int k = 0;
  int end_row = -1;  // row of the terminal 0-cell in column j, once found

  while (end_row < 0) {
    std::vector<std::pair<int, int>> next;
    if (k % 2 == 0) {
      // Row sweep: unlabeled 0-cells in the rows of the current frontier.
      for (const auto& [r, c] : frontier) {
        (void)c;
        for (int c2 = 0; c2 < n; ++c2) {
          if (lab(r, c2) < 0 && a.at(r, c2) == 0) {
            lab(r, c2) = k + 1;
            next.emplace_back(r, c2);
          }
        }
      }
    } else {
      // Column sweep: unlabeled 1-cells in the columns of the frontier.
      for (const auto& [r, c] : frontier) {
        (void)r;
        for (int r2 = 0; r2 < m; ++r2) {
          if (lab(r2, c) < 0 && a.at(r2, c) == 1) {
            lab(r2, c) = k + 1;
            next.emplace_back(r2, c);
          }
        }
      }
    }
    if (next.empty()) return std::nullopt;
    ++k;
    if (k % 2 == 1) {
      for (int r = 0; r < m; ++r) {
        if (lab(r, j) == k && r != i) {
          end_row = r;
          break;
        }
      }
    }
    frontier = std::move(next);
  }

  // Backtrack from (end_row, j) down the labels, alternating row and column
  // moves; ties resolve to the smallest index.
  std::deque<std::pair<int, int>> cells;
  std::pair<int, int> cur{end_row, j};
  cells.push_front(cur);
  for (int t = k - 1; t >= 0; --t) {
    std::pair<int, int> pred{-1, -1};
    if (t % 2 == 0) {
      for (int c2 = 0; c2 < n; ++c2) {
        if (lab(cur.first, c2) == t) {
          pred = {cur.first, c2};
          break;
        }
      }
    } else {
      for (int r2 = 0; r2 < m; ++r2) {
        if (lab(r2, cur.second) == t) {
          pred = {r2, cur.second};
          break;
        }
      }
    }
    cells.push_front(pred);
    cur = pred;
  }
  SwitchingChain chain{{cells.begin(), cells.end()}};
  return chain;
}

/// Toggles every cell of the chain. Applying the same chain twice restores
/// the matrix; a single application keeps every row sum and every column sum
/// except for moving one unit within the starting column.
inline void apply_switching_chain(BinaryMatrix& a,
                                  const SwitchingChain& chain) {
  for (const auto& [i, j] : chain.cells) a.toggle(i, j);
}

}  // namespace taxiray
