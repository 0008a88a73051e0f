#pragma once

// Bipartite flow network for completing a partially filled binary matrix to
// prescribed row and column sums. One source edge per row (capacity = row
// sum), one unit edge per cell, one sink edge per column (capacity = column
// sum). The marginals are realizable exactly when the max flow saturates
// every source edge.

#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "taxiray/discrete.hpp"

namespace taxiray {

class FlowNetwork {
 public:
  explicit FlowNetwork(SumVectors sums)
      : sums_(std::move(sums)),
        flow_src_(static_cast<std::size_t>(sums_.rows()), 0),
        flow_sink_(static_cast<std::size_t>(sums_.cols()), 0),
        flow_cell_(static_cast<std::size_t>(sums_.rows()) *
                       static_cast<std::size_t>(sums_.cols()),
                   0) {}

  int rows() const { return sums_.rows(); }
  int cols() const { return sums_.cols(); }
  const SumVectors& sums() const { return sums_; }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(rows()) + static_cast<std::size_t>(cols());
  }

  int flow_source(int i) const { return flow_src_[static_cast<std::size_t>(i)]; }
  int flow_sink(int j) const { return flow_sink_[static_cast<std::size_t>(j)]; }
  int flow_cell(int i, int j) const { return flow_cell_[cell(i, j)]; }

  /// Install the flow induced by an existing 0/1 matrix. Requires the
  /// matrix marginals not to exceed the prescribed sums.
  void seed(const BinaryMatrix& a) {
    if (a.rows() != rows() || a.cols() != cols()) {
      throw std::invalid_argument("seed matrix has mismatched dimensions");
    }
    for (int i = 0; i < rows(); ++i) {
      if (a.row_sums()[static_cast<std::size_t>(i)] >
          sums_.row_sums[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("seed matrix exceeds a row sum");
      }
    }
    for (int j = 0; j < cols(); ++j) {
      if (a.col_sums()[static_cast<std::size_t>(j)] >
          sums_.col_sums[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("seed matrix exceeds a column sum");
      }
    }
    for (int i = 0; i < rows(); ++i) {
      flow_src_[static_cast<std::size_t>(i)] =
          a.row_sums()[static_cast<std::size_t>(i)];
      for (int j = 0; j < cols(); ++j) flow_cell_[cell(i, j)] = a.at(i, j);
    }
    for (int j = 0; j < cols(); ++j) {
      flow_sink_[static_cast<std::size_t>(j)] =
          a.col_sums()[static_cast<std::size_t>(j)];
    }
  }

  long long flow_size() const {
    long long t = 0;
    for (int f : flow_src_) t += f;
    return t;
  }

  /// Flow conservation at every internal vertex.
  bool conserved() const {
    for (int i = 0; i < rows(); ++i) {
      int out = 0;
      for (int j = 0; j < cols(); ++j) out += flow_cell_[cell(i, j)];
      if (out != flow_src_[static_cast<std::size_t>(i)]) return false;
    }
    for (int j = 0; j < cols(); ++j) {
      int in = 0;
      for (int i = 0; i < rows(); ++i) in += flow_cell_[cell(i, j)];
      if (in != flow_sink_[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  }

  /// The 0/1 matrix carried by the unit cell edges.
  BinaryMatrix to_matrix() const {
    BinaryMatrix a(rows(), cols());
    for (int i = 0; i < rows(); ++i) {
      for (int j = 0; j < cols(); ++j) {
        if (flow_cell_[cell(i, j)]) a.set(i, j, 1);
      }
    }
    return a;
  }

  // Internals used by max_flow.
  void push_source(int i, int d) {
    flow_src_[static_cast<std::size_t>(i)] += d;
  }
  void push_sink(int j, int d) {
    flow_sink_[static_cast<std::size_t>(j)] += d;
  }
  void push_cell(int i, int j, int d) { flow_cell_[cell(i, j)] += d; }

 private:
  std::size_t cell(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(j);
  }

  SumVectors sums_;
  std::vector<int> flow_src_;
  std::vector<int> flow_sink_;
  std::vector<int> flow_cell_;
};

inline FlowNetwork build_network(const SumVectors& sums) {
  return FlowNetwork(sums);
}

struct MaxFlowRun {
  int augmentations = 0;
  std::vector<int> path_lengths;  // edges per augmenting path
  long long flow_size = 0;
};

/// Shortest-augmenting-path max flow (breadth-first search from the source,
/// deterministic ascending adjacency order). Every augmenting path has unit
/// bottleneck because each cell edge has capacity one, so the flow grows by
/// exactly one per augmentation. The optional callback fires after each
/// augmentation.
inline MaxFlowRun max_flow(FlowNetwork& net,
                           const std::function<void(int)>& on_augment = {}) {
  const int m = net.rows();
  const int n = net.cols();
  // Vertex ids: 0 = source, 1..m = rows, m+1..m+n = columns, m+n+1 = sink.
  const int source = 0;
  const int sink = m + n + 1;
  auto row_id = [](int i) { return 1 + i; };
  auto col_id = [m](int j) { return 1 + m + j; };

  MaxFlowRun run;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(sink) + 1, -1);
    parent[source] = source;
    std::queue<int> q;
    q.push(source);
    bool reached = false;
    while (!q.empty() && !reached) {
      int u = q.front();
      q.pop();
      if (u == source) {
        for (int i = 0; i < m && !reached; ++i) {
          if (parent[static_cast<std::size_t>(row_id(i))] < 0 &&
              net.flow_source(i) <
                  net.sums().row_sums[static_cast<std::size_t>(i)]) {
            parent[static_cast<std::size_t>(row_id(i))] = source;
            q.push(row_id(i));
          }
        }
      } else if (u >= 1 && u <= m) {
        int i = u - 1;
        for (int j = 0; j < n && !reached; ++j) {
          if (parent[static_cast<std::size_t>(col_id(j))] < 0 &&
              net.flow_cell(i, j) < 1) {
            parent[static_cast<std::size_t>(col_id(j))] = u;
            q.push(col_id(j));
          }
        }
      } else if (u != sink) {
        int j = u - 1 - m;
        if (net.flow_sink(j) <
            net.sums().col_sums[static_cast<std::size_t>(j)]) {
          parent[static_cast<std::size_t>(sink)] = u;
          reached = true;
          break;
        }
        for (int i = 0; i < m && !reached; ++i) {
          if (parent[static_cast<std::size_t>(row_id(i))] < 0 &&
              net.flow_cell(i, j) > 0) {
            parent[static_cast<std::size_t>(row_id(i))] = u;
            q.push(row_id(i));
          }
        }
      }
    }
    if (!reached) break;

    // Walk back from the sink, applying the unit augmentation.
    int length = 0;
    int v = sink;
    while (v != source) {
      int u = parent[static_cast<std::size_t>(v)];
      if (v == sink) {
        net.push_sink(u - 1 - m, 1);
      } else if (v >= 1 && v <= m) {
        if (u == source) {
          net.push_source(v - 1, 1);
        } else {
          net.push_cell(v - 1, u - 1 - m, -1);  // backward cell edge
        }
      } else {
        net.push_cell(u - 1, v - 1 - m, 1);
      }
      ++length;
      v = u;
    }
    ++run.augmentations;
    run.path_lengths.push_back(length);
    if (on_augment) on_augment(length);
  }
  run.flow_size = net.flow_size();
  return run;
}

}  // namespace taxiray
