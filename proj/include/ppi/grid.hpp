#pragma once

// Resolution-R discretisations of subsets and partitions of [0,1]^n.
//
// Cells are stored row-major with axis 0 slowest, so for n = 2 the cell
// (i, j) covers [i/R, (i+1)/R] x [j/R, (j+1)/R] and sits at index i*R + j.
// Axis i is agent i's signal.

#include "ppi/errors.hpp"
#include "ppi/structure.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ppi {

struct GridShape {
  std::size_t n = 2;           // dimension
  std::size_t resolution = 1;  // cells per axis

  std::size_t cells() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= resolution;
    return c;
  }
  std::size_t index(const std::vector<std::size_t>& coords) const {
    std::size_t idx = 0;
    for (auto c : coords) idx = idx * resolution + c;
    return idx;
  }
  std::vector<std::size_t> coords(std::size_t idx) const {
    std::vector<std::size_t> c(n);
    for (std::size_t i = n; i-- > 0;) {
      c[i] = idx % resolution;
      idx /= resolution;
    }
    return c;
  }
  void validate() const;
};

class GridSet {
 public:
  GridSet(GridShape shape, std::vector<std::uint8_t> cells);

  const GridShape& shape() const { return shape_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  bool at(const std::vector<std::size_t>& coords) const { return cells_[shape_.index(coords)] != 0; }

 private:
  GridShape shape_;
  std::vector<std::uint8_t> cells_;
};

class GridPartition {
 public:
  // states == 0 means "one more than the largest label".
  GridPartition(GridShape shape, std::vector<std::size_t> labels, std::size_t states = 0);

  const GridShape& shape() const { return shape_; }
  std::size_t states() const { return states_; }
  const std::vector<std::size_t>& labels() const { return labels_; }

 private:
  GridShape shape_;
  std::size_t states_;
  std::vector<std::size_t> labels_;
};

class FuzzyGrid {
 public:
  // values holds one probability vector of length `states` per cell.
  FuzzyGrid(GridShape shape, std::size_t states, std::vector<double> values);

  const GridShape& shape() const { return shape_; }
  std::size_t states() const { return states_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t cell, std::size_t state) const { return values_[cell * states_ + state]; }

 private:
  GridShape shape_;
  std::size_t states_;
  std::vector<double> values_;
};

GridPartition to_partition(const GridSet& set);
GridSet state_set(const GridPartition& partition, std::size_t state);

// Exact integer projection: number of member cells in each slice along axis.
std::vector<std::size_t> projection_counts(const GridSet& set, std::size_t axis);

// Average of the indicator (or fuzzy value) over each slice orthogonal to
// `axis`. In the associated structure this is the posterior probability of
// `state` for agent `axis` when the signal falls in that slice.
std::vector<double> grid_projections(const GridSet& set, std::size_t axis);
std::vector<double> grid_projections(const GridPartition& partition, std::size_t axis, std::size_t state);
std::vector<double> grid_projections(const FuzzyGrid& grid, std::size_t axis, std::size_t state = 1);

// Associated structure: signals uniform on the R^n cells, state determined by
// the cell label. Private private and perfect by construction.
template <class T = double>
BasicFiniteStructure<T> structure_from_grid(const GridPartition& g) {
  const auto& shape = g.shape();
  const std::size_t cells = shape.cells();
  const T mass = T(1) / T(static_cast<long>(cells));
  std::vector<T> pmf(g.states() * cells, T(0));
  for (std::size_t c = 0; c < cells; ++c) pmf[g.labels()[c] * cells + c] = mass;
  return BasicFiniteStructure<T>(g.states(), std::vector<std::size_t>(shape.n, shape.resolution), std::move(pmf));
}

// Same construction with the state drawn from each cell's fuzzy vector.
FiniteStructure structure_from_fuzzy(const FuzzyGrid& g);

}  // namespace ppi
