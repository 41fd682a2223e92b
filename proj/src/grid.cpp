#include "ppi/grid.hpp"

#include <cmath>
#include <string>

namespace ppi {

void GridShape::validate() const {
  if (n < 2 || n > 3) throw DomainError("grid dimension must be 2 or 3, got " + std::to_string(n));
  if (resolution == 0) throw DomainError("grid resolution must be positive");
}

GridSet::GridSet(GridShape shape, std::vector<std::uint8_t> cells) : shape_(shape), cells_(std::move(cells)) {
  shape_.validate();
  if (cells_.size() != shape_.cells()) throw DomainError("grid set has wrong number of cells");
  for (auto& c : cells_) {
    if (c > 1) throw DomainError("grid set cells must be 0 or 1");
  }
}

GridPartition::GridPartition(GridShape shape, std::vector<std::size_t> labels, std::size_t states)
    : shape_(shape), states_(states), labels_(std::move(labels)) {
  shape_.validate();
  if (labels_.size() != shape_.cells()) throw DomainError("grid partition has wrong number of cells");
  std::size_t top = 0;
  for (auto l : labels_) top = std::max(top, l);
  if (states_ == 0) states_ = top + 1;
  if (top >= states_)
    throw DomainError("cell label " + std::to_string(top) + " out of range for " + std::to_string(states_) + " states");
}

FuzzyGrid::FuzzyGrid(GridShape shape, std::size_t states, std::vector<double> values)
    : shape_(shape), states_(states), values_(std::move(values)) {
  shape_.validate();
  if (states_ == 0) throw DomainError("fuzzy grid needs at least one state");
  if (values_.size() != shape_.cells() * states_) throw DomainError("fuzzy grid has wrong number of values");
  for (std::size_t c = 0; c < shape_.cells(); ++c) {
    double total = 0;
    for (std::size_t k = 0; k < states_; ++k) {
      const double v = values_[c * states_ + k];
      if (!(v >= -1e-9)) throw DomainError("fuzzy grid value is negative");
      total += v;
    }
    if (std::fabs(total - 1) > 1e-9) throw DomainError("fuzzy grid cell does not sum to one");
  }
}

GridPartition to_partition(const GridSet& set) {
  std::vector<std::size_t> labels(set.cells().begin(), set.cells().end());
  return GridPartition(set.shape(), std::move(labels), 2);
}

GridSet state_set(const GridPartition& partition, std::size_t state) {
  std::vector<std::uint8_t> cells(partition.labels().size());
  for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = partition.labels()[c] == state ? 1 : 0;
  return GridSet(partition.shape(), std::move(cells));
}

namespace {

template <class CellValue>
std::vector<double> slice_average(const GridShape& shape, std::size_t axis, CellValue value) {
  if (axis >= shape.n) throw DomainError("axis out of range");
  std::vector<double> out(shape.resolution, 0.0);
  for (std::size_t c = 0; c < shape.cells(); ++c) out[shape.coords(c)[axis]] += value(c);
  const double slice = static_cast<double>(shape.cells() / shape.resolution);
  for (auto& v : out) v /= slice;
  return out;
}

}  // namespace

std::vector<std::size_t> projection_counts(const GridSet& set, std::size_t axis) {
  const auto& shape = set.shape();
  if (axis >= shape.n) throw DomainError("axis out of range");
  std::vector<std::size_t> out(shape.resolution, 0);
  for (std::size_t c = 0; c < shape.cells(); ++c)
    if (set.cells()[c]) ++out[shape.coords(c)[axis]];
  return out;
}

std::vector<double> grid_projections(const GridSet& set, std::size_t axis) {
  return slice_average(set.shape(), axis, [&](std::size_t c) { return set.cells()[c] ? 1.0 : 0.0; });
}

std::vector<double> grid_projections(const GridPartition& partition, std::size_t axis, std::size_t state) {
  if (state >= partition.states()) throw DomainError("state out of range");
  return slice_average(partition.shape(), axis,
                       [&](std::size_t c) { return partition.labels()[c] == state ? 1.0 : 0.0; });
}

std::vector<double> grid_projections(const FuzzyGrid& grid, std::size_t axis, std::size_t state) {
  if (state >= grid.states()) throw DomainError("state out of range");
  return slice_average(grid.shape(), axis, [&](std::size_t c) { return grid.value(c, state); });
}

FiniteStructure structure_from_fuzzy(const FuzzyGrid& g) {
  const std::size_t cells = g.shape().cells();
  const double mass = 1.0 / static_cast<double>(cells);
  std::vector<double> pmf(g.states() * cells);
  for (std::size_t c = 0; c < cells; ++c)
    for (std::size_t k = 0; k < g.states(); ++k) pmf[k * cells + c] = std::max(0.0, g.value(c, k)) * mass;
  return FiniteStructure(g.states(), std::vector<std::size_t>(g.shape().n, g.shape().resolution), std::move(pmf));
}

SecretShares split_secret(double t, double u) {
  if (!(t >= 0 && t < 1)) throw DomainError("secret must lie in [0,1)");
  if (!(u >= 0 && u < 1)) throw DomainError("share must lie in [0,1)");
  return {u, frac(u + t)};
}

double reconstruct_secret(const SecretShares& shares) { return frac(shares.r2 - shares.r1); }

}  // namespace ppi
