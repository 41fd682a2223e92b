#include "ppi/uniqueness.hpp"

#include "ppi/lp.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ppi {

void validate_matrix(const BinaryMatrix& mat) {
  if (mat.empty() || mat.front().empty()) throw DomainError("matrix must be nonempty");
  for (const auto& row : mat) {
    if (row.size() != mat.front().size()) throw DomainError("matrix rows have different lengths");
    for (auto v : row) {
      if (v > 1) throw DomainError("matrix entries must be 0 or 1");
    }
  }
}

BinaryMatrix grid_matrix(const GridSet& g) {
  if (g.shape().n != 2) throw DomainError("expected a two-dimensional grid");
  const std::size_t R = g.shape().resolution;
  BinaryMatrix mat(R, std::vector<std::uint8_t>(R));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) mat[i][j] = g.cells()[i * R + j];
  return mat;
}

bool lorentz_uniqueness(const BinaryMatrix& mat) {
  validate_matrix(mat);
  const std::size_t rows = mat.size(), cols = mat.front().size();
  std::vector<std::size_t> r(rows, 0), c(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (mat[i][j]) {
        ++r[i];
        ++c[j];
      }
  std::sort(c.begin(), c.end(), std::greater<>());
  for (std::size_t j = 0; j < cols; ++j) {
    const auto want = static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [&](auto v) { return v > j; }));
    if (c[j] != want) return false;
  }
  return true;
}

bool lorentz_uniqueness_2d(const GridSet& g) { return lorentz_uniqueness(grid_matrix(g)); }

std::optional<std::array<std::size_t, 4>> find_switch(const BinaryMatrix& mat) {
  validate_matrix(mat);
  const std::size_t rows = mat.size(), cols = mat.front().size();
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = a + 1; b < rows; ++b) {
      std::optional<std::size_t> ab, ba;  // columns with (1,0) and (0,1)
      for (std::size_t j = 0; j < cols && !(ab && ba); ++j) {
        if (mat[a][j] && !mat[b][j] && !ab) ab = j;
        if (!mat[a][j] && mat[b][j] && !ba) ba = j;
      }
      if (ab && ba) return std::array<std::size_t, 4>{a, b, *ab, *ba};
    }
  }
  return std::nullopt;
}

bool switch_uniqueness_matrix(const BinaryMatrix& mat) { return !find_switch(mat).has_value(); }

std::optional<BinaryMatrix> marginal_mate(const BinaryMatrix& mat) {
  const auto sw = find_switch(mat);
  if (!sw) return std::nullopt;
  BinaryMatrix out = mat;
  const auto [a, b, c, d] = *sw;
  out[a][c] = 0;
  out[b][d] = 0;
  out[a][d] = 1;
  out[b][c] = 1;
  return out;
}

std::vector<BinaryMatrix> brute_force_marginal_mates(const BinaryMatrix& mat) {
  validate_matrix(mat);
  const std::size_t rows = mat.size(), cols = mat.front().size();
  if (rows * cols > 25) throw ResourceError("brute force enumeration limited to 25 cells");
  std::vector<std::size_t> r(rows, 0), c(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (mat[i][j]) {
        ++r[i];
        ++c[j];
      }

  std::vector<BinaryMatrix> out;
  BinaryMatrix cur(rows, std::vector<std::uint8_t>(cols, 0));
  std::vector<std::size_t> row_left = r, col_left = c;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == rows * cols) {
      out.push_back(cur);
      return;
    }
    const std::size_t i = cell / cols, j = cell % cols;
    const std::size_t cells_left_in_row = cols - j;
    // Put a one here.
    if (row_left[i] > 0 && col_left[j] > 0 && col_left[j] - 1 <= rows - i - 1) {
      cur[i][j] = 1;
      --row_left[i];
      --col_left[j];
      if (j + 1 < cols || row_left[i] == 0) fill(cell + 1);
      ++row_left[i];
      ++col_left[j];
      cur[i][j] = 0;
    }
    // Leave it zero, if the row can still be completed and the column can
    // still be filled by the remaining rows.
    if (row_left[i] < cells_left_in_row && col_left[j] <= rows - i - 1) {
      if (j + 1 < cols || row_left[i] == 0) fill(cell + 1);
    }
  };
  fill(0);
  return out;
}

bool verify_additive_witness(const GridSet& g, const AdditiveWitness& h, double epsilon, double tol) {
  const auto& shape = g.shape();
  if (h.size() != shape.n) return false;
  for (const auto& axis : h) {
    if (axis.size() != shape.resolution) return false;
    for (double v : axis) {
      if (v < -1 - tol || v > 1 + tol) return false;
    }
  }
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    const auto x = shape.coords(c);
    double total = 0;
    for (std::size_t i = 0; i < shape.n; ++i) total += h[i][x[i]];
    if (g.cells()[c] ? total < -tol : total > -epsilon + tol) return false;
  }
  return true;
}

std::optional<AdditiveWitness> additive_set_test(const GridSet& g, double epsilon) {
  if (!(epsilon > 0)) throw DomainError("additive margin must be positive");
  const auto& shape = g.shape();
  const std::size_t n = shape.n, R = shape.resolution;

  // y = h + 1 in [0, 2].
  LinearProgram<double> lp;
  lp.variables = n * R;
  for (std::size_t v = 0; v < lp.variables; ++v) lp.add({{v, 1.0}}, Relation::LessEqual, 2.0);
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    const auto x = shape.coords(c);
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({i * R + x[i], 1.0});
    if (g.cells()[c]) lp.add(std::move(terms), Relation::GreaterEqual, static_cast<double>(n));
    else lp.add(std::move(terms), Relation::LessEqual, static_cast<double>(n) - epsilon);
  }
  const auto sol = solve_lp(lp);
  if (sol.status == LpStatus::IterationLimit) throw ResourceError("additive LP hit its iteration limit");
  if (sol.status != LpStatus::Optimal) return std::nullopt;

  AdditiveWitness h(n, std::vector<double>(R));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < R; ++j) h[i][j] = std::clamp(sol.x[i * R + j] - 1.0, -1.0, 1.0);
  if (!verify_additive_witness(g, h, epsilon, 1e-7)) return std::nullopt;
  return h;
}

PartitionUniqueness partition_uniqueness_report(const GridPartition& g) {
  const auto& shape = g.shape();
  if (shape.n != 2) throw DomainError("partition uniqueness is implemented for two agents");
  const std::size_t R = shape.resolution, m = g.states();
  if (R > 32 || m > 4)
    throw ResourceError("partition uniqueness budget is R <= 32 and m <= 4, got R=" + std::to_string(R) +
                        " m=" + std::to_string(m));
  const std::size_t cells = R * R;
  auto var = [&](std::size_t cell, std::size_t k) { return cell * m + k; };

  LinearProgram<double> lp;
  lp.variables = cells * m;
  lp.objective.assign(lp.variables, 0.0);
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t k = 0; k < m; ++k) {
      terms.push_back({var(c, k), 1.0});
      if (k != g.labels()[c]) lp.objective[var(c, k)] = 1.0;
    }
    lp.add(std::move(terms), Relation::Equal, 1.0);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t axis = 0; axis < 2; ++axis) {
      for (std::size_t j = 0; j < R; ++j) {
        std::vector<std::pair<std::size_t, double>> terms;
        double count = 0;
        for (std::size_t t = 0; t < R; ++t) {
          const std::size_t c = axis == 0 ? j * R + t : t * R + j;
          terms.push_back({var(c, k), 1.0});
          if (g.labels()[c] == k) count += 1;
        }
        lp.add(std::move(terms), Relation::Equal, count);
      }
    }
  }
  const auto sol = solve_lp(lp);
  if (sol.status == LpStatus::IterationLimit) throw ResourceError("uniqueness LP hit its iteration limit");
  if (sol.status != LpStatus::Optimal) throw std::logic_error("uniqueness LP unexpectedly infeasible");

  PartitionUniqueness out;
  out.off_label_mass = std::max(0.0, sol.objective);
  out.unique = out.off_label_mass <= 1e-7;
  if (!out.unique) {
    std::vector<double> values(cells * m);
    for (std::size_t c = 0; c < cells; ++c) {
      double total = 0;
      for (std::size_t k = 0; k < m; ++k) total += values[var(c, k)] = std::max(0.0, sol.x[var(c, k)]);
      for (std::size_t k = 0; k < m; ++k) values[var(c, k)] /= total;
    }
    out.alternative = FuzzyGrid(shape, m, std::move(values));
  }
  return out;
}

bool partition_uniqueness_grid(const GridPartition& g) { return partition_uniqueness_report(g).unique; }

}  // namespace ppi
