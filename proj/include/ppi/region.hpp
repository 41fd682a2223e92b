#pragma once

// Exact subsets of [0,1]^2 built from rectangles carrying diagonal bands.
//
// Inside a record's rectangle, with coordinates rescaled to [0,1]^2 as
// (x1', x2'), a point belongs to the region iff frac(x1' + x2') lies in the
// band set Y. Records with wrap == false test the raw sum x1' + x2' against Y
// instead, which allows Y to reach up to 2 (e.g. the triangle above the
// anti-diagonal is the single band [1, 2]).

#include "ppi/errors.hpp"
#include "ppi/grid.hpp"
#include "ppi/rational.hpp"
#include "ppi/structure.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace ppi {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool operator==(const RationalInterval&) const = default;
};

struct BandRecord {
  std::array<RationalInterval, 2> rect;
  std::vector<RationalInterval> bands;
  bool wrap = true;
};

class RegionSet {
 public:
  explicit RegionSet(std::vector<BandRecord> records);

  const std::vector<BandRecord>& records() const { return records_; }
  bool contains(const Rational& x1, const Rational& x2) const;
  Rational measure() const;

 private:
  std::vector<BandRecord> records_;
};

RegionSet build_uninformative_set(const Rational& p, std::vector<RationalInterval> bands);

// Rectangles A_{s1} x A_{s2} with |A_v| = P(s_i = v), each carrying a band of
// measure P(omega = 1 | s1, s2). Requires m = 2, n = 2, private private.
RegionSet build_associated_set(const ExactStructure& s);
RegionSet build_associated_set(const FiniteStructure& s);

// Exact area fraction of the region inside each of the R x R cells.
std::vector<Rational> rasterize_exact(const RegionSet& region, std::size_t resolution);
FuzzyGrid rasterize(const RegionSet& region, std::size_t resolution);

}  // namespace ppi
