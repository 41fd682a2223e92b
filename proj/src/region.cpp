#include "ppi/region.hpp"

#include <algorithm>

namespace ppi {

namespace {

void check_interval(const RationalInterval& iv, const Rational& lo, const Rational& hi, const char* what) {
  if (iv.lo > iv.hi || iv.lo < lo || iv.hi > hi) throw DomainError(std::string("invalid ") + what + " interval");
}

std::vector<RationalInterval> sorted_bands(std::vector<RationalInterval> bands) {
  std::sort(bands.begin(), bands.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < bands.size(); ++i) {
    if (bands[i].lo < bands[i - 1].hi) throw DomainError("band intervals overlap");
  }
  return bands;
}

// Intervals of the raw coordinate sum x1' + x2' covered by a record.
std::vector<RationalInterval> sum_windows(const BandRecord& r) {
  std::vector<RationalInterval> out;
  for (const auto& b : r.bands) {
    if (b.length() == 0) continue;
    out.push_back(b);
    if (r.wrap) out.push_back({b.lo + 1, b.hi + 1});
  }
  return out;
}

Rational ramp(const Rational& s) { return s > 0 ? Rational(s * s / 2) : Rational(0); }

// Area of {u in [p1,q1] x [p2,q2] : u1 + u2 <= t}.
Rational area_below(const Rational& t, const Rational& p1, const Rational& q1, const Rational& p2,
                    const Rational& q2) {
  return ramp(t - p1 - p2) - ramp(t - q1 - p2) - ramp(t - p1 - q2) + ramp(t - q1 - q2);
}

}  // namespace

RegionSet::RegionSet(std::vector<BandRecord> records) : records_(std::move(records)) {
  for (auto& r : records_) {
    for (const auto& side : r.rect) check_interval(side, Rational(0), Rational(1), "rectangle");
    const Rational top = r.wrap ? Rational(1) : Rational(2);
    for (const auto& b : r.bands) check_interval(b, Rational(0), top, "band");
    r.bands = sorted_bands(std::move(r.bands));
  }
  for (std::size_t i = 0; i < records_.size(); ++i) {
    for (std::size_t j = i + 1; j < records_.size(); ++j) {
      const auto& a = records_[i].rect;
      const auto& b = records_[j].rect;
      const bool overlap = std::max(a[0].lo, b[0].lo) < std::min(a[0].hi, b[0].hi) &&
                           std::max(a[1].lo, b[1].lo) < std::min(a[1].hi, b[1].hi);
      if (overlap) throw DomainError("region rectangles overlap");
    }
  }
}

bool RegionSet::contains(const Rational& x1, const Rational& x2) const {
  for (const auto& r : records_) {
    if (x1 < r.rect[0].lo || x1 > r.rect[0].hi || x2 < r.rect[1].lo || x2 > r.rect[1].hi) continue;
    if (r.rect[0].length() == 0 || r.rect[1].length() == 0) continue;
    const Rational u = (x1 - r.rect[0].lo) / r.rect[0].length() + (x2 - r.rect[1].lo) / r.rect[1].length();
    const Rational t = r.wrap ? frac(u) : u;
    for (const auto& b : r.bands) {
      if (t >= b.lo && t <= b.hi) return true;
    }
    return false;
  }
  return false;
}

Rational RegionSet::measure() const {
  Rational total = 0;
  for (const auto& r : records_) {
    const Rational box = r.rect[0].length() * r.rect[1].length();
    if (box == 0) continue;
    Rational frac_area = 0;
    for (const auto& w : sum_windows(r)) {
      frac_area += area_below(w.hi, 0, 1, 0, 1) - area_below(w.lo, 0, 1, 0, 1);
    }
    total += box * frac_area;
  }
  return total;
}

RegionSet build_uninformative_set(const Rational& p, std::vector<RationalInterval> bands) {
  if (p < 0 || p > 1) throw DomainError("prior must lie in [0,1]");
  Rational total = 0;
  for (const auto& b : bands) {
    check_interval(b, Rational(0), Rational(1), "band");
    total += b.length();
  }
  if (total != p) throw DomainError("band lengths sum to " + to_string(total) + ", expected " + to_string(p));
  BandRecord r{{RationalInterval{0, 1}, RationalInterval{0, 1}}, std::move(bands), true};
  return RegionSet({std::move(r)});
}

RegionSet build_associated_set(const ExactStructure& s) {
  if (s.states() != 2 || s.agents() != 2) throw DomainError("associated set needs two states and two agents");
  if (!is_private_private(to_double(s), 1e-9))
    throw PreconditionError("associated set requires private private signals");

  std::array<std::vector<RationalInterval>, 2> axis;
  for (std::size_t i = 0; i < 2; ++i) {
    Rational at = 0;
    for (const auto& w : s.signal_marginal(i)) {
      axis[i].push_back({at, at + w});
      at += w;
    }
  }
  std::vector<BandRecord> records;
  for (std::size_t v1 = 0; v1 < s.alphabets()[0]; ++v1) {
    for (std::size_t v2 = 0; v2 < s.alphabets()[1]; ++v2) {
      if (axis[0][v1].length() == 0 || axis[1][v2].length() == 0) continue;
      const std::array<std::size_t, 2> sig{v1, v2};
      const std::size_t j = s.profile_index(sig);
      const Rational joint = s.prob(0, j) + s.prob(1, j);
      const Rational q = joint > 0 ? Rational(s.prob(1, j) / joint) : Rational(0);
      BandRecord r{{axis[0][v1], axis[1][v2]}, {}, true};
      if (q > 0) r.bands.push_back({0, q});
      records.push_back(std::move(r));
    }
  }
  return RegionSet(std::move(records));
}

RegionSet build_associated_set(const FiniteStructure& s) { return build_associated_set(to_exact(s)); }

std::vector<Rational> rasterize_exact(const RegionSet& region, std::size_t resolution) {
  if (resolution == 0) throw DomainError("resolution must be positive");
  const std::size_t R = resolution;
  const Rational step = Rational(1) / Rational(static_cast<long>(R));
  const Rational cell_area = step * step;
  std::vector<Rational> out(R * R, Rational(0));

  for (const auto& r : region.records()) {
    const Rational L1 = r.rect[0].length(), L2 = r.rect[1].length();
    if (L1 == 0 || L2 == 0) continue;
    const auto windows = sum_windows(r);
    if (windows.empty()) continue;
    auto first = [&](const Rational& lo) { return static_cast<std::size_t>(floor(lo * R).convert_to<long>()); };
    const std::size_t i0 = first(r.rect[0].lo), j0 = first(r.rect[1].lo);
    for (std::size_t i = i0; i < R; ++i) {
      const Rational c_lo = step * static_cast<long>(i);
      if (c_lo >= r.rect[0].hi) break;
      const Rational a1 = std::max(c_lo, r.rect[0].lo), b1 = std::min(Rational(c_lo + step), r.rect[0].hi);
      if (a1 >= b1) continue;
      const Rational p1 = (a1 - r.rect[0].lo) / L1, q1 = (b1 - r.rect[0].lo) / L1;
      for (std::size_t j = j0; j < R; ++j) {
        const Rational d_lo = step * static_cast<long>(j);
        if (d_lo >= r.rect[1].hi) break;
        const Rational a2 = std::max(d_lo, r.rect[1].lo), b2 = std::min(Rational(d_lo + step), r.rect[1].hi);
        if (a2 >= b2) continue;
        const Rational p2 = (a2 - r.rect[1].lo) / L2, q2 = (b2 - r.rect[1].lo) / L2;
        Rational area = 0;
        for (const auto& w : windows) {
          if (w.hi <= p1 + p2 || w.lo >= q1 + q2) continue;
          area += area_below(w.hi, p1, q1, p2, q2) - area_below(w.lo, p1, q1, p2, q2);
        }
        if (area != 0) out[i * R + j] += area * L1 * L2 / cell_area;
      }
    }
  }
  return out;
}

FuzzyGrid rasterize(const RegionSet& region, std::size_t resolution) {
  const auto exact = rasterize_exact(region, resolution);
  std::vector<double> values;
  values.reserve(2 * exact.size());
  for (const auto& v : exact) {
    const double x = std::clamp(to_double(v), 0.0, 1.0);
    values.push_back(1.0 - x);
    values.push_back(x);
  }
  return FuzzyGrid(GridShape{2, resolution}, 2, std::move(values));
}

}  // namespace ppi
