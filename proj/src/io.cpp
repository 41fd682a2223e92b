#include "ppi/io.hpp"

#include "ppi/errors.hpp"

#include <charconv>
#include <cmath>
#include <functional>

namespace ppi {

const json& require_field(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) throw DomainError("missing field '" + field + "'");
  return j.at(field);
}

double number_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return to_double(parse_rational(j.get<std::string>()));
    } catch (const DomainError&) {
    }
  }
  throw DomainError("field '" + field + "' must be a number");
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    // Shortest round-trip decimal, so 0.1 reads as 1/10.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DomainError&) {
    }
  }
  throw DomainError("field '" + field + "' must be a number or rational string");
}

bool has_rational_strings(const json& j) {
  if (j.is_string()) return true;
  if (j.is_array() || j.is_object()) {
    for (const auto& v : j) {
      if (has_rational_strings(v)) return true;
    }
  }
  return false;
}

namespace {

template <class T, class Read>
std::vector<Atom<T>> read_atoms(const json& j, Read read) {
  const auto& atoms = require_field(j, "atoms");
  if (!atoms.is_array() || atoms.empty()) throw DomainError("field 'atoms' must be a nonempty array");
  std::vector<Atom<T>> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    const auto& a = atoms[i];
    if (a.is_array() && a.size() == 2) {
      out.push_back({read(a[0], where + ".x"), read(a[1], where + ".w")});
    } else if (a.is_object()) {
      out.push_back({read(require_field(a, "x"), where + ".x"), read(require_field(a, "w"), where + ".w")});
    } else {
      throw DomainError("field '" + where + "' must be {\"x\":..,\"w\":..}");
    }
  }
  return out;
}

template <class T, class Read>
std::vector<std::vector<T>> read_matrix(const json& j, const std::string& field, Read read) {
  if (!j.is_array() || j.empty()) throw DomainError("field '" + field + "' must be a nonempty array of rows");
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw DomainError("field '" + where + "' must be an array");
    std::vector<T> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(read(j[i][k], where + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T, class Read>
BasicFiniteStructure<T> read_structure(const json& j, Read read) {
  const auto& m = require_field(j, "m");
  const auto& alph = require_field(j, "alphabets");
  if (!m.is_number_unsigned() || m.get<std::size_t>() == 0) throw DomainError("field 'm' must be a positive integer");
  if (!alph.is_array() || alph.empty()) throw DomainError("field 'alphabets' must be a nonempty array");
  std::vector<std::size_t> alphabets;
  for (const auto& a : alph) {
    if (!a.is_number_unsigned() || a.get<std::size_t>() == 0)
      throw DomainError("field 'alphabets' must hold positive integers");
    alphabets.push_back(a.get<std::size_t>());
  }
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != alphabets.size()))
    throw DomainError("field 'n' disagrees with 'alphabets'");
  const std::size_t states = m.get<std::size_t>();
  std::size_t profiles = 1;
  for (auto a : alphabets) profiles *= a;
  std::vector<T> pmf(states * profiles, T(0));
  const auto& entries = require_field(j, "pmf");
  if (!entries.is_array()) throw DomainError("field 'pmf' must be an array");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "pmf[" + std::to_string(e) + "]";
    const auto& entry = entries[e];
    const auto& st = require_field(entry, "state");
    const auto& sig = require_field(entry, "signals");
    if (!st.is_number_unsigned() || st.get<std::size_t>() >= states)
      throw DomainError("field '" + where + ".state' out of range");
    if (!sig.is_array() || sig.size() != alphabets.size())
      throw DomainError("field '" + where + ".signals' has the wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < alphabets.size(); ++i) {
      if (!sig[i].is_number_unsigned() || sig[i].get<std::size_t>() >= alphabets[i])
        throw DomainError("field '" + where + ".signals' out of range");
      idx = idx * alphabets[i] + sig[i].get<std::size_t>();
    }
    pmf[st.get<std::size_t>() * profiles + idx] += read(require_field(entry, "p"), where + ".p");
  }
  return BasicFiniteStructure<T>(states, std::move(alphabets), std::move(pmf));
}

template <class T, class Write>
json write_structure(const BasicFiniteStructure<T>& s, Write write) {
  json pmf = json::array();
  for (std::size_t k = 0; k < s.states(); ++k) {
    for (std::size_t j = 0; j < s.profiles(); ++j) {
      if (s.prob(k, j) == T(0)) continue;
      pmf.push_back({{"state", k}, {"signals", s.profile_signals(j)}, {"p", write(s.prob(k, j))}});
    }
  }
  return {{"m", s.states()}, {"n", s.agents()}, {"alphabets", s.alphabets()}, {"pmf", pmf}};
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

json to_json(const AtomicDist& d) {
  json atoms = json::array();
  for (const auto& a : d.atoms()) atoms.push_back({{"x", a.x}, {"w", a.w}});
  return {{"atoms", atoms}};
}

json to_json(const ExactAtomicDist& d) {
  json atoms = json::array();
  for (const auto& a : d.atoms()) atoms.push_back({{"x", to_string(a.x)}, {"w", to_string(a.w)}});
  return {{"atoms", atoms}};
}

AtomicDist atomic_dist_from_json(const json& j) { return AtomicDist(read_atoms<double>(j, number_from_json)); }

ExactAtomicDist exact_atomic_dist_from_json(const json& j) {
  return ExactAtomicDist(read_atoms<Rational>(j, rational_from_json));
}

json to_json(const FiniteStructure& s) {
  return write_structure(s, [](double p) { return json(p); });
}
json to_json(const ExactStructure& s) { return write_structure(s, rational_json); }

FiniteStructure structure_from_json(const json& j) { return read_structure<double>(j, number_from_json); }
ExactStructure exact_structure_from_json(const json& j) { return read_structure<Rational>(j, rational_from_json); }

json to_json(const GridPartition& g) {
  const auto& shape = g.shape();
  const std::size_t R = shape.resolution;
  json cells = json::array();
  if (shape.n == 2) {
    for (std::size_t i = 0; i < R; ++i)
      cells.push_back(std::vector<std::size_t>(g.labels().begin() + static_cast<std::ptrdiff_t>(i * R),
                                               g.labels().begin() + static_cast<std::ptrdiff_t>((i + 1) * R)));
  } else {
    for (std::size_t i = 0; i < R; ++i) {
      json plane = json::array();
      for (std::size_t k = 0; k < R; ++k) {
        const auto start = g.labels().begin() + static_cast<std::ptrdiff_t>((i * R + k) * R);
        plane.push_back(std::vector<std::size_t>(start, start + static_cast<std::ptrdiff_t>(R)));
      }
      cells.push_back(plane);
    }
  }
  return {{"n", shape.n}, {"R", R}, {"m", g.states()}, {"cells", cells}};
}

GridPartition grid_partition_from_json(const json& j) {
  const auto& cells = require_field(j, "cells");
  std::size_t n = 2;
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned()) throw DomainError("field 'n' must be 2 or 3");
    n = j["n"].get<std::size_t>();
  }
  if (n != 2 && n != 3) throw DomainError("field 'n' must be 2 or 3");
  if (!cells.is_array() || cells.empty()) throw DomainError("field 'cells' must be a nonempty array");
  const std::size_t R = cells.size();
  if (j.contains("R") && (!j["R"].is_number_unsigned() || j["R"].get<std::size_t>() != R))
    throw DomainError("field 'R' disagrees with 'cells'");
  std::vector<std::size_t> labels;
  std::function<void(const json&, std::size_t, const std::string&)> walk = [&](const json& node, std::size_t depth,
                                                                                const std::string& where) {
    if (depth == n) {
      if (!node.is_number_unsigned()) throw DomainError("field '" + where + "' must be a nonnegative integer label");
      labels.push_back(node.get<std::size_t>());
      return;
    }
    if (!node.is_array() || node.size() != R) throw DomainError("field '" + where + "' must have " + std::to_string(R) + " entries");
    for (std::size_t i = 0; i < R; ++i) walk(node[i], depth + 1, where + "[" + std::to_string(i) + "]");
  };
  walk(cells, 0, "cells");
  std::size_t states = 0;
  if (j.contains("m")) {
    if (!j["m"].is_number_unsigned()) throw DomainError("field 'm' must be a positive integer");
    states = j["m"].get<std::size_t>();
  }
  return GridPartition(GridShape{n, R}, std::move(labels), states);
}

json to_json(const FuzzyGrid& g) {
  const auto& shape = g.shape();
  const std::size_t R = shape.resolution;
  json cells = json::array();
  for (std::size_t c = 0; c < shape.cells(); ++c) {
    std::vector<double> v(g.states());
    for (std::size_t k = 0; k < g.states(); ++k) v[k] = g.value(c, k);
    cells.push_back(v);
  }
  return {{"n", shape.n}, {"R", R}, {"m", g.states()}, {"values", cells}};
}

json to_json(const BinaryMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(std::vector<int>(row.begin(), row.end()));
  return out;
}

BinaryMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? require_field(j, "cells") : j;
  if (!rows.is_array() || rows.empty()) throw DomainError("matrix must be a nonempty array of rows");
  BinaryMatrix out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw DomainError("field 'cells[" + std::to_string(i) + "]' must be an array");
    std::vector<std::uint8_t> row;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const auto& v = rows[i][k];
      if (!v.is_number_unsigned() || v.get<unsigned>() > 1)
        throw DomainError("field 'cells[" + std::to_string(i) + "][" + std::to_string(k) + "]' must be 0 or 1");
      row.push_back(static_cast<std::uint8_t>(v.get<unsigned>()));
    }
    out.push_back(std::move(row));
  }
  validate_matrix(out);
  return out;
}

json to_json(const RegionSet& r) {
  json records = json::array();
  for (const auto& rec : r.records()) {
    json rect = json::array();
    for (const auto& side : rec.rect) rect.push_back({to_string(side.lo), to_string(side.hi)});
    json bands = json::array();
    for (const auto& b : rec.bands) bands.push_back({to_string(b.lo), to_string(b.hi)});
    records.push_back({{"rect", rect}, {"bands", bands}, {"wrap", rec.wrap}});
  }
  return {{"records", records}};
}

RegionSet region_from_json(const json& j) {
  const auto& records = require_field(j, "records");
  if (!records.is_array()) throw DomainError("field 'records' must be an array");
  auto interval = [](const json& iv, const std::string& where) {
    if (!iv.is_array() || iv.size() != 2) throw DomainError("field '" + where + "' must be a [lo, hi] pair");
    return RationalInterval{rational_from_json(iv[0], where + "[0]"), rational_from_json(iv[1], where + "[1]")};
  };
  std::vector<BandRecord> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string where = "records[" + std::to_string(i) + "]";
    const auto& rec = records[i];
    const auto& rect = require_field(rec, "rect");
    if (!rect.is_array() || rect.size() != 2) throw DomainError("field '" + where + ".rect' must hold two intervals");
    BandRecord b{{interval(rect[0], where + ".rect[0]"), interval(rect[1], where + ".rect[1]")}, {}, true};
    const auto& bands = require_field(rec, "bands");
    if (!bands.is_array()) throw DomainError("field '" + where + ".bands' must be an array");
    for (std::size_t k = 0; k < bands.size(); ++k)
      b.bands.push_back(interval(bands[k], where + ".bands[" + std::to_string(k) + "]"));
    if (rec.contains("wrap")) {
      if (!rec["wrap"].is_boolean()) throw DomainError("field '" + where + ".wrap' must be a boolean");
      b.wrap = rec["wrap"].get<bool>();
    }
    out.push_back(std::move(b));
  }
  return RegionSet(std::move(out));
}

json to_json(const InfoReport& r) {
  json out = {{"inequality", r.inequality}, {"units", r.units}, {"per_agent", r.per_agent},
              {"joint", r.joint},           {"bound", r.bound}, {"slack", r.slack},
              {"holds", r.holds}};
  if (!r.per_state_slack.empty()) out["per_state_slack"] = r.per_state_slack;
  return out;
}

PayoffTable payoffs_from_json(const json& j, const std::string& field) {
  auto table = read_matrix<double>(j, field, number_from_json);
  validate_payoffs(table);
  return table;
}

json to_json(const WelfareResult& r) {
  return {{"alpha", r.alpha}, {"beta", r.beta},          {"welfare", r.welfare},
          {"mu1", to_json(r.mu1)}, {"mu2", to_json(r.mu2)}, {"two_valued_agent", r.two_valued_agent}};
}

DesignerProblem designer_problem_from_json(const json& j) {
  DesignerProblem p;
  p.u = read_matrix<Rational>(require_field(j, "u"), "u", rational_from_json);
  const auto& prior = require_field(j, "prior");
  if (!prior.is_array() || prior.empty()) throw DomainError("field 'prior' must be a nonempty array");
  for (std::size_t w = 0; w < prior.size(); ++w)
    p.prior.push_back(rational_from_json(prior[w], "prior[" + std::to_string(w) + "]"));
  const auto& ud = require_field(j, "u_d");
  for (std::size_t w = 0; w < p.prior.size(); ++w) {
    const std::string key = std::to_string(w);
    const json* table = nullptr;
    if (ud.is_object() && ud.contains(key)) table = &ud[key];
    else if (ud.is_array() && w < ud.size()) table = &ud[w];
    if (!table) throw DomainError("field 'u_d." + key + "' is missing");
    p.u_d.push_back(read_matrix<Rational>(*table, "u_d." + key, rational_from_json));
  }
  if (j.contains("equilibrium"))
    p.equilibrium = read_matrix<Rational>(j["equilibrium"], "equilibrium", rational_from_json);
  validate(p);
  return p;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    out.push_back(r);
  }
  return out;
}

}  // namespace ppi
