#include "ppi/cli.hpp"

#include "ppi/disclosure.hpp"
#include "ppi/errors.hpp"
#include "ppi/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ppi {

namespace {

struct Globals {
  double tol = 1e-9;
  std::size_t resolution = 256;
  std::uint64_t seed = 0;
  std::string format = "json";
};

json read_json(const std::string& path, std::istream& in, const std::string& what) {
  try {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + what + " file '" + path + "'");
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw DomainError("malformed JSON in " + what + ": " + e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// A bare nested array is read as a square binary matrix.
GridPartition partition_from_input(const json& j) {
  if (!j.is_array()) return grid_partition_from_json(j);
  const BinaryMatrix m = matrix_from_json(j);
  if (m.size() != m.front().size()) throw DomainError("grid matrices must be square");
  std::vector<std::uint8_t> cells;
  for (const auto& row : m) cells.insert(cells.end(), row.begin(), row.end());
  return to_partition(GridSet(GridShape{2, m.size()}, std::move(cells)));
}

void csv_row(std::ostream& out, double a, double b) {
  out << std::setprecision(17) << a << ',' << b << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Private private information structures"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--resolution", g.resolution, "Grid resolution")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string in_path, mu1_path, mu2_path, method = "auto", ineq = "superadditivity", samples_out;
  double epsilon = 0;
  std::size_t samples = 0;
  bool want_certificate = false;

  auto* conj = app.add_subcommand("conjugate", "Conjugate of a belief distribution");
  conj->add_option("--in", in_path, "AtomicDist JSON");

  auto* pareto = app.add_subcommand("pareto-check", "Conjugacy test for two agents and a binary state");
  pareto->add_option("--mu1", mu1_path, "AtomicDist JSON for agent 1")->required();
  pareto->add_option("--mu2", mu2_path, "AtomicDist JSON for agent 2")->required();

  auto* uniq = app.add_subcommand("uniqueness", "Uniqueness tests for grid sets and partitions");
  uniq->add_option("--in", in_path, "Grid partition or binary matrix JSON");
  uniq->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "lorentz", "switch", "additive", "partition", "brute"}));
  uniq->add_option("--epsilon", epsilon, "Margin for the additive test (default 1/(4R))");

  auto* disc = app.add_subcommand("disclose", "Optimal private disclosure for a finite signal");
  disc->add_option("--in", in_path, "(omega, s_1) structure JSON");
  disc->add_option("--samples", samples, "Number of sampled (s1, s2star) pairs");
  disc->add_option("--samples-out", samples_out, "CSV file for the samples");

  auto* feas = app.add_subcommand("feasible", "Feasibility of a pair of belief distributions");
  feas->add_option("--mu1", mu1_path, "AtomicDist JSON for agent 1")->required();
  feas->add_option("--mu2", mu2_path, "AtomicDist JSON for agent 2")->required();
  feas->add_flag("--certificate", want_certificate, "Include a realizing structure");

  auto* welf = app.add_subcommand("welfare", "Welfare maximisation on the Pareto frontier");
  welf->add_option("--in", in_path, "Payoff JSON {u1, u2, prior}");

  auto* bounds = app.add_subcommand("bounds", "Information bounds for a private private structure");
  bounds->add_option("--in", in_path, "Structure JSON");
  bounds->add_option("--ineq", ineq)->check(CLI::IsMember({"superadditivity", "binary", "quadratic"}));

  auto* design = app.add_subcommand("designer", "Designer problem for a zero-sum game");
  design->add_option("--in", in_path, "Problem JSON");

  auto* rast = app.add_subcommand("rasterize", "Rasterize a region set");
  rast->add_option("--in", in_path, "RegionSet JSON");

  std::vector<std::string> argv_store{"ppi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    const bool csv = g.format == "csv";
    if (*conj) {
      const json j = read_json(in_path, in, "input");
      if (has_rational_strings(j)) {
        const auto c = conjugate(exact_atomic_dist_from_json(j));
        if (csv) write_cdf_csv(out, step_cdf(to_double(c)));
        else emit(out, to_json(c));
      } else {
        const auto c = conjugate(atomic_dist_from_json(j));
        if (csv) write_cdf_csv(out, step_cdf(c));
        else emit(out, to_json(c));
      }
    } else if (*pareto) {
      const auto mu1 = atomic_dist_from_json(read_json(mu1_path, in, "mu1"));
      const auto mu2 = atomic_dist_from_json(read_json(mu2_path, in, "mu2"));
      const bool ok = is_pareto_optimal_2x2(mu1, mu2, g.tol);
      emit(out, {{"pareto_optimal", ok}, {"distance", cdf_l1_distance(mu2, conjugate(mu1))}});
    } else if (*uniq) {
      const json j = read_json(in_path, in, "input");
      const GridPartition part = partition_from_input(j);
      if (method == "auto") method = part.states() <= 2 ? "lorentz" : "partition";
      json report;
      if (method == "partition") {
        const auto r = partition_uniqueness_report(part);
        report = {{"unique", r.unique}, {"method", method}, {"off_label_mass", r.off_label_mass}};
        report["witness"] = r.alternative ? to_json(*r.alternative) : json(nullptr);
      } else {
        if (part.states() > 2) throw DomainError("method '" + method + "' needs a binary grid");
        const GridSet set = state_set(part, 1);
        if (method == "additive") {
          const double eps = epsilon > 0 ? epsilon : 1.0 / (4.0 * static_cast<double>(set.shape().resolution));
          const auto h = additive_set_test(set, eps);
          report = {{"unique", h.has_value()}, {"method", method}, {"additive", h.has_value()}, {"epsilon", eps}};
          report["witness"] = h ? json(*h) : json(nullptr);
          // Failing the test at this margin leaves uniqueness undecided.
          if (!h) report["unique"] = nullptr;
        } else {
          const BinaryMatrix m = grid_matrix(set);
          bool unique = false;
          if (method == "lorentz") unique = lorentz_uniqueness(m);
          else if (method == "switch") unique = switch_uniqueness_matrix(m);
          else unique = brute_force_marginal_mates(m).size() == 1;
          report = {{"unique", unique}, {"method", method}};
          const auto mate = marginal_mate(m);
          report["witness"] = mate ? to_json(*mate) : json(nullptr);
        }
      }
      emit(out, report);
    } else if (*disc) {
      const json j = read_json(in_path, in, "input");
      std::vector<DisclosureSample> drawn;
      json report;
      if (has_rational_strings(j)) {
        const auto s = exact_structure_from_json(j);
        report = {{"structure", to_json(finite_disclosure(s))},
                  {"posterior", to_json(posterior_dist(finite_disclosure(s), 1))}};
        if (samples > 0) drawn = sample_disclosures(to_double(s), samples, g.seed);
      } else {
        const auto s = structure_from_json(j);
        const auto d = finite_disclosure(s);
        report = {{"structure", to_json(d)}, {"posterior", to_json(posterior_dist(d, 1))}};
        if (samples > 0) drawn = sample_disclosures(s, samples, g.seed);
      }
      auto write_samples = [&](std::ostream& os) {
        os << "s1,s2star\n";
        for (const auto& d : drawn) csv_row(os, static_cast<double>(d.s1), d.s2star);
      };
      if (!samples_out.empty()) {
        std::ofstream f(samples_out);
        if (!f) throw DomainError("cannot write samples file '" + samples_out + "'");
        write_samples(f);
      }
      if (csv) write_samples(out);
      else emit(out, report);
    } else if (*feas) {
      const auto mu1 = atomic_dist_from_json(read_json(mu1_path, in, "mu1"));
      const auto mu2 = atomic_dist_from_json(read_json(mu2_path, in, "mu2"));
      json report = {{"feasible", is_feasible_pair(mu1, mu2, g.tol)}};
      if (want_certificate) {
        const auto cert = feasibility_certificate(mu1, mu2, g.tol);
        report["certificate"] = cert ? to_json(*cert) : json(nullptr);
      }
      emit(out, report);
    } else if (*welf) {
      const json j = read_json(in_path, in, "input");
      const auto u1 = payoffs_from_json(require_field(j, "u1"), "u1");
      const auto u2 = payoffs_from_json(require_field(j, "u2"), "u2");
      const double prior = number_from_json(require_field(j, "prior"), "prior");
      json report = to_json(maximize_welfare(u1, u2, prior));
      report["baseline"] = reveal_to_one_welfare(u1, u2, prior);
      emit(out, report);
    } else if (*bounds) {
      const auto s = structure_from_json(read_json(in_path, in, "input"));
      InfoReport r;
      if (ineq == "binary") r = check_binary_strengthening(s);
      else if (ineq == "quadratic") r = check_quadratic_bound(s);
      else r = check_superadditivity(s);
      emit(out, to_json(r));
    } else if (*design) {
      const auto p = designer_problem_from_json(read_json(in_path, in, "input"));
      const auto sol = designer_optimum(p);
      json kernel = json::object();
      for (std::size_t w = 0; w < sol.kernel.size(); ++w) kernel[std::to_string(w)] = to_json(sol.kernel[w]);
      emit(out, {{"payoff", to_string(sol.payoff)},
                 {"baseline", to_string(independent_baseline(p))},
                 {"relaxed_bound", to_string(relaxed_bound(p))},
                 {"equilibrium", to_json(sol.equilibrium)},
                 {"kernel", kernel},
                 {"warning", "correlated equilibrium assumed unique; not verified"}});
    } else if (*rast) {
      const auto region = region_from_json(read_json(in_path, in, "input"));
      const auto exact = rasterize_exact(region, g.resolution);
      const std::size_t R = g.resolution;
      if (csv) {
        out << "i,j,value\n" << std::setprecision(17);
        for (std::size_t c = 0; c < exact.size(); ++c) out << c / R << ',' << c % R << ',' << to_double(exact[c]) << '\n';
      } else {
        json values = json::array(), fractions = json::array();
        for (std::size_t i = 0; i < R; ++i) {
          json row = json::array(), frow = json::array();
          for (std::size_t k = 0; k < R; ++k) {
            row.push_back(to_double(exact[i * R + k]));
            frow.push_back(to_string(exact[i * R + k]));
          }
          values.push_back(row);
          fractions.push_back(frow);
        }
        emit(out, {{"n", 2}, {"R", R}, {"m", 2}, {"values", values}, {"exact", fractions},
                   {"measure", to_string(region.measure())}});
      }
    }
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace ppi
