#include "ppi/infobounds.hpp"

#include "ppi/errors.hpp"

#include <cmath>
#include <numbers>

namespace ppi {

namespace {

void require_private_private(const FiniteStructure& s) {
  if (!is_private_private(s, 1e-9)) throw PreconditionError("bound requires private private signals");
}

double info_with(const SimplexDist<double>& mu, double (*h)(const std::vector<double>&)) {
  double inner = 0;
  for (const auto& a : mu.atoms()) inner += a.w * h(a.q);
  return std::max(0.0, h(mu.mean()) - inner);
}

}  // namespace

double entropy(const std::vector<double>& p) {
  double h = 0;
  for (double q : p) {
    if (q < -1e-12) throw DomainError("negative probability in entropy");
    if (q > 0) h -= q * std::log2(q);
  }
  return h;
}

double quadratic_entropy(const std::vector<double>& p) {
  double h = 0;
  for (double q : p) {
    if (q < -1e-12) throw DomainError("negative probability in quadratic entropy");
    h += q * (1 - q);
  }
  return h;
}

double mutual_information(const SimplexDist<double>& mu) { return info_with(mu, entropy); }
double mutual_information(const AtomicDist& mu) { return mutual_information(SimplexDist<double>::from_binary(mu)); }
double quadratic_information(const SimplexDist<double>& mu) { return info_with(mu, quadratic_entropy); }
double quadratic_information(const AtomicDist& mu) {
  return quadratic_information(SimplexDist<double>::from_binary(mu));
}

InfoReport check_superadditivity(const FiniteStructure& s) {
  require_private_private(s);
  InfoReport r{"superadditivity", "bits", {}, 0, 0, 0, {}, true};
  double sum = 0;
  for (std::size_t i = 0; i < s.agents(); ++i) {
    r.per_agent.push_back(mutual_information(posterior_simplex(s, i)));
    sum += r.per_agent.back();
  }
  r.joint = mutual_information(joint_posterior(s));
  r.bound = r.joint;
  r.slack = r.joint - sum;
  r.holds = r.slack >= -kSlackTolerance;
  return r;
}

InfoReport check_binary_strengthening(const FiniteStructure& s) {
  if (s.states() != 2) throw DomainError("binary bound needs exactly two states");
  require_private_private(s);
  InfoReport r{"binary", "bits", {}, 0, 0, 0, {}, true};
  double sum = 0, cross = 0;
  for (std::size_t i = 0; i < s.agents(); ++i) {
    const double info = mutual_information(posterior_simplex(s, i));
    for (double prev : r.per_agent) cross += prev * info;
    r.per_agent.push_back(info);
    sum += info;
  }
  r.joint = mutual_information(joint_posterior(s));
  r.bound = entropy(s.prior()) - std::numbers::ln2 / 8 * cross;
  r.slack = r.bound - sum;
  r.holds = r.slack >= -kSlackTolerance;
  return r;
}

InfoReport check_quadratic_bound(const FiniteStructure& s) {
  require_private_private(s);
  InfoReport r{"quadratic", "quadratic", {}, 0, 0, 0, {}, true};
  const auto prior = s.prior();
  // Variance of each posterior coordinate; Ibar is their sum over states.
  auto coordinate_variance = [&](const SimplexDist<double>& mu) {
    std::vector<double> v(prior.size(), 0.0);
    for (const auto& a : mu.atoms())
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += a.w * (a.q[k] - prior[k]) * (a.q[k] - prior[k]);
    return v;
  };
  std::vector<double> summed(prior.size(), 0.0);
  double sum = 0;
  for (std::size_t i = 0; i < s.agents(); ++i) {
    const auto mu = posterior_simplex(s, i);
    r.per_agent.push_back(quadratic_information(mu));
    sum += r.per_agent.back();
    const auto v = coordinate_variance(mu);
    for (std::size_t k = 0; k < v.size(); ++k) summed[k] += v[k];
  }
  const auto joint = joint_posterior(s);
  r.joint = quadratic_information(joint);
  r.bound = quadratic_entropy(prior);
  r.slack = r.bound - sum;
  const auto jv = coordinate_variance(joint);
  r.holds = r.slack >= -kSlackTolerance;
  for (std::size_t k = 0; k < jv.size(); ++k) {
    r.per_state_slack.push_back(jv[k] - summed[k]);
    if (r.per_state_slack.back() < -kSlackTolerance) r.holds = false;
  }
  return r;
}

}  // namespace ppi
