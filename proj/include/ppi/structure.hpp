#pragma once

// Finite information structures: a joint pmf over (state, s_1, ..., s_n).

#include "ppi/belief.hpp"
#include "ppi/errors.hpp"
#include "ppi/rational.hpp"

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ppi {

template <class T>
class BasicFiniteStructure {
 public:
  // pmf is dense and indexed by (state, s_1, ..., s_n) in row-major order,
  // state slowest. Entries must be nonnegative and sum to one, and every
  // state must have positive prior probability.
  BasicFiniteStructure(std::size_t states, std::vector<std::size_t> alphabets, std::vector<T> pmf);

  std::size_t states() const { return states_; }
  std::size_t agents() const { return alphabets_.size(); }
  const std::vector<std::size_t>& alphabets() const { return alphabets_; }
  const std::vector<T>& pmf() const { return pmf_; }

  // Number of signal profiles (product of the alphabet sizes).
  std::size_t profiles() const { return profiles_; }

  std::size_t profile_index(std::span<const std::size_t> signals) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < alphabets_.size(); ++i) idx = idx * alphabets_[i] + signals[i];
    return idx;
  }

  std::vector<std::size_t> profile_signals(std::size_t profile) const {
    std::vector<std::size_t> s(alphabets_.size());
    for (std::size_t i = alphabets_.size(); i-- > 0;) {
      s[i] = profile % alphabets_[i];
      profile /= alphabets_[i];
    }
    return s;
  }

  const T& prob(std::size_t state, std::size_t profile) const { return pmf_[state * profiles_ + profile]; }

  std::vector<T> prior() const {
    std::vector<T> p(states_, T(0));
    for (std::size_t k = 0; k < states_; ++k)
      for (std::size_t j = 0; j < profiles_; ++j) p[k] += prob(k, j);
    return p;
  }

  // Joint distribution of the signal profile with the state summed out.
  std::vector<T> profile_marginal() const {
    std::vector<T> out(profiles_, T(0));
    for (std::size_t k = 0; k < states_; ++k)
      for (std::size_t j = 0; j < profiles_; ++j) out[j] += prob(k, j);
    return out;
  }

  std::vector<T> signal_marginal(std::size_t agent) const;

  // joint[state][value] = P(state, s_agent = value)
  std::vector<std::vector<T>> state_signal_joint(std::size_t agent) const;

 private:
  std::size_t states_;
  std::vector<std::size_t> alphabets_;
  std::size_t profiles_;
  std::vector<T> pmf_;
};

using FiniteStructure = BasicFiniteStructure<double>;
using ExactStructure = BasicFiniteStructure<Rational>;

template <class T>
BasicFiniteStructure<T>::BasicFiniteStructure(std::size_t states, std::vector<std::size_t> alphabets, std::vector<T> pmf)
    : states_(states), alphabets_(std::move(alphabets)), pmf_(std::move(pmf)) {
  if (states_ == 0) throw DomainError("structure needs at least one state");
  if (alphabets_.empty()) throw DomainError("structure needs at least one agent");
  profiles_ = 1;
  for (auto a : alphabets_) {
    if (a == 0) throw DomainError("signal alphabets must be nonempty");
    profiles_ *= a;
  }
  if (pmf_.size() != states_ * profiles_)
    throw DomainError("pmf has " + std::to_string(pmf_.size()) + " entries, expected " +
                      std::to_string(states_ * profiles_));
  T total(0);
  for (auto& p : pmf_) {
    if (p < T(0)) {
      if (p < -ScalarTraits<T>::drop_eps()) throw DomainError("negative probability in pmf");
      p = T(0);
    }
    total += p;
  }
  if (abs_value(T(total - T(1))) > ScalarTraits<T>::sum_tol())
    throw DomainError("pmf sums to " + std::to_string(to_double(total)) + ", not 1");
  const auto p = prior();
  for (std::size_t k = 0; k < states_; ++k)
    if (!(p[k] > T(0))) throw DomainError("state " + std::to_string(k) + " has zero prior probability");
}

template <class T>
std::vector<T> BasicFiniteStructure<T>::signal_marginal(std::size_t agent) const {
  if (agent >= agents()) throw DomainError("agent index out of range");
  std::vector<T> out(alphabets_[agent], T(0));
  for (std::size_t j = 0; j < profiles_; ++j) {
    const auto s = profile_signals(j);
    for (std::size_t k = 0; k < states_; ++k) out[s[agent]] += prob(k, j);
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> BasicFiniteStructure<T>::state_signal_joint(std::size_t agent) const {
  if (agent >= agents()) throw DomainError("agent index out of range");
  std::vector<std::vector<T>> out(states_, std::vector<T>(alphabets_[agent], T(0)));
  for (std::size_t j = 0; j < profiles_; ++j) {
    const auto v = profile_signals(j)[agent];
    for (std::size_t k = 0; k < states_; ++k) out[k][v] += prob(k, j);
  }
  return out;
}

// Bayes posterior of each signal value of one agent; empty for values that
// occur with probability zero.
template <class T>
std::vector<std::optional<std::vector<T>>> signal_posteriors(const BasicFiniteStructure<T>& s, std::size_t agent) {
  const auto joint = s.state_signal_joint(agent);
  const std::size_t values = s.alphabets()[agent];
  std::vector<std::optional<std::vector<T>>> out(values);
  for (std::size_t v = 0; v < values; ++v) {
    T total(0);
    for (std::size_t k = 0; k < s.states(); ++k) total += joint[k][v];
    if (!(total > ScalarTraits<T>::drop_eps())) continue;
    std::vector<T> q(s.states());
    for (std::size_t k = 0; k < s.states(); ++k) q[k] = joint[k][v] / total;
    out[v] = std::move(q);
  }
  return out;
}

// Distribution of the agent's posterior over the state simplex.
template <class T>
SimplexDist<T> posterior_simplex(const BasicFiniteStructure<T>& s, std::size_t agent) {
  const auto post = signal_posteriors(s, agent);
  const auto marg = s.signal_marginal(agent);
  std::vector<SimplexAtom<T>> atoms;
  for (std::size_t v = 0; v < post.size(); ++v)
    if (post[v]) atoms.push_back({*post[v], marg[v]});
  return SimplexDist<T>(std::move(atoms));
}

// Binary-state version: distribution of P(state = 1 | s_agent).
template <class T>
BasicAtomicDist<T> posterior_dist(const BasicFiniteStructure<T>& s, std::size_t agent) {
  if (s.states() != 2) throw DomainError("posterior_dist on [0,1] requires a binary state");
  const auto simplex = posterior_simplex(s, agent);
  std::vector<Atom<T>> atoms;
  for (const auto& a : simplex.atoms()) atoms.push_back({a.q[1], a.w});
  return BasicAtomicDist<T>(std::move(atoms));
}

// Posterior given the whole signal profile, treated as a single signal.
template <class T>
SimplexDist<T> joint_posterior(const BasicFiniteStructure<T>& s) {
  const auto marg = s.profile_marginal();
  std::vector<SimplexAtom<T>> atoms;
  for (std::size_t j = 0; j < s.profiles(); ++j) {
    if (!(marg[j] > ScalarTraits<T>::drop_eps())) continue;
    std::vector<T> q(s.states());
    for (std::size_t k = 0; k < s.states(); ++k) q[k] = s.prob(k, j) / marg[j];
    atoms.push_back({std::move(q), marg[j]});
  }
  return SimplexDist<T>(std::move(atoms));
}

// Total-variation distance between the joint signal law and the product of
// the per-agent signal laws.
template <class T>
T independence_gap(const BasicFiniteStructure<T>& s) {
  const auto joint = s.profile_marginal();
  std::vector<std::vector<T>> margs;
  for (std::size_t i = 0; i < s.agents(); ++i) margs.push_back(s.signal_marginal(i));
  T tv(0);
  for (std::size_t j = 0; j < s.profiles(); ++j) {
    const auto sig = s.profile_signals(j);
    T prod(1);
    for (std::size_t i = 0; i < s.agents(); ++i) prod *= margs[i][sig[i]];
    tv += abs_value(T(joint[j] - prod));
  }
  return tv / T(2);
}

template <class T>
bool is_private_private(const BasicFiniteStructure<T>& s, const T& tol = default_tolerance<T>()) {
  return independence_gap(s) <= tol;
}

// Every signal profile that occurs pins down the state.
template <class T>
bool is_perfect(const BasicFiniteStructure<T>& s) {
  for (std::size_t j = 0; j < s.profiles(); ++j) {
    std::size_t positive = 0;
    for (std::size_t k = 0; k < s.states(); ++k)
      if (s.prob(k, j) > ScalarTraits<T>::drop_eps()) ++positive;
    if (positive > 1) return false;
  }
  return true;
}

template <class T>
bool same_simplex_dist(const SimplexDist<T>& a, const SimplexDist<T>& b, const T& tol) {
  if (a.size() != b.size() || a.states() != b.states()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.atoms()[i];
    const auto& y = b.atoms()[i];
    if (abs_value(T(x.w - y.w)) > tol) return false;
    for (std::size_t k = 0; k < x.q.size(); ++k)
      if (abs_value(T(x.q[k] - y.q[k])) > tol) return false;
  }
  return true;
}

// Same number of states and agents, and every agent has the same posterior
// distribution in both structures.
template <class T>
bool equivalent(const BasicFiniteStructure<T>& a, const BasicFiniteStructure<T>& b,
                const T& tol = default_tolerance<T>()) {
  if (a.states() != b.states() || a.agents() != b.agents())
    throw DomainError("equivalence needs structures with the same number of states and agents");
  for (std::size_t i = 0; i < a.agents(); ++i)
    if (!same_simplex_dist(posterior_simplex(a, i), posterior_simplex(b, i), tol)) return false;
  return true;
}

// Applies a garbling kernel to one agent's signal: kernel[v][t] is the
// probability of reporting t after observing v. Rows must sum to one.
template <class T>
BasicFiniteStructure<T> garble(const BasicFiniteStructure<T>& s, std::size_t agent,
                               const std::vector<std::vector<T>>& kernel) {
  if (agent >= s.agents()) throw DomainError("agent index out of range");
  if (kernel.size() != s.alphabets()[agent]) throw DomainError("garbling kernel has wrong number of rows");
  const std::size_t out_size = kernel.empty() ? 0 : kernel.front().size();
  for (const auto& row : kernel) {
    if (row.size() != out_size) throw DomainError("garbling kernel is ragged");
    T total(0);
    for (const auto& x : row) {
      if (x < T(0)) throw DomainError("negative garbling probability");
      total += x;
    }
    if (abs_value(T(total - T(1))) > ScalarTraits<T>::sum_tol() * T(static_cast<long>(out_size + 1)))
      throw DomainError("garbling kernel row does not sum to one");
  }
  auto alphabets = s.alphabets();
  alphabets[agent] = out_size;
  std::size_t profiles = 1;
  for (auto a : alphabets) profiles *= a;
  std::vector<T> pmf(s.states() * profiles, T(0));
  auto index = [&](const std::vector<std::size_t>& sig) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < alphabets.size(); ++i) idx = idx * alphabets[i] + sig[i];
    return idx;
  };
  for (std::size_t j = 0; j < s.profiles(); ++j) {
    auto sig = s.profile_signals(j);
    const std::size_t v = sig[agent];
    for (std::size_t t = 0; t < out_size; ++t) {
      if (kernel[v][t] == T(0)) continue;
      sig[agent] = t;
      const std::size_t idx = index(sig);
      for (std::size_t k = 0; k < s.states(); ++k) pmf[k * profiles + idx] += s.prob(k, j) * kernel[v][t];
    }
  }
  return BasicFiniteStructure<T>(s.states(), std::move(alphabets), std::move(pmf));
}

// Keeps only the listed agents (in the given order), summing out the rest.
template <class T>
BasicFiniteStructure<T> restrict_agents(const BasicFiniteStructure<T>& s, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> alphabets;
  for (auto i : keep) {
    if (i >= s.agents()) throw DomainError("agent index out of range");
    alphabets.push_back(s.alphabets()[i]);
  }
  std::size_t profiles = 1;
  for (auto a : alphabets) profiles *= a;
  std::vector<T> pmf(s.states() * profiles, T(0));
  for (std::size_t j = 0; j < s.profiles(); ++j) {
    const auto sig = s.profile_signals(j);
    std::size_t idx = 0;
    for (std::size_t t = 0; t < keep.size(); ++t) idx = idx * alphabets[t] + sig[keep[t]];
    for (std::size_t k = 0; k < s.states(); ++k) pmf[k * profiles + idx] += s.prob(k, j);
  }
  return BasicFiniteStructure<T>(s.states(), std::move(alphabets), std::move(pmf));
}

// Relabels every agent's signal by its induced posterior. Signal value v of
// agent i in the result is the v-th atom of posterior_simplex(s, i); values
// with equal posteriors are merged and zero-probability values dropped.
template <class T>
BasicFiniteStructure<T> direct_revelation(const BasicFiniteStructure<T>& s) {
  std::vector<std::vector<std::size_t>> relabel(s.agents());
  std::vector<std::size_t> alphabets(s.agents());
  for (std::size_t i = 0; i < s.agents(); ++i) {
    const auto post = signal_posteriors(s, i);
    const auto dist = posterior_simplex(s, i);
    alphabets[i] = dist.size();
    relabel[i].assign(post.size(), 0);
    for (std::size_t v = 0; v < post.size(); ++v) {
      if (!post[v]) continue;
      std::size_t best = 0;
      T best_err(-1);
      for (std::size_t a = 0; a < dist.size(); ++a) {
        T err(0);
        for (std::size_t k = 0; k < s.states(); ++k) {
          T d = abs_value(T((*post[v])[k] - dist.atoms()[a].q[k]));
          if (d > err) err = d;
        }
        if (best_err < T(0) || err < best_err) {
          best = a;
          best_err = err;
        }
      }
      relabel[i][v] = best;
    }
  }
  std::size_t profiles = 1;
  for (auto a : alphabets) profiles *= a;
  std::vector<T> pmf(s.states() * profiles, T(0));
  for (std::size_t j = 0; j < s.profiles(); ++j) {
    const auto sig = s.profile_signals(j);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < s.agents(); ++i) idx = idx * alphabets[i] + relabel[i][sig[i]];
    for (std::size_t k = 0; k < s.states(); ++k) pmf[k * profiles + idx] += s.prob(k, j);
  }
  return BasicFiniteStructure<T>(s.states(), std::move(alphabets), std::move(pmf));
}

inline FiniteStructure to_double(const ExactStructure& s) {
  std::vector<double> pmf;
  pmf.reserve(s.pmf().size());
  for (const auto& p : s.pmf()) pmf.push_back(to_double(p));
  return FiniteStructure(s.states(), s.alphabets(), std::move(pmf));
}

// Exact binary values of the entries, rescaled to sum to exactly one.
inline ExactStructure to_exact(const FiniteStructure& s) {
  std::vector<Rational> pmf;
  Rational total(0);
  for (double p : s.pmf()) {
    pmf.push_back(rational_from_double(p));
    total += pmf.back();
  }
  for (auto& p : pmf) p /= total;
  return ExactStructure(s.states(), s.alphabets(), std::move(pmf));
}

// Secret sharing of t in [0,1) into two independent uniform shares:
// r1 = u and r2 = frac(r1 + t). Each share alone is uniform, and
// frac(r2 - r1) recovers t.
struct SecretShares {
  double r1;
  double r2;
};

SecretShares split_secret(double t, double u);
double reconstruct_secret(const SecretShares& shares);

}  // namespace ppi
