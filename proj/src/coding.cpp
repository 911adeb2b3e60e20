// Copyright 2026 The cqbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqbounds/coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cqbounds/errors.hpp"

namespace cqbounds {
namespace {

std::size_t letter_of(const Channel& ch, const std::string& label) {
  const auto x = ch.index_of(label);
  if (!x) throw DomainError("code uses label '" + label + "' outside the channel alphabet");
  return *x;
}

std::vector<double> message_errors(const Channel& ch, const Code& code) {
  if (code.decoding().dim() != ch.dim())
    throw DimensionError("decoder dimension differs from the channel output dimension");
  std::vector<double> errors;
  for (std::size_t k = 0; k < code.messages(); ++k) {
    const DensityOperator& w = ch.output(letter_of(ch, code.encoding()[k]));
    errors.push_back(1.0 - trace_product(w.hermitian(), code.decoding()[k]));
  }
  return errors;
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0,1)");
}

double penalty_constant(double c) { return 2.0 + c + 1.0 / c; }

void require_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be positive");
}

std::mt19937_64 stream_generator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Nondecreasing index tuples of length m over {0..n-1}, in lexicographic
// order.
template <class Visit>
void for_each_multiset(std::size_t n, int m, Visit&& visit) {
  std::vector<std::size_t> word(static_cast<std::size_t>(m), 0);
  while (true) {
    visit(word);
    int pos = m - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) return;
    const std::size_t next = word[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j < m; ++j) word[static_cast<std::size_t>(j)] = next;
  }
}

}  // namespace

Code::Code(std::vector<std::string> encoding, Povm decoding)
    : encoding_(std::move(encoding)), decoding_(std::move(decoding)) {
  if (encoding_.size() != decoding_.size())
    throw DimensionError("code needs one decoder element per message");
}

double average_error(const Channel& ch, const Code& code) {
  const auto errors = message_errors(ch, code);
  double total = 0.0;
  for (double e : errors) total += e;
  return total / static_cast<double>(errors.size());
}

double max_error(const Channel& ch, const Code& code) {
  const auto errors = message_errors(ch, code);
  return *std::max_element(errors.begin(), errors.end());
}

Povm square_root_measurement(std::span<const HermitianMatrix> projections) {
  if (projections.empty()) throw DomainError("square-root measurement of an empty list");
  const Eigen::Index d = projections.front().dim();
  HermitianMatrix total = HermitianMatrix::Zero(d);
  for (const auto& p : projections) {
    if (p.dim() != d) throw DimensionError("square-root measurement: dimension mismatch");
    total += p;
  }
  const HermitianMatrix inv_sqrt = frac_power(total, -0.5);
  std::vector<HermitianMatrix> elements;
  elements.reserve(projections.size());
  for (const auto& p : projections) elements.push_back(sandwich(inv_sqrt, p));
  return Povm(std::move(elements));
}

double hn_operator_inequality_check(const HermitianMatrix& a, const HermitianMatrix& b, double c) {
  if (a.dim() != b.dim()) throw DimensionError("hn check: dimension mismatch");
  require_c(c);
  const HermitianMatrix identity = HermitianMatrix::Identity(a.dim());
  const HermitianMatrix decoded = sandwich(frac_power(a + b, -0.5), a);
  const HermitianMatrix slack =
      (1.0 + c) * (identity - a) + penalty_constant(c) * b - (identity - decoded);
  return min_eigenvalue(slack);
}

double random_coding_bound(const WeightedEnsemble& e, int messages, double c, double t) {
  if (messages < 1) throw DomainError("random coding bound needs M >= 1");
  require_c(c);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("random coding bound needs t in [0,1]");
  const double multiplicity = messages == 1 ? 1.0 : std::pow(messages - 1.0, 1.0 - t);
  return std::pow(1.0 + c, t) * std::pow(penalty_constant(c), 1.0 - t) * multiplicity *
         std::exp2(psi_joint(e, t));
}

RandomCodeSampler::RandomCodeSampler(WeightedEnsemble e, int messages, double c)
    : e_(std::move(e)), messages_(messages) {
  if (messages < 1) throw DomainError("random codes need M >= 1");
  require_c(c);
  const Channel& ch = e_.channel();
  const HermitianMatrix crowd =
      (penalty_constant(c) * (messages - 1.0)) * e_.average().hermitian();
  double cumulative = 0.0;
  for (std::size_t x = 0; x < ch.size(); ++x) {
    projection_.push_back(positive_part_projection((1.0 + c) * ch.output(x).hermitian() - crowd));
    cumulative += e_.weight(x);
    cdf_.push_back(cumulative);
  }
}

std::vector<std::size_t> RandomCodeSampler::codewords(std::uint64_t seed,
                                                      std::uint64_t index) const {
  auto gen = stream_generator(seed, index);
  std::vector<std::size_t> words;
  words.reserve(static_cast<std::size_t>(messages_));
  const double total = cdf_.back();
  for (int k = 0; k < messages_; ++k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    words.push_back(it == cdf_.end() ? e_.support().back()
                                     : static_cast<std::size_t>(it - cdf_.begin()));
  }
  return words;
}

Povm RandomCodeSampler::decoder(const std::vector<std::size_t>& words) const {
  std::vector<HermitianMatrix> pis;
  pis.reserve(words.size());
  for (std::size_t x : words) pis.push_back(projection_[x]);
  return square_root_measurement(pis);
}

Code RandomCodeSampler::draw(std::uint64_t seed, std::uint64_t index) const {
  const auto words = codewords(seed, index);
  std::vector<std::string> labels;
  for (std::size_t x : words) labels.push_back(e_.channel().label(x));
  return Code(std::move(labels), decoder(words));
}

double RandomCodeSampler::draw_error(std::uint64_t seed, std::uint64_t index) const {
  const auto words = codewords(seed, index);
  const Povm povm = decoder(words);
  double success = 0.0;
  for (std::size_t k = 0; k < words.size(); ++k)
    success += trace_product(e_.channel().output(words[k]).hermitian(), povm[k]);
  return 1.0 - success / static_cast<double>(words.size());
}

Code sample_random_code(const WeightedEnsemble& e, int messages, double c, std::uint64_t seed,
                        std::uint64_t index) {
  return RandomCodeSampler(e, messages, c).draw(seed, index);
}

std::vector<double> c_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 32; ++k) grid.push_back(std::exp2(-6.0 + 0.375 * k));
  return grid;
}

BoundReport one_shot_lower_bound(const Channel& ch, double epsilon, std::optional<double> c,
                                 const SimplexOptions& opts) {
  require_epsilon(epsilon);
  if (!c) {
    const auto rows = one_shot_lower_bound_scan(ch, epsilon, opts);
    BoundReport best = *std::max_element(
        rows.begin(), rows.end(),
        [](const BoundReport& a, const BoundReport& b) { return a.value < b.value; });
    best.name = "one_shot_lower_best";
    return best;
  }
  return n_shot_lower_bound(ch, epsilon, *c, 1, opts);
}

std::vector<BoundReport> one_shot_lower_bound_scan(const Channel& ch, double epsilon,
                                                   const SimplexOptions& opts) {
  require_epsilon(epsilon);
  std::vector<BoundReport> rows;
  for (double c : c_grid()) rows.push_back(n_shot_lower_bound(ch, epsilon, c, 1, opts));
  return rows;
}

BoundReport n_shot_lower_bound(const Channel& ch, double epsilon, double c, long long n,
                               const SimplexOptions& opts) {
  require_epsilon(epsilon);
  require_c(c);
  if (n < 1) throw DomainError("n must be at least 1");
  const double uses = static_cast<double>(n);
  const double r = std::log2((1.0 + c) / epsilon) / uses;
  BoundReport out;
  out.name = n == 1 ? "one_shot_lower" : "n_shot_lower";
  out.value = hoeffding_capacity(ch, r, opts).value - std::log2(penalty_constant(c) / epsilon) / uses;
  out.clamped = out.value < 0.0;
  out.parameters = {{"epsilon", epsilon}, {"c", c}, {"r", r}, {"n", uses}};
  return out;
}

BoundReport exp_capacity_lower_bound(const Channel& ch, double r, const SimplexOptions& opts) {
  if (!(r >= 0.0)) throw DomainError("r must be non-negative");
  BoundReport out;
  out.name = "exponential_lower";
  out.value = hoeffding_capacity(ch, r, opts).value - r;
  out.clamped = out.value < 0.0;
  out.parameters = {{"r", r}};
  out.positive = r < chernoff_capacity(ch, opts).value;
  return out;
}

BoundReport one_shot_upper_bound(const Channel& ch, double epsilon, const DominatingOptions& opts) {
  require_epsilon(epsilon);
  BoundReport out;
  out.name = "one_shot_upper";
  out.value = max_radius(ch.outputs(), opts).value - std::log2(1.0 - epsilon);
  out.parameters = {{"epsilon", epsilon}};
  return out;
}

BoundReport positivity_threshold(const Channel& ch, const SimplexOptions& opts) {
  BoundReport out;
  out.name = "positivity_threshold";
  out.value = std::exp2(2.0 - chernoff_capacity(ch, opts).value);
  return out;
}

BruteForceResult brute_force_capacity_commuting(const Channel& ch, double epsilon,
                                                int max_messages) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in [0,1)");
  if (max_messages < 1) throw DomainError("M_max must be at least 1");
  const double count = static_cast<double>(ch.size());
  if (max_messages * std::pow(count, max_messages) > 1e7)
    throw GuardError("brute force enumeration exceeds 1e7 codebook evaluations");
  const auto basis = joint_eigenbasis(ch.outputs());
  if (!basis)
    throw CommutativityError("brute force capacity needs a commuting channel", ch.max_commutator());

  std::vector<RealVector> diag;
  for (const auto& w : ch.outputs())
    diag.push_back((basis->adjoint() * w.matrix() * *basis).diagonal().real());

  BruteForceResult out;
  for (int m = 1; m <= max_messages; ++m) {
    double best_success = -1.0;
    std::vector<std::size_t> best_word;
    for_each_multiset(ch.size(), m, [&](const std::vector<std::size_t>& word) {
      RealVector top = diag[word.front()];
      for (std::size_t x : word) top = top.cwiseMax(diag[x]);
      const double success = top.sum() / m;
      if (success > best_success + 1e-15) {
        best_success = success;
        best_word = word;
      }
    });
    std::vector<DensityOperator> states;
    std::vector<std::string> labels;
    for (std::size_t x : best_word) {
      states.push_back(ch.output(x));
      labels.push_back(ch.label(x));
    }
    Code code(std::move(labels), ml_measurement_commuting(states));
    out.best_average_error.push_back(std::max(0.0, 1.0 - best_success));
    out.best_max_error.push_back(max_error(ch, code));
    if (out.best_average_error.back() <= epsilon + 1e-12) {
      out.best_messages = m;
      out.witness = std::move(code);
    }
  }
  out.capacity = std::log2(static_cast<double>(out.best_messages));
  return out;
}

}  // namespace cqbounds
