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

#ifndef CQBOUNDS_CODING_HPP_
#define CQBOUNDS_CODING_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cqbounds/capacities.hpp"
#include "cqbounds/channel.hpp"
#include "cqbounds/radius.hpp"

namespace cqbounds {

// An M-code: message k is sent as input encoding[k] and decoded by the
// POVM element decoding[k].
class Code {
 public:
  Code(std::vector<std::string> encoding, Povm decoding);

  std::size_t messages() const { return encoding_.size(); }
  const std::vector<std::string>& encoding() const { return encoding_; }
  const Povm& decoding() const { return decoding_; }

 private:
  std::vector<std::string> encoding_;
  Povm decoding_;
};

// (1/M) sum_k Tr W_phi(k) (I - E_k). Throws DomainError for labels outside
// the channel alphabet.
double average_error(const Channel& ch, const Code& code);
// max_k Tr W_phi(k) (I - E_k).
double max_error(const Channel& ch, const Code& code);

// E_k = S^(-1/2) pi_k S^(-1/2) with S = sum_j pi_j, inverse on supp S.
Povm square_root_measurement(std::span<const HermitianMatrix> projections);

// lambda_min of (1+c)(I - A) + (2+c+1/c) B - [I - (A+B)^(-1/2) A (A+B)^(-1/2)].
double hn_operator_inequality_check(const HermitianMatrix& a, const HermitianMatrix& b, double c);

// (1+c)^t (2+c+1/c)^(1-t) (M-1)^(1-t) 2^psi_joint(t); (M-1)^(1-t) is taken
// as 1 when M = 1.
double random_coding_bound(const WeightedEnsemble& e, int messages, double c, double t);

// Random codebooks with i.i.d. codewords from p and square-root decoding of
// pi(x) = {(1+c) W_x - (2+c+1/c)(M-1) E_p > 0}. The projections are cached
// per letter, so repeated draws are cheap.
class RandomCodeSampler {
 public:
  RandomCodeSampler(WeightedEnsemble e, int messages, double c);

  // Codebook number `index` of the stream `seed`; a pure function of both.
  Code draw(std::uint64_t seed, std::uint64_t index) const;
  // Average error of the codebook, without building the Code object.
  double draw_error(std::uint64_t seed, std::uint64_t index) const;

  const WeightedEnsemble& ensemble() const { return e_; }
  int messages() const { return messages_; }

 private:
  std::vector<std::size_t> codewords(std::uint64_t seed, std::uint64_t index) const;
  Povm decoder(const std::vector<std::size_t>& words) const;

  WeightedEnsemble e_;
  int messages_;
  std::vector<HermitianMatrix> projection_;  // per letter
  std::vector<double> cdf_;
};

Code sample_random_code(const WeightedEnsemble& e, int messages, double c, std::uint64_t seed,
                        std::uint64_t index = 0);

struct BoundReport {
  std::string name;
  double value = 0.0;  // bits
  // Lower bound below zero (reported raw next to the trivial bound 0).
  bool clamped = false;
  std::map<std::string, double> parameters;
  // Exponential bound only: r < chi*_C.
  std::optional<bool> positive;
};

// log-spaced c grid 2^-6, 2^-5.625, ..., 2^6 (33 points).
std::vector<double> c_grid();

// chi*_{log((1+c)/eps)} - log((2+c+1/c)/eps); without c the grid maximum.
BoundReport one_shot_lower_bound(const Channel& ch, double epsilon,
                                 std::optional<double> c = std::nullopt,
                                 const SimplexOptions& opts = {});
// One report per grid point.
std::vector<BoundReport> one_shot_lower_bound_scan(const Channel& ch, double epsilon,
                                                   const SimplexOptions& opts = {});

// Per-use bound chi*_{log((1+c)/eps)/n} - log((2+c+1/c)/eps)/n.
BoundReport n_shot_lower_bound(const Channel& ch, double epsilon, double c, long long n,
                               const SimplexOptions& opts = {});

// chi*_r - r, with positive = (r < chi*_C).
BoundReport exp_capacity_lower_bound(const Channel& ch, double r, const SimplexOptions& opts = {});

// R_max(ran W) - log(1 - eps).
BoundReport one_shot_upper_bound(const Channel& ch, double epsilon,
                                 const DominatingOptions& opts = {});

// 2^(2 - chi*_C): the one-shot lower bound can only be positive for eps
// above this value.
BoundReport positivity_threshold(const Channel& ch, const SimplexOptions& opts = {});

struct BruteForceResult {
  double capacity = 0.0;  // bits, log2 of best_messages
  int best_messages = 1;
  std::optional<Code> witness;
  // Smallest average error (and the max error of that code) per M = 1..M_max.
  std::vector<double> best_average_error;
  std::vector<double> best_max_error;
};

// Exact C_eps for commuting channels by enumerating codebooks up to message
// permutation with maximum-likelihood decoding. Throws CommutativityError
// and GuardError (M_max |X|^M_max > 1e7).
BruteForceResult brute_force_capacity_commuting(const Channel& ch, double epsilon, int max_messages);

}  // namespace cqbounds

#endif  // CQBOUNDS_CODING_HPP_
