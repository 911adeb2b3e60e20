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

#ifndef CQBOUNDS_CHANNEL_HPP_
#define CQBOUNDS_CHANNEL_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cqbounds/divergences.hpp"
#include "cqbounds/hermitian.hpp"

namespace cqbounds {

// Largest materialized matrix side (or |X|^n * d^n for product channels).
inline constexpr std::size_t kMaterializationGuard = 4096;

// A classical-quantum channel with a finite input alphabet. Immutable;
// copies share the underlying data.
class Channel {
 public:
  Channel(std::vector<std::string> labels, std::vector<DensityOperator> outputs);

  std::size_t size() const { return data_->labels.size(); }
  Eigen::Index dim() const { return data_->outputs.front().dim(); }
  const std::string& label(std::size_t x) const { return data_->labels.at(x); }
  const DensityOperator& output(std::size_t x) const { return data_->outputs.at(x); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::vector<DensityOperator>& outputs() const { return data_->outputs; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  // Largest pairwise commutator entry over the image.
  double max_commutator() const;
  bool is_classical(double tol = 1e-10) const { return max_commutator() < tol; }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<DensityOperator> outputs;
  };
  std::shared_ptr<const Data> data_;
};

// A finitely supported input distribution on a channel.
class WeightedEnsemble {
 public:
  WeightedEnsemble(Channel channel, RealVector weights);
  static WeightedEnsemble Uniform(Channel channel);
  static WeightedEnsemble PointMass(Channel channel, std::size_t x);

  const Channel& channel() const { return channel_; }
  const RealVector& weights() const { return weights_; }
  double weight(std::size_t x) const { return weights_(static_cast<Eigen::Index>(x)); }
  // Letters with positive weight, in alphabet order.
  const std::vector<std::size_t>& support() const { return support_; }
  // E_p(W) = sum_x p(x) W_x.
  const DensityOperator& average() const { return *average_; }

 private:
  Channel channel_;
  RealVector weights_;
  std::vector<std::size_t> support_;
  std::shared_ptr<const DensityOperator> average_;
};

DensityOperator ensemble_average(const WeightedEnsemble& e);

// R_p = sum_x p(x) delta_x (x) W_x and Q_p = sum_x p(x) delta_x (x) E_p(W),
// with one block per letter in supp p.
struct JointProductStates {
  DensityOperator joint;
  DensityOperator product;
};
JointProductStates joint_and_product_states(const WeightedEnsemble& e);

// The psi profile of (R_p, Q_p) assembled block by block.
PsiProfile joint_profile(const WeightedEnsemble& e);

// log2 Tr R_p^t Q_p^(1-t) without materializing the blocks.
double psi_joint(const WeightedEnsemble& e, double t);

// The n-fold product channel with lazily built outputs. Tuples are
// enumerated in lexicographic order; nothing is memoized.
class LazyProductChannel {
 public:
  LazyProductChannel(Channel base, int n);

  std::size_t size() const { return size_; }
  int copies() const { return n_; }
  Eigen::Index dim() const { return dim_; }
  const Channel& base() const { return base_; }
  // Letter indices of tuple number `index`, most significant first.
  std::vector<std::size_t> tuple(std::size_t index) const;
  std::string label(std::size_t index) const;
  DensityOperator output(std::size_t index) const;

 private:
  Channel base_;
  int n_;
  std::size_t size_;
  Eigen::Index dim_;
};

// W^(n): alphabet X^n, outputs W_x1 (x) ... (x) W_xn. Throws GuardError when
// |X|^n * d^n exceeds kMaterializationGuard.
Channel product_extension(const Channel& ch, int n);

// p^(x)n as an ensemble on product_extension(ch, n).
WeightedEnsemble product_ensemble(const WeightedEnsemble& e, int n);

// Classical depolarizing channel: W_k = alpha delta_k + (1-alpha) I/d.
Channel depolarizing(int d, double alpha);
// W_k = delta_k.
Channel noiseless(int d);

struct DepolarizingClosedForms {
  int d;
  double alpha;
  double holevo;      // chi*(W^{d,alpha})
  double max_radius;  // R_max(ran W^{d,alpha})
  double gap;         // R_max - chi*
  // Upper bound (1-alpha)/M + alpha on the success probability of M-codes.
  double success_bound(int messages) const { return (1.0 - alpha) / messages + alpha; }
};
DepolarizingClosedForms depolarizing_closed_forms(int d, double alpha);

}  // namespace cqbounds

#endif  // CQBOUNDS_CHANNEL_HPP_
