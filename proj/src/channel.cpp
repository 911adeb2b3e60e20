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

#include "cqbounds/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "cqbounds/errors.hpp"

namespace cqbounds {

Channel::Channel(std::vector<std::string> labels, std::vector<DensityOperator> outputs) {
  if (labels.empty()) throw DomainError("channel alphabet must be non-empty");
  if (labels.size() != outputs.size())
    throw DimensionError("channel: label count differs from output count");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw DomainError("channel: duplicate input label '" + l + "'");
  const Eigen::Index d = outputs.front().dim();
  for (std::size_t x = 0; x < outputs.size(); ++x) {
    if (outputs[x].dim() != d) {
      std::ostringstream msg;
      msg << "channel: output '" << labels[x] << "' has dimension " << outputs[x].dim()
          << ", expected " << d;
      throw DimensionError(msg.str());
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(labels), std::move(outputs)});
}

std::optional<std::size_t> Channel::index_of(const std::string& label) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (data_->labels[x] == label) return x;
  return std::nullopt;
}

double Channel::max_commutator() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      worst = std::max(worst, commutator_norm(output(i).hermitian(), output(j).hermitian()));
  return worst;
}

WeightedEnsemble::WeightedEnsemble(Channel channel, RealVector weights)
    : channel_(std::move(channel)), weights_(std::move(weights)) {
  if (static_cast<std::size_t>(weights_.size()) != channel_.size())
    throw DimensionError("ensemble: weight vector length differs from alphabet size");
  for (Eigen::Index x = 0; x < weights_.size(); ++x)
    if (!(weights_(x) >= 0.0)) throw DomainError("ensemble: weights must be non-negative");
  if (std::abs(weights_.sum() - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ensemble: weights sum to " << weights_.sum();
    throw DomainError(msg.str());
  }
  HermitianMatrix avg = HermitianMatrix::Zero(channel_.dim());
  for (std::size_t x = 0; x < channel_.size(); ++x) {
    if (weight(x) > 0.0) {
      support_.push_back(x);
      avg += weight(x) * channel_.output(x).hermitian();
    }
  }
  average_ = std::make_shared<const DensityOperator>(avg);
}

WeightedEnsemble WeightedEnsemble::Uniform(Channel channel) {
  const auto n = static_cast<Eigen::Index>(channel.size());
  return WeightedEnsemble(std::move(channel), RealVector::Constant(n, 1.0 / n));
}

WeightedEnsemble WeightedEnsemble::PointMass(Channel channel, std::size_t x) {
  RealVector w = RealVector::Zero(static_cast<Eigen::Index>(channel.size()));
  w(static_cast<Eigen::Index>(x)) = 1.0;
  return WeightedEnsemble(std::move(channel), std::move(w));
}

DensityOperator ensemble_average(const WeightedEnsemble& e) { return e.average(); }

JointProductStates joint_and_product_states(const WeightedEnsemble& e) {
  const std::size_t blocks = e.support().size();
  const auto d = static_cast<std::size_t>(e.channel().dim());
  if (blocks * d > kMaterializationGuard) {
    std::ostringstream msg;
    msg << "R_p/Q_p materialization needs dimension " << blocks * d << " > "
        << kMaterializationGuard << "; use the block-structured evaluators (joint_profile)";
    throw GuardError(msg.str());
  }
  const auto n = static_cast<Eigen::Index>(blocks * d);
  const auto di = static_cast<Eigen::Index>(d);
  Matrix joint = Matrix::Zero(n, n);
  Matrix product = Matrix::Zero(n, n);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t x = e.support()[b];
    const auto off = static_cast<Eigen::Index>(b) * di;
    joint.block(off, off, di, di) = e.weight(x) * e.channel().output(x).matrix();
    product.block(off, off, di, di) = e.weight(x) * e.average().matrix();
  }
  return {DensityOperator(joint), DensityOperator(product)};
}

PsiProfile joint_profile(const WeightedEnsemble& e) {
  PsiProfile profile;
  for (std::size_t x : e.support()) profile.add_block(e.channel().output(x), e.average(), e.weight(x));
  return profile;
}

double psi_joint(const WeightedEnsemble& e, double t) { return joint_profile(e)(t); }

namespace {

std::size_t checked_power(std::size_t base, int n) {
  std::size_t out = 1;
  for (int i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / std::max<std::size_t>(base, 1))
      throw GuardError("product extension size overflows");
    out *= base;
  }
  return out;
}

}  // namespace

LazyProductChannel::LazyProductChannel(Channel base, int n) : base_(std::move(base)), n_(n) {
  if (n < 1) throw DomainError("product extension: n must be positive");
  size_ = checked_power(base_.size(), n);
  dim_ = static_cast<Eigen::Index>(checked_power(static_cast<std::size_t>(base_.dim()), n));
}

std::vector<std::size_t> LazyProductChannel::tuple(std::size_t index) const {
  if (index >= size_) throw DomainError("product extension: tuple index out of range");
  std::vector<std::size_t> out(static_cast<std::size_t>(n_));
  for (int k = n_ - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = index % base_.size();
    index /= base_.size();
  }
  return out;
}

std::string LazyProductChannel::label(std::size_t index) const {
  std::string out;
  for (std::size_t x : tuple(index)) {
    if (!out.empty()) out += ',';
    out += base_.label(x);
  }
  return out;
}

DensityOperator LazyProductChannel::output(std::size_t index) const {
  const auto letters = tuple(index);
  HermitianMatrix acc = base_.output(letters.front()).hermitian();
  for (std::size_t k = 1; k < letters.size(); ++k) acc = kron(acc, base_.output(letters[k]).hermitian());
  return DensityOperator(acc, DensityOperator::Normalization::kRenormalize);
}

Channel product_extension(const Channel& ch, int n) {
  if (n == 1) return ch;
  LazyProductChannel lazy(ch, n);
  if (lazy.size() * static_cast<std::size_t>(lazy.dim()) > kMaterializationGuard) {
    std::ostringstream msg;
    msg << "product extension |X|^n * d^n = " << lazy.size() * static_cast<std::size_t>(lazy.dim())
        << " exceeds " << kMaterializationGuard << "; use LazyProductChannel";
    throw GuardError(msg.str());
  }
  std::vector<std::string> labels;
  std::vector<DensityOperator> outputs;
  for (std::size_t i = 0; i < lazy.size(); ++i) {
    labels.push_back(lazy.label(i));
    outputs.push_back(lazy.output(i));
  }
  return Channel(std::move(labels), std::move(outputs));
}

WeightedEnsemble product_ensemble(const WeightedEnsemble& e, int n) {
  Channel ch = product_extension(e.channel(), n);
  LazyProductChannel lazy(e.channel(), n);
  RealVector w(static_cast<Eigen::Index>(lazy.size()));
  for (std::size_t i = 0; i < lazy.size(); ++i) {
    double p = 1.0;
    for (std::size_t x : lazy.tuple(i)) p *= e.weight(x);
    w(static_cast<Eigen::Index>(i)) = p;
  }
  w /= w.sum();
  return WeightedEnsemble(std::move(ch), std::move(w));
}

Channel depolarizing(int d, double alpha) {
  if (d < 2) throw DomainError("depolarizing channel needs d >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("depolarizing channel needs alpha in (0,1); use noiseless() for alpha = 1");
  std::vector<std::string> labels;
  std::vector<DensityOperator> outputs;
  for (int k = 0; k < d; ++k) {
    RealVector diag = RealVector::Constant(d, (1.0 - alpha) / d);
    diag(k) += alpha;
    labels.push_back(std::to_string(k + 1));
    outputs.emplace_back(HermitianMatrix::Diagonal(diag), DensityOperator::Normalization::kRenormalize);
  }
  return Channel(std::move(labels), std::move(outputs));
}

Channel noiseless(int d) {
  if (d < 1) throw DomainError("noiseless channel needs d >= 1");
  std::vector<std::string> labels;
  std::vector<DensityOperator> outputs;
  for (int k = 0; k < d; ++k) {
    RealVector diag = RealVector::Zero(d);
    diag(k) = 1.0;
    labels.push_back(std::to_string(k + 1));
    outputs.push_back(DensityOperator::Diagonal(diag));
  }
  return Channel(std::move(labels), std::move(outputs));
}

DepolarizingClosedForms depolarizing_closed_forms(int d, double alpha) {
  if (d < 2) throw DomainError("depolarizing closed forms need d >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("depolarizing closed forms need alpha in (0,1)");
  const double dd = d;
  const double peak = 1.0 + (dd - 1.0) * alpha;
  DepolarizingClosedForms out{};
  out.d = d;
  out.alpha = alpha;
  out.holevo = (peak / dd) * std::log2(peak) + ((dd - 1.0) / dd) * (1.0 - alpha) * std::log2(1.0 - alpha);
  out.max_radius = std::log2(peak);
  out.gap = ((dd - 1.0) * (1.0 - alpha) / dd) * std::log2((1.0 - alpha + dd * alpha) / (1.0 - alpha));
  return out;
}

}  // namespace cqbounds
