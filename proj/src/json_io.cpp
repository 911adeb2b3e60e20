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

#include "cqbounds/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cqbounds/errors.hpp"

namespace cqbounds {
namespace {

Eigen::MatrixXd real_block(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) throw ParseError(context + ": expected a non-empty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().is_array() ? j.front().size() : 0);
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw DimensionError(context + ": ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) throw ParseError(context + ": matrix entries must be numbers");
      out(i, k) = v.get<double>();
    }
  }
  return out;
}

Json real_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  return Json{{"re", real_to_json(m.real())}, {"im", real_to_json(m.imag())}};
}

Matrix matrix_from_json(const Json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("re")) throw ParseError(context + ": expected {\"re\", \"im\"}");
  const Eigen::MatrixXd re = real_block(j.at("re"), context + ".re");
  if (re.rows() != re.cols()) throw DimensionError(context + ": matrix is not square");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_block(j.at("im"), context + ".im");
    if (im.rows() != re.rows() || im.cols() != re.cols())
      throw DimensionError(context + ": re and im differ in shape");
  }
  Matrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

DensityOperator state_from_json(const Json& j, const std::string& label) {
  const Matrix m = matrix_from_json(j, label);
  if (max_abs_diff(m, m.adjoint()) > kIngestTolerance)
    throw DomainError("state '" + label + "' is not Hermitian");
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kIngestTolerance)
    throw DomainError("state '" + label + "' does not have unit trace");
  try {
    return DensityOperator(HermitianMatrix(m), DensityOperator::Normalization::kRenormalize);
  } catch (const DomainError& e) {
    throw DomainError("state '" + label + "': " + e.what());
  }
}

Json state_to_json(const DensityOperator& rho) { return matrix_to_json(rho.matrix()); }

Channel channel_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("channel: expected an object");
  if (j.contains("builtin")) {
    const Json& b = j.at("builtin");
    const std::string kind = b.value("kind", "");
    const int d = b.value("d", 0);
    if (kind == "depolarizing") return depolarizing(d, b.value("alpha", -1.0));
    if (kind == "noiseless") return noiseless(d);
    throw ParseError("channel: unknown builtin kind '" + kind + "'");
  }
  if (!j.contains("inputs") || !j.at("inputs").is_array())
    throw ParseError("channel: missing \"inputs\" list");
  std::vector<std::string> labels;
  std::vector<DensityOperator> outputs;
  for (const Json& input : j.at("inputs")) {
    if (!input.is_object() || !input.contains("label") || !input.contains("state"))
      throw ParseError("channel: every input needs \"label\" and \"state\"");
    labels.push_back(input.at("label").get<std::string>());
    outputs.push_back(state_from_json(input.at("state"), labels.back()));
  }
  if (j.contains("dim")) {
    const auto dim = j.at("dim").get<Eigen::Index>();
    for (std::size_t x = 0; x < outputs.size(); ++x)
      if (outputs[x].dim() != dim)
        throw DimensionError("channel: state '" + labels[x] + "' does not match \"dim\"");
  }
  return Channel(std::move(labels), std::move(outputs));
}

Json channel_to_json(const Channel& ch) {
  Json inputs = Json::array();
  for (std::size_t x = 0; x < ch.size(); ++x)
    inputs.push_back({{"label", ch.label(x)}, {"state", state_to_json(ch.output(x))}});
  return Json{{"dim", ch.dim()}, {"inputs", std::move(inputs)}};
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": malformed JSON";
    throw ParseError(msg.str(), line, column);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

}  // namespace cqbounds
