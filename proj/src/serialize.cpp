#include "qfibell/serialize.hpp"

#include <stdexcept>

namespace qfibell {

namespace {

using nlohmann::json;

void split_parts(const Complex* data, Eigen::Index count, json& re, json& im) {
  re = json::array();
  im = json::array();
  for (Eigen::Index i = 0; i < count; ++i) {
    re.push_back(data[i].real());
    im.push_back(data[i].imag());
  }
}

Matrix matrix_from_parts(const json& j, Eigen::Index rows, Eigen::Index cols) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != rows * cols ||
      static_cast<Eigen::Index>(im.size()) != rows * cols)
    throw std::invalid_argument("serialize: re/im length mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Eigen::Index i = r * cols + c;
      m(r, c) = Complex(re.at(i).get<double>(), im.at(i).get<double>());
    }
  return m;
}

}  // namespace

nlohmann::json state_to_json(const SymmetricState& state) {
  json j;
  j["n"] = state.n_parties();
  if (state.is_pure()) {
    j["kind"] = "pure";
    split_parts(state.amplitudes().data(), state.dim(), j["re"], j["im"]);
  } else {
    j["kind"] = "mixed";
    // Eigen stores column-major; emit row-major as specified
    Matrix rho = state.density().transpose();
    split_parts(rho.data(), rho.size(), j["re"], j["im"]);
  }
  return j;
}

SymmetricState state_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "pure") {
    Matrix col = matrix_from_parts(j, n + 1, 1);
    return SymmetricState::pure(n, Vector(col.col(0)));
  }
  if (kind == "mixed")
    return SymmetricState::mixed(n, matrix_from_parts(j, n + 1, n + 1));
  throw std::invalid_argument("state_from_json: kind must be pure or mixed");
}

nlohmann::json operator_to_json(const CollectiveOperator& op) {
  json j;
  j["n"] = op.n_parties;
  j["kind"] = "operator";
  Matrix m = op.matrix.transpose();
  split_parts(m.data(), m.size(), j["re"], j["im"]);
  return j;
}

CollectiveOperator operator_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  if (j.at("kind").get<std::string>() != "operator")
    throw std::invalid_argument("operator_from_json: kind must be operator");
  return CollectiveOperator::custom(n, matrix_from_parts(j, n + 1, n + 1),
                                    "custom");
}

}  // namespace qfibell
