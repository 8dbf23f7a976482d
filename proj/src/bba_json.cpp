#include "prefdist/bba_json.hpp"

#include <cstdint>

#include "prefdist/error.hpp"

namespace prefdist {

std::string focal_key(FocalSet subset) {
  if (subset == focal::kEmpty || subset >= kFocalCount) {
    throw Error(ErrorKind::EmptySubset, "no key for subset mask " + std::to_string(subset));
  }
  std::string key;
  for (int atom = 0; atom < 3; ++atom) {
    if (subset & (1u << atom)) {
      if (!key.empty()) key += '|';
      key += static_cast<char>('1' + atom);
    }
  }
  return key;
}

FocalSet parse_focal_key(std::string_view key) {
  for (FocalSet s = 1; s < kFocalCount; ++s) {
    if (focal_key(s) == key) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "invalid focal-set key \"" + std::string(key) +
                                             "\" (expected one of 1, 2, 3, 1|2, 1|3, 2|3, 1|2|3)");
}

nlohmann::json bba_matrix_to_json(const BbaMatrix& matrix) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      nlohmann::json cell = nlohmann::json::object();
      const auto& m = matrix.at(i, j);
      for (FocalSet s = 1; s < kFocalCount; ++s) {
        if (m[s] != 0.0) cell[focal_key(s)] = m[s];
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", matrix.size()}, {"cells", std::move(rows)}};
}

namespace {

std::string where(std::size_t i, std::size_t j) {
  return "cell (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

BbaMatrix bba_matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::InvalidArgument, "BBA document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() <= 0) {
    throw Error(ErrorKind::InvalidArgument, "field \"n\" must be a positive integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  if (!doc.contains("cells") || !doc["cells"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "field \"cells\" must be an array of rows");
  }
  const auto& rows = doc["cells"];
  if (rows.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "\"cells\" has " + std::to_string(rows.size()) + " rows, n is " +
                                                  std::to_string(n));
  }

  std::vector<MassFunction> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " must hold " + std::to_string(n) +
                                                    " cells");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = row[j];
      if (!cell.is_object()) throw Error(ErrorKind::InvalidArgument, where(i, j) + " must be an object");
      MassFunction::Vector masses{};
      for (const auto& [key, value] : cell.items()) {
        FocalSet subset;
        try {
          subset = parse_focal_key(key);
        } catch (const Error& e) {
          throw Error(ErrorKind::InvalidArgument, where(i, j) + ": " + e.message());
        }
        if (!value.is_number()) {
          throw Error(ErrorKind::InvalidArgument, where(i, j) + ": mass of \"" + key + "\" must be a number");
        }
        masses[subset] = value.get<double>();
      }
      try {
        cells.push_back(MassFunction::from_masses(masses));
      } catch (const Error& e) {
        throw Error(e.kind(), where(i, j) + ": " + e.message());
      }
    }
  }
  return BbaMatrix(n, std::move(cells));
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace prefdist
