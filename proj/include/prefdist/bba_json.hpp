#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <string>
#include <string_view>

#include "prefdist/belief.hpp"

namespace prefdist {

/// Focal-set key of the BBA file format: "1", "2", "3", "1|2", "1|3", "2|3",
/// "1|2|3" (atoms 1 = succ, 2 = tie, 3 = prec, row vs column).
std::string focal_key(FocalSet subset);
FocalSet parse_focal_key(std::string_view key);

/// `{"n": N, "cells": [[{"1": 1.0}, ...], ...]}`. Zero masses are omitted.
nlohmann::json bba_matrix_to_json(const BbaMatrix& matrix);

/// Throws Error(InvalidArgument) on schema violations, UnnormalizedMass or
/// InconsistentMatrix on bad cells; diagnostics name the offending cell.
BbaMatrix bba_matrix_from_json(const nlohmann::json& doc);

/// Row-major nested arrays.
nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);

}  // namespace prefdist
