#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace lens {

using Scalar = float;
using Vec = Eigen::VectorX<Scalar>;
using RowVec = Eigen::RowVectorX<Scalar>;
// Row-major so on-disk row-major tensor data maps straight into matrices.
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

// Bad flags, task files, or component indices. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing/ill-formed tensors, containers, tokenizer files. CLI exit code 3.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dataset and prompt problems. CLI exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lens
