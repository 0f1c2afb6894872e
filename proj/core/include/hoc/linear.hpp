#pragma once

#include <optional>
#include <vector>

#include "hoc/rational.hpp"

namespace hoc {

/// Dense row-major matrix over the rationals, only as large as the small
/// systems built from constant-coefficient forms need.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

int rank(RationalMatrix a);

/// Some x with A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve(RationalMatrix a, const std::vector<Rational>& b);

/// A nonzero vector in the kernel of A, or nullopt when A has full column rank.
std::optional<std::vector<Rational>> kernel_vector(RationalMatrix a);

}  // namespace hoc
