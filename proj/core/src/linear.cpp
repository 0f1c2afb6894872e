#include "hoc/linear.hpp"

#include <utility>

#include "hoc/errors.hpp"

namespace hoc {
namespace {

// Reduces `a` (with optional augmented column `b`) to reduced row echelon
// form in place; returns the pivot column of each pivot row.
std::vector<int> reduce(RationalMatrix& a, std::vector<Rational>* b) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
      if (b) std::swap((*b)[static_cast<std::size_t>(pivot)], (*b)[static_cast<std::size_t>(row)]);
    }
    const Rational inv = 1 / a.at(row, col);
    for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    if (b) (*b)[static_cast<std::size_t>(row)] *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Rational factor = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(row, c);
      if (b) (*b)[static_cast<std::size_t>(r)] -= factor * (*b)[static_cast<std::size_t>(row)];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix a) { return static_cast<int>(reduce(a, nullptr).size()); }

std::optional<std::vector<Rational>> solve(RationalMatrix a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw ArgumentError("right-hand side length does not match row count");
  std::vector<Rational> rhs = b;
  const auto pivots = reduce(a, &rhs);
  for (int r = static_cast<int>(pivots.size()); r < a.rows(); ++r) {
    if (rhs[static_cast<std::size_t>(r)] != 0) return std::nullopt;
  }
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = rhs[r];
  return x;
}

std::optional<std::vector<Rational>> kernel_vector(RationalMatrix a) {
  const auto pivots = reduce(a, nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < a.cols(); ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()));
  x[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[static_cast<std::size_t>(pivots[r])] = -a.at(static_cast<int>(r), free_col);
  }
  return x;
}

}  // namespace hoc
