#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hoc/tensor.hpp"

namespace hoc {

/// Deterministic generator of random test inputs. Every coefficient is a
/// polynomial of total degree <= max_degree with integer coefficients drawn
/// from [-3, 3]. The stream index lets independent checks draw from
/// independent sequences derived from one user seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

  int uniform(int lo, int hi);

  Poly poly(int dim, int max_degree = 2);
  Form form(int dim, int degree, int max_degree = 2);
  MultiVec multivec(int dim, int degree, int max_degree = 2);
  MultiVec vector_field(int dim, int max_degree = 2) { return multivec(dim, 1, max_degree); }

  /// A point with small rational coordinates.
  std::vector<Rational> point(int dim);

 private:
  template <Variance V>
  Tensor<V> tensor(int dim, int degree, int max_degree);

  std::mt19937_64 engine_;
};

}  // namespace hoc
