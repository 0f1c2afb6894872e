#include "hoc/sampler.hpp"

namespace hoc {

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  // seed_seq mixing is fully specified by the standard, so sequences are
  // identical across standard library implementations.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

int Sampler::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Poly Sampler::poly(int dim, int max_degree) {
  Poly p(dim);
  for (const auto& m : monomials_up_to(dim, max_degree, /*include_one=*/true)) {
    const int c = uniform(-3, 3);
    if (c != 0) p += Poly::monomial(dim, m, c);
  }
  return p;
}

template <Variance V>
Tensor<V> Sampler::tensor(int dim, int degree, int max_degree) {
  Tensor<V> t(dim, degree);
  for (const auto& idx : multi_indices(dim, degree)) t.add_term(idx, poly(dim, max_degree));
  return t;
}

Form Sampler::form(int dim, int degree, int max_degree) {
  return tensor<Variance::covariant>(dim, degree, max_degree);
}

MultiVec Sampler::multivec(int dim, int degree, int max_degree) {
  return tensor<Variance::contravariant>(dim, degree, max_degree);
}

std::vector<Rational> Sampler::point(int dim) {
  std::vector<Rational> p;
  p.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) p.push_back(make_rational(uniform(-3, 3), uniform(1, 3)));
  return p;
}

}  // namespace hoc
