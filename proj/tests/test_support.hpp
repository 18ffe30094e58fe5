#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "froblab/polynomial.hpp"

namespace testing_support {

inline froblab::Polynomial random_poly(std::mt19937_64& rng, const froblab::RingHandle& ring,
                                       unsigned max_terms, unsigned max_degree) {
  using namespace froblab;
  std::vector<Term> terms;
  unsigned count = 1 + static_cast<unsigned>(rng() % max_terms);
  for (unsigned t = 0; t < count; ++t) {
    Monomial m(ring->nvars());
    unsigned budget = static_cast<unsigned>(rng() % (max_degree + 1));
    for (unsigned k = 0; k < budget; ++k) {
      auto v = static_cast<std::size_t>(rng() % ring->nvars());
      m.set(v, m[v] + 1U);
    }
    terms.push_back({m, static_cast<Coeff>(rng() % ring->characteristic())});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace testing_support
