#ifndef GERMCALC_TESTS_SUPPORT_HPP
#define GERMCALC_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "germcalc/poly.hpp"
#include "germcalc/ring.hpp"

namespace germcalc::testsupport {

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  Monomial m;
  for (int v = 0; v < nvars; ++v)
    m.set_exp(v, static_cast<std::uint32_t>(dist(rng)));
  return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring,
                              int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coeff(0, ring->field().p() - 1);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    terms.push_back(Term{random_monomial(rng, ring->nvars(), max_exp), coeff(rng)});
  return Polynomial::from_terms(ring, std::move(terms));
}

inline std::vector<std::uint32_t> random_point(std::mt19937_64& rng,
                                               const RingPtr& ring) {
  std::uniform_int_distribution<std::uint32_t> dist(0, ring->field().p() - 1);
  std::vector<std::uint32_t> pt(static_cast<std::size_t>(ring->nvars()));
  for (auto& x : pt) x = dist(rng);
  return pt;
}

}  // namespace germcalc::testsupport

#endif
