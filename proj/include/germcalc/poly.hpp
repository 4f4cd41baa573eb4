#ifndef GERMCALC_POLY_HPP
#define GERMCALC_POLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "germcalc/ring.hpp"

namespace germcalc {

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
};

/// A multivariate polynomial over the ring's prime field, kept canonical:
/// terms strictly decreasing in the ring's order, no zero coefficients, and
/// the empty term list is the zero polynomial. Two equal polynomials have
/// identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, long long value);
  static Polynomial variable(RingPtr ring, int v);
  static Polynomial term(RingPtr ring, std::uint32_t coeff, const Monomial& mono);
  /// Canonicalizes: sorts, combines equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead_term() const;
  const Monomial& lead_mono() const { return lead_term().mono; }
  std::uint32_t lead_coeff() const { return lead_term().coeff; }

  Polynomial operator-() const;
  Polynomial& negate();

  /// Multiplies by coeff * mono.
  Polynomial mono_mul(std::uint32_t coeff, const Monomial& mono) const;
  Polynomial scalar_mul(std::uint32_t coeff) const;
  Polynomial monic() const;

  Polynomial pow(std::uint32_t k) const;

  Polynomial partial_derivative(int v) const;

  /// Exact evaluation at a point, one field element per variable.
  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Result of a weighted-homogeneity test.
struct HomogeneityCheck {
  enum class Status { zero, homogeneous, non_homogeneous };
  Status status = Status::zero;
  long long degree = 0;       // meaningful when homogeneous
  Monomial first, second;     // two terms of different weighted degree otherwise

  bool is_homogeneous() const { return status == Status::homogeneous; }
};

/// Weighted degree of f: the common weight-degree of all terms, when it
/// exists. The zero polynomial has no defined degree (Status::zero), which is
/// distinct from being non-homogeneous.
HomogeneityCheck weighted_degree(const Polynomial& f,
                                 std::span<const std::uint32_t> weights);

long long monomial_weighted_degree(const Monomial& m,
                                   std::span<const std::uint32_t> weights);

}  // namespace germcalc

#endif
