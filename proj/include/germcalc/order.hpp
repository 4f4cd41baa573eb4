#ifndef GERMCALC_ORDER_HPP
#define GERMCALC_ORDER_HPP

#include <cstdint>
#include <vector>

#include "germcalc/monomial.hpp"

namespace germcalc {

/// A global monomial order: weighted degree-reverse-lexicographic with
/// positive weights, pure lexicographic, or a block product of those over
/// contiguous variable ranges (earlier blocks compare first).
///
/// Degrevlex tiebreak convention: among monomials of equal weighted degree,
/// the one with the larger exponent at the last differing variable is the
/// SMALLER one. With weights (1,...,1) this is the standard degrevlex.
class MonomialOrder {
 public:
  struct Part {
    bool lex = false;            // false: weighted degrevlex
    int lo = 0, hi = 0;          // variable range [lo, hi)
    std::vector<std::uint32_t> weights;  // size hi-lo when !lex, else empty

    bool operator==(const Part&) const = default;
  };

  static MonomialOrder weighted_degrevlex(std::vector<std::uint32_t> weights);
  static MonomialOrder degrevlex(int nvars);
  static MonomialOrder lex(int nvars);

  /// Concatenates sub-orders into a block order; variable ranges are shifted
  /// so the i-th sub-order governs the i-th group of variables.
  static MonomialOrder block(const std::vector<MonomialOrder>& subs);

  int nvars() const { return nvars_; }
  const std::vector<Part>& parts() const { return parts_; }
  bool is_block() const { return parts_.size() > 1; }

  /// Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
  int cmp(const Monomial& a, const Monomial& b) const;

  /// Degree used for sugar bookkeeping and homogeneity: the sum of per-part
  /// weighted degrees (lex parts count each variable with weight 1).
  long long sugar_degree(const Monomial& m) const;

  /// Restriction to a sub-range of variables, re-indexed from 0.
  /// Only valid when [lo, hi) lies within a single part.
  MonomialOrder restrict(int lo, int hi) const;

  bool operator==(const MonomialOrder& other) const = default;

 private:
  MonomialOrder() = default;

  int nvars_ = 0;
  std::vector<Part> parts_;
};

int cmp_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace germcalc

#endif
