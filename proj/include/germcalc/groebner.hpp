#ifndef GERMCALC_GROEBNER_HPP
#define GERMCALC_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "germcalc/dim.hpp"
#include "germcalc/poly.hpp"
#include "germcalc/ring.hpp"

namespace germcalc {

// Order on the (monomial, component) pairs of a free module R^k. The
// component tiebreak is fixed: the LOWER index is the greater position.
// PositionOverTerm therefore makes component 0 strictly greatest, which is
// exactly the elimination shape the modulo construction needs.
class ModuleOrder {
 public:
  enum class Scheme { term_over_position, position_over_term };

  ModuleOrder(MonomialOrder base, Scheme scheme)
      : base_(std::move(base)), scheme_(scheme) {}

  const MonomialOrder& base() const { return base_; }
  Scheme scheme() const { return scheme_; }

  int cmp(const Monomial& ma, std::uint32_t ca, const Monomial& mb,
          std::uint32_t cb) const {
    if (scheme_ == Scheme::position_over_term) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return base_.cmp(ma, mb);
    }
    int c = base_.cmp(ma, mb);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

 private:
  MonomialOrder base_;
  Scheme scheme_;
};

// Element of R^k.
struct ModuleVector {
  std::vector<Polynomial> components;
  bool operator==(const ModuleVector&) const = default;
};

// Finitely generated ideal with a lazily computed, immutable reduced Gröbner
// basis. Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  // For generators already known to be a reduced Gröbner basis (elimination
  // hands these out); seeds the cache instead of recomputing.
  static Ideal from_groebner_basis(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner_basis() const;

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

class Submodule {
 public:
  Submodule(RingPtr ring, int rank, std::vector<ModuleVector> generators,
            ModuleOrder order);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<ModuleVector>& generators() const { return generators_; }
  const std::vector<ModuleVector>& groebner_basis() const;

 private:
  friend Submodule modulo(const std::vector<Polynomial>& A, const Ideal& B);

  struct Cache {
    std::once_flag flag;
    std::vector<ModuleVector> basis;
  };

  RingPtr ring_;
  int rank_;
  ModuleOrder order_;
  std::vector<ModuleVector> generators_;
  std::shared_ptr<Cache> cache_;
};

// Division with remainder. Reduces the largest reducible term first and picks
// the first divisor in G's stored order; deterministic.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
ModuleVector normal_form(const ModuleVector& v, const std::vector<ModuleVector>& G,
                         const ModuleOrder& order);

// Buchberger with the Gebauer-Moeller pair update, sugar selection, and full
// reduction of new elements. Returns a Gröbner basis that contains the input
// generators' leading-term data (possibly redundant); reduce_gb canonicalizes.
std::vector<Polynomial> buchberger(RingPtr ring, const std::vector<Polynomial>& gens);
std::vector<ModuleVector> buchberger(RingPtr ring, int rank,
                                     const std::vector<ModuleVector>& gens,
                                     const ModuleOrder& order);

// Minimal + tail-reduced + monic + sorted by leading term descending. The
// result is the unique reduced basis, independent of the input's order.
std::vector<Polynomial> reduce_gb(RingPtr ring, std::vector<Polynomial> G);
std::vector<ModuleVector> reduce_gb(RingPtr ring, int rank,
                                    std::vector<ModuleVector> G,
                                    const ModuleOrder& order);

// Test oracle: checks every S-pair reduces to zero, no criteria shortcuts.
bool is_groebner(RingPtr ring, const std::vector<Polynomial>& G);
bool is_groebner(RingPtr ring, int rank, const std::vector<ModuleVector>& G,
                 const ModuleOrder& order);

// Count of standard monomials ((monomial, component) pairs outside the
// leading-term module). Infinite quotients are detected structurally from
// missing pure powers, before any enumeration.
Dim vdim(const Ideal& I);
Dim vdim(const Submodule& S);

// Krull dimension of R/I: the largest number of variables supporting no
// leading monomial, by exhaustive subset search. Unit ideal gives -1.
int krull_dim(const Ideal& I);

// S = {(c_1..c_k) : sum c_i a_i lies in B}, so R^k/S = (<A>+B)/B. Computed by
// eliminating component 0 from {a_i e_0 + e_i} and {b e_0} in R^(1+k).
Submodule modulo(const std::vector<Polynomial>& A, const Ideal& B);

}  // namespace germcalc

#endif
