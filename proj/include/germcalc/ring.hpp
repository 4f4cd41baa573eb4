#ifndef GERMCALC_RING_HPP
#define GERMCALC_RING_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "germcalc/field.hpp"
#include "germcalc/order.hpp"

namespace germcalc {

/// A polynomial ring F_p[x_1,...,x_n] with a fixed global monomial order.
/// Immutable after construction; share via RingPtr.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> var_names, MonomialOrder order);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(var_names_.size()); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::string& var_name(int v) const { return var_names_[static_cast<std::size_t>(v)]; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable by name, or -1.
  int var_index(std::string_view name) const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && var_names_ == other.var_names_ &&
           order_ == other.order_;
  }
  bool operator!=(const PolyRing& other) const { return !(*this == other); }

 private:
  PrimeField field_;
  std::vector<std::string> var_names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(PrimeField field, std::vector<std::string> var_names,
                  MonomialOrder order);

/// Rings compare by value; distinct objects with equal content are the same ring.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b,
                              const char* context) {
  if (!same_ring(a, b))
    throw RingMismatchError(std::string("ring mismatch in ") + context);
}

}  // namespace germcalc

#endif
