#ifndef GERMCALC_RING_MAP_HPP
#define GERMCALC_RING_MAP_HPP

#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

// Ring homomorphism determined by images of the domain variables.  For a
// polynomial map f the pullback f* has domain = target-coordinate ring and
// codomain = source-coordinate ring, with images = the components of f.
class RingMap {
 public:
  RingMap(RingPtr domain, RingPtr codomain, std::vector<Polynomial> images);

  const RingPtr& domain() const { return domain_; }
  const RingPtr& codomain() const { return codomain_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& g) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& gs) const;

 private:
  RingPtr domain_;
  RingPtr codomain_;
  std::vector<Polynomial> images_;
  // incremental power cache, one table per domain variable
  mutable std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace germcalc

#endif
