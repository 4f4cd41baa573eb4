#include "germcalc/ring_map.hpp"

namespace germcalc {

RingMap::RingMap(RingPtr domain, RingPtr codomain, std::vector<Polynomial> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(domain_->nvars()))
    throw Error("ring map needs one image per domain variable");
  for (const Polynomial& g : images_)
    require_same_ring(g.ring(), codomain_, "ring map image");
  powers_.resize(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v)
    powers_[v].push_back(Polynomial::constant(codomain_, 1));
}

Polynomial RingMap::apply(const Polynomial& g) const {
  require_same_ring(g.ring(), domain_, "ring map argument");
  auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& tab = powers_[v];
    while (tab.size() <= e) tab.push_back(tab.back() * images_[v]);
    return tab[e];
  };
  Polynomial acc = Polynomial::zero(codomain_);
  for (const Term& t : g.terms()) {
    Polynomial prod = Polynomial::constant(codomain_, t.coeff);
    for (int v = 0; v < domain_->nvars(); ++v) {
      std::uint32_t e = t.mono.exp(v);
      if (e != 0) prod = prod * power(static_cast<std::size_t>(v), e);
    }
    acc = acc + prod;
  }
  return acc;
}

std::vector<Polynomial> RingMap::apply(const std::vector<Polynomial>& gs) const {
  std::vector<Polynomial> out;
  out.reserve(gs.size());
  for (const Polynomial& g : gs) out.push_back(apply(g));
  return out;
}

}  // namespace germcalc
