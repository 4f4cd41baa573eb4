#include "germcalc/order.hpp"

#include <string>

namespace germcalc {

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<std::uint32_t> weights) {
  if (weights.empty() || weights.size() > static_cast<std::size_t>(kMaxVars))
    throw Error("order needs between 1 and " + std::to_string(kMaxVars) + " weights");
  for (std::uint32_t w : weights)
    if (w == 0) throw Error("order weights must be positive");
  MonomialOrder o;
  o.nvars_ = static_cast<int>(weights.size());
  Part part;
  part.lex = false;
  part.lo = 0;
  part.hi = o.nvars_;
  part.weights = std::move(weights);
  o.parts_.push_back(std::move(part));
  return o;
}

MonomialOrder MonomialOrder::degrevlex(int nvars) {
  return weighted_degrevlex(std::vector<std::uint32_t>(static_cast<std::size_t>(nvars), 1));
}

MonomialOrder MonomialOrder::lex(int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw Error("order needs between 1 and " + std::to_string(kMaxVars) + " variables");
  MonomialOrder o;
  o.nvars_ = nvars;
  Part part;
  part.lex = true;
  part.lo = 0;
  part.hi = nvars;
  o.parts_.push_back(std::move(part));
  return o;
}

MonomialOrder MonomialOrder::block(const std::vector<MonomialOrder>& subs) {
  if (subs.empty()) throw Error("block order needs at least one sub-order");
  MonomialOrder o;
  int offset = 0;
  for (const MonomialOrder& sub : subs) {
    for (Part part : sub.parts_) {
      part.lo += offset;
      part.hi += offset;
      o.parts_.push_back(std::move(part));
    }
    offset += sub.nvars_;
  }
  if (offset > kMaxVars)
    throw Error("block order exceeds " + std::to_string(kMaxVars) + " variables");
  o.nvars_ = offset;
  return o;
}

namespace {

int cmp_part(const MonomialOrder::Part& part, const Monomial& a, const Monomial& b) {
  if (part.lex) {
    for (int v = part.lo; v < part.hi; ++v) {
      int d = static_cast<int>(a.exp(v)) - static_cast<int>(b.exp(v));
      if (d != 0) return d;
    }
    return 0;
  }
  long long da = 0, db = 0;
  for (int v = part.lo; v < part.hi; ++v) {
    da += static_cast<long long>(part.weights[v - part.lo]) * a.exp(v);
    db += static_cast<long long>(part.weights[v - part.lo]) * b.exp(v);
  }
  if (da != db) return da < db ? -1 : 1;
  // equal weighted degree: larger exponent at the last differing variable loses
  for (int v = part.hi - 1; v >= part.lo; --v) {
    int d = static_cast<int>(a.exp(v)) - static_cast<int>(b.exp(v));
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  for (const Part& part : parts_) {
    int c = cmp_part(part, a, b);
    if (c != 0) return c;
  }
  return 0;
}

long long MonomialOrder::sugar_degree(const Monomial& m) const {
  long long d = 0;
  for (const Part& part : parts_) {
    if (part.lex) {
      for (int v = part.lo; v < part.hi; ++v) d += m.exp(v);
    } else {
      for (int v = part.lo; v < part.hi; ++v)
        d += static_cast<long long>(part.weights[v - part.lo]) * m.exp(v);
    }
  }
  return d;
}

MonomialOrder MonomialOrder::restrict(int lo, int hi) const {
  for (const Part& part : parts_) {
    if (lo >= part.lo && hi <= part.hi) {
      if (part.lex) return lex(hi - lo);
      std::vector<std::uint32_t> w(part.weights.begin() + (lo - part.lo),
                                   part.weights.begin() + (hi - part.lo));
      return weighted_degrevlex(std::move(w));
    }
  }
  throw Error("order restriction must stay within one block");
}

int cmp_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.cmp(a, b);
}

}  // namespace germcalc
