#include "germcalc/poly.hpp"

#include <algorithm>

namespace germcalc {

namespace {

// Merge two canonical term lists with coefficients scaled by sa/sb.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool negate_b) {
  const PrimeField& F = ring.field();
  const MonomialOrder& order = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.cmp(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (negate_b) t.coeff = F.neg(t.coeff);
      out.push_back(t);
    } else {
      std::uint32_t s = negate_b ? F.sub(a[i].coeff, b[j].coeff)
                                 : F.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Term t = b[j];
    if (negate_b) t.coeff = F.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, long long value) {
  Polynomial p(ring);
  std::uint32_t c = ring->field().reduce(value);
  if (c != 0) p.terms_.push_back(Term{Monomial::one(), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int v) {
  if (v < 0 || v >= ring->nvars()) throw Error("variable index out of range");
  Monomial m;
  m.set_exp(v, 1);
  Polynomial p(ring);
  p.terms_.push_back(Term{m, 1});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, std::uint32_t coeff, const Monomial& mono) {
  Polynomial p(ring);
  std::uint32_t c = coeff % ring->field().p();
  if (c != 0) p.terms_.push_back(Term{mono, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order();
  const PrimeField& F = ring->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.cmp(a.mono, b.mono) > 0;
  });
  Polynomial p(ring);
  for (Term& t : terms) {
    std::uint32_t c = t.coeff % F.p();
    if (c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      std::uint32_t s = F.add(p.terms_.back().coeff, c);
      if (s == 0)
        p.terms_.pop_back();
      else
        p.terms_.back().coeff = s;
    } else {
      p.terms_.push_back(Term{t.mono, c});
    }
  }
  return p;
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  p.negate();
  return p;
}

Polynomial& Polynomial::negate() {
  const PrimeField& F = ring_->field();
  for (Term& t : terms_) t.coeff = F.neg(t.coeff);
  return *this;
}

Polynomial Polynomial::mono_mul(std::uint32_t coeff, const Monomial& mono) const {
  const PrimeField& F = ring_->field();
  std::uint32_t c = coeff % F.p();
  Polynomial p(ring_);
  if (c == 0) return p;
  int nvars = ring_->nvars();
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::uint32_t tc = F.mul(t.coeff, c);
    if (tc != 0) p.terms_.push_back(Term{Monomial::mul(t.mono, mono, nvars), tc});
  }
  return p;
}

Polynomial Polynomial::scalar_mul(std::uint32_t coeff) const {
  return mono_mul(coeff, Monomial::one());
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scalar_mul(ring_->field().inv(lead_coeff()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial addition");
  Polynomial p(a.ring_);
  p.terms_ = merge_terms(*a.ring_, a.terms_, b.terms_, false);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial subtraction");
  Polynomial p(a.ring_);
  p.terms_ = merge_terms(*a.ring_, a.terms_, b.terms_, true);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  // Divide and conquer keeps the sort buffers bounded on big operands.
  constexpr std::size_t kDirectLimit = 1u << 20;
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring_);
  if (a.size() * b.size() > kDirectLimit) {
    const Polynomial& big = a.size() >= b.size() ? a : b;
    const Polynomial& small = a.size() >= b.size() ? b : a;
    std::size_t half = big.size() / 2;
    Polynomial lo(big.ring_), hi(big.ring_);
    hi.terms_.assign(big.terms_.begin(), big.terms_.begin() + half);
    lo.terms_.assign(big.terms_.begin() + half, big.terms_.end());
    return hi * small + lo * small;
  }
  const PrimeField& F = a.ring_->field();
  int nvars = a.ring_->nvars();
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) {
      std::uint32_t c = F.mul(ta.coeff, tb.coeff);
      if (c != 0)
        products.push_back(Term{Monomial::mul(ta.mono, tb.mono, nvars), c});
    }
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial acc = Polynomial::constant(ring_, 1);
  for (std::uint32_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Polynomial Polynomial::partial_derivative(int v) const {
  if (v < 0 || v >= ring_->nvars())
    throw Error("unknown variable index in partial derivative");
  const PrimeField& F = ring_->field();
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::uint32_t e = t.mono.exp(v);
    if (e == 0) continue;
    std::uint32_t c = F.mul(t.coeff, e % F.p());
    if (c == 0) continue;  // the characteristic can kill a term
    Term d = t;
    d.coeff = c;
    d.mono.set_exp(v, e - 1);
    p.terms_.push_back(d);
  }
  return p;
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != static_cast<std::size_t>(ring_->nvars()))
    throw Error("evaluation point has wrong length");
  const PrimeField& F = ring_->field();
  int nvars = ring_->nvars();
  // power tables per variable up to the maximal exponent present
  std::vector<std::vector<std::uint32_t>> powers(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v) {
    std::uint32_t max_e = 0;
    for (const Term& t : terms_) max_e = std::max<std::uint32_t>(max_e, t.mono.exp(v));
    auto& tab = powers[static_cast<std::size_t>(v)];
    tab.resize(max_e + 1);
    tab[0] = 1 % F.p();
    for (std::uint32_t e = 1; e <= max_e; ++e) tab[e] = F.mul(tab[e - 1], point[v]);
  }
  std::uint32_t acc = 0;
  for (const Term& t : terms_) {
    std::uint32_t val = t.coeff;
    for (int v = 0; v < nvars; ++v) {
      std::uint32_t e = t.mono.exp(v);
      if (e != 0) val = F.mul(val, powers[static_cast<std::size_t>(v)][e]);
    }
    acc = F.add(acc, val);
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff ||
        terms_[i].mono != other.terms_[i].mono)
      return false;
  return true;
}

long long monomial_weighted_degree(const Monomial& m,
                                   std::span<const std::uint32_t> weights) {
  long long d = 0;
  for (std::size_t v = 0; v < weights.size(); ++v)
    d += static_cast<long long>(weights[v]) * m.exp(static_cast<int>(v));
  return d;
}

HomogeneityCheck weighted_degree(const Polynomial& f,
                                 std::span<const std::uint32_t> weights) {
  HomogeneityCheck result;
  if (f.is_zero()) {
    result.status = HomogeneityCheck::Status::zero;
    return result;
  }
  if (weights.size() != static_cast<std::size_t>(f.ring()->nvars()))
    throw Error("weight vector length does not match the ring");
  const auto& terms = f.terms();
  long long d0 = monomial_weighted_degree(terms[0].mono, weights);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    long long d = monomial_weighted_degree(terms[i].mono, weights);
    if (d != d0) {
      result.status = HomogeneityCheck::Status::non_homogeneous;
      result.first = terms[0].mono;
      result.second = terms[i].mono;
      return result;
    }
  }
  result.status = HomogeneityCheck::Status::homogeneous;
  result.degree = d0;
  return result;
}

}  // namespace germcalc
