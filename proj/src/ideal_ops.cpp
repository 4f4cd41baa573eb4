#include "germcalc/ideal_ops.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

namespace germcalc {

namespace {

// Rebuild f in a ring whose variables start at position `offset` of the
// target; positional, names are not consulted.
Polynomial widen(const Polynomial& f, const RingPtr& target, int offset) {
  int n = f.ring()->nvars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int v = 0; v < n; ++v) m.set_exp(v + offset, t.mono.exp(v));
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// Inverse of widen: demands zero exponents below `offset`.
Polynomial narrow(const Polynomial& f, const RingPtr& target, int offset) {
  int n = target->nvars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int v = 0; v < offset; ++v)
      if (t.mono.exp(v) != 0)
        throw Error("cannot project a polynomial that still uses an eliminated variable");
    for (int v = 0; v < n; ++v) m.set_exp(v, t.mono.exp(v + offset));
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

EliminationBlock make_elimination_block(const RingPtr& ring, int kill) {
  int n = ring->nvars();
  if (kill <= 0 || kill >= n)
    throw Error("elimination needs at least one killed and one kept variable");
  MonomialOrder kill_order = ring->order().restrict(0, kill);
  MonomialOrder keep_order = ring->order().restrict(kill, n);
  EliminationBlock blk;
  blk.kill = kill;
  blk.elim_ring = make_ring(ring->field(), ring->var_names(),
                            MonomialOrder::block({kill_order, keep_order}));
  std::vector<std::string> kept_names(ring->var_names().begin() + kill,
                                      ring->var_names().end());
  blk.kept_ring = make_ring(ring->field(), kept_names, keep_order);
  return blk;
}

PolyMatrix jacobian_matrix(const std::vector<Polynomial>& F) {
  if (F.empty()) throw Error("jacobian of an empty polynomial list");
  RingPtr ring = F.front().ring();
  int n = ring->nvars();
  PolyMatrix J(ring, static_cast<int>(F.size()), n);
  for (std::size_t i = 0; i < F.size(); ++i) {
    require_same_ring(F[i].ring(), ring, "jacobian");
    for (int v = 0; v < n; ++v)
      J.at(static_cast<int>(i), v) = F[i].partial_derivative(v);
  }
  return J;
}

namespace {

// Laplace expansion along the rows of the fixed row subset, memoized on the
// remaining column set. Zero entries short-circuit.
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& M, const std::vector<int>& rows)
      : M_(M), rows_(rows) {}

  Polynomial det(std::uint32_t colmask) { return det(0, colmask); }

 private:
  Polynomial det(std::size_t level, std::uint32_t colmask) {
    if (level == rows_.size())
      return Polynomial::constant(M_.ring(), 1);
    auto it = memo_.find(key(level, colmask));
    if (it != memo_.end()) return it->second;
    Polynomial acc = Polynomial::zero(M_.ring());
    int sign = 1;
    for (int c = 0, seen = 0; c < M_.cols(); ++c) {
      if ((colmask & (1u << c)) == 0) continue;
      const Polynomial& entry = M_.at(rows_[level], c);
      if (!entry.is_zero()) {
        Polynomial sub = det(level + 1, colmask & ~(1u << c));
        Polynomial piece = entry * sub;
        acc = sign > 0 ? acc + piece : acc - piece;
      }
      sign = -sign;
      ++seen;
    }
    memo_.emplace(key(level, colmask), acc);
    return acc;
  }

  static std::uint64_t key(std::size_t level, std::uint32_t colmask) {
    return (static_cast<std::uint64_t>(level) << 32) | colmask;
  }

  const PolyMatrix& M_;
  const std::vector<int>& rows_;
  std::map<std::uint64_t, Polynomial> memo_;
};

void subsets(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == r) {
      fn(pick);
      return;
    }
    for (int i = start; i <= n - (r - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Ideal minors(const PolyMatrix& M, int r) {
  if (r <= 0) throw Error("minor size must be positive");
  RingPtr ring = M.ring();
  if (r > std::min(M.rows(), M.cols())) return Ideal(ring, {});
  std::vector<Polynomial> gens;
  subsets(M.rows(), r, [&](const std::vector<int>& rows) {
    MinorExpander expander(M, rows);
    subsets(M.cols(), r, [&](const std::vector<int>& cols) {
      std::uint32_t mask = 0;
      for (int c : cols) mask |= 1u << c;
      Polynomial d = expander.det(mask);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return Ideal(ring, std::move(gens));
}

Ideal fitting_ideal(const PolyMatrix& presentation, int k) {
  if (k < 0) throw Error("fitting index must be nonnegative");
  int size = presentation.rows() - k;
  if (size <= 0)
    return Ideal(presentation.ring(),
                 {Polynomial::constant(presentation.ring(), 1)});
  return minors(presentation, size);
}

Ideal eliminate(const Ideal& I, int kill) {
  RingPtr ring = I.ring();
  int n = ring->nvars();
  if (kill < 0 || kill >= n)
    throw Error("eliminate needs 0 <= kill < nvars");
  if (kill == 0) return I;
  EliminationBlock blk = make_elimination_block(ring, kill);
  std::vector<Polynomial> moved;
  moved.reserve(I.generators().size());
  for (const Polynomial& g : I.generators())
    moved.push_back(widen(g, blk.elim_ring, 0));
  Ideal widened(blk.elim_ring, std::move(moved));
  const auto& gb = widened.groebner_basis();
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    bool lead_killfree = true;
    for (int v = 0; v < kill; ++v)
      if (g.lead_mono().exp(v) != 0) lead_killfree = false;
    if (!lead_killfree) continue;
    // under the block order a kill-free lead forces a kill-free tail;
    // narrow() would throw otherwise
    kept.push_back(narrow(g, blk.kept_ring, kill));
  }
  return Ideal::from_groebner_basis(blk.kept_ring, std::move(kept));
}

Ideal preimage(const RingMap& phi, const Ideal& J) {
  require_same_ring(J.ring(), phi.codomain(), "preimage");
  RingPtr xr = phi.codomain();
  RingPtr yr = phi.domain();
  if (!(xr->field() == yr->field()))
    throw RingMismatchError("preimage needs one coefficient field");
  int nx = xr->nvars();
  int ny = yr->nvars();
  if (nx + ny > kMaxVars)
    throw Error("product ring would exceed the variable cap");
  std::vector<std::string> names = xr->var_names();
  for (const std::string& name : yr->var_names()) names.push_back(name);
  {
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size())
      throw Error("preimage needs disjoint variable names in the two rings");
  }
  RingPtr product =
      make_ring(xr->field(), names,
                MonomialOrder::block({xr->order(), yr->order()}));

  std::vector<Polynomial> gens;
  for (const Polynomial& g : J.generators())
    gens.push_back(widen(g, product, 0));
  for (int i = 0; i < ny; ++i)
    gens.push_back(Polynomial::variable(product, nx + i) -
                   widen(phi.images()[static_cast<std::size_t>(i)], product, 0));

  Ideal big(product, std::move(gens));
  Ideal kept = eliminate(big, nx);
  std::vector<Polynomial> result;
  result.reserve(kept.generators().size());
  for (const Polynomial& g : kept.generators())
    result.push_back(narrow(g, yr, 0));
  return Ideal::from_groebner_basis(yr, std::move(result));
}

Dim relative_quotient_dim(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "relative quotient");
  return vdim(modulo(A.generators(), B));
}

bool ideal_membership(const Polynomial& g, const Ideal& I) {
  require_same_ring(g.ring(), I.ring(), "ideal membership");
  return normal_form(g, I.groebner_basis()).is_zero();
}

}  // namespace germcalc
