#include "germcalc/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <queue>
#include <unordered_map>

#include "germcalc/deadline.hpp"

namespace germcalc {

namespace {

// The engine below works on free-module elements for ideals and submodules
// alike; an ideal is the rank-1 case with every component index 0.

struct Entry {
  Monomial mono;
  std::uint32_t comp;
  std::uint32_t coeff;
};

// strictly descending under the module order
using Entries = std::vector<Entry>;

Entries poly_entries(const Polynomial& f, std::uint32_t comp) {
  Entries e;
  e.reserve(f.size());
  for (const Term& t : f.terms()) e.push_back(Entry{t.mono, comp, t.coeff});
  return e;
}

Entries vector_entries(const ModuleVector& v, const ModuleOrder& order) {
  Entries all;
  for (std::size_t c = 0; c < v.components.size(); ++c)
    for (const Term& t : v.components[c].terms())
      all.push_back(Entry{t.mono, static_cast<std::uint32_t>(c), t.coeff});
  std::sort(all.begin(), all.end(), [&](const Entry& a, const Entry& b) {
    return order.cmp(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return all;
}

Polynomial entries_poly(const RingPtr& ring, const Entries& e) {
  std::vector<Term> terms;
  terms.reserve(e.size());
  for (const Entry& t : e) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_terms(ring, std::move(terms));
}

ModuleVector entries_vector(const RingPtr& ring, int rank, const Entries& e) {
  std::vector<std::vector<Term>> per(static_cast<std::size_t>(rank));
  for (const Entry& t : e) per[t.comp].push_back(Term{t.mono, t.coeff});
  ModuleVector v;
  v.components.reserve(per.size());
  for (auto& terms : per)
    v.components.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return v;
}

class Engine {
 public:
  Engine(RingPtr ring, ModuleOrder order, int rank)
      : ring_(std::move(ring)),
        order_(std::move(order)),
        field_(ring_->field()),
        nvars_(ring_->nvars()),
        rank_(rank) {}

  struct Elem {
    Entries e;  // monic
    long long sugar = 0;
    std::uint64_t mask = 0;
    bool alive = true;

    const Monomial& lm() const { return e.front().mono; }
    std::uint32_t comp() const { return e.front().comp; }
    std::uint32_t lc() const { return e.front().coeff; }
  };

  // Sorted merge of descending entry lists, combining equal positions.
  Entries merge(const Entries& a, const Entries& b, bool negate_b) const {
    Entries out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = order_.cmp(a[i].mono, a[i].comp, b[j].mono, b[j].comp);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        Entry t = b[j++];
        if (negate_b) t.coeff = field_.neg(t.coeff);
        out.push_back(t);
      } else {
        std::uint32_t s = negate_b ? field_.sub(a[i].coeff, b[j].coeff)
                                   : field_.add(a[i].coeff, b[j].coeff);
        if (s != 0) out.push_back(Entry{a[i].mono, a[i].comp, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      Entry t = b[j];
      if (negate_b) t.coeff = field_.neg(t.coeff);
      out.push_back(t);
    }
    return out;
  }

  Entries mono_mul(const Entries& e, std::uint32_t coeff, const Monomial& m,
                   std::size_t skip = 0) const {
    Entries out;
    out.reserve(e.size() - skip);
    for (std::size_t i = skip; i < e.size(); ++i)
      out.push_back(Entry{Monomial::mul(e[i].mono, m, nvars_),
                          e[i].comp, field_.mul(e[i].coeff, coeff)});
    return out;
  }

  Entries monic(Entries e) const {
    if (e.empty() || e.front().coeff == 1) return e;
    std::uint32_t s = field_.inv(e.front().coeff);
    for (Entry& t : e) t.coeff = field_.mul(t.coeff, s);
    return e;
  }

  long long element_sugar(const Entries& e) const {
    long long s = 0;
    for (const Entry& t : e)
      s = std::max(s, order_.base().sugar_degree(t.mono));
    return s;
  }

  // Geobucket accumulator: bucket i holds at most 4^(i+1) entries, stored
  // ascending so the head is back(). Keeps reduction quadratic blowup at bay.
  class Geobucket {
   public:
    explicit Geobucket(const Engine& eng) : eng_(eng) {}

    void add(Entries v) {  // v descending
      if (v.empty()) return;
      std::reverse(v.begin(), v.end());
      std::size_t i = 0, cap = 4;
      while (cap < v.size()) {
        cap *= 4;
        ++i;
      }
      for (;;) {
        if (i >= buckets_.size()) {
          buckets_.push_back(std::move(v));
          return;
        }
        if (buckets_[i].empty()) {
          buckets_[i] = std::move(v);
          return;
        }
        v = merge_asc(buckets_[i], v);
        buckets_[i].clear();
        if (v.size() <= cap) {
          buckets_[i] = std::move(v);
          return;
        }
        cap *= 4;
        ++i;
      }
    }

    std::optional<Entry> pop_lead() {
      for (;;) {
        int best = -1;
        for (std::size_t b = 0; b < buckets_.size(); ++b) {
          if (buckets_[b].empty()) continue;
          if (best < 0 ||
              eng_.order_.cmp(buckets_[b].back().mono, buckets_[b].back().comp,
                              buckets_[static_cast<std::size_t>(best)].back().mono,
                              buckets_[static_cast<std::size_t>(best)].back().comp) > 0)
            best = static_cast<int>(b);
        }
        if (best < 0) return std::nullopt;
        Entry lead = buckets_[static_cast<std::size_t>(best)].back();
        buckets_[static_cast<std::size_t>(best)].pop_back();
        for (std::size_t b = 0; b < buckets_.size(); ++b) {
          if (buckets_[b].empty()) continue;
          const Entry& h = buckets_[b].back();
          if (h.comp == lead.comp && h.mono == lead.mono) {
            lead.coeff = eng_.field_.add(lead.coeff, h.coeff);
            buckets_[b].pop_back();
          }
        }
        if (lead.coeff != 0) return lead;
      }
    }

   private:
    Entries merge_asc(const Entries& a, const Entries& b) const {
      Entries out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        int c = eng_.order_.cmp(a[i].mono, a[i].comp, b[j].mono, b[j].comp);
        if (c < 0) {
          out.push_back(a[i++]);
        } else if (c > 0) {
          out.push_back(b[j++]);
        } else {
          std::uint32_t s = eng_.field_.add(a[i].coeff, b[j].coeff);
          if (s != 0) out.push_back(Entry{a[i].mono, a[i].comp, s});
          ++i;
          ++j;
        }
      }
      for (; i < a.size(); ++i) out.push_back(a[i]);
      for (; j < b.size(); ++j) out.push_back(b[j]);
      return out;
    }

    const Engine& eng_;
    std::vector<Entries> buckets_;
  };

  struct NFResult {
    Entries remainder;
    long long sugar;
  };

  // Division by the elements listed in reducer_index, first divisor wins.
  NFResult normal_form(Entries f, long long sugar,
                       const std::vector<Elem>& reducers,
                       const std::vector<std::uint32_t>& reducer_index) const {
    Geobucket bucket(*this);
    bucket.add(std::move(f));
    Entries remainder;
    std::size_t steps = 0;
    while (auto t = bucket.pop_lead()) {
      if ((++steps & 1023u) == 0) check_deadline();
      std::uint64_t tmask = t->mono.divmask(nvars_);
      const Elem* g = nullptr;
      for (std::uint32_t idx : reducer_index) {
        const Elem& cand = reducers[idx];
        if (cand.comp() != t->comp) continue;
        if ((cand.mask & ~tmask) != 0) continue;
        if (Monomial::divides(cand.lm(), t->mono, nvars_)) {
          g = &cand;
          break;
        }
      }
      if (!g) {
        remainder.push_back(*t);
        continue;
      }
      Monomial q = Monomial::quotient(t->mono, g->lm(), nvars_);
      std::uint32_t c = field_.mul(t->coeff, field_.inv(g->lc()));
      bucket.add(mono_mul(g->e, field_.neg(c), q, 1));
      sugar = std::max(sugar, g->sugar + order_.base().sugar_degree(q));
    }
    return NFResult{std::move(remainder), sugar};
  }

  Entries s_vector(const Elem& f, const Elem& g, const Monomial& lcm) const {
    Monomial qf = Monomial::quotient(lcm, f.lm(), nvars_);
    Monomial qg = Monomial::quotient(lcm, g.lm(), nvars_);
    return merge(mono_mul(f.e, 1, qf), mono_mul(g.e, 1, qg), true);
  }

  // --- Buchberger ---

  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    long long sugar;
  };

  // heap priority: sugar, then lcm ascending in the base order, then indices
  bool pair_after(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    int c = order_.base().cmp(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.comp != b.comp) return a.comp > b.comp;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }

  static std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  long long pair_sugar(const Elem& a, const Elem& b, const Monomial& lcm) const {
    const MonomialOrder& base = order_.base();
    long long sa = a.sugar + base.sugar_degree(lcm) - base.sugar_degree(a.lm());
    long long sb = b.sugar + base.sugar_degree(lcm) - base.sugar_degree(b.lm());
    return std::max(sa, sb);
  }

  std::vector<Elem> run_buchberger(std::vector<Entries> gens) {
    for (Entries& g : gens) {
      if (g.empty()) continue;
      Entries e = monic(std::move(g));
      append_element(std::move(e));
    }
    while (!heap_.empty()) {
      Pair p = heap_.top();
      heap_.pop();
      auto it = pending_.find(pair_key(p.i, p.j));
      if (it == pending_.end()) continue;
      pending_.erase(it);
      check_deadline();
      Entries s = s_vector(basis_[p.i], basis_[p.j], p.lcm);
      NFResult nf = normal_form(std::move(s), p.sugar, basis_, all_indices_);
      if (!nf.remainder.empty())
        append_element(monic(std::move(nf.remainder)), nf.sugar);
    }
    return std::move(basis_);
  }

 private:
  void append_element(Entries e, std::optional<long long> sugar = std::nullopt) {
    Elem elem;
    elem.sugar = sugar ? *sugar : element_sugar(e);
    elem.mask = e.front().mono.divmask(nvars_);
    elem.e = std::move(e);
    basis_.push_back(std::move(elem));
    std::uint32_t t = static_cast<std::uint32_t>(basis_.size() - 1);
    // keep reducers sorted shortest-first: reducing with few-term elements
    // limits fill-in, and ties fall back to insertion order
    auto by_size = [this](std::uint32_t a, std::uint32_t b) {
      return basis_[a].e.size() < basis_[b].e.size();
    };
    all_indices_.insert(
        std::upper_bound(all_indices_.begin(), all_indices_.end(), t, by_size),
        t);
    update_pairs(t);
  }

  // Gebauer-Moeller update for the arrival of basis_[t].
  void update_pairs(std::uint32_t t) {
    const Elem& h = basis_[t];
    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < t; ++i) {
      const Elem& g = basis_[i];
      if (!g.alive || g.comp() != h.comp()) continue;
      Cand c;
      c.i = i;
      c.lcm = Monomial::lcm(g.lm(), h.lm(), nvars_);
      // the product criterion is sound for ideals only
      c.coprime = rank_ == 1 && Monomial::coprime(g.lm(), h.lm(), nvars_);
      cands.push_back(std::move(c));
    }

    // drop candidates whose lcm is properly divided by another candidate's
    for (Cand& a : cands) {
      for (const Cand& b : cands) {
        if (a.dead || b.dead || a.i == b.i) continue;
        if (b.lcm != a.lcm && Monomial::divides(b.lcm, a.lcm, nvars_)) {
          a.dead = true;
          break;
        }
      }
    }
    // among equal lcms keep a single pair, preferring a coprime one, which the
    // product criterion then removes altogether
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].dead) continue;
      bool group_coprime = cands[a].coprime;
      std::size_t keeper = a;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].dead || cands[b].lcm != cands[a].lcm) continue;
        cands[b].dead = true;
        if (cands[b].coprime) group_coprime = true;
      }
      if (group_coprime) cands[keeper].dead = true;
    }

    // chain criterion against the already queued pairs
    for (auto it = pending_.begin(); it != pending_.end();) {
      const Pair& p = it->second;
      bool prune = false;
      if (p.comp == h.comp() && Monomial::divides(h.lm(), p.lcm, nvars_)) {
        Monomial li = Monomial::lcm(basis_[p.i].lm(), h.lm(), nvars_);
        Monomial lj = Monomial::lcm(basis_[p.j].lm(), h.lm(), nvars_);
        prune = li != p.lcm && lj != p.lcm;
      }
      if (prune)
        it = pending_.erase(it);
      else
        ++it;
    }

    for (Cand& c : cands) {
      if (c.dead) continue;
      Pair p;
      p.i = c.i;
      p.j = t;
      p.lcm = std::move(c.lcm);
      p.comp = h.comp();
      p.sugar = pair_sugar(basis_[c.i], h, p.lcm);
      pending_.emplace(pair_key(p.i, p.j), p);
      heap_.push(std::move(p));
    }

    for (std::uint32_t i = 0; i < t; ++i) {
      Elem& g = basis_[i];
      if (g.alive && g.comp() == h.comp() &&
          Monomial::divides(h.lm(), g.lm(), nvars_))
        g.alive = false;
    }
  }

 public:
  RingPtr ring_;
  ModuleOrder order_;
  PrimeField field_;
  int nvars_;
  int rank_;

  std::vector<Elem> basis_;
  std::vector<std::uint32_t> all_indices_;

 private:
  struct PairAfter {
    const Engine* eng;
    bool operator()(const Pair& a, const Pair& b) const {
      return eng->pair_after(a, b);
    }
  };
  std::priority_queue<Pair, std::vector<Pair>, PairAfter> heap_{PairAfter{this}};
  std::unordered_map<std::uint64_t, Pair> pending_;
};

std::vector<Engine::Elem> make_elems(const Engine& eng,
                                     std::vector<Entries> lists) {
  std::vector<Engine::Elem> elems;
  for (Entries& e : lists) {
    if (e.empty()) continue;
    Engine::Elem elem;
    elem.sugar = eng.element_sugar(e);
    elem.mask = e.front().mono.divmask(eng.nvars_);
    elem.e = std::move(e);
    elems.push_back(std::move(elem));
  }
  return elems;
}

std::vector<std::uint32_t> index_all(std::size_t n) {
  std::vector<std::uint32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  return idx;
}

Entries engine_normal_form(const Engine& eng, Entries f,
                           const std::vector<Engine::Elem>& reducers) {
  return eng
      .normal_form(std::move(f), 0, reducers, index_all(reducers.size()))
      .remainder;
}

bool entries_equal(const Entries& a, const Entries& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].comp != b[i].comp || a[i].coeff != b[i].coeff ||
        a[i].mono != b[i].mono)
      return false;
  return true;
}

// Interreduce to a fixpoint, then normalize. For a Gröbner basis input this
// yields the unique reduced basis; head reduction also absorbs redundant
// generators of non-basis inputs.
std::vector<Entries> engine_reduce_gb(const Engine& eng, std::vector<Entries> G) {
  std::vector<Engine::Elem> elems = make_elems(eng, std::move(G));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size();) {
      std::vector<std::uint32_t> others;
      others.reserve(elems.size() - 1);
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (j != i) others.push_back(static_cast<std::uint32_t>(j));
      Entries r = eng.normal_form(elems[i].e, 0, elems, others).remainder;
      if (entries_equal(r, elems[i].e)) {
        ++i;
        continue;
      }
      changed = true;
      if (r.empty()) {
        elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      elems[i].mask = r.front().mono.divmask(eng.nvars_);
      elems[i].sugar = eng.element_sugar(r);
      elems[i].e = std::move(r);
      ++i;
    }
  }
  std::vector<Entries> out;
  out.reserve(elems.size());
  for (Engine::Elem& e : elems) out.push_back(eng.monic(std::move(e.e)));
  std::sort(out.begin(), out.end(), [&](const Entries& a, const Entries& b) {
    return eng.order_.cmp(a.front().mono, a.front().comp, b.front().mono,
                          b.front().comp) > 0;
  });
  return out;
}

bool engine_is_groebner(const Engine& eng, std::vector<Entries> G) {
  std::vector<Engine::Elem> elems = make_elems(eng, std::move(G));
  auto idx = index_all(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i].comp() != elems[j].comp()) continue;
      Monomial lcm = Monomial::lcm(elems[i].lm(), elems[j].lm(), eng.nvars_);
      Entries s = eng.merge(
          eng.mono_mul(elems[i].e,
                       eng.field_.inv(elems[i].lc()),
                       Monomial::quotient(lcm, elems[i].lm(), eng.nvars_)),
          eng.mono_mul(elems[j].e,
                       eng.field_.inv(elems[j].lc()),
                       Monomial::quotient(lcm, elems[j].lm(), eng.nvars_)),
          true);
      if (!eng.normal_form(std::move(s), 0, elems, idx).remainder.empty())
        return false;
    }
  return true;
}

// ---- staircase counting ----

// Counts monomials in nv variables divisible by no element of L. Pure-power
// bounds are guaranteed by the caller's finiteness check, so segment
// recursion over the last variable terminates.
std::uint64_t staircase_count(std::vector<Monomial> L, int nv) {
  if (nv == 0) return L.empty() ? 1 : 0;
  int v = nv - 1;
  std::uint32_t bound = 0;
  bool have_bound = false;
  for (const Monomial& m : L) {
    if ((m.support(nv) & ~(1u << v)) != 0) continue;
    std::uint32_t e = m.exp(v);
    if (!have_bound || e < bound) {
      bound = e;
      have_bound = true;
    }
  }
  if (!have_bound)
    throw Error("staircase recursion hit a variable without a pure power");
  if (bound == 0) return 0;

  std::vector<std::uint32_t> cuts;
  cuts.push_back(0);
  for (const Monomial& m : L)
    if (m.exp(v) < bound) cuts.push_back(m.exp(v));
  cuts.push_back(bound);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::uint64_t total = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    std::uint32_t e = cuts[k];
    std::vector<Monomial> sub;
    for (const Monomial& m : L) {
      if (m.exp(v) > e) continue;
      Monomial t = m;
      t.set_exp(v, 0);
      sub.push_back(t);
    }
    std::sort(sub.begin(), sub.end(),
              [nv](const Monomial& a, const Monomial& b) {
                for (int u = 0; u < nv; ++u)
                  if (a.exp(u) != b.exp(u)) return a.exp(u) < b.exp(u);
                return false;
              });
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    total += static_cast<std::uint64_t>(cuts[k + 1] - e) *
             staircase_count(std::move(sub), nv - 1);
  }
  return total;
}

// leads per component -> Dim, with the structural infiniteness test
Dim staircase_dim(const std::vector<std::vector<Monomial>>& leads_by_comp,
                  int nvars) {
  std::uint64_t total = 0;
  for (const auto& leads : leads_by_comp) {
    bool unit = false;
    for (const Monomial& m : leads)
      if (m.is_one()) unit = true;
    if (unit) continue;
    for (int v = 0; v < nvars; ++v) {
      bool pure = false;
      for (const Monomial& m : leads)
        if ((m.support(nvars) & ~(1u << v)) == 0 && m.exp(v) > 0) pure = true;
      if (!pure) return Dim::infinite();
    }
    total += staircase_count(leads, nvars);
  }
  return Dim::of(total);
}

ModuleOrder ideal_order(const RingPtr& ring) {
  return ModuleOrder(ring->order(), ModuleOrder::Scheme::term_over_position);
}

std::vector<Entries> ideal_entries(const std::vector<Polynomial>& gens,
                                   const RingPtr& ring, const char* context) {
  std::vector<Entries> lists;
  lists.reserve(gens.size());
  for (const Polynomial& g : gens) {
    require_same_ring(g.ring(), ring, context);
    lists.push_back(poly_entries(g, 0));
  }
  return lists;
}

std::vector<Entries> module_entries(const std::vector<ModuleVector>& gens,
                                    const RingPtr& ring, int rank,
                                    const ModuleOrder& order,
                                    const char* context) {
  std::vector<Entries> lists;
  lists.reserve(gens.size());
  for (const ModuleVector& v : gens) {
    if (v.components.size() != static_cast<std::size_t>(rank))
      throw Error("module element rank mismatch");
    for (const Polynomial& g : v.components)
      require_same_ring(g.ring(), ring, context);
    lists.push_back(vector_entries(v, order));
  }
  return lists;
}

}  // namespace

// ---- public polynomial-level API ----

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  RingPtr ring = f.ring();
  Engine eng(ring, ideal_order(ring), 1);
  auto elems = make_elems(eng, ideal_entries(G, ring, "normal form"));
  return entries_poly(ring, engine_normal_form(eng, poly_entries(f, 0), elems));
}

ModuleVector normal_form(const ModuleVector& v,
                         const std::vector<ModuleVector>& G,
                         const ModuleOrder& order) {
  if (v.components.empty()) return v;
  RingPtr ring = v.components.front().ring();
  int rank = static_cast<int>(v.components.size());
  Engine eng(ring, order, rank);
  auto elems =
      make_elems(eng, module_entries(G, ring, rank, order, "normal form"));
  return entries_vector(
      ring, rank,
      engine_normal_form(eng, vector_entries(v, order), elems));
}

std::vector<Polynomial> buchberger(RingPtr ring,
                                   const std::vector<Polynomial>& gens) {
  Engine eng(ring, ideal_order(ring), 1);
  auto basis = eng.run_buchberger(ideal_entries(gens, ring, "buchberger"));
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& elem : basis) out.push_back(entries_poly(ring, elem.e));
  return out;
}

std::vector<ModuleVector> buchberger(RingPtr ring, int rank,
                                     const std::vector<ModuleVector>& gens,
                                     const ModuleOrder& order) {
  Engine eng(ring, order, rank);
  auto basis =
      eng.run_buchberger(module_entries(gens, ring, rank, order, "buchberger"));
  std::vector<ModuleVector> out;
  out.reserve(basis.size());
  for (const auto& elem : basis)
    out.push_back(entries_vector(ring, rank, elem.e));
  return out;
}

std::vector<Polynomial> reduce_gb(RingPtr ring, std::vector<Polynomial> G) {
  Engine eng(ring, ideal_order(ring), 1);
  auto reduced = engine_reduce_gb(eng, ideal_entries(G, ring, "reduce_gb"));
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const Entries& e : reduced) out.push_back(entries_poly(ring, e));
  return out;
}

std::vector<ModuleVector> reduce_gb(RingPtr ring, int rank,
                                    std::vector<ModuleVector> G,
                                    const ModuleOrder& order) {
  Engine eng(ring, order, rank);
  auto reduced =
      engine_reduce_gb(eng, module_entries(G, ring, rank, order, "reduce_gb"));
  std::vector<ModuleVector> out;
  out.reserve(reduced.size());
  for (const Entries& e : reduced) out.push_back(entries_vector(ring, rank, e));
  return out;
}

bool is_groebner(RingPtr ring, const std::vector<Polynomial>& G) {
  Engine eng(ring, ideal_order(ring), 1);
  return engine_is_groebner(eng, ideal_entries(G, ring, "is_groebner"));
}

bool is_groebner(RingPtr ring, int rank, const std::vector<ModuleVector>& G,
                 const ModuleOrder& order) {
  Engine eng(ring, order, rank);
  return engine_is_groebner(
      eng, module_entries(G, ring, rank, order, "is_groebner"));
}

// ---- Ideal / Submodule ----

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : generators_)
    require_same_ring(g.ring(), ring_, "ideal generator");
}

Ideal Ideal::from_groebner_basis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), std::move(basis));
  std::call_once(I.cache_->flag, [&] { I.cache_->basis = I.generators_; });
  return I;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->flag, [this] {
    cache_->basis = reduce_gb(ring_, buchberger(ring_, generators_));
  });
  return cache_->basis;
}

Submodule::Submodule(RingPtr ring, int rank, std::vector<ModuleVector> generators,
                     ModuleOrder order)
    : ring_(std::move(ring)),
      rank_(rank),
      order_(std::move(order)),
      generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (rank_ < 0) throw Error("submodule rank must be nonnegative");
  for (const ModuleVector& v : generators_) {
    if (v.components.size() != static_cast<std::size_t>(rank_))
      throw Error("submodule generator rank mismatch");
    for (const Polynomial& g : v.components)
      require_same_ring(g.ring(), ring_, "submodule generator");
  }
}

const std::vector<ModuleVector>& Submodule::groebner_basis() const {
  std::call_once(cache_->flag, [this] {
    cache_->basis =
        reduce_gb(ring_, rank_, buchberger(ring_, rank_, generators_, order_),
                  order_);
  });
  return cache_->basis;
}

// ---- dimensions ----

Dim vdim(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  std::vector<std::vector<Monomial>> leads(1);
  for (const Polynomial& g : gb) leads[0].push_back(g.lead_mono());
  return staircase_dim(leads, I.ring()->nvars());
}

Dim vdim(const Submodule& S) {
  if (S.rank() == 0) return Dim::of(0);
  const auto& gb = S.groebner_basis();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(S.rank()));
  for (const ModuleVector& v : gb) {
    Entries e = vector_entries(v, S.order());
    if (!e.empty()) leads[e.front().comp].push_back(e.front().mono);
  }
  return staircase_dim(leads, S.ring()->nvars());
}

int krull_dim(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  int n = I.ring()->nvars();
  std::vector<std::uint32_t> supports;
  supports.reserve(gb.size());
  for (const Polynomial& g : gb)
    supports.push_back(g.lead_mono().support(n));
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::uint32_t sup : supports)
      if ((sup & ~s) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    int size = std::popcount(s);
    if (size > best) best = size;
  }
  return best;
}

// ---- modulo ----

Submodule modulo(const std::vector<Polynomial>& A, const Ideal& B) {
  RingPtr ring = B.ring();
  int k = static_cast<int>(A.size());
  ModuleOrder order(ring->order(), ModuleOrder::Scheme::position_over_term);
  if (k == 0) return Submodule(ring, 0, {}, order);
  for (const Polynomial& a : A)
    require_same_ring(a.ring(), ring, "modulo");

  // generators of {(c0, c1..ck) : c0 = sum ci ai mod B} in R^(1+k)
  std::vector<Entries> gens;
  for (int i = 0; i < k; ++i) {
    Entries e = poly_entries(A[static_cast<std::size_t>(i)], 0);
    e.push_back(Entry{Monomial::one(), static_cast<std::uint32_t>(i + 1), 1});
    gens.push_back(std::move(e));
  }
  for (const Polynomial& b : B.groebner_basis())
    gens.push_back(poly_entries(b, 0));

  Engine eng(ring, order, 1 + k);
  auto basis = eng.run_buchberger(std::move(gens));
  std::vector<Entries> full;
  full.reserve(basis.size());
  for (auto& elem : basis) full.push_back(std::move(elem.e));
  std::vector<Entries> reduced = engine_reduce_gb(eng, std::move(full));

  // component 0 is strictly greatest, so a lead in components >= 1 means the
  // whole element lives there; dropping component 0 yields a reduced basis of S
  std::vector<ModuleVector> projected;
  for (Entries& e : reduced) {
    if (e.front().comp == 0) continue;
    for (Entry& t : e) t.comp -= 1;
    projected.push_back(entries_vector(ring, k, e));
  }
  Submodule S(ring, k, std::move(projected), order);
  std::call_once(S.cache_->flag, [&] { S.cache_->basis = S.generators_; });
  return S;
}

}  // namespace germcalc
