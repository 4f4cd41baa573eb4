#include "germcalc/germ.hpp"

#include <chrono>
#include <exception>
#include <set>

#include "germcalc/parse.hpp"

namespace germcalc {

namespace {

// Records elapsed wall time on scope exit, but only if the stage finished
// (a stage aborted by an exception must not be listed as completed).
class StageTimer {
 public:
  StageTimer(Timings* sink, std::string name)
      : sink_(sink), name_(std::move(name)),
        exceptions_(std::uncaught_exceptions()),
        start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    if (!sink_ || std::uncaught_exceptions() != exceptions_) return;
    auto dt = std::chrono::steady_clock::now() - start_;
    sink_->add(name_,
               std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
  }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

 private:
  Timings* sink_;
  std::string name_;
  int exceptions_;
  std::chrono::steady_clock::time_point start_;
};

int matrix_rank(const PrimeField& F,
                std::vector<std::vector<std::uint32_t>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)],
              m[static_cast<std::size_t>(pivot)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    std::uint32_t inv = F.inv(prow[static_cast<std::size_t>(c)]);
    for (int k = c; k < cols; ++k)
      prow[static_cast<std::size_t>(k)] =
          F.mul(prow[static_cast<std::size_t>(k)], inv);
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      std::uint32_t factor = row[static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      for (int k = c; k < cols; ++k)
        row[static_cast<std::size_t>(k)] =
            F.sub(row[static_cast<std::size_t>(k)],
                  F.mul(factor, prow[static_cast<std::size_t>(k)]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MapGerm::MapGerm(PrimeField field, std::vector<std::string> source_vars,
                 std::vector<std::uint32_t> weights,
                 std::vector<std::string> target_vars,
                 std::vector<std::uint32_t> degrees,
                 const std::vector<std::string>& component_texts) {
  std::size_t n = source_vars.size();
  if (n < 1) throw Error("a map-germ needs at least one source variable");
  if (weights.size() != n)
    throw Error("expected one weight per source variable");
  if (target_vars.size() != n + 1)
    throw Error("expected exactly one more target variable than source variables");
  if (degrees.size() != n + 1)
    throw Error("expected one degree per target variable");
  if (component_texts.size() != n + 1)
    throw Error("expected one component per target variable");
  for (std::uint32_t w : weights)
    if (w == 0) throw Error("weights must be positive");
  for (std::uint32_t d : degrees)
    if (d == 0) throw Error("degrees must be positive");
  std::set<std::string> seen(source_vars.begin(), source_vars.end());
  for (const std::string& name : target_vars)
    if (!seen.insert(name).second)
      throw Error("variable name '" + name + "' is not unique across source and target");
  if (n + (n + 1) > static_cast<std::size_t>(kMaxVars))
    throw Error("source and target together exceed the variable limit");

  source_ = make_ring(field, std::move(source_vars),
                      MonomialOrder::weighted_degrevlex(weights));
  target_ = make_ring(field, std::move(target_vars),
                      MonomialOrder::weighted_degrevlex(degrees));
  weights_ = std::move(weights);
  degrees_ = std::move(degrees);
  components_.reserve(component_texts.size());
  for (const std::string& text : component_texts)
    components_.push_back(parse_polynomial(source_, text));
}

RingMap MapGerm::pullback() const {
  return RingMap(target_, source_, components_);
}

std::vector<std::string> validate_germ(const MapGerm& g) {
  std::vector<std::string> out;
  const auto& w = g.weights();
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    const Polynomial& f = g.components()[i];
    std::string label = "component " + std::to_string(i + 1);
    if (f.is_zero()) {
      out.push_back(label + " is zero");
      continue;
    }
    for (const Term& t : f.terms()) {
      long long wd = monomial_weighted_degree(t.mono, w);
      if (wd == 0) {
        out.push_back(label + " has a nonzero constant term");
        continue;
      }
      long long want = g.degrees()[i];
      if (wd != want)
        out.push_back(label + ": term " + format_monomial(*g.source(), t.mono) +
                      " has weighted degree " + std::to_string(wd) +
                      ", expected " + std::to_string(want));
    }
  }
  return out;
}

int corank(const MapGerm& g) {
  int n = g.n();
  std::vector<std::uint32_t> origin(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<std::uint32_t>> df;
  for (const Polynomial& f : g.components()) {
    std::vector<std::uint32_t> row;
    for (int v = 0; v < n; ++v)
      row.push_back(f.partial_derivative(v).evaluate(origin));
    df.push_back(std::move(row));
  }
  return n - matrix_rank(g.source()->field(), std::move(df));
}

RamificationInfo ramification_dim(const MapGerm& g) {
  PolyMatrix J = jacobian_matrix(g.components());
  Ideal ram = minors(J, g.n());
  RamificationInfo info;
  info.dim = krull_dim(ram);
  info.codim = g.n() - info.dim;
  info.codim_ok = info.codim == 2;
  return info;
}

Polynomial image_ideal(const MapGerm& g, Timings* timings) {
  StageTimer timer(timings, "image");
  RingMap phi = g.pullback();
  Ideal kernel = preimage(phi, Ideal(g.source(), {}));
  const auto& gb = kernel.groebner_basis();
  if (gb.empty())
    throw Error("map is not generically finite onto a hypersurface: "
                "the pullback has zero kernel");
  if (gb.size() != 1)
    throw Error("image is not a hypersurface: kernel needs " +
                std::to_string(gb.size()) + " generators");
  Polynomial h = gb[0];
  if (!phi.apply(h).is_zero())
    throw Error("internal: image equation does not pull back to zero");
  HomogeneityCheck hom = weighted_degree(h, g.degrees());
  if (!hom.is_homogeneous())
    throw Error("internal: image equation is not weighted homogeneous");
  return h;
}

Dim ae_codim(const MapGerm& g, Timings* timings, Polynomial* image_out) {
  Polynomial h = image_ideal(g, timings);
  if (image_out) *image_out = h;

  int p = g.n() + 1;
  std::vector<Polynomial> grads;
  {
    StageTimer timer(timings, "gradient");
    for (int v = 0; v < p; ++v) grads.push_back(h.partial_derivative(v));
  }
  Ideal jh(g.target(), grads);
  // Euler's relation puts h in its gradient ideal whenever the weighted
  // degree of h is a unit in the coefficient field.
  if (!ideal_membership(h, jh))
    throw Error("image equation escapes its gradient ideal; the chosen "
                "characteristic likely divides its weighted degree");

  RingMap phi = g.pullback();
  std::vector<Polynomial> pulled;
  {
    StageTimer timer(timings, "pullback");
    pulled = phi.apply(grads);
  }

  Ideal lifted(g.source(), std::move(pulled));
  Ideal upstairs = [&] {
    StageTimer timer(timings, "preimage");
    return preimage(phi, lifted);
  }();

  StageTimer timer(timings, "quotient");
  return relative_quotient_dim(upstairs, jh);
}

Dim multiplicity(const MapGerm& g) {
  return vdim(Ideal(g.source(), g.components()));
}

long long mu_image_family(long long k) {
  if (k < 1) throw Error("family index must be at least 1");
  long long cubic = 4 * k * k * k + 3 * k * k + 5 * k;
  if (cubic % 6 != 0)
    throw Error("internal: family formula remainder is not integral");
  return 487 * k * k * k + 576 * k * k + 197 * k + 18 + cubic / 6;
}

long long greuel_mu(long long tau, long long cm_type) {
  if (tau < 0) throw Error("Tjurina number must be non-negative");
  if (cm_type < 1) throw Error("Cohen-Macaulay type must be at least 1");
  long long mu = tau - cm_type + 1;
  if (mu < 0)
    throw Error("tau - t + 1 is negative; the inputs do not describe a "
                "singular space curve");
  return mu;
}

std::optional<long long> family_mu(const MapGerm& g) {
  if (g.weights() != std::vector<std::uint32_t>{1, 2, 3}) return std::nullopt;
  const auto& d = g.degrees();
  if (d.size() != 4 || d[0] != 4 || d[1] != 5 || d[2] != 6) return std::nullopt;
  if (d[3] < 3 || d[3] % 2 == 0) return std::nullopt;
  return mu_image_family((d[3] - 1) / 2);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal: return "EQUAL";
    case Verdict::mu_greater: return "MU_GREATER";
    case Verdict::codim_greater: return "CODIM_GREATER";
    case Verdict::not_finite: return "NOT_FINITE";
    case Verdict::not_applicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

GermReport mond_verdict(const MapGerm& g, std::optional<long long> mu_image,
                        bool force, Timings* sink) {
  GermReport r;
  Timings local;
  Timings& tm = sink ? *sink : local;
  r.violations = validate_germ(g);
  {
    StageTimer timer(&tm, "corank");
    r.corank = corank(g);
  }
  {
    StageTimer timer(&tm, "ramification");
    r.ramification = ramification_dim(g);
  }
  {
    StageTimer timer(&tm, "multiplicity");
    r.multiplicity = multiplicity(g);
  }
  bool gate = r.violations.empty() && r.ramification.codim_ok;
  r.certified = gate;
  if (gate || force) {
    try {
      Polynomial h(g.target());
      r.ae_codim = ae_codim(g, &tm, &h);
      r.image = h;
    } catch (const TimeoutError&) {
      throw;
    } catch (const Error& e) {
      r.errors.push_back(std::string("quotient pipeline: ") + e.what());
    }
  } else {
    if (!r.violations.empty())
      r.errors.push_back("germ is not weighted homogeneous as declared; "
                         "quotient stage skipped");
    if (!r.ramification.codim_ok)
      r.errors.push_back("ramification locus has codimension " +
                         std::to_string(r.ramification.codim) +
                         ", need 2; quotient stage skipped");
  }

  r.mu_image = mu_image ? mu_image : family_mu(g);
  if (r.ae_codim && !r.ae_codim->finite) {
    r.verdict = Verdict::not_finite;
  } else if (r.ae_codim && r.certified && r.mu_image) {
    std::uint64_t codim = r.ae_codim->value;
    long long mu = *r.mu_image;
    if (mu >= 0 && static_cast<std::uint64_t>(mu) == codim)
      r.verdict = Verdict::equal;
    else if (mu >= 0 && static_cast<std::uint64_t>(mu) > codim)
      r.verdict = Verdict::mu_greater;
    else
      r.verdict = Verdict::codim_greater;
  } else {
    r.verdict = Verdict::not_applicable;
  }
  r.timings = tm;
  return r;
}

}  // namespace germcalc
