#ifndef GERMCALC_GERM_HPP
#define GERMCALC_GERM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germcalc/ideal_ops.hpp"
#include "germcalc/ring_map.hpp"

namespace germcalc {

/// A polynomial map-germ (k^n, 0) -> (k^(n+1), 0), intended to be weighted
/// homogeneous for the given source weights and target degrees. Both rings
/// carry weighted degrevlex so term degrees seen by the solver are the true
/// weighted degrees. Construction checks shape only; weighted homogeneity is
/// a separate, reportable check (validate_germ).
class MapGerm {
 public:
  MapGerm(PrimeField field, std::vector<std::string> source_vars,
          std::vector<std::uint32_t> weights,
          std::vector<std::string> target_vars,
          std::vector<std::uint32_t> degrees,
          const std::vector<std::string>& component_texts);

  int n() const { return source_->nvars(); }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  const std::vector<Polynomial>& components() const { return components_; }
  std::uint32_t characteristic() const { return source_->field().p(); }

  /// The pullback homomorphism: target coordinate ring -> source coordinate
  /// ring, i-th target variable -> i-th component.
  RingMap pullback() const;

 private:
  RingPtr source_, target_;
  std::vector<std::uint32_t> weights_, degrees_;
  std::vector<Polynomial> components_;
};

/// Empty when the germ is weighted homogeneous of the declared degrees and
/// vanishes at the origin; otherwise one message per offending term.
std::vector<std::string> validate_germ(const MapGerm& g);

/// n minus the rank of the differential at the origin.
int corank(const MapGerm& g);

struct RamificationInfo {
  int dim = 0;    // Krull dimension of the ideal of maximal minors of df
  int codim = 0;  // n - dim
  bool codim_ok = false;  // the pipeline below needs codimension exactly 2
};

RamificationInfo ramification_dim(const MapGerm& g);

/// Wall-clock milliseconds per pipeline stage, in execution order.
struct Timings {
  std::vector<std::pair<std::string, long long>> stages;
  void add(std::string name, long long ms) {
    stages.emplace_back(std::move(name), ms);
  }
};

/// The reduced equation of the image hypersurface, monic, in the target
/// ring. Errors if the kernel of the pullback is zero or not principal.
Polynomial image_ideal(const MapGerm& g, Timings* timings = nullptr);

/// dim of the target-ring quotient (preimage of the pulled-back gradient
/// ideal) / (gradient ideal of the image equation). For a weighted
/// homogeneous germ whose ramification locus has codimension 2 this is the
/// A_e-codimension; otherwise it is just the dimension of that quotient.
Dim ae_codim(const MapGerm& g, Timings* timings = nullptr,
             Polynomial* image_out = nullptr);

/// vdim of the source ring modulo the ideal spanned by the components.
Dim multiplicity(const MapGerm& g);

/// Image Milnor number of the built-in corank-3 family member with weights
/// (1,2,3) and degrees (4,5,6,2k+1). Exact integer arithmetic.
long long mu_image_family(long long k);

/// mu = tau - t + 1 for a weighted homogeneous space curve with Tjurina
/// number tau and Cohen-Macaulay type t.
long long greuel_mu(long long tau, long long cm_type);

/// mu_I from mu_image_family when the weights and degrees match that family.
std::optional<long long> family_mu(const MapGerm& g);

enum class Verdict { equal, mu_greater, codim_greater, not_finite, not_applicable };

std::string verdict_name(Verdict v);

struct GermReport {
  std::vector<std::string> violations;  // weighted homogeneity check
  int corank = 0;
  RamificationInfo ramification;
  Dim multiplicity = Dim::infinite();
  std::optional<Dim> ae_codim;  // absent when the stage was skipped or failed
  std::optional<Polynomial> image;
  std::optional<long long> mu_image;
  Verdict verdict = Verdict::not_applicable;
  bool certified = false;  // homogeneous + codim-2 gate: the number really is
                           // the A_e-codimension, not just dim N_f
  Timings timings;
  std::vector<std::string> errors;
};

/// Runs every invariant, collecting per-stage errors instead of aborting.
/// The quotient stage runs when the gate holds, or unconditionally with
/// force. mu falls back to family_mu when not supplied. Timeouts propagate;
/// a caller-owned sink keeps the completed-stage record across the throw.
GermReport mond_verdict(const MapGerm& g,
                        std::optional<long long> mu_image = std::nullopt,
                        bool force = false, Timings* sink = nullptr);

}  // namespace germcalc

#endif
