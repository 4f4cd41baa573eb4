#ifndef GERMCALC_IDEAL_OPS_HPP
#define GERMCALC_IDEAL_OPS_HPP

#include "germcalc/groebner.hpp"
#include "germcalc/matrix.hpp"
#include "germcalc/ring_map.hpp"

namespace germcalc {

// Elimination setup for the leading variable range [0, kill). The block order
// ranks any monomial containing a kill variable above every kill-free one and
// keeps the original order (weights included) within each block.
struct EliminationBlock {
  int kill;
  RingPtr elim_ring;  // all variables under the block order
  RingPtr kept_ring;  // trailing variables under the original order
};

EliminationBlock make_elimination_block(const RingPtr& ring, int kill);

// (#F) x nvars matrix of partial derivatives.
PolyMatrix jacobian_matrix(const std::vector<Polynomial>& F);

// Ideal of all r x r minors; r beyond the matrix size gives the zero ideal.
Ideal minors(const PolyMatrix& M, int r);

// Fitt_k of the module presented by an n x m matrix: the (n-k)-minor ideal,
// the unit ideal when n-k <= 0, the zero ideal when n-k > min(n, m).
Ideal fitting_ideal(const PolyMatrix& presentation, int k);

// I ∩ (subring of the variables from index kill on), reduced basis included.
Ideal eliminate(const Ideal& I, int kill);

// {g in domain(phi) : phi(g) in J}, computed by eliminating the codomain
// variables from J + (y_i - image_i) in the product ring.
Ideal preimage(const RingMap& phi, const Ideal& J);

// dim (A+B)/B as a vector space, via modulo + module vdim.
Dim relative_quotient_dim(const Ideal& A, const Ideal& B);

bool ideal_membership(const Polynomial& g, const Ideal& I);

}  // namespace germcalc

#endif
