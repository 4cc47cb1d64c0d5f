#pragma once

#include "coulomb/factored.hpp"
#include "coulomb/graded.hpp"
#include "coulomb/group.hpp"

namespace coulomb {

// The index Euler classes of a winding eta: eplus collects the weights
// pairing positively with eta, eminus those pairing negatively; weights
// pairing to zero contribute nothing.
struct EulerPair {
  Winding eta;
  Flavor flavor = Flavor::Comm;
  FactoredPoly eplus;
  FactoredPoly eminus;
};

// The additive linear form mu + <nu|t> of a weight.
Poly weight_linear(const Weight& nu);
// The multiplicative form m * x^nu (a Laurent monomial).
Poly weight_multiplicative(const Weight& nu);

// Mass specializations applied inside every Euler factor.
//   massless: Comm sets mu = 0, H sets mu = h/2, K sets m = 1; the Q flavor
//             has no massless limit and raises MathError.
//   mu_zero:  sets mu = 0 (additive flavors only).
struct EulerOptions {
  bool massless = false;
  bool mu_zero = false;
};

// Per weight nu with k = <nu|eta>:
//   Comm: k>0 adds (mu+<nu|t>)^k to eplus, k<0 adds (mu+<nu|t>)^|k| to eminus
//   H:    k>0 adds prod_{j=1..k}  (mu+<nu|t>-jh) to eplus,
//         k<0 adds prod_{j=0..|k|-1}(mu+<nu|t>+jh) to eminus
//   Q:    k>0 adds prod_{j=1..k}  (1 - q^j  (m x^nu)^-1) to eplus,
//         k<0 adds prod_{j=0..|k|-1}(1 - q^-j (m x^nu)^-1) to eminus
//   K:    the Q formula with q = 1, i.e. (1 - (m x^nu)^-1)^|k|
// Multiplicative factors are stored unit-normalized by FactoredPoly.
EulerPair euler_pair(const GroupData& G, const Winding& eta, Flavor flavor,
                     const EulerOptions& opt = {});

}  // namespace coulomb
