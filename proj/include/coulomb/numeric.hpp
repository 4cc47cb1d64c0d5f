#pragma once

#include <complex>
#include <vector>

#include "coulomb/group.hpp"

namespace coulomb {

using Cplx = std::complex<double>;

// Principal-branch log of the gamma function on the cut plane, Lanczos
// approximation (g = 7, 9 terms), reflection formula for Re z < 1/2.
// Accurate to ~1e-13 relative away from the poles. Poles (z a nonpositive
// integer, detected within 1e-9) throw MathError.
Cplx log_gamma(Cplx z);

// Scaled gamma of the shift parameter: h^{w/h - 1} * Gamma(w/h), all powers
// and logs principal. Satisfies gamma_h(h, h) == 1 and the shift relation
// gamma_h(w + h, h) == w * gamma_h(w, h). Throws MathError at the poles
// (w/h a nonpositive integer), UsageError for h == 0.
Cplx gamma_h(Cplx w, Cplx h);

// Truncated q-Pochhammer product (x; q)_terms = prod_{n=0}^{terms-1} (1 - x q^n).
Cplx pochhammer_q(Cplx x, Cplx q, int terms);

// Truncated q-gamma kernel (q; q)_inf / (t^{-1}; q)_inf with both infinite
// products cut at `truncation` factors. `error_bound` is an a-priori bound on
// the absolute truncation error: the geometric tail of the log series,
// (|q|^{truncation+1} + |t|^{-1} |q|^{truncation}) / (1 - |q|), times |value|.
// Satisfies the shift relation G(t/q) == (1 - t^{-1}) G(t) and tends to
// (q; q)_inf as t -> inf. Requires |q| < 1 and t != 0 (UsageError); a factor
// 1 - t^{-1} q^n vanishing within the truncation window is a pole (MathError).
struct GammaQValue {
  Cplx value;
  double error_bound = 0.0;
};
GammaQValue gamma_q(Cplx t, Cplx q, int truncation);

// A point of a line-bundle section over the dual torus: one nonzero complex
// coordinate per gauge direction.
struct SectionPoint {
  std::vector<Cplx> value;
};

// Additive index section at (xi, mu): component c is
//   prod_nu (mu + <nu|xi>)^{nu_c},
// every power taken as exp(nu_c * log(...)) on the principal branch. A factor
// vanishing within 1e-12 of zero is a singular point and names its weight in
// the MathError. xi must have `g.rank` entries (UsageError).
SectionPoint epsilon_section(const GroupData& g, const std::vector<Cplx>& xi, Cplx mu);

// Multiplicative index section at (x, m): component c is
//   prod_nu (1 - (m x^nu)^{-1})^{nu_c}.
// Requires nonzero m and coordinates (UsageError); m x^nu == 1 (within 1e-12)
// is a singular point and names its weight in the MathError.
SectionPoint lambda_section(const GroupData& g, const std::vector<Cplx>& x, Cplx m);

// Legendre-type generating function sum_nu w (log w - 1), w = mu + <nu|xi>,
// with termwise principal logs. Its exponentiated gradient in xi is
// epsilon_section. Arguments w on the closed negative real axis sit on the
// log cut, where the termwise value jumps by 2 pi i; such inputs throw
// MathError rather than picking a side.
Cplx superpotential_legendre(const GroupData& g, const std::vector<Cplx>& xi, Cplx mu);

}  // namespace coulomb
