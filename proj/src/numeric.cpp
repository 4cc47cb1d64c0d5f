#include "coulomb/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "coulomb/errors.hpp"

namespace coulomb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string weight_text(const Weight& nu) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) out << ",";
    out << nu[i];
  }
  out << "]";
  return out.str();
}

bool near_nonpositive_integer(Cplx z, double tol) {
  double r = std::round(z.real());
  return r < 0.5 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

// Integer power by repeated multiplication; exponents here are weight
// entries, so they stay tiny.
Cplx ipow(Cplx base, std::int64_t n) {
  if (n < 0) return 1.0 / ipow(base, -n);
  Cplx out = 1.0;
  while (n) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

void check_point(const GroupData& g, const std::vector<Cplx>& p, const char* name) {
  if (static_cast<std::int32_t>(p.size()) != g.rank) {
    std::ostringstream out;
    out << name << " needs " << g.rank << " coordinates, got " << p.size();
    throw UsageError(out.str());
  }
}

Cplx pair_with(const Weight& nu, const std::vector<Cplx>& xi) {
  Cplx out = 0.0;
  for (std::size_t i = 0; i < nu.size(); ++i) out += static_cast<double>(nu[i]) * xi[i];
  return out;
}

}  // namespace

Cplx log_gamma(Cplx z) {
  // Lanczos, g = 7, 9 coefficients.
  static const double kCoeff[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  if (near_nonpositive_integer(z, 1e-9)) {
    std::ostringstream out;
    out << "log_gamma pole at z = " << z.real();
    throw MathError(out.str());
  }
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  Cplx x = kCoeff[0];
  for (int i = 1; i < 9; ++i) x += kCoeff[i] / (z + static_cast<double>(i));
  Cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Cplx gamma_h(Cplx w, Cplx h) {
  if (h == Cplx(0.0)) throw UsageError("gamma_h: shift parameter h must be nonzero");
  Cplx s = w / h;
  if (near_nonpositive_integer(s, 1e-9)) {
    std::ostringstream out;
    out << "gamma_h pole: w/h = " << s.real() << " is a nonpositive integer";
    throw MathError(out.str());
  }
  return std::exp((s - 1.0) * std::log(h) + log_gamma(s));
}

Cplx pochhammer_q(Cplx x, Cplx q, int terms) {
  Cplx out = 1.0;
  Cplx p = 1.0;  // q^n
  for (int n = 0; n < terms; ++n) {
    out *= 1.0 - x * p;
    p *= q;
  }
  return out;
}

GammaQValue gamma_q(Cplx t, Cplx q, int truncation) {
  if (truncation <= 0) throw UsageError("gamma_q: truncation order must be positive");
  if (std::abs(q) >= 1.0) throw UsageError("gamma_q: |q| must be < 1");
  if (t == Cplx(0.0)) throw UsageError("gamma_q: t must be nonzero");
  const Cplx tinv = 1.0 / t;
  Cplx num = 1.0;
  Cplx den = 1.0;
  Cplx p = 1.0;  // q^n
  for (int n = 0; n < truncation; ++n) {
    Cplx factor = 1.0 - tinv * p;
    if (std::abs(factor) < 1e-12) {
      std::ostringstream out;
      out << "gamma_q pole: t^{-1} q^n = 1 at n = " << n;
      throw MathError(out.str());
    }
    num *= 1.0 - q * p;  // (q; q): factors 1 - q^{n+1}
    den *= factor;
    p *= q;
  }
  GammaQValue out;
  out.value = num / den;
  double aq = std::abs(q);
  double tail = (std::pow(aq, truncation + 1) + std::abs(tinv) * std::pow(aq, truncation)) /
                (1.0 - aq);
  out.error_bound = tail * std::abs(out.value);
  return out;
}

SectionPoint epsilon_section(const GroupData& g, const std::vector<Cplx>& xi, Cplx mu) {
  check_point(g, xi, "epsilon_section");
  std::vector<Cplx> log_sum(static_cast<std::size_t>(g.rank), 0.0);
  for (const Weight& nu : g.weights) {
    Cplx w = mu + pair_with(nu, xi);
    if (std::abs(w) < 1e-12) {
      throw MathError("epsilon_section singular: mu + <nu|xi> = 0 for weight " +
                      weight_text(nu));
    }
    Cplx lw = std::log(w);
    for (std::int32_t c = 0; c < g.rank; ++c)
      log_sum[static_cast<std::size_t>(c)] += static_cast<double>(nu[static_cast<std::size_t>(c)]) * lw;
  }
  SectionPoint out;
  out.value.reserve(log_sum.size());
  for (const Cplx& s : log_sum) out.value.push_back(std::exp(s));
  return out;
}

SectionPoint lambda_section(const GroupData& g, const std::vector<Cplx>& x, Cplx m) {
  check_point(g, x, "lambda_section");
  if (m == Cplx(0.0)) throw UsageError("lambda_section: mass m must be nonzero");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Cplx(0.0)) {
      std::ostringstream out;
      out << "lambda_section: coordinate " << i << " must be nonzero";
      throw UsageError(out.str());
    }
  }
  std::vector<Cplx> log_sum(static_cast<std::size_t>(g.rank), 0.0);
  for (const Weight& nu : g.weights) {
    Cplx mono = m;
    for (std::size_t i = 0; i < x.size(); ++i) mono *= ipow(x[i], nu[i]);
    if (std::abs(mono - 1.0) < 1e-12) {
      throw MathError("lambda_section singular: m x^nu = 1 for weight " + weight_text(nu));
    }
    Cplx lw = std::log(1.0 - 1.0 / mono);
    for (std::int32_t c = 0; c < g.rank; ++c)
      log_sum[static_cast<std::size_t>(c)] += static_cast<double>(nu[static_cast<std::size_t>(c)]) * lw;
  }
  SectionPoint out;
  out.value.reserve(log_sum.size());
  for (const Cplx& s : log_sum) out.value.push_back(std::exp(s));
  return out;
}

Cplx superpotential_legendre(const GroupData& g, const std::vector<Cplx>& xi, Cplx mu) {
  check_point(g, xi, "superpotential_legendre");
  Cplx out = 0.0;
  for (const Weight& nu : g.weights) {
    Cplx w = mu + pair_with(nu, xi);
    if (std::abs(w) < 1e-12 || (w.imag() == 0.0 && w.real() < 0.0)) {
      throw MathError(
          "superpotential_legendre: mu + <nu|xi> on the log branch cut for weight " +
          weight_text(nu));
    }
    out += w * (std::log(w) - 1.0);
  }
  return out;
}

}  // namespace coulomb
