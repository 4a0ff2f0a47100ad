#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

namespace {

CNum horner(std::span<const CNum> c, CNum x) { return evaluate_poly<CNum>(c, x); }

CNum horner_derivative(std::span<const CNum> c, CNum x) {
  CNum acc = 0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
  return acc;
}

// Newton steps that are only kept while they shrink the residual.
CNum polish(std::span<const CNum> c, CNum r) {
  double res = std::abs(horner(c, r));
  for (int it = 0; it < 30 && res > 0.0; ++it) {
    const CNum d = horner_derivative(c, r);
    if (d == CNum{}) break;
    const CNum next = r - horner(c, r) / d;
    const double nres = std::abs(horner(c, next));
    if (!(nres < res)) break;
    r = next;
    res = nres;
  }
  return r;
}

// Drops parts that are noise relative to |r| when doing so keeps the residual small.
CNum snap(std::span<const CNum> c, CNum r, double bound) {
  const double tiny = 1e-12 * (1.0 + std::abs(r));
  CNum s{std::abs(r.real()) < tiny ? 0.0 : r.real(), std::abs(r.imag()) < tiny ? 0.0 : r.imag()};
  return std::abs(horner(c, s)) <= bound ? s : r;
}

}  // namespace

std::vector<CNum> poly_roots(std::span<const CNum> coeffs, double eps) {
  double scale = 0.0;
  for (const auto& z : coeffs) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("poly_roots: non-finite coefficient");
    scale = std::max(scale, std::abs(z));
  }
  std::size_t n = coeffs.size();
  while (n > 0 && std::abs(coeffs[n - 1]) <= eps * scale) --n;
  if (n <= 1) throw MathError("no roots");
  const std::size_t deg = n - 1;
  if (deg > 4) throw std::invalid_argument("poly_roots: degree above 4");
  const auto c = coeffs.first(n);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw MathError("poly_roots: eigenvalue iteration failed");

  const double bound = eps * (1.0 + scale);
  std::vector<CNum> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    CNum r = snap(c, polish(c, solver.eigenvalues()(i)), bound);
    if (std::abs(horner(c, r)) > bound) throw MathError("poly_roots: residual bound not met");
    roots.push_back(r);
  }

  // Repeated roots are only accurate to about sqrt(eps), so ties on the real part are loose.
  std::sort(roots.begin(), roots.end(), [](CNum a, CNum b) {
    const double tol = 1e-6 * (1.0 + std::max(std::abs(a), std::abs(b)));
    if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(double x, double max_den) {
  std::vector<Rational> out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double f = x;
  for (int it = 0; it < 64 && std::isfinite(f); ++it) {
    const double ai = std::floor(f);
    const mpz_class a(ai);
    mpz_class h = a * h0 + h1, k = a * k0 + k1;
    if (k.get_d() > max_den) break;
    Rational q(h, k);
    q.canonicalize();
    out.push_back(q);
    h1 = h0; h0 = h; k1 = k0; k0 = k;
    if (f - ai < 1e-15) break;
    f = 1.0 / (f - ai);
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(std::span<const Rational> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0) --n;
  if (n <= 1) return {};

  std::vector<Rational> found;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) found.push_back(Rational(0));

  // Integer polynomial a_low .. a_{n-1}.
  mpz_class l = 1;
  for (std::size_t k = low; k < n; ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coeffs[k].get_den_mpz_t());
  std::vector<Rational> p;
  for (std::size_t k = low; k < n; ++k) p.push_back(coeffs[k] * l);
  if (p.size() > 1) {
    const mpz_class a0 = p.front().get_num(), an = p.back().get_num();
    std::vector<Rational> candidates;
    const double limit = 1e12;
    if (mpz_class(abs(a0)).get_d() <= limit && mpz_class(abs(an)).get_d() <= limit) {
      const auto ps = divisors(a0), qs = divisors(an);
      for (const auto& pp : ps)
        for (const auto& qq : qs) {
          Rational q(pp, qq);
          q.canonicalize();
          candidates.push_back(q);
          candidates.push_back(-q);
        }
    } else if (p.size() <= 5) {
      std::vector<CNum> cp;
      for (const auto& q : p) cp.push_back(to_cnum(q));
      for (const auto& r : poly_roots(cp)) {
        if (std::abs(r.imag()) > 1e-6 * (1.0 + std::abs(r))) continue;
        for (auto& q : convergents(r.real(), limit)) candidates.push_back(q);
      }
    }
    const std::span<const Rational> ps(p);
    for (const auto& q : candidates) {
      if (evaluate_poly<Rational>(ps, q) == 0) found.push_back(q);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace homlie
