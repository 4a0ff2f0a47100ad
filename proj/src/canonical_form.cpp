#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "homlie/sl2.hpp"

namespace homlie {

// ---- classification --------------------------------------------------------------------------

std::string to_string(ClassLabel::Family f) {
  switch (f) {
    case ClassLabel::Family::RANK1: return "RANK1";
    case ClassLabel::Family::RANK2_A: return "RANK2_A";
    case ClassLabel::Family::RANK2_B: return "RANK2_B";
    case ClassLabel::Family::RANK3_A: return "RANK3_A";
    case ClassLabel::Family::RANK3_B: return "RANK3_B";
    case ClassLabel::Family::RANK3_DIAG: return "RANK3_DIAG";
  }
  return "?";
}

std::string ClassLabel::name() const {
  std::string s = to_string(family);
  if (sigma && lambda) return s + "(" + to_string(*sigma) + "," + to_string(*lambda) + ")";
  if (sigma) return s + "(" + to_string(*sigma) + ")";
  if (lambda) return s + "(" + to_string(*lambda) + ")";
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::distinct: return "distinct";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Invariants invariants(const GenDer5& d) {
  const QMatrix m = tuple_to_matrix(d);
  return {rank(m), charpoly(m)};
}

ClassLabel classify(const GenDer5& d) {
  using F = ClassLabel::Family;
  if (d.is_zero()) throw ZeroDerivation();
  const QMatrix m = tuple_to_matrix(d);
  const std::size_t r = rank(m);
  const auto cp = charpoly(m);  // x^3 + c1 x + c0, trace is always 0
  const Rational& c0 = cp[0];
  const Rational& c1 = cp[1];
  if (r == 1) return {F::RANK1, {}, {}};
  if (r == 2) {
    if (c1 == 0) return {F::RANK2_A, {}, {}};
    return {F::RANK2_B, Rational(-c1 / 4), {}};
  }
  if (c1 == 0) return {F::RANK3_A, {}, Rational(-c0 / 2)};
  if (4 * c1 * c1 * c1 + 27 * c0 * c0 == 0) {
    // Double root r and simple root -2r; diagonalizable iff (D - r)(D + 2r) = 0.
    const Rational root = -3 * c0 / (2 * c1);
    const QMatrix id = QMatrix::identity(3);
    if ((m - id * root) * (m + id * Rational(2 * root)) == QMatrix(3, 3)) return {F::RANK3_DIAG, {}, {}};
  }
  return {F::RANK3_B, Rational(-c1 / 4), Rational(-c0 / 2)};
}

ClassLabel classify_canonical(const GenDer5& d) {
  using F = ClassLabel::Family;
  if (d.zeta != 0 || d.mu != 0) throw std::invalid_argument("classify_canonical: tuple is not canonical (zeta or mu nonzero)");
  if (d.is_zero()) throw ZeroDerivation();
  if (d.eta == 0) return {d.sigma == 0 ? F::RANK1 : F::RANK2_A, {}, {}};
  const Rational s = d.eta * d.sigma;
  const Rational l = d.eta * d.eta * d.lambda;
  if (d.lambda == 0) {
    if (d.sigma == 0) return {F::RANK2_A, {}, {}};
    return {F::RANK2_B, s, {}};
  }
  if (d.sigma == 0) return {F::RANK3_A, {}, l};
  return {F::RANK3_B, s, l};
}

Verdict orbit_equivalent(const GenDer5& d1, const GenDer5& d2) {
  const ClassLabel a = classify(d1), b = classify(d2);
  if (a.family != b.family) return Verdict::distinct;
  if (a.family != ClassLabel::Family::RANK3_B) return Verdict::equivalent;
  // (sigma, lambda) -> (xi^2 sigma, xi^3 lambda) under scaling; sigma^3 / lambda^2 is the invariant.
  const Rational lhs = *a.sigma * *a.sigma * *a.sigma * *b.lambda * *b.lambda;
  const Rational rhs = *b.sigma * *b.sigma * *b.sigma * *a.lambda * *a.lambda;
  return lhs == rhs ? Verdict::equivalent : Verdict::distinct;
}

namespace {

struct ApproxLabel {
  ClassLabel::Family family;
  CNum sigma, lambda;
  bool ambiguous = false;
};

ApproxLabel approx_label(const CGenDer5& d, double eps) {
  using F = ClassLabel::Family;
  const CMatrix m = tuple_to_matrix(d);
  const double scale = max_magnitude(m);
  if (scale == 0.0) throw ZeroDerivation();
  ApproxLabel out{F::RANK1, {}, {}, false};
  const auto sv = singular_values(m);
  std::size_t r = 0;
  for (double s : sv) {
    if (s > eps * sv.front()) ++r;
    if (s > 1e-3 * eps * sv.front() && s < 1e3 * eps * sv.front()) out.ambiguous = true;
  }
  const CMatrix m2 = m * m;
  const CNum c1 = -0.5 * m2.trace();
  const CNum c0 = -(m2 * m).trace() / 3.0;  // -det for a traceless 3x3
  const bool c1_zero = std::abs(c1) <= eps * scale * scale;
  if (std::abs(c1) > 1e-3 * eps * scale * scale && std::abs(c1) < 1e3 * eps * scale * scale) out.ambiguous = true;
  out.sigma = -c1 / 4.0;
  out.lambda = -c0 / 2.0;
  if (r <= 1) out.family = F::RANK1;
  else if (r == 2) out.family = c1_zero ? F::RANK2_A : F::RANK2_B;
  else if (c1_zero) out.family = F::RANK3_A;
  else {
    out.family = F::RANK3_B;
    const double disc = std::abs(4.0 * c1 * c1 * c1 + 27.0 * c0 * c0);
    if (disc <= 1e3 * eps * std::pow(scale, 6)) out.ambiguous = true;
  }
  return out;
}

}  // namespace

Verdict orbit_equivalent(const CGenDer5& d1, const CGenDer5& d2, double eps) {
  const ApproxLabel a = approx_label(d1, eps), b = approx_label(d2, eps);
  if (a.ambiguous || b.ambiguous) return Verdict::inconclusive;
  if (a.family != b.family) return Verdict::distinct;
  if (a.family != ClassLabel::Family::RANK3_B) return Verdict::equivalent;
  const CNum lhs = a.sigma * a.sigma * a.sigma * b.lambda * b.lambda;
  const CNum rhs = b.sigma * b.sigma * b.sigma * a.lambda * a.lambda;
  const double tol = eps * std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) <= tol ? Verdict::inconclusive : Verdict::distinct;
}

// ---- reduction -------------------------------------------------------------------------------

namespace {

// Thrown inside the exact pass when a required root is irrational.
struct NeedApprox {};

template <class S>
class Reducer {
 public:
  explicit Reducer(const GenDer5Of<S>& d) : cur_(d) {}

  Reduction<S> run() {
    kill_mu();
    kill_zeta();
    normalize();
    out_.canonical = cur_;
    return std::move(out_);
  }

 private:
  enum class Slot { none, zeta, mu, eta_mu };

  bool zero(const S& x, int degree = 1) const;
  enum class Pick { least, first };
  S root_of(const std::vector<S>& ascending, Pick pick) const;

  void apply(const AutElementOf<S>& e, std::string rule, Slot force) {
    ReductionStep<S> step{e, cur_, act_conj(e, cur_), std::move(rule)};
    if (force == Slot::mu) {
      if (!zero(step.after.mu)) throw std::logic_error("canonical_form: step did not kill mu");
      step.after.mu = S(0);
    } else if (force == Slot::eta_mu) {
      if (!zero(step.after.eta) || !zero(step.after.mu)) throw std::logic_error("canonical_form: step broke eta = mu = 0");
      step.after.eta = S(0);
      step.after.mu = S(0);
    } else if (force == Slot::zeta) {
      if (!zero(step.after.zeta)) throw std::logic_error("canonical_form: step did not kill zeta");
      step.after.zeta = S(0);
    }
    cur_ = step.after;
    out_.steps.push_back(std::move(step));
  }

  void kill_mu() {
    if (zero(cur_.mu)) {
      cur_.mu = S(0);
      return;
    }
    const auto& d = cur_;
    if (zero(d.zeta) && zero(d.eta) && zero(d.sigma) && zero(d.lambda)) {
      apply(AutElementOf<S>::f(S(1), S(1)), "mu-only tuple: F(1,1) moves mu to the lambda slot", Slot::mu);
      return;
    }
    // mu of L_a(D) is p(a) = mu + 4 eta a + 6 zeta a^2 - 4 sigma a^3 + lambda a^4.
    const S a = root_of({d.mu, S(4) * d.eta, S(6) * d.zeta, S(-4) * d.sigma, d.lambda}, Pick::least);
    apply(AutElementOf<S>::h(a), "H(a) with p(a) = 0 kills mu", Slot::mu);
  }

  void kill_zeta() {
    if (zero(cur_.zeta)) {
      cur_.zeta = S(0);
      return;
    }
    if (!zero(cur_.eta)) {
      apply(AutElementOf<S>::g(-cur_.zeta / (S(2) * cur_.eta)), "G(-zeta/(2 eta)) kills zeta", Slot::zeta);
      return;
    }
    cur_.eta = S(0);
    if (zero(cur_.sigma) && zero(cur_.lambda)) {
      apply(AutElementOf<S>::f(S(1), S(1)), "eta = sigma = lambda = 0: F(1,1)", Slot::none);
    }
    // eta = mu = 0 and zeta != 0: pick a' with sigma', lambda' and 2 sigma'^2 - 3 zeta lambda' nonzero.
    const S z = cur_.zeta;
    std::optional<S> chosen;
    for (int k = 1; k <= 16 && !chosen; ++k) {
      const S a(k);
      const S s1 = cur_.sigma - S(3) * a * z;
      const S l1 = cur_.lambda - S(4) * a * cur_.sigma + S(6) * a * a * z;
      if (!zero(s1) && !zero(l1) && !zero(S(2) * s1 * s1 - S(3) * z * l1, 2)) chosen = a;
    }
    if (!chosen) throw NoCanonicalForm();
    apply(AutElementOf<S>::g(*chosen), "G(a') prepares sigma', lambda'", Slot::eta_mu);
    // mu of H(a) applied now is a^2 p3(a) with p3 = 6 zeta - 4 sigma' x + lambda' x^2.
    const S a = root_of({S(6) * cur_.zeta, S(-4) * cur_.sigma, cur_.lambda}, Pick::first);
    apply(AutElementOf<S>::h(a), "H(a) with p3(a) = 0 kills mu", Slot::mu);
    if (!zero(cur_.zeta)) {
      apply(AutElementOf<S>::g(-cur_.zeta / (S(2) * cur_.eta)), "G(-zeta''/(2 eta'')) kills zeta", Slot::zeta);
    } else {
      cur_.zeta = S(0);
    }
  }

  // Diag(nu) maps (0, eta, sigma, lambda, 0) to (0, eta/nu, nu sigma, nu^2 lambda, 0).
  void normalize() {
    if (!zero(cur_.eta)) {
      if (cur_.eta == S(1)) return;
      apply(AutElementOf<S>::diag(cur_.eta), "Diag(eta) normalizes eta to 1", Slot::none);
      out_.steps.back().after.eta = cur_.eta = S(1);
    } else if (!zero(cur_.sigma) && cur_.sigma != S(1)) {
      apply(AutElementOf<S>::diag(S(1) / cur_.sigma), "Diag(1/sigma) normalizes sigma to 1", Slot::none);
      out_.steps.back().after.sigma = cur_.sigma = S(1);
    }
  }

  GenDer5Of<S> cur_;
  Reduction<S> out_;
};

template <>
bool Reducer<Rational>::zero(const Rational& x, int) const {
  return x == 0;
}

template <>
bool Reducer<CNum>::zero(const CNum& x, int degree) const {
  const double s = std::max(1.0, max_magnitude(cur_));
  return std::abs(x) <= kApproxEps * std::pow(s, degree);
}

// Pick::least keeps the intermediate tuples small (ties go to the first in (re, im) order);
// Pick::first is the first root in (re, im) order.
template <>
Rational Reducer<Rational>::root_of(const std::vector<Rational>& ascending, Pick pick) const {
  const auto roots = rational_roots(ascending);
  if (roots.empty()) throw NeedApprox{};
  if (pick == Pick::first) return roots.front();
  return *std::min_element(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) { return abs(x) < abs(y); });
}

template <>
CNum Reducer<CNum>::root_of(const std::vector<CNum>& ascending, Pick pick) const {
  const auto roots = poly_roots(ascending);
  if (pick == Pick::first) return roots.front();
  const double tol = 1e-6;
  return *std::min_element(roots.begin(), roots.end(), [&](CNum x, CNum y) { return std::abs(x) < std::abs(y) * (1.0 - tol); });
}

}  // namespace

CGenDer5 CanonicalFormResult::canonical_cnum() const {
  if (const auto* exact = std::get_if<Reduction<Rational>>(&reduction)) return to_cnum(exact->canonical);
  return std::get<Reduction<CNum>>(reduction).canonical;
}

CanonicalFormResult canonical_form(const GenDer5& d) {
  if (d.is_zero()) throw ZeroDerivation();
  ClassLabel label = classify(d);
  if (label.family == ClassLabel::Family::RANK3_DIAG) throw NoCanonicalForm();
  try {
    return {d, Reducer<Rational>(d).run(), std::move(label)};
  } catch (const NeedApprox&) {
    return {d, Reducer<CNum>(to_cnum(d)).run(), std::move(label)};
  }
}

template <class S>
GenDer5Of<S> replay(const GenDer5Of<S>& input, const Reduction<S>& r) {
  GenDer5Of<S> cur = input;
  for (const auto& step : r.steps) cur = act_conj(step.element, cur);
  return cur;
}

template GenDer5 replay(const GenDer5&, const Reduction<Rational>&);
template CGenDer5 replay(const CGenDer5&, const Reduction<CNum>&);

}  // namespace homlie
