#include <cmath>
#include <stdexcept>

#include "homlie/sl2.hpp"

namespace homlie {

CGenDer5 to_cnum(const GenDer5& d) {
  return {to_cnum(d.zeta), to_cnum(d.eta), to_cnum(d.sigma), to_cnum(d.lambda), to_cnum(d.mu)};
}

double max_magnitude(const CGenDer5& d) {
  double m = 0.0;
  for (const auto& z : d.components()) m = std::max(m, std::abs(z));
  return m;
}

template <class S>
Matrix<S> tuple_to_matrix(const GenDer5Of<S>& d) {
  const S two(2);
  return Matrix<S>{{two * d.zeta, d.eta, d.sigma}, {two * d.sigma, -d.zeta, d.lambda}, {two * d.eta, d.mu, -d.zeta}};
}

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows != 3 || cols != 3) throw std::invalid_argument("matrix_to_tuple: need a 3x3 matrix");
}

}  // namespace

GenDer5 matrix_to_tuple(const QMatrix& m) {
  check_shape(m.rows(), m.cols());
  GenDer5 d{m(0, 0) / 2, m(0, 1), m(0, 2), m(1, 2), m(2, 1)};
  if (!(tuple_to_matrix(d) == m)) throw NotAGenDer("NotAGenDer: matrix is not in span{P,Q,R,S,T}");
  return d;
}

CGenDer5 matrix_to_tuple(const CMatrix& m, double eps) {
  check_shape(m.rows(), m.cols());
  CGenDer5 d{m(0, 0) / 2.0, m(0, 1), m(0, 2), m(1, 2), m(2, 1)};
  const double tol = eps * std::max(1.0, max_magnitude(m));
  const CMatrix back = tuple_to_matrix(d);
  for (std::size_t i = 0; i < 9; ++i) {
    if (std::abs(back.flat()[i] - m.flat()[i]) > tol) throw NotAGenDer("NotAGenDer: matrix is not in span{P,Q,R,S,T}");
  }
  return d;
}

template <class S>
std::array<S, 3> sl2_bracket(std::span<const S> x, std::span<const S> y) {
  const S two(2);
  return {x[1] * y[2] - x[2] * y[1], two * (x[0] * y[1] - x[1] * y[0]), -two * (x[0] * y[2] - x[2] * y[0])};
}

namespace {

template <class S>
bool preserves(const Matrix<S>& a, double tol) {
  if (a.rows() != 3 || a.cols() != 3) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto ci = a.col(i), cj = a.col(j);
      std::array<S, 3> ei{}, ej{};
      ei.fill(S(0));
      ej.fill(S(0));
      ei[i] = S(1);
      ej[j] = S(1);
      const auto lhs = a.apply(sl2_bracket<S>(ei, ej));
      const auto rhs = sl2_bracket<S>(ci, cj);
      for (std::size_t k = 0; k < 3; ++k) {
        if (magnitude(S(lhs[k] - rhs[k])) > tol) return false;
      }
    }
  return true;
}

}  // namespace

bool preserves_sl2_bracket(const QMatrix& a) { return preserves(a, 0.0); }

bool preserves_sl2_bracket(const CMatrix& a, double eps) {
  const double s = std::max(1.0, max_magnitude(a));
  return preserves(a, eps * s * s);
}

template <class S>
AutElementOf<S> AutElementOf<S>::inverse() const {
  switch (kind) {
    case AutKind::G: return g(-a);
    case AutKind::H: return h(-a);
    case AutKind::F: return f(-a, c);
    case AutKind::Diag: return diag(S(1) / a);
  }
  throw std::logic_error("AutElement: unknown kind");
}

namespace {

std::string scalar_text(const Rational& q) { return to_string(q); }
std::string scalar_text(const CNum& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", z.real(), z.imag());
  return buf;
}

}  // namespace

template <class S>
std::string AutElementOf<S>::describe() const {
  switch (kind) {
    case AutKind::G: return "G(" + scalar_text(a) + ")";
    case AutKind::H: return "H(" + scalar_text(a) + ")";
    case AutKind::F: return "F(" + scalar_text(a) + "," + scalar_text(c) + ")";
    case AutKind::Diag: return "Diag(" + scalar_text(a) + ")";
  }
  return "?";
}

template <class S>
Matrix<S> aut_matrix(const AutElementOf<S>& e) {
  const S& a = e.a;
  const S one(1), two(2);
  switch (e.kind) {
    case AutKind::G:
      return Matrix<S>{{one, S(0), a}, {-two * a, one, -a * a}, {S(0), S(0), one}};
    case AutKind::H:
      return Matrix<S>{{one, -a, S(0)}, {S(0), one, S(0)}, {two * a, -a * a, one}};
    case AutKind::F: {
      if (a == S(0) || e.c == S(0)) throw std::invalid_argument("aut_matrix: F(a,c) needs a, c != 0");
      const S& c = e.c;
      const S a2 = a * a;
      return Matrix<S>{{one - two * a2, (a + a2) / c, a * c - a2 * c},
                       {-two * a * c - two * a2 * c, (one + a) * (one + a), -a2 * c * c},
                       {(two * a2 - two * a) / c, -a2 / (c * c), (one - a) * (one - a)}};
    }
    case AutKind::Diag: {
      if (a == S(0)) throw std::invalid_argument("aut_matrix: Diag(nu) needs nu != 0");
      return Matrix<S>{{one, S(0), S(0)}, {S(0), a, S(0)}, {S(0), S(0), one / a}};
    }
  }
  throw std::logic_error("aut_matrix: unknown kind");
}

template <class S>
Matrix<S> aut_matrix(const GroupElementOf<S>& g) {
  Matrix<S> m = Matrix<S>::identity(3);
  for (const auto& e : g.auts) m = aut_matrix(e) * m;
  return m;
}

namespace {

GenDer5 from_matrix(const QMatrix& m) { return matrix_to_tuple(m); }
// Conjugation by an automorphism keeps the space, so rounding is the only source of deviation:
// least-squares projection onto span{P,Q,R,S,T} instead of a membership test.
CGenDer5 from_matrix(const CMatrix& m) {
  return {(2.0 * m(0, 0) - m(1, 1) - m(2, 2)) / 6.0, (m(0, 1) + 2.0 * m(2, 0)) / 5.0, (m(0, 2) + 2.0 * m(1, 0)) / 5.0,
          m(1, 2), m(2, 1)};
}

}  // namespace

template <class S>
GenDer5Of<S> act_conj(const AutElementOf<S>& e, const GenDer5Of<S>& d) {
  return from_matrix(aut_matrix(e) * tuple_to_matrix(d) * aut_matrix(e.inverse()));
}

template <class S>
GenDer5Of<S> act_conj(const GroupElementOf<S>& g, const GenDer5Of<S>& d) {
  if (g.scale == S(0)) throw std::invalid_argument("act_conj: scale must be nonzero");
  Matrix<S> m = tuple_to_matrix(d);
  for (const auto& e : g.auts) m = aut_matrix(e) * m * aut_matrix(e.inverse());
  return from_matrix(m * g.scale);
}

template <class S>
GenDer5Of<S> act_closed(const ClosedAction<S>& act, const GenDer5Of<S>& d) {
  const S& a = act.a;
  if (a == S(0)) throw std::invalid_argument("act_closed: a must be nonzero");
  const S &z = d.zeta, &e = d.eta, &s = d.sigma, &l = d.lambda, &m = d.mu;
  const S k2(2), k3(3), k4(4), k6(6), k8(8), one(1);
  const S a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  switch (act.kind) {
    case ClosedKind::K:
      return {z + k2 * a * e + a2 * m, e + a * m, -k3 * a * z - k3 * a2 * e + s - a3 * m,
              k6 * a2 * z + k4 * a3 * e - k4 * a * s + l + a4 * m, m};
    case ClosedKind::L:
      return {z - k2 * a * s + a2 * l, k3 * a * z + e - k3 * a2 * s + a3 * l, s - a * l, l,
              k6 * a2 * z + k4 * a * e - k4 * a3 * s + a4 * l + m};
    case ClosedKind::J: {
      const S& c = act.c;
      if (c == S(0)) throw std::invalid_argument("act_closed: J needs c != 0");
      const S c2 = c * c, c3 = c2 * c, c4 = c3 * c;
      // Terms shared by the first three components.
      const S top = a4 * c4 * m + k4 * a4 * c3 * e + k6 * a4 * c2 * z - k4 * a4 * c * s + a4 * l;
      const S j1 = (top - k2 * a3 * c4 * m - k4 * a3 * c3 * e - k4 * a3 * c * s + k2 * a3 * l + a2 * c4 * m -
                    k2 * a2 * c3 * e - k6 * a2 * c2 * z + k2 * a2 * c * s + a2 * l + k2 * a * c3 * e + k2 * a * c * s +
                    c2 * z) /
                   c2;
      const S j2 = -(top - k3 * a3 * c4 * m - k8 * a3 * c3 * e - k6 * a3 * c2 * z + a3 * l + k3 * a2 * c4 * m +
                     k3 * a2 * c3 * e - k3 * a2 * c2 * z + k3 * a2 * c * s - a * c4 * m + k2 * a * c3 * e +
                     k3 * a * c2 * z - c3 * e) /
                   c3;
      const S j3 = (top - a3 * c4 * m + k6 * a3 * c2 * z - k8 * a3 * c * s + k3 * a3 * l - k3 * a2 * c3 * e -
                    k3 * a2 * c2 * z - k3 * a2 * c * s + k3 * a2 * l - k3 * a * c2 * z + k2 * a * c * s + a * l + c * s) /
                   c;
      const S p = one + a, q = one - a;
      const S j4 = k6 * a2 * c2 * p * p * z + k4 * a3 * c3 * p * e - k4 * a * c * p * p * p * s + p * p * p * p * l +
                   a4 * c4 * m;
      const S j5 = k6 * a2 * q * q * z / c2 - k4 * a * q * q * q * e / c + k4 * a3 * q * s / c3 + a4 * l / c4 +
                   q * q * q * q * m;
      return {j1, j2, j3, j4, j5};
    }
  }
  throw std::logic_error("act_closed: unknown kind");
}

#define HOMLIE_INSTANTIATE(S)                                                                  \
  template Matrix<S> tuple_to_matrix(const GenDer5Of<S>&);                                     \
  template std::array<S, 3> sl2_bracket(std::span<const S>, std::span<const S>);              \
  template struct AutElementOf<S>;                                                             \
  template Matrix<S> aut_matrix(const AutElementOf<S>&);                                       \
  template Matrix<S> aut_matrix(const GroupElementOf<S>&);                                     \
  template GenDer5Of<S> act_conj(const AutElementOf<S>&, const GenDer5Of<S>&);                \
  template GenDer5Of<S> act_conj(const GroupElementOf<S>&, const GenDer5Of<S>&);              \
  template GenDer5Of<S> act_closed(const ClosedAction<S>&, const GenDer5Of<S>&);

HOMLIE_INSTANTIATE(Rational)
HOMLIE_INSTANTIATE(CNum)

#undef HOMLIE_INSTANTIATE

}  // namespace homlie
