#include "homlie/homlie_reps.hpp"

#include <map>
#include <stdexcept>

namespace homlie {

Sl2Module Sl2Module::irreducible(int m) { return direct_sum({m}); }

Sl2Module Sl2Module::direct_sum(const std::vector<int>& weights) {
  if (weights.empty()) throw std::invalid_argument("Sl2Module: need at least one summand");
  Sl2Module mod;
  for (int m : weights) {
    if (m < 0) throw std::invalid_argument("Sl2Module: highest weight must be >= 0");
    mod.offsets_.push_back(mod.dim_);
    mod.dim_ += static_cast<std::size_t>(m) + 1;
  }
  mod.weights_ = weights;
  for (auto& r : mod.rho_) r = QMatrix(mod.dim_, mod.dim_);
  for (std::size_t s = 0; s < weights.size(); ++s) {
    const int m = weights[s];
    const std::size_t o = mod.offsets_[s];
    for (int k = 0; k <= m; ++k) {
      const std::size_t i = o + static_cast<std::size_t>(k);
      mod.rho_[0](i, i) = m - 2 * k;
      if (k > 0) mod.rho_[1](i - 1, i) = m - k + 1;
      if (k < m) mod.rho_[2](i + 1, i) = k + 1;
    }
  }
  const auto& [h, e, f] = mod.rho_;
  if (!(commutator(h, e) == e * Rational(2)) || !(commutator(h, f) == f * Rational(-2)) || !(commutator(e, f) == h)) {
    throw std::logic_error("Sl2Module: commutation relations fail");
  }
  return mod;
}

QMatrix Sl2Module::rho_of(std::span<const Rational> x) const {
  if (x.size() != 3) throw std::invalid_argument("Sl2Module::rho_of: need sl2 coordinates (h, e, f)");
  QMatrix out(dim_, dim_);
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] != 0) out += rho_[i] * x[i];
  }
  return out;
}

RepSpec RepSpec::with_identity(Sl2Module m) {
  const std::size_t n = m.dim();
  return {std::move(m), QMatrix::identity(n)};
}

namespace {

// Coefficient rows of X -> left * X + X * right on row-major unknowns, appended to `sys` at `row`.
void add_sylvester(QMatrix& sys, std::size_t row, const QMatrix& left, const QMatrix& right, std::size_t rows,
                   std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t eq = row + r * cols + c;
      for (std::size_t k = 0; k < rows; ++k) {
        if (left(r, k) != 0) sys(eq, k * cols + c) += left(r, k);
      }
      for (std::size_t k = 0; k < cols; ++k) {
        if (right(k, c) != 0) sys(eq, r * cols + k) += right(k, c);
      }
    }
}

}  // namespace

RepSolution solve_rep_extension(const RepSpec& spec, const GenDer5& d) {
  const std::size_t n = spec.module.dim();
  if (!(spec.L == QMatrix::identity(n))) throw Unsupported("Unsupported: only L = identity is implemented");
  const QMatrix dm = tuple_to_matrix(d);
  QMatrix sys(3 * n * n, n * n);
  QVector rhs(3 * n * n, Rational(0));
  for (std::size_t j = 0; j < 3; ++j) {
    const QMatrix& rj = spec.module.rho(j);
    add_sylvester(sys, j * n * n, rj, rj, n, n);
    const QMatrix target = spec.module.rho_of(dm.col(j)) * Rational(-1);
    for (std::size_t i = 0; i < n * n; ++i) rhs[j * n * n + i] = target.flat()[i];
  }
  const AffineSolution sol = solve_affine(sys, rhs);
  RepSolution out;
  out.solvable = sol.solvable();
  if (sol.particular) out.particular = QMatrix(n, n, *sol.particular);
  for (const auto& v : sol.homogeneous.vectors) out.homogeneous.emplace_back(n, n, v);
  return out;
}

QMatrix rho_D_closed_form(const GenDer5& d) {
  return QMatrix{{-d.zeta, -2 * d.sigma, -d.lambda}, {-d.eta, 2 * d.zeta, d.sigma}, {-d.mu, 2 * d.eta, -d.zeta}};
}

SubspaceBasis anti_intertwiners(int m, int m2) {
  const Sl2Module a = Sl2Module::irreducible(m), b = Sl2Module::irreducible(m2);
  const std::size_t rows = b.dim(), cols = a.dim();
  QMatrix sys(3 * rows * cols, rows * cols);
  for (std::size_t j = 0; j < 3; ++j) add_sylvester(sys, j * rows * cols, b.rho(j), a.rho(j), rows, cols);
  return nullspace_basis(sys);
}

namespace {

QMatrix rho_at(const std::vector<QMatrix>& rho, std::span<const Rational> x, std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) out += rho[i] * x[i];
  }
  return out;
}

bool def5_holds(const HomLieAlgebra& h, const std::vector<QMatrix>& rho, const QMatrix& L, std::span<const Rational> x,
                std::span<const Rational> y) {
  const std::size_t n = L.rows();
  const QMatrix lhs = rho_at(rho, h.table.bracket(x, y), n) * L;
  const QMatrix rhs = rho_at(rho, h.twist.apply(x), n) * rho_at(rho, y, n) - rho_at(rho, h.twist.apply(y), n) * rho_at(rho, x, n);
  return lhs == rhs;
}

}  // namespace

HomLieAlgebra double_extension(const HomLieAlgebra& h, const RepSpec& spec, const std::vector<QMatrix>& rho) {
  const std::size_t g = h.dim(), n = spec.module.dim();
  if (rho.size() != g) throw std::invalid_argument("double_extension: need one rho matrix per basis element");
  for (const auto& r : rho) {
    if (r.rows() != n || r.cols() != n) throw std::invalid_argument("double_extension: rho matrix shape != module dim");
  }
  if (spec.L.rows() != n || spec.L.cols() != n) throw std::invalid_argument("double_extension: L shape != module dim");

  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      QVector x(g, Rational(0)), y(g, Rational(0));
      x[i] = 1;
      y[j] = 1;
      if (!def5_holds(h, rho, spec.L, x, y)) throw RepresentationViolation(i, j);
    }
  // Bilinearity guard on a fixed pair that is not made of basis vectors.
  QVector gx(g), gy(g);
  for (std::size_t i = 0; i < g; ++i) {
    gx[i] = Rational(static_cast<long>(i) + 1, 2);
    gy[i] = Rational(i % 2 == 0 ? 1 : -3);
  }
  if (!def5_holds(h, rho, spec.L, gx, gy)) throw RepresentationViolation(g, g);

  BracketTable t(g + n);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) t(i, j, k) = h.table(i, j, k);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      QVector img(g + n, Rational(0));
      for (std::size_t k = 0; k < n; ++k) img[g + k] = rho[i](k, b);
      t.set_skew(i, g + b, img);  // [x, v] = rho(x) v
    }
  QMatrix twist(g + n, g + n);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = 0; c < g; ++c) twist(r, c) = h.twist(r, c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) twist(g + r, g + c) = spec.L(r, c);

  std::vector<std::string> names = h.basis_names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k));
  HomLieAlgebra out = make_homlie_algebra(std::move(names), std::move(t), std::move(twist));
  const auto report = check_homlie_jacobi(out);
  if (!report.pass) throw JacobiViolation(*report.witness);
  return out;
}

HomLieAlgebra double_extension(const GenDer5& d, const RepSpec& spec, const QMatrix& rho_D) {
  const auto& m = spec.module;
  return double_extension(extend_sl2(d), spec, {m.rho(0), m.rho(1), m.rho(2), rho_D});
}

bool is_invariant(const SubspaceBasis& space, const std::vector<QMatrix>& operators) {
  for (const auto& op : operators)
    for (const auto& v : space.vectors) {
      if (!space.contains(op.apply(v))) return false;
    }
  return true;
}

SubspaceBasis find_invariant_complement(const RepSpec& spec, const QMatrix& rho_D, const SubspaceBasis& submodule) {
  const Sl2Module& mod = spec.module;
  const std::size_t n = mod.dim();
  if (submodule.ambient_dim != n) throw std::invalid_argument("find_invariant_complement: ambient dimension != module dim");
  if (rho_D.rows() != n || rho_D.cols() != n) throw std::invalid_argument("find_invariant_complement: rho(D) shape != module dim");
  const std::vector<QMatrix> ops{mod.rho(0), mod.rho(1), mod.rho(2), rho_D};
  if (!is_invariant(submodule, ops)) throw NotInvariant("NotInvariant: submodule is not invariant under rho(H), rho(E), rho(F), rho(D)");

  // rho(H) is diagonal in the weight basis, so weight spaces are coordinate subspaces.
  std::map<int, std::vector<std::size_t>, std::greater<>> weight_coords;
  for (std::size_t i = 0; i < n; ++i) weight_coords[static_cast<int>(mod.rho(0)(i, i).get_num().get_si())].push_back(i);

  const SubspaceBasis kernel_e = nullspace_basis(mod.rho(1));
  std::vector<QVector> complement;
  for (const auto& [w, coords] : weight_coords) {
    if (w < 0) continue;
    std::vector<QVector> unit_vectors;
    for (auto i : coords) {
      QVector v(n, Rational(0));
      v[i] = 1;
      unit_vectors.push_back(std::move(v));
    }
    const SubspaceBasis hw = intersect(kernel_e, SubspaceBasis{n, unit_vectors});
    SubspaceBasis taken = intersect(hw, submodule);
    for (const auto& v : hw.vectors) {
      std::vector<QVector> trial = taken.vectors;
      trial.push_back(v);
      if (rank(SubspaceBasis{n, trial}.as_rows()) == taken.dim()) continue;
      taken.vectors.push_back(v);
      // F-string v, Fv, ..., F^w v spans an irreducible copy of V(w).
      QVector cur = v;
      for (int k = 0; k <= w; ++k) {
        complement.push_back(cur);
        cur = mod.rho(2).apply(cur);
      }
    }
  }
  SubspaceBasis out = span_of(n, complement);
  std::vector<QVector> both = submodule.vectors;
  both.insert(both.end(), out.vectors.begin(), out.vectors.end());
  if (out.dim() + submodule.dim() != n || rank(SubspaceBasis{n, both}.as_rows()) != n) {
    throw std::logic_error("find_invariant_complement: complement does not give a direct sum");
  }
  if (!is_invariant(out, ops)) throw std::logic_error("find_invariant_complement: sl2-complement is not rho(D)-invariant");
  return out;
}

}  // namespace homlie
