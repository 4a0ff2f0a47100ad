#include "homlie/report.hpp"

#include "homlie/deriv_spaces.hpp"

namespace homlie {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const CNum& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const GenDer5& d) {
  Json out = Json::array();
  for (const auto& x : d.components()) out.push_back(to_json(x));
  return out;
}

Json to_json(const CGenDer5& d) {
  Json out = Json::array();
  for (const auto& x : d.components()) out.push_back(to_json(x));
  return out;
}

namespace {

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const QMatrix& m) { return matrix_json(m); }
Json to_json(const CMatrix& m) { return matrix_json(m); }

Json to_json(const ClassLabel& label) {
  Json out;
  out["label"] = to_string(label.family);
  Json params = Json::object();
  if (label.sigma) params["sigma"] = to_json(*label.sigma);
  if (label.lambda) params["lambda"] = to_json(*label.lambda);
  out["parameters"] = std::move(params);
  out["display"] = label.name();
  return out;
}

Json to_json(const Invariants& inv) {
  Json cp = Json::array();
  for (const auto& c : inv.charpoly) cp.push_back(to_json(c));
  return Json{{"rank", inv.rank}, {"charpoly", std::move(cp)}};
}

namespace {

template <class S>
Json reduction_json(const Reduction<S>& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json params = Json::array();
    params.push_back(to_json(s.element.a));
    if (s.element.kind == AutKind::F) params.push_back(to_json(s.element.c));
    steps.push_back(Json{{"element", s.element.describe()},
                         {"parameters", std::move(params)},
                         {"rule", s.rule},
                         {"before", to_json(s.before)},
                         {"after", to_json(s.after)}});
  }
  return steps;
}

}  // namespace

Json to_json(const CanonicalFormResult& r) {
  Json out;
  out["input"] = to_json(r.input);
  out["approximate"] = r.approximate();
  if (const auto* exact = std::get_if<Reduction<Rational>>(&r.reduction)) {
    out["canonical"] = to_json(exact->canonical);
    out["trace"] = reduction_json(*exact);
  } else {
    const auto& approx = std::get<Reduction<CNum>>(r.reduction);
    out["canonical"] = to_json(approx.canonical);
    out["trace"] = reduction_json(approx);
  }
  out["class"] = to_json(r.label);
  return out;
}

Json to_json(const RepSolution& s) {
  Json hom = Json::array();
  for (const auto& m : s.homogeneous) hom.push_back(to_json(m));
  return Json{{"solvable", s.solvable},
              {"solution", s.particular ? to_json(*s.particular) : Json(nullptr)},
              {"homogeneous_dim", s.homogeneous.size()},
              {"homogeneous", std::move(hom)}};
}

Json to_json(const HomLieJacobiReport& r) {
  Json out;
  out["pass"] = r.pass;
  if (r.witness) {
    out["witness"] = Json::array({(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
    Json res = Json::array();
    for (const auto& x : r.residual) res.push_back(to_json(x));
    out["residual"] = std::move(res);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const HomLieAlgebra& h) {
  Json c = Json::array();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j)
      for (std::size_t k = 0; k < h.dim(); ++k) {
        if (h.table(i, j, k) != 0) c.push_back(Json::array({i, j, k, to_string(h.table(i, j, k))}));
      }
  return Json{{"dim", h.dim()}, {"basis", h.basis_names}, {"c", std::move(c)}, {"twist", to_json(h.twist)}};
}

Json endomorphism_basis_json(const SubspaceBasis& b) {
  Json out = Json::array();
  for (const auto& v : b.vectors) out.push_back(to_json(as_square(v)));
  return out;
}

Json make_report(const std::string& command, Json inputs, Json results, bool approximate,
                 std::optional<std::uint64_t> seed) {
  Json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["mode"] = approximate ? "approximate" : "exact";
  if (seed) out["seed"] = *seed;
  return out;
}

}  // namespace homlie
