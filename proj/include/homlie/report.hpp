#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "homlie/homlie_reps.hpp"
#include "homlie/sl2.hpp"

namespace homlie {

using Json = nlohmann::ordered_json;

/// Rationals are always strings ("p/q" or "p"); CNum values are [re, im].
Json to_json(const Rational& q);
Json to_json(const CNum& z);
Json to_json(const GenDer5& d);
Json to_json(const CGenDer5& d);
Json to_json(const QMatrix& m);
Json to_json(const CMatrix& m);
Json to_json(const ClassLabel& label);
Json to_json(const Invariants& inv);
Json to_json(const CanonicalFormResult& r);
Json to_json(const RepSolution& s);
Json to_json(const HomLieJacobiReport& r);
Json to_json(const HomLieAlgebra& h);

/// Basis of an endomorphism space, each vector as an n x n matrix.
Json endomorphism_basis_json(const SubspaceBasis& b);

/// {"command", "inputs", "results", "mode", "seed"?}.
Json make_report(const std::string& command, Json inputs, Json results, bool approximate,
                 std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace homlie
