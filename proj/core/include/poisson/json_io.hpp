#ifndef POISSON_JSON_IO_HPP
#define POISSON_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "poisson/algebra.hpp"
#include "poisson/deformation.hpp"

namespace poisson::io {

using json = nlohmann::ordered_json;

// All schemas use 1-based basis indices and "p/q" strings for scalars;
// omitted entries are zero. Emission is deterministic: entries in
// lexicographic index order.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& where);

/// {"arity": k, "dim": n, "entries": [{"in": [i1..ik], "out": s, "val": "p/q"}, ...]}
json multilinear_to_json(const MultilinearMap& m);
MultilinearMap multilinear_from_json(const json& j);

/// {"dim": n, "product": [{"i":…, "j":…, "k":…, "val":"p/q"}, ...]}
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

/// {"dim": n, "bullet": [triples], "bracket": [triples]}
json pair_to_json(const PoissonPair& p);
PoissonPair pair_from_json(const json& j);

/// {"base": Algebra, "terms": [MultilinearMap, ...]}
json jet_to_json(const Jet& j);
Jet jet_from_json(const json& j);

/// {"ambient_dim":…, "dim":…, "basis": [MultilinearMap, ...]} where basis
/// vectors are decoded as arity-k cochains.
json cochain_subspace_to_json(const Subspace& s, std::size_t arity, std::size_t dim);

json axiom_report_to_json(const AxiomReport& r);
json rigidity_report_to_json(const RigidityReport& r);
json jet_verification_to_json(const JetVerification& v);
json extend_result_to_json(const ExtendResult& r, std::size_t dim);

json load_json_file(const std::string& path);

} // namespace poisson::io

#endif
