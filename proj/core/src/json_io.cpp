#include "poisson/json_io.hpp"

#include <fstream>

#include "poisson/errors.hpp"

namespace poisson::io {

namespace {

std::size_t index_from_json(const json& j, const std::string& where, std::size_t dim) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
        throw ParseError(where + ": index must be an integer");
    long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw ParseError(where + ": index " + std::to_string(v) + " out of range 1.." +
                         std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

std::size_t dim_from_json(const json& j, const std::string& where) {
    if (!j.contains("dim")) throw ParseError(where + ": missing \"dim\"");
    long long n = j.at("dim").get<long long>();
    if (n < 1) throw ParseError(where + ": dim must be >= 1");
    return static_cast<std::size_t>(n);
}

json triples_to_json(const MultilinearMap& t) {
    json arr = json::array();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& v = t.coeff({i, j}, k);
                if (v.is_zero()) continue;
                json e;
                e["i"] = i + 1;
                e["j"] = j + 1;
                e["k"] = k + 1;
                e["val"] = v.str();
                arr.push_back(std::move(e));
            }
    return arr;
}

MultilinearMap triples_from_json(const json& arr, std::size_t dim, const std::string& where) {
    MultilinearMap t(2, dim);
    if (!arr.is_array()) throw ParseError(where + ": expected an array of triples");
    for (const auto& e : arr) {
        for (const char* f : {"i", "j", "k", "val"})
            if (!e.contains(f)) throw ParseError(where + ": triple missing \"" + f + "\"");
        std::size_t i = index_from_json(e.at("i"), where + ".i", dim);
        std::size_t j = index_from_json(e.at("j"), where + ".j", dim);
        std::size_t k = index_from_json(e.at("k"), where + ".k", dim);
        t.coeff({i, j}, k) += rational_from_json(e.at("val"), where + ".val");
    }
    return t;
}

} // namespace

json rational_to_json(const Rational& r) {
    return r.str();
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw ParseError(where + ": rational must be a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json multilinear_to_json(const MultilinearMap& m) {
    json out;
    out["arity"] = m.arity();
    out["dim"] = m.dim();
    json entries = json::array();
    const std::size_t k = m.arity(), n = m.dim();
    std::vector<std::size_t> idx(k, 0);
    std::size_t total = 1;
    for (std::size_t a = 0; a < k; ++a) total *= n;
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = k; a-- > 0;) {
            idx[a] = rem % n;
            rem /= n;
        }
        for (std::size_t s = 0; s < n; ++s) {
            const Rational& v = m.coeff(idx, s);
            if (v.is_zero()) continue;
            json e;
            json in = json::array();
            for (std::size_t a = 0; a < k; ++a) in.push_back(idx[a] + 1);
            e["in"] = std::move(in);
            e["out"] = s + 1;
            e["val"] = v.str();
            entries.push_back(std::move(e));
        }
    }
    out["entries"] = std::move(entries);
    return out;
}

MultilinearMap multilinear_from_json(const json& j) {
    const std::string where = "multilinear map";
    if (!j.contains("arity")) throw ParseError(where + ": missing \"arity\"");
    long long k = j.at("arity").get<long long>();
    if (k < 1 || k > 4) throw ParseError(where + ": arity must be in 1..4");
    std::size_t n = dim_from_json(j, where);
    MultilinearMap m(static_cast<std::size_t>(k), n);
    if (j.contains("entries")) {
        if (!j.at("entries").is_array()) throw ParseError(where + ": \"entries\" must be an array");
        for (const auto& e : j.at("entries")) {
            for (const char* f : {"in", "out", "val"})
                if (!e.contains(f)) throw ParseError(where + ": entry missing \"" + f + "\"");
            const auto& in = e.at("in");
            if (!in.is_array() || in.size() != static_cast<std::size_t>(k))
                throw ParseError(where + ": \"in\" must list " + std::to_string(k) + " indices");
            std::vector<std::size_t> idx;
            for (const auto& v : in) idx.push_back(index_from_json(v, where + ".in", n));
            std::size_t s = index_from_json(e.at("out"), where + ".out", n);
            m.coeff(idx, s) += rational_from_json(e.at("val"), where + ".val");
        }
    }
    return m;
}

json algebra_to_json(const Algebra& a) {
    json out;
    out["dim"] = a.dim();
    out["product"] = triples_to_json(a.as_bilinear());
    return out;
}

Algebra algebra_from_json(const json& j) {
    std::size_t n = dim_from_json(j, "algebra");
    if (!j.contains("product")) throw ParseError("algebra: missing \"product\"");
    return Algebra(triples_from_json(j.at("product"), n, "algebra.product"));
}

json pair_to_json(const PoissonPair& p) {
    json out;
    out["dim"] = p.dim();
    out["bullet"] = triples_to_json(p.bullet());
    out["bracket"] = triples_to_json(p.bracket());
    return out;
}

PoissonPair pair_from_json(const json& j) {
    std::size_t n = dim_from_json(j, "pair");
    MultilinearMap bullet =
        j.contains("bullet") ? triples_from_json(j.at("bullet"), n, "pair.bullet")
                             : MultilinearMap(2, n);
    MultilinearMap bracket =
        j.contains("bracket") ? triples_from_json(j.at("bracket"), n, "pair.bracket")
                              : MultilinearMap(2, n);
    try {
        return PoissonPair(std::move(bullet), std::move(bracket));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("pair: ") + e.what());
    }
}

json jet_to_json(const Jet& j) {
    json out;
    out["base"] = algebra_to_json(j.base());
    json terms = json::array();
    for (const auto& t : j.terms()) terms.push_back(multilinear_to_json(t));
    out["terms"] = std::move(terms);
    return out;
}

Jet jet_from_json(const json& j) {
    if (!j.contains("base")) throw ParseError("jet: missing \"base\"");
    Algebra base = algebra_from_json(j.at("base"));
    std::vector<MultilinearMap> terms;
    if (j.contains("terms")) {
        if (!j.at("terms").is_array()) throw ParseError("jet: \"terms\" must be an array");
        for (const auto& t : j.at("terms")) {
            MultilinearMap m = multilinear_from_json(t);
            if (m.arity() != 2) throw ParseError("jet: terms must be bilinear");
            terms.push_back(std::move(m));
        }
    }
    try {
        return Jet(std::move(base), std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("jet: ") + e.what());
    }
}

json cochain_subspace_to_json(const Subspace& s, std::size_t arity, std::size_t dim) {
    json out;
    out["ambient_dim"] = s.ambient_dim();
    out["dim"] = s.dim();
    json basis = json::array();
    for (const Vec& v : s.basis())
        basis.push_back(multilinear_to_json(MultilinearMap::from_coefficients(arity, dim, v)));
    out["basis"] = std::move(basis);
    return out;
}

json axiom_report_to_json(const AxiomReport& r) {
    json out;
    out["ok"] = r.all_ok();
    json flags;
    flags["commutative"] = r.commutative;
    flags["associative"] = r.associative;
    flags["jacobi"] = r.jacobi;
    flags["leibniz"] = r.leibniz;
    flags["markl_remm"] = r.markl_remm;
    out["flags"] = std::move(flags);
    json wit = json::array();
    for (const auto& w : r.witnesses) {
        json e;
        e["axiom"] = w.axiom;
        e["triple"] = {w.i + 1, w.j + 1, w.k + 1};
        json res = json::array();
        for (const auto& x : w.residual) res.push_back(x.str());
        e["residual"] = std::move(res);
        wit.push_back(std::move(e));
    }
    out["witnesses"] = std::move(wit);
    return out;
}

json rigidity_report_to_json(const RigidityReport& r) {
    json out;
    out["assoc_rigid_order1"] = r.assoc_rigid_order1;
    out["lie_order1_dim"] = r.lie_order1_dim;
    out["sym_order1_dim"] = r.sym_order1_dim;
    out["biderivation_dim"] = r.biderivation_dim;
    return out;
}

json jet_verification_to_json(const JetVerification& v) {
    json out;
    out["ok"] = v.ok;
    if (v.failure) {
        json f;
        f["order"] = v.failure->order;
        f["reason"] = v.failure->reason;
        f["residual"] = multilinear_to_json(v.failure->residual);
        out["failure"] = std::move(f);
    }
    return out;
}

json extend_result_to_json(const ExtendResult& r, std::size_t /*dim*/) {
    json out;
    if (std::holds_alternative<ExtensionSolutions>(r)) {
        const auto& sol = std::get<ExtensionSolutions>(r);
        out["status"] = "solutions";
        out["particular"] = multilinear_to_json(sol.particular);
        out["kernel_dim"] = sol.kernel.size();
        json basis = json::array();
        for (const auto& b : sol.kernel) basis.push_back(multilinear_to_json(b));
        out["kernel"] = std::move(basis);
    } else {
        out["status"] = "obstructed";
        out["residual"] = multilinear_to_json(std::get<Obstructed>(r).residual);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace poisson::io
