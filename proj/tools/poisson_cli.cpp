// Command-line frontend: load/emit algebras and cochains as JSON, run the
// verifiers, compute cocycle and derivation spaces, drive jet extension.
//
// Exit codes: 0 success; 1 malformed input or usage error; 2 computation
// succeeded but the verified property fails (witness payload on stdout).

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "poisson/catalog.hpp"
#include "poisson/cohomology.hpp"
#include "poisson/deformation.hpp"
#include "poisson/errors.hpp"
#include "poisson/json_io.hpp"

namespace {

using poisson::io::json;

struct CommonInput {
    std::string file;
    std::string catalog;
    std::string params;
    std::string bracket;
    std::string output = "json";
};

void add_input_options(CLI::App* cmd, CommonInput& in, bool positional_file = true) {
    if (positional_file)
        cmd->add_option("input", in.file, "input JSON file (algebra or pair schema)");
    cmd->add_option("--catalog", in.catalog, "built-in family name, e.g. P_10^3");
    cmd->add_option("--params", in.params, "comma-separated parameters, e.g. a=1,b=0");
    cmd->add_option("--bracket", in.bracket,
                    "bracket for P_12^3: sl2 | heisenberg | abelian | file.json");
    cmd->add_option("--output", in.output, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
}

poisson::CatalogParams parse_params(const CommonInput& in) {
    poisson::CatalogParams params;
    if (!in.params.empty()) {
        std::string rest = in.params;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string item = rest.substr(0, comma);
            rest = (comma == std::string::npos) ? "" : rest.substr(comma + 1);
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw poisson::BadParameter("--params items must look like name=value");
            params.scalars[item.substr(0, eq)] = poisson::Rational::parse(item.substr(eq + 1));
        }
    }
    if (!in.bracket.empty()) {
        if (in.bracket == "sl2" || in.bracket == "heisenberg" || in.bracket == "abelian") {
            params.bracket = poisson::named_bracket(in.bracket);
        } else {
            json j = poisson::io::load_json_file(in.bracket);
            if (j.contains("entries")) {
                params.bracket = poisson::io::multilinear_from_json(j);
            } else if (j.contains("bracket")) {
                poisson::PoissonPair p = poisson::io::pair_from_json(j);
                params.bracket = p.bracket();
            } else {
                throw poisson::ParseError("bracket file needs \"entries\" or \"bracket\"");
            }
        }
    }
    return params;
}

/// The subject of a command, from --catalog or from a JSON file whose schema
/// is detected by its keys ("product" = algebra, "bullet"/"bracket" = pair).
struct Subject {
    poisson::Algebra algebra;
    poisson::PoissonPair pair;
};

Subject load_subject(const CommonInput& in) {
    if (!in.catalog.empty()) {
        poisson::PoissonPair p = poisson::instantiate(in.catalog, parse_params(in));
        return {poisson::combine(p), p};
    }
    if (in.file.empty())
        throw poisson::ParseError("provide an input file or --catalog NAME");
    json j = poisson::io::load_json_file(in.file);
    if (j.contains("product")) {
        poisson::Algebra a = poisson::io::algebra_from_json(j);
        return {a, poisson::split(a)};
    }
    if (j.contains("bullet") || j.contains("bracket")) {
        poisson::PoissonPair p = poisson::io::pair_from_json(j);
        return {poisson::combine(p), p};
    }
    throw poisson::ParseError(
        in.file + ": expected an algebra (\"product\") or pair (\"bullet\"/\"bracket\") schema");
}

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

void emit_flags_text(const poisson::AxiomReport& r) {
    auto line = [](const char* name, bool v) {
        std::cout << "  " << name << ": " << (v ? "ok" : "FAIL") << "\n";
    };
    line("commutative", r.commutative);
    line("associative", r.associative);
    line("jacobi", r.jacobi);
    line("leibniz", r.leibniz);
    line("markl_remm", r.markl_remm);
    for (const auto& w : r.witnesses) {
        std::cout << "  witness " << w.axiom << " at (e" << w.i + 1 << ",e" << w.j + 1 << ",e"
                  << w.k + 1 << "): [";
        for (std::size_t s = 0; s < w.residual.size(); ++s)
            std::cout << (s ? ", " : "") << w.residual[s].str();
        std::cout << "]\n";
    }
}

poisson::SymmetryFilter parse_filter(const std::string& f) {
    if (f == "none") return poisson::SymmetryFilter::None;
    if (f == "symmetric") return poisson::SymmetryFilter::Symmetric;
    if (f == "skew") return poisson::SymmetryFilter::Skew;
    throw poisson::BadParameter("--filter must be none|symmetric|skew");
}

poisson::OperatorKind parse_kind(const std::string& k) {
    using poisson::OperatorKind;
    static const std::map<std::string, OperatorKind> kinds = {
        {"P2", OperatorKind::P2},            {"C2", OperatorKind::C2},
        {"H2", OperatorKind::H2},            {"L1", OperatorKind::L1},
        {"L2", OperatorKind::L2},            {"LP2", OperatorKind::LP2},
        {"CHEV2", OperatorKind::Chevalley2}, {"HOCH2", OperatorKind::Hochschild2}};
    auto it = kinds.find(k);
    if (it == kinds.end()) throw poisson::BadParameter("unknown operator kind '" + k + "'");
    return it->second;
}

poisson::DeformationKind parse_deformation_kind(const std::string& k) {
    if (k == "general") return poisson::DeformationKind::General;
    if (k == "lie") return poisson::DeformationKind::Lie;
    if (k == "associative") return poisson::DeformationKind::Associative;
    throw poisson::BadParameter("--kind must be general|lie|associative");
}

int run(int argc, char** argv) {
    CLI::App app{"exact deformation computations for finite-dimensional Poisson algebras"};
    app.require_subcommand(1);

    CommonInput in;
    std::string kind_str = "P2";
    std::string filter_str = "none";
    std::string defkind_str = "general";
    std::size_t ph_k = 2;
    bool combined = false;
    bool fully_symmetric_notion = false;

    auto* c_verify =
        app.add_subcommand("verify", "check the algebra axioms and the defining identity");
    add_input_options(c_verify, in);

    auto* c_split = app.add_subcommand("split", "algebra -> bullet/bracket pair");
    add_input_options(c_split, in);

    auto* c_combine = app.add_subcommand("combine", "bullet/bracket pair -> algebra");
    add_input_options(c_combine, in);

    auto* c_list = app.add_subcommand("catalog-list", "list the built-in families");
    c_list->add_option("--output", in.output)->check(CLI::IsMember({"json", "text"}));

    auto* c_show = app.add_subcommand("catalog-show", "instantiate a built-in family");
    c_show->add_option("name", in.catalog, "family name")->required();
    c_show->add_option("--params", in.params, "comma-separated parameters");
    c_show->add_option("--bracket", in.bracket, "bracket for P_12^3");
    c_show->add_flag("--combined", combined, "emit the combined algebra schema");
    c_show->add_option("--output", in.output)->check(CLI::IsMember({"json", "text"}));

    auto* c_cocycles = app.add_subcommand("cocycles", "kernel of a coboundary-type operator");
    add_input_options(c_cocycles, in);
    c_cocycles->add_option("--kind", kind_str, "P2|C2|H2|L1|L2|LP2|CHEV2|HOCH2");
    c_cocycles->add_option("--filter", filter_str, "none|symmetric|skew");

    auto* c_bider = app.add_subcommand("biderivations", "Lie biderivation space");
    add_input_options(c_bider, in);
    c_bider->add_option("--filter", filter_str, "none|symmetric|skew");

    auto* c_ph = app.add_subcommand("ph-space", "symmetric Lie k-derivation cochain space");
    add_input_options(c_ph, in);
    c_ph->add_option("--k", ph_k, "cochain arity (1..3)");
    c_ph->add_flag("--fully-symmetric", fully_symmetric_notion,
                   "use full symmetry instead of the signed-sum condition");

    auto* c_dverify =
        app.add_subcommand("deform-verify", "check a truncated deformation order by order");
    c_dverify->add_option("input", in.file, "jet JSON file")->required();
    c_dverify->add_option("--kind", defkind_str, "general|lie|associative");
    c_dverify->add_option("--output", in.output)->check(CLI::IsMember({"json", "text"}));

    auto* c_dextend = app.add_subcommand("deform-extend", "solve for the next-order term");
    c_dextend->add_option("input", in.file, "jet JSON file")->required();
    c_dextend->add_option("--kind", defkind_str, "general|lie|associative");
    c_dextend->add_option("--output", in.output)->check(CLI::IsMember({"json", "text"}));

    auto* c_rigid = app.add_subcommand("rigidity", "first-order rigidity certificate");
    add_input_options(c_rigid, in);

    CLI11_PARSE(app, argc, argv);

    if (c_verify->parsed()) {
        Subject s = load_subject(in);
        poisson::AxiomReport rep = poisson::verify(s.algebra);
        if (in.output == "text") emit_flags_text(rep);
        else emit(poisson::io::axiom_report_to_json(rep));
        return rep.all_ok() ? 0 : 2;
    }
    if (c_split->parsed()) {
        Subject s = load_subject(in);
        emit(poisson::io::pair_to_json(s.pair));
        return 0;
    }
    if (c_combine->parsed()) {
        Subject s = load_subject(in);
        emit(poisson::io::algebra_to_json(s.algebra));
        return 0;
    }
    if (c_list->parsed()) {
        auto entries = poisson::list_entries();
        if (in.output == "text") {
            for (const auto& e : entries) {
                std::cout << e.name << "  dim " << e.dim;
                for (const auto& p : e.params) {
                    std::cout << "  " << p.name << ":";
                    switch (p.domain) {
                        case poisson::ParamDomain::Binary01: std::cout << "{0,1}"; break;
                        case poisson::ParamDomain::FreeRational: std::cout << "rational"; break;
                        case poisson::ParamDomain::LieBracket: std::cout << "Lie bracket"; break;
                    }
                }
                std::cout << "\n";
            }
            return 0;
        }
        json out;
        out["count"] = entries.size();
        json arr = json::array();
        for (const auto& e : entries) {
            json je;
            je["name"] = e.name;
            je["dim"] = e.dim;
            json params = json::array();
            for (const auto& p : e.params) {
                json jp;
                jp["name"] = p.name;
                switch (p.domain) {
                    case poisson::ParamDomain::Binary01: jp["domain"] = "{0,1}"; break;
                    case poisson::ParamDomain::FreeRational: jp["domain"] = "rational"; break;
                    case poisson::ParamDomain::LieBracket: jp["domain"] = "lie-bracket"; break;
                }
                params.push_back(std::move(jp));
            }
            je["params"] = std::move(params);
            arr.push_back(std::move(je));
        }
        out["entries"] = std::move(arr);
        emit(out);
        return 0;
    }
    if (c_show->parsed()) {
        poisson::PoissonPair p = poisson::instantiate(in.catalog, parse_params(in));
        emit(combined ? poisson::io::algebra_to_json(poisson::combine(p))
                      : poisson::io::pair_to_json(p));
        return 0;
    }
    if (c_cocycles->parsed()) {
        Subject s = load_subject(in);
        poisson::Subspace space =
            poisson::cocycle_space(s.algebra, parse_kind(kind_str), parse_filter(filter_str));
        json out;
        out["kind"] = kind_str;
        out["filter"] = filter_str;
        out.update(poisson::io::cochain_subspace_to_json(space, 2, s.algebra.dim()));
        emit(out);
        return 0;
    }
    if (c_bider->parsed()) {
        Subject s = load_subject(in);
        poisson::Subspace space = poisson::lie_biderivation_space(s.pair, parse_filter(filter_str));
        json out;
        out["filter"] = filter_str;
        out.update(poisson::io::cochain_subspace_to_json(space, 2, s.pair.dim()));
        emit(out);
        return 0;
    }
    if (c_ph->parsed()) {
        Subject s = load_subject(in);
        poisson::Subspace space = poisson::ph_cochain_space(
            s.pair, ph_k,
            fully_symmetric_notion ? poisson::SymmetryNotion::FullySymmetric
                                   : poisson::SymmetryNotion::VSymmetric);
        json out;
        out["k"] = ph_k;
        out.update(poisson::io::cochain_subspace_to_json(space, ph_k, s.pair.dim()));
        emit(out);
        return 0;
    }
    if (c_dverify->parsed()) {
        poisson::Jet jet = poisson::io::jet_from_json(poisson::io::load_json_file(in.file));
        poisson::JetVerification v = poisson::verify_jet(jet, parse_deformation_kind(defkind_str));
        emit(poisson::io::jet_verification_to_json(v));
        return v.ok ? 0 : 2;
    }
    if (c_dextend->parsed()) {
        poisson::Jet jet = poisson::io::jet_from_json(poisson::io::load_json_file(in.file));
        poisson::ExtendResult r = poisson::extend_jet(jet, parse_deformation_kind(defkind_str));
        emit(poisson::io::extend_result_to_json(r, jet.base().dim()));
        return std::holds_alternative<poisson::Obstructed>(r) ? 2 : 0;
    }
    if (c_rigid->parsed()) {
        Subject s = load_subject(in);
        poisson::RigidityReport rep = poisson::rigidity_probe(s.pair);
        emit(poisson::io::rigidity_report_to_json(rep));
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
