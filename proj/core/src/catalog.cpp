#include "poisson/catalog.hpp"

#include <functional>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

void sym_set(MultilinearMap& t, std::size_t i, std::size_t j, std::size_t k, Rational v) {
    t.coeff({i, j}, k) += v;
    if (i != j) t.coeff({j, i}, k) += v;
}

void skew_set(MultilinearMap& t, std::size_t i, std::size_t j, std::size_t k, Rational v) {
    t.coeff({i, j}, k) += v;
    t.coeff({j, i}, k) += -v;
}

Rational get_scalar(const CatalogParams& p, const std::string& name, ParamDomain domain) {
    auto it = p.scalars.find(name);
    if (it == p.scalars.end())
        throw BadParameter("missing parameter '" + name + "'");
    if (domain == ParamDomain::Binary01 && !(it->second == Rational(0) || it->second == Rational(1)))
        throw BadParameter("parameter '" + name + "' must be 0 or 1");
    return it->second;
}

struct EntryDef {
    CatalogEntryInfo info;
    std::function<PoissonPair(const CatalogParams&)> build;
    std::vector<std::size_t> idempotents;
};

// "e1 unit on e_1..e_m" rows: bullet with e1.e_i = e_i for i < m.
MultilinearMap unit_row(std::size_t n, std::size_t m) {
    MultilinearMap bu(2, n);
    for (std::size_t i = 0; i < m; ++i) sym_set(bu, 0, i, i, Rational(1));
    return bu;
}

const std::vector<EntryDef>& entries() {
    static const std::vector<EntryDef> defs = [] {
        std::vector<EntryDef> v;

        v.push_back({{"P_1^2", 2, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu = unit_row(2, 2);
                         sym_set(bu, 1, 1, 1, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 2));
                     },
                     {0, 1}});
        v.push_back({{"P_2^2", 2, {}},
                     [](const CatalogParams&) {
                         return PoissonPair(unit_row(2, 2), MultilinearMap(2, 2));
                     },
                     {0}});
        v.push_back({{"P_3^2", 2, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu(2, 2);
                         sym_set(bu, 0, 0, 1, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 2));
                     },
                     {}});
        v.push_back({{"P_4^2", 2, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu(2, 2);
                         sym_set(bu, 0, 0, 0, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 2));
                     },
                     {0}});
        v.push_back({{"P_5^2", 2, {{"a", ParamDomain::Binary01}}},
                     [](const CatalogParams& p) {
                         Rational a = get_scalar(p, "a", ParamDomain::Binary01);
                         MultilinearMap br(2, 2);
                         if (!a.is_zero()) skew_set(br, 0, 1, 1, a);
                         return PoissonPair(MultilinearMap(2, 2), br);
                     },
                     {}});

        v.push_back({{"P_1^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu = unit_row(3, 3);
                         sym_set(bu, 1, 1, 1, Rational(1));
                         sym_set(bu, 2, 2, 2, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {0, 1, 2}});
        v.push_back({{"P_2^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu = unit_row(3, 3);
                         sym_set(bu, 1, 1, 1, Rational(1));
                         sym_set(bu, 2, 2, 1, Rational(1));
                         sym_set(bu, 2, 2, 0, Rational(-1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {0, 1}});
        v.push_back({{"P_3^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu = unit_row(3, 3);
                         sym_set(bu, 1, 1, 1, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {0, 1}});
        v.push_back({{"P_4^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu = unit_row(3, 3);
                         sym_set(bu, 2, 2, 1, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {0}});
        v.push_back({{"P_5^3", 3, {{"a", ParamDomain::Binary01}}},
                     [](const CatalogParams& p) {
                         Rational a = get_scalar(p, "a", ParamDomain::Binary01);
                         MultilinearMap br(2, 3);
                         if (!a.is_zero()) skew_set(br, 1, 2, 2, a);
                         return PoissonPair(unit_row(3, 3), br);
                     },
                     {0}});
        v.push_back({{"P_6^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu = unit_row(3, 2);
                         sym_set(bu, 1, 1, 1, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {0, 1}});
        v.push_back({{"P_7^3", 3, {{"a", ParamDomain::Binary01}}},
                     [](const CatalogParams& p) {
                         Rational a = get_scalar(p, "a", ParamDomain::Binary01);
                         MultilinearMap bu(2, 3);
                         sym_set(bu, 0, 0, 0, Rational(1));
                         MultilinearMap br(2, 3);
                         if (!a.is_zero()) skew_set(br, 1, 2, 2, a);
                         return PoissonPair(bu, br);
                     },
                     {0}});
        v.push_back({{"P_8^3", 3, {}},
                     [](const CatalogParams&) {
                         return PoissonPair(unit_row(3, 2), MultilinearMap(2, 3));
                     },
                     {0}});
        v.push_back({{"P_9^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu(2, 3);
                         sym_set(bu, 0, 0, 0, Rational(1));
                         sym_set(bu, 1, 1, 2, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {0}});
        v.push_back({{"P_10^3", 3, {{"a", ParamDomain::FreeRational}, {"b", ParamDomain::FreeRational}}},
                     [](const CatalogParams& p) {
                         Rational a = get_scalar(p, "a", ParamDomain::FreeRational);
                         Rational b = get_scalar(p, "b", ParamDomain::FreeRational);
                         MultilinearMap bu(2, 3);
                         sym_set(bu, 0, 0, 1, Rational(1));
                         MultilinearMap br(2, 3);
                         if (!a.is_zero()) skew_set(br, 0, 2, 1, a);
                         if (!b.is_zero()) skew_set(br, 0, 2, 2, b);
                         return PoissonPair(bu, br);
                     },
                     {}});
        v.push_back({{"P_11^3", 3, {}},
                     [](const CatalogParams&) {
                         MultilinearMap bu(2, 3);
                         sym_set(bu, 0, 0, 1, Rational(1));
                         sym_set(bu, 0, 1, 2, Rational(1));
                         return PoissonPair(bu, MultilinearMap(2, 3));
                     },
                     {}});
        v.push_back({{"P_12^3", 3, {{"bracket", ParamDomain::LieBracket}}},
                     [](const CatalogParams& p) {
                         if (!p.bracket) throw BadParameter("P_12^3 needs a bracket tensor");
                         const MultilinearMap& br = *p.bracket;
                         if (br.arity() != 2 || br.dim() != 3)
                             throw BadParameter("P_12^3 bracket must be bilinear on dim 3");
                         if (!is_skew_bilinear(br)) throw BadParameter("P_12^3 bracket is not skew");
                         PoissonPair pair(MultilinearMap(2, 3), br);
                         if (!verify(pair).jacobi) throw BadParameter("P_12^3 bracket fails Jacobi");
                         return pair;
                     },
                     {}});
        return v;
    }();
    return defs;
}

const EntryDef& find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.info.name == name) return e;
    throw UnknownEntry("no catalog entry named '" + name + "'");
}

} // namespace

std::vector<CatalogEntryInfo> list_entries() {
    std::vector<CatalogEntryInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
}

PoissonPair instantiate(const std::string& name, const CatalogParams& params) {
    return find_entry(name).build(params);
}

MultilinearMap named_bracket(const std::string& name, std::size_t dim) {
    if (dim != 3) throw BadParameter("named brackets are three-dimensional");
    MultilinearMap br(2, 3);
    if (name == "sl2") {
        skew_set(br, 0, 1, 1, Rational(2));
        skew_set(br, 0, 2, 2, Rational(-2));
        skew_set(br, 1, 2, 0, Rational(1));
    } else if (name == "heisenberg") {
        skew_set(br, 0, 1, 2, Rational(1));
    } else if (name == "abelian") {
        // zero bracket
    } else {
        throw UnknownEntry("no built-in bracket named '" + name + "'");
    }
    return br;
}

std::vector<std::size_t> entry_basis_idempotents(const std::string& name) {
    return find_entry(name).idempotents;
}

} // namespace poisson
