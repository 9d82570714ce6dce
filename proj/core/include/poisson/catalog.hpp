#ifndef POISSON_CATALOG_HPP
#define POISSON_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poisson/algebra.hpp"

namespace poisson {

enum class ParamDomain {
    Binary01,     // a in {0, 1}
    FreeRational, // any rational value
    LieBracket,   // a skew tensor of structure constants, Jacobi-checked
};

struct ParamSpec {
    std::string name;
    ParamDomain domain;
};

struct CatalogEntryInfo {
    std::string name; // e.g. "P_10^3"
    std::size_t dim;
    std::vector<ParamSpec> params;
};

/// The built-in classification: 5 two-dimensional and 12 three-dimensional
/// families.
std::vector<CatalogEntryInfo> list_entries();

struct CatalogParams {
    std::map<std::string, Rational> scalars;
    std::optional<MultilinearMap> bracket; // for entries taking a Lie bracket

    static CatalogParams none() { return {}; }
};

/// Instantiates a family at concrete parameter values. Throws UnknownEntry
/// for an unlisted name and BadParameter for out-of-domain values (including
/// a supplied bracket that is not skew or fails Jacobi).
PoissonPair instantiate(const std::string& name, const CatalogParams& params = {});

/// Named brackets accepted for P_12^3: "sl2", "heisenberg", "abelian".
MultilinearMap named_bracket(const std::string& name, std::size_t dim = 3);

/// Basis idempotents of the bullet product listed per entry (0-based
/// indices), used by the centrality checks.
std::vector<std::size_t> entry_basis_idempotents(const std::string& name);

} // namespace poisson

#endif
