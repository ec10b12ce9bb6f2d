#pragma once

#include "lcslab/kform.hpp"
#include "lcslab/lie_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcslab {

struct ExpectedProfile {
    std::optional<bool> unimodular, solvable, nilpotent, type_I;
    std::optional<int> center_dim;
};

/// Ground-truth entry: an algebra, its known structures, and the
/// structural facts recorded for it. `lcs` always verifies;
/// `noted_nonverifying` carries quoted variants that do not satisfy the
/// structure equation under the fixed sign convention, kept so nothing is
/// silently dropped.
struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<std::pair<KForm, KForm>> lcs; // (omega, theta)
    std::optional<KForm> contact;               // eta
    ExpectedProfile expected;
    std::string reference;
    std::vector<std::pair<KForm, KForm>> noted_nonverifying = {};
};

/// Parameters by name ("b" for g1/g2, "a" and "b" for kf6). Throws
/// UnknownName / MissingParam.
CatalogEntry catalog_get(const std::string& name, const std::map<std::string, Rat>& params = {});

const std::vector<std::string>& catalog_names();

/// Every entry, parametrized families at their reference values
/// (b = 1, resp. a = b = 1).
std::vector<CatalogEntry> catalog_all();

} // namespace lcslab
