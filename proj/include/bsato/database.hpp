#pragma once
#include "stratify.hpp"

#include <string>

namespace bsato {

// Versioned JSON snapshot of a stratification database. Strata appear sorted
// by the string form of b, pieces by their sorted generator strings, so equal
// databases always serialize byte-identically. deserialize restores the
// in-memory conventions (strata by (deg b, coefficients)) and accepts only
// the current format version.
std::string serialize(const Database& db);
Database deserialize(const std::string& bytes);

void save_database(const Database& db, const std::string& path);
Database load_database(const std::string& path);

}  // namespace bsato
