#pragma once

#include "cpoly.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bsato {

// Full command-line front end as a library call so tests can drive it.
// Returns the process exit status: 0 success, 1 domain error, 2 usage error,
// 3 incomplete computation or resource budget breach.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        std::istream& in);

// Bernstein-Sato polynomial in factored display form, roots ascending:
// "(s+1)*(s+1/2)", "(s+1)^2", "1".
std::string factored_b(const CPoly& b);

}  // namespace bsato
