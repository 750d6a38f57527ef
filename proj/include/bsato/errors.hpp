#pragma once

#include <stdexcept>
#include <string>

namespace bsato {

// Exit-code taxonomy: domain_error -> 1, usage errors -> 2 (CLI only),
// incomplete_error / resource_error -> 3.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad mathematical input: unparsable expression, zero polynomial where
// nonzero is required, unknown variable, ring mismatch.
struct domain_error : error {
  using error::error;
};

struct parse_error : domain_error {
  using domain_error::domain_error;
};

struct ring_error : domain_error {
  using domain_error::domain_error;
};

// A computation step the implementation cannot finish exactly at this scale
// (decomposition-incomplete, factorization out of reach, b-extraction failure).
// Loud by design: never downgraded to a warning.
struct incomplete_error : error {
  using error::error;
};

// --max-seconds / --max-pairs budgets exceeded.
struct resource_error : error {
  using error::error;
};

}  // namespace bsato
