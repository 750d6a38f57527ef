// Scratch driver: probe the minimal_primes stall at Q = (a10*a11 - 2*a01*a20).
#include "bsato/minimal_primes.hpp"
#include "bsato/param_gb.hpp"
#include "bsato/stratify.hpp"

#include <chrono>
#include <iostream>

using namespace bsato;

static long ms(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

int main() {
  CPoly f = generic_poly(2, 2);
  RingPtr C = Ring::make(coefficient_names(2, 2));
  CPoly q = CPoly::parse(C, "a10*a11 - 2*a01*a20");

  StepResult r = bsp_step(f, C, {q});
  std::cout << "b = " << r.b.str() << ", " << r.h_factors.size() << " fence factors:\n";
  for (auto& g : r.h_factors) std::cout << "  " << g.str() << "\n";

  for (auto& g : r.h_factors) {
    auto t0 = std::chrono::steady_clock::now();
    Budget budget;
    budget.max_seconds = 20;
    try {
      auto primes = minimal_primes(make_ideal(C, {q, g}), &budget);
      auto t1 = std::chrono::steady_clock::now();
      std::cout << "factor " << g.str() << ": " << primes.size() << " primes in " << ms(t0, t1)
                << "ms\n";
    } catch (const resource_error&) {
      auto t1 = std::chrono::steady_clock::now();
      std::cout << "factor " << g.str() << ": TIMED OUT after " << ms(t0, t1) << "ms\n";
    }
  }
  return 0;
}
