// scratch: family stratification timing probe
#include <chrono>
#include <cstdio>

#include "bsato/stratify.hpp"

using namespace bsato;
using Clock = std::chrono::steady_clock;

static void run(const char* name, const char* tmpl) {
  RingPtr R = Ring::make({"x", "y", "a", "b", "c", "d"});
  RingPtr C = Ring::make({"a", "b", "c", "d"});
  CPoly f = CPoly::parse(R, tmpl);
  auto t0 = Clock::now();
  Database db = stratify_bsp_family(f, C);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::printf("%s: %zu strata in %lld ms:", name, db.strata.size(), (long long)ms);
  for (auto& st : db.strata) std::printf("  b=%s", st.b.str().c_str());
  std::printf("\n");
  std::fflush(stdout);
}

int main() {
  run("f2", "a*x^3+b*x^2*y+c*x*y^2+d*y^3+x*y");
  run("f1", "a*x^3+b*x^2*y+c*x*y^2+d*y^3");
  run("f3", "a*x^3+b*x^2*y+c*x*y^2+d*y^3+x^2");
  return 0;
}
