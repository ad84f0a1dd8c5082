#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suites.hpp"

using namespace crtube::suites;

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 light cone and EB(2,1,2): dims (3,4,3), so(2,3) Killing inertia", criterion_light_cone},
      {"2 EB(3,1,2), EB(2,2,2): dim 15, Killing nondegenerate", criterion_quadrics_n4},
      {"3 EB(2,1,3): g0 = <z dz>, g1 = 0, not locally homogeneous", criterion_fermat_cubic_algebra},
      {"4 Fermat cubic kernel profile 1 + d(x)", criterion_kernel_profile},
      {"5 EY, EZ, EX: order 2, dims (3,2), derived (5,3,0)", criterion_five_dimensional},
      {"6 EV candidate algebra verification", criterion_ev},
      {"7 pairwise distinctness of 7 algebras", criterion_pairwise_distinct},
      {"8 DU verdicts", criterion_du},
      {"9 property suites", criterion_properties},
  };
  int failed = 0;
  for (const auto& [label, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = fn();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s [%s, %.2fs]\n", v.pass() ? "PASS" : "FAIL", label.c_str(), v.summary().c_str(), secs);
    if (!v.pass()) ++failed;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
