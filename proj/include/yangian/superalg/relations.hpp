#pragma once

#include <string>
#include <vector>

#include "yangian/report.hpp"
#include "yangian/superalg/algebra.hpp"

namespace yangian {

/// One instance of a defining relation, written with raw (unordered) words so that
/// it can be evaluated in any module as well as normal-ordered.
struct DefiningRelation {
  std::string family;
  int m = 0;
  int n = 0;
  AlgebraElement raw;

  std::string name() const;
};

/// Every relation line instantiated at all m, n in [lo, hi]. The h_0 base cases are
/// included once per n.
std::vector<DefiningRelation> defining_relations(int lo, int hi);

/// Normal-orders each relation at `floor` and checks that nothing is left.
Report verify_defining_relations(int lo, int hi, int floor);

}  // namespace yangian
