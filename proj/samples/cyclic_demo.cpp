// Which subsets of Z/6 arise as minimal complements, and the unitary Cayley graph on Z/12.
#include <mincomp/mincomp.hpp>

#include <iostream>

int main() {
  using namespace mincomp;
  const std::int64_t m = 6;
  int arise = 0;
  for (std::uint64_t c = 1; c <= CyclicSet::full_mask(m); ++c) {
    auto a = solve_arises(CyclicSet(m, c));
    if (!a.arises) continue;
    ++arise;
    std::cout << json::residues(a.C).dump() << " with W = " << json::residues(*a.witness_W).dump() << "\n";
  }
  std::cout << arise << " of " << CyclicSet::full_mask(m) << " nonempty subsets arise\n";
  auto g = cayley_domination(12);
  std::cout << "n = 12: gamma = " << g.gamma << ", upper gamma = " << g.upper_gamma << "\n";
  return 0;
}
