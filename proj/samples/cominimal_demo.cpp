// Build a co-minimal pair for the powers of two and print the dependents.
#include <mincomp/mincomp.hpp>

#include <iostream>

int main() {
  using namespace mincomp;
  auto C = parse_set_expression("gen:pow2");
  auto p = build_cominimal(C, Window(-10, 10));
  std::cout << "C = " << print(C) << "\nW = {";
  for (auto& w : p.W.elements()) std::cout << ' ' << abbrev(w, 20);
  std::cout << " }\n";
  for (auto& d : p.c_report.witnesses) std::cout << "c = " << d.c << " is needed for z = " << d.z << "\n";
  std::cout << to_string(p.c_report.verdict) << " / " << to_string(p.w_report.verdict) << "\n";
  std::cout << p.c_report.caveat << "\n";
  return p.certified ? 0 : 2;
}
