// Small tour of the library: build the even 2x2 matrix ring, compute its
// bracket subgroups, and watch the lattices separate.

#include <iostream>

#include "ncomm/algebra.hpp"
#include "ncomm/brackets.hpp"
#include "ncomm/builtin.hpp"

using namespace ncomm;

static void show(const Ring& ring, const char* label, const Subgroup& s) {
  std::cout << label << " (rank " << s.rank() << ")\n";
  for (const Vec& row : s.rows()) std::cout << "    " << format_element(ring, row) << "\n";
}

int main() {
  Ring ring = matrix_ring(2, 2, 0, "M2(2Z)");
  Subgroup whole = Subgroup::whole(ring);

  Subgroup b2 = bracket_subgroup(ring, {whole, whole});
  Subgroup b3 = bracket_subgroup(ring, {whole, whole, whole});
  show(ring, "[R,R]", b2);
  show(ring, "[R,R,R]", b3);

  Vec four_e12 = ring.zero_vec();
  four_e12[1] = 2;
  std::cout << "4e12 in [R,R]:   " << (b2.member(four_e12) ? "yes" : "no") << "\n";
  std::cout << "4e12 in [R,R,R]: " << (b3.member(four_e12) ? "yes" : "no") << "\n";

  show(ring, "I([R,R])", ideal_generated(ring, b2));
  show(ring, "Z(R)", center(ring));
  return 0;
}
