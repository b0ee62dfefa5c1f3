// Evaluates the textbook 3-expression for P_4 and compares it with the
// exact solver and the forest builder.
#include <iostream>

#include "cwchordal/cwchordal.hpp"

int main() {
  using namespace cwc;
  const Graph p4 = path_graph(4);
  // a=0, b=1, c=2, d=3
  const CwExpr e = parse_expr("(j 3 2 (u (v 3 3) (r 3 2 (r 2 1 (j 3 2 (u (v 3 2) (j 2 1 (u (v 2 1) (v 1 0)))))))))");
  std::cout << "expression  " << serialize(e) << '\n';
  std::cout << "width       " << width(e) << '\n';
  std::cout << "valid       " << (validate(e, p4) ? "yes" : "no") << '\n';

  ExactCwResult r = exact_cw(p4, 4);
  std::cout << "exact cw    " << *r.cw << '\n';
  std::cout << "witness     " << serialize(*r.witness) << '\n';

  BuildReport f = build_forest_expr(p4);
  std::cout << "forest      " << serialize(f.expression) << '\n';
}
