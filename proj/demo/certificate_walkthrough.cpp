// Decomposes a small co(K_{1,3}+2P_1)-free chordal graph with a large clique
// and replays the certificate.
#include <iostream>

#include "cwchordal/cwchordal.hpp"

int main() {
  using namespace cwc;
  // K_8 on 0..7; 8..12 miss {0,1} and form the path 8-9-10-11-12
  GraphBuilder b(13);
  for (Vertex i = 0; i < 8; ++i)
    for (Vertex j = i + 1; j < 8; ++j) b.add_edge(i, j);
  for (Vertex s = 8; s < 13; ++s)
    for (Vertex k = 2; k < 8; ++k) b.add_edge(s, k);
  for (Vertex s = 8; s < 12; ++s) b.add_edge(s, s + 1);
  const Graph g = b.build();

  DecompositionCertificate c = decompose_cok13_2p1(g);
  std::cout << serialize(c);
  std::cout << "replay " << (verify_certificate(g, c) ? "ok" : "FAILED") << '\n';
}
