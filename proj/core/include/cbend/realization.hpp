#pragma once

#include <array>
#include <vector>

#include "cbend/holonomy.hpp"
#include "cbend/triangle.hpp"

namespace cbend {

struct DevelopedTriangle {
  int face = 0;
  int entry_side = 0;   // side through which the node was reached; 0 at the root
  int parent = -1;
  int parent_side = -1;  // side of the parent face crossed to reach this node
  int depth = 0;
  Color color = Color::White;  // parity of type-1 crossings from the base
  std::array<BoundaryPoint, 3> corners;  // indexed by face corner
  SimplicialPath word;                   // base vertex -> (face, entry_side)
  std::array<int, 3> neighbor{-1, -1, -1};

  IdealTriangle triangle() const { return {corners}; }
};

struct BentRealization {
  int depth = 0;
  std::vector<DevelopedTriangle> nodes;  // breadth-first order, root first
};

inline int developed_count(int depth) { return depth <= 0 ? 1 : 1 + 3 * ((1 << depth) - 1); }

// The base vertex is side 0 of face 0; its triangle is (inf, [-1,0], [0,0]).
BentRealization develop(const Representation& rep, int depth);

double max_abs_cartan(const BentRealization& rl);

// Max |Z - expected| over crossed edges: D(e) from a white node, conj D(e) from a black one.
double z_consistency_residual(const BentRealization& rl, const Representation& rep);

struct EquivarianceReport {
  double max_residual = 0.0;
  int samples = 0;
};

// Compares phi(gamma m) with rho(gamma) phi(m) for closed loops at the base vertex.
// samples <= 0 uses every pair. Throws InsufficientDepth when nothing fits.
EquivarianceReport equivariance_audit(const BentRealization& rl, const Representation& rep,
                                      const std::vector<SimplicialPath>& loops, int samples = 0);

// Loops from the generator system and their inverses.
std::vector<SimplicialPath> audit_loops(const Representation& rep);

struct ToledoResult {
  double value = 0.0;
  bool type_preserving = true;
};

// 2 * sum of Cartan invariants over the first occurrence of each face.
ToledoResult toledo(const BentRealization& rl, const Representation& rep);

// Every finite vertex has Im z = 0 and t = 0, relative to its size.
bool real_fuchsian_audit(const BentRealization& rl, double tol = 1e-9);

}  // namespace cbend
