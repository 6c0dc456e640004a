#include "cbend/realization.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace cbend {

namespace {

IdealTriangle labelled(const DevelopedTriangle& n, int side) {
  return {{n.corners[(side + 1) % 3], n.corners[(side + 2) % 3], n.corners[side]}};
}

cplx crossing_value(const Representation& rep, const DevelopedTriangle& n, int side) {
  const cplx z = rep.decoration.at(rep.tri->faces[n.face].sides[side].edge);
  return n.color == Color::White ? z : std::conj(z);
}

}  // namespace

BentRealization develop(const Representation& rep, int depth) {
  if (depth < 0) throw Error(ErrorKind::InsufficientDepth, "depth must be non-negative");
  const Triangulation& t = *rep.tri;
  BentRealization rl;
  rl.depth = depth;
  rl.nodes.reserve(developed_count(depth));

  DevelopedTriangle root;
  root.face = 0;
  root.entry_side = 0;
  root.word.start = dual_id(0, 0);
  const IdealTriangle s = standard_triangle();
  root.corners[1] = s.p[0];
  root.corners[2] = s.p[1];
  root.corners[0] = s.p[2];
  rl.nodes.push_back(root);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    if (rl.nodes[id].depth >= depth) continue;
    for (int side = 0; side < 3; ++side) {
      const DevelopedTriangle& node = rl.nodes[id];
      if (node.parent >= 0 && side == node.entry_side) continue;
      const int from = dual_id(node.face, side);
      const int to = t.across(from);
      DevelopedTriangle child;
      child.face = dual_face(to);
      child.entry_side = dual_side(to);
      child.parent = id;
      child.parent_side = side;
      child.depth = node.depth + 1;
      child.color = node.color == Color::White ? Color::Black : Color::White;

      child.word = node.word;
      const int entry = dual_id(node.face, node.entry_side);
      if (side == (node.entry_side + 1) % 3)
        child.word.steps.push_back(step_E(t, entry));
      else if (side == (node.entry_side + 2) % 3)
        child.word.steps.push_back(step_Einv(t, entry));
      child.word.steps.push_back(step_cross(t, from));
      child.neighbor[child.entry_side] = id;

      // Corners come from the holonomy of the word rather than chaining
      // extend_by_z from the parent, which drifts off the real plane by depth ~10.
      // Corner k is the image of root corner k - entry_side.
      const Isometry g = path_isometry(rep, child.word);
      for (int k = 0; k < 3; ++k) child.corners[k] = apply(g, rl.nodes[0].corners[(k - child.entry_side + 3) % 3]);
      // Shared corners are copied so neighbours agree exactly.
      child.corners[(child.entry_side + 1) % 3] = node.corners[side];
      child.corners[child.entry_side] = node.corners[(side + 1) % 3];

      const int child_id = static_cast<int>(rl.nodes.size());
      rl.nodes[id].neighbor[side] = child_id;
      rl.nodes.push_back(std::move(child));
      queue.push_back(child_id);
    }
  }
  return rl;
}

double max_abs_cartan(const BentRealization& rl) {
  double m = 0.0;
  for (const auto& n : rl.nodes) m = std::max(m, std::abs(cartan(n.triangle())));
  return m;
}

double z_consistency_residual(const BentRealization& rl, const Representation& rep) {
  double m = 0.0;
  for (const auto& n : rl.nodes) {
    if (n.parent < 0) continue;
    const DevelopedTriangle& p = rl.nodes[n.parent];
    const int s = n.parent_side;
    const IdealTriangle t1 = labelled(p, s);
    const IdealTriangle t2{{p.corners[s], n.corners[(n.entry_side + 2) % 3], p.corners[(s + 1) % 3]}};
    m = std::max(m, std::abs(z_invariant_raw(t1, t2) - crossing_value(rep, p, s)));
  }
  return m;
}

namespace {

// Node reached by following the type-1 steps of a path from the root; -1 if outside.
int walk(const BentRealization& rl, const Representation& rep, const SimplicialPath& p) {
  int node = 0;
  int cur = p.start;
  for (const auto& s : p.steps) {
    const DualEdge& e = rep.graph.edges.at(s.edge);
    if (e.type == 1) {
      node = rl.nodes[node].neighbor[dual_side(cur)];
      if (node < 0) return -1;
    }
    cur = s.forward ? e.to : e.from;
  }
  return node;
}

}  // namespace

std::vector<SimplicialPath> audit_loops(const Representation& rep) {
  const GeneratorSystem gs = generator_system(*rep.tri);
  std::vector<SimplicialPath> loops;
  for (const auto* group : {&gs.pairing_loops, &gs.c})
    for (const auto& l : *group) {
      loops.push_back(l);
      loops.push_back(reversed(l, l.start));
    }
  return loops;
}

EquivarianceReport equivariance_audit(const BentRealization& rl, const Representation& rep,
                                      const std::vector<SimplicialPath>& loops, int samples) {
  EquivarianceReport rep_out;
  const int base = dual_id(0, 0);
  for (const auto& loop : loops) {
    if (loop.start != base || path_end(rep.graph, loop) != base)
      throw Error(ErrorKind::InvalidPath, "audit loops must be closed at the base vertex");
    const Isometry g = path_isometry(rep, loop);
    for (std::size_t i = 0; i < rl.nodes.size(); ++i) {
      if (samples > 0 && rep_out.samples >= samples) break;
      const DevelopedTriangle& n = rl.nodes[i];
      const int target = walk(rl, rep, concat(loop, n.word));
      if (target < 0) continue;
      const DevelopedTriangle& m = rl.nodes[target];
      for (int k = 0; k < 3; ++k)
        rep_out.max_residual =
            std::max(rep_out.max_residual, point_distance(m.corners[k], apply(g, n.corners[k])));
      ++rep_out.samples;
    }
  }
  if (rep_out.samples == 0)
    throw Error(ErrorKind::InsufficientDepth, "no translate of a developed triangle fits in the development");
  return rep_out;
}

ToledoResult toledo(const BentRealization& rl, const Representation& rep) {
  const Triangulation& t = *rep.tri;
  std::vector<bool> seen(t.faces.size(), false);
  std::size_t found = 0;
  ToledoResult out;
  for (const auto& n : rl.nodes) {
    if (seen[n.face]) continue;
    seen[n.face] = true;
    ++found;
    out.value += 2.0 * cartan(n.triangle());
  }
  if (found != t.faces.size())
    throw Error(ErrorKind::InsufficientDepth, "development does not reach every face");
  for (int x = 0; x < t.num_vertices(); ++x)
    if (!is_balanced(t, rep.decoration, x)) out.type_preserving = false;
  return out;
}

bool real_fuchsian_audit(const BentRealization& rl, double tol) {
  for (const auto& n : rl.nodes)
    for (const auto& p : n.corners)
      if (!p.infinity) {
        const double scale = std::max(1.0, std::abs(p.z));
        if (std::abs(p.z.imag()) > tol * scale || std::abs(p.t) > tol * scale * scale) return false;
      }
  return true;
}

}  // namespace cbend
