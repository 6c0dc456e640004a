#include "cbend/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace cbend {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

const Polygon& require_polygon(const Triangulation& t) {
  if (!t.polygon) throw Error(ErrorKind::MissingProvenance, "triangulation has no polygon provenance");
  return *t.polygon;
}

}  // namespace

bool Polygon::is_block_boundary(int corner) const {
  return std::any_of(blocks.begin(), blocks.end(),
                     [corner](const PolygonBlock& b) { return b.start == corner; });
}

void Triangulation::rebuild_index() {
  std::vector<std::vector<int>> sides(edges.size());
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int k = 0; k < 3; ++k) {
      const int e = faces[f].sides[k].edge;
      if (e < 0 || e >= static_cast<int>(edges.size()))
        throw Error(ErrorKind::Schema, "face side references unknown edge " + std::to_string(e));
      sides[e].push_back(dual_id(f, k));
    }
  opposite.assign(3 * faces.size(), -1);
  for (std::size_t e = 0; e < sides.size(); ++e) {
    if (sides[e].size() != 2)
      throw Error(ErrorKind::Schema, "edge " + std::to_string(e) + " does not bound exactly two sides");
    opposite[sides[e][0]] = sides[e][1];
    opposite[sides[e][1]] = sides[e][0];
  }
}

int Triangulation::num_vertices() const {
  int n = 0;
  for (const auto& e : edges) n = std::max({n, e.v0 + 1, e.v1 + 1});
  return n;
}

int Triangulation::corner_vertex(int f, int k) const {
  const FaceSide& s = faces.at(f).sides.at(mod(k, 3));
  const Edge& e = edges.at(s.edge);
  return s.dir > 0 ? e.v0 : e.v1;
}

int expected_faces(int genus, int punctures) { return 4 * genus - 4 + 2 * punctures; }
int expected_edges(int genus, int punctures) { return 6 * genus - 6 + 3 * punctures; }

std::vector<std::string> validate(const Triangulation& t) {
  std::vector<std::string> out;
  const int nf = static_cast<int>(t.faces.size());
  const int ne = static_cast<int>(t.edges.size());
  const int nv = t.num_vertices();
  if (nf != expected_faces(t.genus, t.punctures)) out.push_back("face count");
  if (ne != expected_edges(t.genus, t.punctures)) out.push_back("edge count");
  if (nv != t.punctures) out.push_back("vertex count");
  if (nv - ne + nf != 2 - 2 * t.genus) out.push_back("Euler characteristic");
  for (int i = 0; i < ne; ++i)
    if (t.edges[i].id != i) out.push_back("edge ids not contiguous");
  std::vector<int> plus(ne, 0), minus(ne, 0);
  for (const auto& f : t.faces)
    for (const auto& s : f.sides) {
      if (s.edge < 0 || s.edge >= ne) {
        out.push_back("dangling edge reference");
        return out;
      }
      (s.dir > 0 ? plus : minus)[s.edge]++;
    }
  for (int i = 0; i < ne; ++i)
    if (plus[i] != 1 || minus[i] != 1) out.push_back("edge " + std::to_string(i) + " incidence");
  if (static_cast<int>(t.opposite.size()) != 3 * nf) {
    out.push_back("index not built");
    return out;
  }
  for (int v = 0; v < 3 * nf; ++v) {
    const int w = t.opposite[v];
    const int f = dual_face(v), k = dual_side(v), g = dual_face(w), j = dual_side(w);
    if (t.corner_vertex(f, k) != t.corner_vertex(g, j + 1) ||
        t.corner_vertex(f, k + 1) != t.corner_vertex(g, j))
      out.push_back("gluing orientation at side " + std::to_string(v));
  }
  return out;
}

Triangulation build_from_polygon(const Polygon& p, int genus, int punctures) {
  const int n = p.corners;
  UnionFind uf(n);
  for (int s = 0; s < n; ++s) {
    const int j = p.partner.at(s);
    uf.unite(s, (j + 1) % n);
    uf.unite((s + 1) % n, j);
  }
  std::map<int, int> class_id;
  std::vector<int> corner_vertex(n);
  for (int c = 0; c < n; ++c) {
    const int r = uf.find(c);
    auto it = class_id.find(r);
    if (it == class_id.end()) it = class_id.emplace(r, static_cast<int>(class_id.size())).first;
    corner_vertex[c] = it->second;
  }

  Triangulation t;
  t.genus = genus;
  t.punctures = punctures;
  std::map<std::pair<int, int>, int> key_to_edge;
  for (const auto& tri : p.triangles) {
    Face face;
    for (int k = 0; k < 3; ++k) {
      const int u = tri[k], w = tri[(k + 1) % 3];
      std::pair<int, int> key;
      if (p.is_boundary_side(u, w))
        key = {-1, std::min(u, p.partner[u])};
      else
        key = {std::min(u, w), std::max(u, w)};
      auto it = key_to_edge.find(key);
      if (it == key_to_edge.end()) {
        const int id = static_cast<int>(t.edges.size());
        t.edges.push_back({id, corner_vertex[u], corner_vertex[w]});
        key_to_edge.emplace(key, id);
        face.sides[k] = {id, 1};
      } else {
        face.sides[k] = {it->second, -1};
      }
    }
    t.faces.push_back(face);
  }
  t.polygon = p;
  t.rebuild_index();
  if (is_bipartite(t)) t.coloring = bipartite_coloring(t);
  return t;
}

namespace {

// Word d1 d1' ... d_{n-1} d_{n-1}', fanned from corner 1. Consecutive fan
// triangles alternate color and every fold pairs an even with an odd one.
Triangulation fan_sphere(int punctures) {
  Polygon p;
  p.corners = 2 * (punctures - 1);
  p.partner.resize(p.corners);
  for (int j = 0; j + 1 < punctures; ++j) {
    p.partner[2 * j] = 2 * j + 1;
    p.partner[2 * j + 1] = 2 * j;
    p.blocks.push_back({BlockKind::Fold, 2 * j});
  }
  for (int k = 2; k < p.corners; ++k) p.triangles.push_back({1, k, (k + 1) % p.corners});
  // Rotated so the n = 3 case reads (1,2,3), (3,0,1).
  for (auto& tri : p.triangles)
    if (tri[2] == 0) tri = {tri[1], tri[2], tri[0]};
  return build_from_polygon(p, 0, punctures);
}

}  // namespace

Triangulation generate_base(BaseKind kind) {
  if (kind == BaseKind::Sphere3) return fan_sphere(3);
  Polygon p;
  p.corners = 4;
  p.partner = {2, 3, 0, 1};
  p.blocks = {{BlockKind::Handle, 0}};
  p.triangles = {{0, 1, 2}, {0, 2, 3}};
  return build_from_polygon(p, 1, 1);
}

Triangulation synthetic_nonbipartite() {
  Polygon p;
  p.corners = 4;
  p.partner = {1, 0, 3, 2};
  p.blocks = {{BlockKind::Fold, 0}, {BlockKind::Fold, 2}};
  p.triangles = {{0, 1, 2}, {0, 2, 3}};
  return build_from_polygon(p, 0, 3);
}

namespace {

// Polygon corners of an edge if it is a diagonal.
std::optional<std::pair<int, int>> diagonal_of(const Triangulation& t, int edge) {
  const Polygon& p = *t.polygon;
  for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
    for (int k = 0; k < 3; ++k)
      if (t.faces[f].sides[k].edge == edge) {
        const int u = p.triangles[f][k], w = p.triangles[f][(k + 1) % 3];
        if (p.is_boundary_side(u, w)) return std::nullopt;
        return std::pair{u, w};
      }
  return std::nullopt;
}

std::optional<std::pair<int, int>> insertion_corners(const Triangulation& t, int edge) {
  const auto d = diagonal_of(t, edge);
  if (!d) return std::nullopt;
  const Polygon& p = *t.polygon;
  auto [u, w] = *d;
  const bool bu = p.is_block_boundary(u), bw = p.is_block_boundary(w);
  if (!bu && !bw) return std::nullopt;
  int q = bu && bw ? std::min(u, w) : (bu ? u : w);
  int pp = q == u ? w : u;
  return std::pair{pp, q};
}

Triangulation insert_block(const Triangulation& t, int edge, BlockKind kind) {
  const Polygon& old = require_polygon(t);
  if (edge < 0 || edge >= static_cast<int>(t.edges.size()))
    throw Error(ErrorKind::NotInternalEdge, "unknown edge " + std::to_string(edge));
  const auto pq = insertion_corners(t, edge);
  if (!pq)
    throw Error(ErrorKind::NotInternalEdge,
                "edge " + std::to_string(edge) + " is not a diagonal ending at a block boundary");
  const auto [P, Q] = *pq;
  const int n = old.corners;
  const int k = kind == BlockKind::Handle ? 4 : 2;

  auto corner_map = [&](int c) { return c <= Q ? c : c + k; };
  auto side_map = [&](int s) { return s < Q ? s : s + k; };
  // Strictly inside the counterclockwise arc from P to Q.
  auto in_arc_pq = [&](int x) {
    const int dx = mod(x - P, n), dq = mod(Q - P, n);
    return dx > 0 && dx < dq;
  };

  Polygon np;
  np.corners = n + k;
  np.partner.assign(np.corners, -1);
  for (int s = 0; s < n; ++s) np.partner[side_map(s)] = side_map(old.partner[s]);
  if (kind == BlockKind::Handle) {
    np.partner[Q] = Q + 2;
    np.partner[Q + 2] = Q;
    np.partner[Q + 1] = Q + 3;
    np.partner[Q + 3] = Q + 1;
  } else {
    np.partner[Q] = Q + 1;
    np.partner[Q + 1] = Q;
  }
  for (const auto& b : old.blocks) np.blocks.push_back({b.kind, side_map(b.start)});
  np.blocks.push_back({kind, Q});
  std::sort(np.blocks.begin(), np.blocks.end(),
            [](const PolygonBlock& a, const PolygonBlock& b) { return a.start < b.start; });

  const int qlast = Q + k;
  for (const auto& tri : old.triangles) {
    std::array<int, 3> nt{};
    const bool has_q = std::find(tri.begin(), tri.end(), Q) != tri.end();
    bool keep_first = true;
    if (has_q) {
      int x = -1;
      for (int c : tri)
        if (c != Q && c != P) x = c;
      keep_first = in_arc_pq(x);
    }
    for (int i = 0; i < 3; ++i)
      nt[i] = tri[i] == Q ? (keep_first ? Q : qlast) : corner_map(tri[i]);
    np.triangles.push_back(nt);
  }
  const int p0 = corner_map(P);
  if (kind == BlockKind::Handle) {
    np.triangles.push_back({p0, Q, Q + 1});
    np.triangles.push_back({p0, Q + 1, Q + 4});
    np.triangles.push_back({Q + 1, Q + 2, Q + 4});
    np.triangles.push_back({Q + 2, Q + 3, Q + 4});
    return build_from_polygon(np, t.genus + 1, t.punctures);
  }
  np.triangles.push_back({p0, Q, Q + 1});
  np.triangles.push_back({p0, Q + 1, Q + 2});
  return build_from_polygon(np, t.genus, t.punctures + 1);
}

}  // namespace

Triangulation increase_genus(const Triangulation& t, int edge) {
  return insert_block(t, edge, BlockKind::Handle);
}

Triangulation add_puncture(const Triangulation& t, int edge) {
  return insert_block(t, edge, BlockKind::Fold);
}

int lowest_insertion_edge(const Triangulation& t) {
  require_polygon(t);
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e)
    if (insertion_corners(t, e)) return e;
  throw Error(ErrorKind::NotInternalEdge, "no diagonal ends at a block boundary");
}

Triangulation generate_surface(int genus, int punctures) {
  if (genus < 0 || punctures < 1 || 2 - 2 * genus - punctures >= 0)
    throw Error(ErrorKind::InvalidSignature,
                "need g >= 0, n >= 1, 2 - 2g - n < 0; got (" + std::to_string(genus) + ", " +
                    std::to_string(punctures) + ")");
  Triangulation t;
  int n0;
  if (genus >= 1) {
    t = generate_base(BaseKind::Torus1);
    n0 = 1;
    for (int i = 1; i < genus; ++i) t = increase_genus(t, lowest_insertion_edge(t));
  } else {
    // Fold insertions cannot start from the thrice-punctured sphere: its only
    // diagonal joins two fold middles.
    return fan_sphere(punctures);
  }
  for (int j = n0; j < punctures; ++j) t = add_puncture(t, lowest_insertion_edge(t));
  return t;
}

std::vector<int> ModifiedDualGraph::degrees() const {
  std::vector<int> d(num_vertices, 0);
  for (const auto& e : edges) {
    ++d[e.from];
    ++d[e.to];
  }
  return d;
}

ModifiedDualGraph build_modified_dual(const Triangulation& t) {
  ModifiedDualGraph g;
  const int nf = static_cast<int>(t.faces.size());
  g.num_vertices = 3 * nf;
  g.num_type1 = static_cast<int>(t.edges.size());
  g.num_type2 = 3 * nf;
  g.edges.resize(g.num_type1 + g.num_type2);
  for (int f = 0; f < nf; ++f)
    for (int k = 0; k < 3; ++k) {
      const FaceSide& s = t.faces[f].sides[k];
      DualEdge& e1 = g.edges[s.edge];
      e1.type = 1;
      e1.tri_edge = s.edge;
      (s.dir > 0 ? e1.from : e1.to) = dual_id(f, k);
      DualEdge& e2 = g.edges[g.num_type1 + dual_id(f, k)];
      e2.type = 2;
      e2.face = f;
      e2.from = dual_id(f, k);
      e2.to = dual_id(f, (k + 1) % 3);
    }
  return g;
}

std::vector<Color> bipartite_coloring(const Triangulation& t) {
  const int nf = static_cast<int>(t.faces.size());
  std::vector<int> color(nf, -1), parent(nf, -1), depth(nf, 0);
  for (int root = 0; root < nf; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int k = 0; k < 3; ++k) {
        const int g = dual_face(t.across(dual_id(f, k)));
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          parent[g] = f;
          depth[g] = depth[f] + 1;
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          std::vector<int> left{f}, right{g};
          int a = f, b = g;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          throw NotBipartiteError(left, "face adjacency graph has an odd cycle through face " +
                                            std::to_string(f));
        }
      }
    }
  }
  std::vector<Color> out(nf);
  for (int f = 0; f < nf; ++f) out[f] = color[f] == 0 ? Color::White : Color::Black;
  return out;
}

bool is_bipartite(const Triangulation& t) {
  try {
    bipartite_coloring(t);
    return true;
  } catch (const NotBipartiteError&) {
    return false;
  }
}

int path_end(const ModifiedDualGraph& g, const SimplicialPath& p) {
  if (p.start < 0 || p.start >= g.num_vertices) throw Error(ErrorKind::InvalidPath, "bad start vertex");
  int cur = p.start;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const DualStep& s = p.steps[i];
    if (s.edge < 0 || s.edge >= static_cast<int>(g.edges.size()))
      throw Error(ErrorKind::InvalidPath, "unknown edge at step " + std::to_string(i));
    const DualEdge& e = g.edges[s.edge];
    const int from = s.forward ? e.from : e.to;
    if (from != cur) throw Error(ErrorKind::InvalidPath, "broken chain at step " + std::to_string(i));
    cur = s.forward ? e.to : e.from;
  }
  return cur;
}

bool path_closed(const ModifiedDualGraph& g, const SimplicialPath& p) {
  return path_end(g, p) == p.start;
}

int type1_count(const ModifiedDualGraph& g, const SimplicialPath& p) {
  int n = 0;
  for (const auto& s : p.steps) n += g.edges.at(s.edge).type == 1;
  return n;
}

SimplicialPath reversed(const SimplicialPath& p, int end_vertex) {
  SimplicialPath r;
  r.start = end_vertex;
  r.steps.reserve(p.steps.size());
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) r.steps.push_back({it->edge, !it->forward});
  return r;
}

SimplicialPath concat(const SimplicialPath& a, const SimplicialPath& b) {
  SimplicialPath r = a;
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

DualStep step_E(const Triangulation& t, int v) {
  return {static_cast<int>(t.edges.size()) + v, true};
}

DualStep step_Einv(const Triangulation& t, int v) {
  return {static_cast<int>(t.edges.size()) + dual_id(dual_face(v), (dual_side(v) + 2) % 3), false};
}

DualStep step_cross(const Triangulation& t, int v) {
  const FaceSide& s = t.faces.at(dual_face(v)).sides.at(dual_side(v));
  return {s.edge, s.dir > 0};
}

PeripheralCycle peripheral_cycle_from(const Triangulation& t, int start) {
  PeripheralCycle pc;
  pc.puncture = t.corner_vertex(dual_face(start), dual_side(start) + 1);
  pc.path.start = start;
  int cur = start;
  const int limit = 6 * static_cast<int>(t.faces.size()) + 6;
  for (int guard = 0; guard < limit; ++guard) {
    pc.path.steps.push_back(step_E(t, cur));
    cur = dual_id(dual_face(cur), (dual_side(cur) + 1) % 3);
    pc.path.steps.push_back(step_cross(t, cur));
    pc.crossed_edges.push_back(t.faces[dual_face(cur)].sides[dual_side(cur)].edge);
    cur = t.across(cur);
    if (cur == start) return pc;
  }
  throw Error(ErrorKind::InvalidPath, "peripheral cycle did not close");
}

PeripheralCycle peripheral_cycle(const Triangulation& t, int puncture) {
  for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
    for (int k = 0; k < 3; ++k)
      if (t.corner_vertex(f, k + 1) == puncture) return peripheral_cycle_from(t, dual_id(f, k));
  throw Error(ErrorKind::InvalidPath, "no corner at puncture " + std::to_string(puncture));
}

namespace {

struct PolygonTree {
  std::vector<int> prev;
  std::vector<DualStep> via;
};

// Shortest paths from the base that stay inside the polygon.
PolygonTree polygon_tree(const Triangulation& t, int base) {
  const Polygon& p = *t.polygon;
  const int nv = 3 * static_cast<int>(t.faces.size());
  PolygonTree tree{std::vector<int>(nv, -2), std::vector<DualStep>(nv)};
  tree.prev[base] = -1;
  std::deque<int> queue{base};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int f = dual_face(v), k = dual_side(v);
    std::vector<std::pair<int, DualStep>> moves = {
        {dual_id(f, (k + 1) % 3), step_E(t, v)},
        {dual_id(f, (k + 2) % 3), step_Einv(t, v)}};
    const int u = p.triangles[f][k], w = p.triangles[f][(k + 1) % 3];
    if (!p.is_boundary_side(u, w)) moves.push_back({t.across(v), step_cross(t, v)});
    for (const auto& [to, step] : moves)
      if (tree.prev[to] == -2) {
        tree.prev[to] = v;
        tree.via[to] = step;
        queue.push_back(to);
      }
  }
  return tree;
}

SimplicialPath tree_path(const PolygonTree& tree, int base, int target) {
  SimplicialPath path;
  path.start = base;
  for (int v = target; v != base; v = tree.prev[v]) {
    if (tree.prev[v] < 0) throw Error(ErrorKind::InvalidPath, "vertex unreachable inside polygon");
    path.steps.push_back(tree.via[v]);
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

SimplicialPath tree_path_back(const PolygonTree& tree, int base, int from) {
  return reversed(tree_path(tree, base, from), from);
}

int side_dual_vertex(const Triangulation& t, int side) {
  const Polygon& p = *t.polygon;
  for (int f = 0; f < static_cast<int>(p.triangles.size()); ++f)
    for (int k = 0; k < 3; ++k)
      if (p.triangles[f][k] == side && p.triangles[f][(k + 1) % 3] == (side + 1) % p.corners)
        return dual_id(f, k);
  throw Error(ErrorKind::Schema, "polygon side " + std::to_string(side) + " not on any face");
}

Word conj_word(const Word& pre, const Word& w) {
  Word r = pre;
  r.insert(r.end(), w.begin(), w.end());
  const Word inv = inverse_word(pre);
  r.insert(r.end(), inv.begin(), inv.end());
  return free_reduce(r);
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

GeneratorSystem generator_system(const Triangulation& t) {
  const Polygon& p = require_polygon(t);
  GeneratorSystem gs;
  gs.base = dual_id(0, 0);
  std::vector<int> pair_of(p.corners, -1);
  for (int s = 0; s < p.corners; ++s)
    if (s < p.partner[s]) {
      pair_of[s] = static_cast<int>(gs.pair_side.size());
      gs.pair_side.push_back(s);
    }
  const PolygonTree tree = polygon_tree(t, gs.base);
  for (int s : gs.pair_side) {
    const int from = side_dual_vertex(t, s);
    const int to = t.across(from);
    SimplicialPath loop = tree_path(tree, gs.base, from);
    loop.steps.push_back(step_cross(t, from));
    gs.pairing_loops.push_back(concat(loop, tree_path_back(tree, gs.base, to)));
  }

  auto peripheral_loop = [&](int arriving_side) {
    const int w = side_dual_vertex(t, arriving_side);
    const PeripheralCycle cyc = peripheral_cycle_from(t, w);
    SimplicialPath loop = tree_path(tree, gs.base, w);
    loop = concat(loop, reversed(cyc.path, w));
    loop = concat(loop, tree_path_back(tree, gs.base, w));
    return std::pair{loop, cyc.puncture};
  };

  Word prefix;
  for (const auto& b : p.blocks) {
    const int x = pair_of[b.start] + 1;
    if (b.kind == BlockKind::Handle) {
      const int y = pair_of[b.start + 1] + 1;
      gs.a.push_back(conj_word(prefix, {x}));
      gs.b.push_back(conj_word(prefix, {-y}));
    } else {
      prefix.push_back(x);
      auto [loop, x_vertex] = peripheral_loop(b.start);
      gs.c.push_back(loop);
      gs.c_puncture.push_back(x_vertex);
    }
  }
  auto [loop, x_vertex] = peripheral_loop(p.corners - 1);
  gs.c.push_back(loop);
  gs.c_puncture.push_back(x_vertex);
  return gs;
}

Word path_word(const Triangulation& t, const GeneratorSystem& gs, const SimplicialPath& path) {
  const Polygon& p = require_polygon(t);
  std::vector<int> letter(p.corners, 0);
  for (std::size_t i = 0; i < gs.pair_side.size(); ++i) {
    letter[gs.pair_side[i]] = static_cast<int>(i) + 1;
    letter[p.partner[gs.pair_side[i]]] = -(static_cast<int>(i) + 1);
  }
  const ModifiedDualGraph g = build_modified_dual(t);
  Word w;
  int cur = path.start;
  for (const auto& s : path.steps) {
    const DualEdge& e = g.edges.at(s.edge);
    const int from = s.forward ? e.from : e.to;
    if (from != cur) throw Error(ErrorKind::InvalidPath, "broken chain");
    if (e.type == 1) {
      const int f = dual_face(cur), k = dual_side(cur);
      const int u = p.triangles[f][k], v = p.triangles[f][(k + 1) % 3];
      if (p.is_boundary_side(u, v)) w.push_back(letter[u]);
    }
    cur = s.forward ? e.to : e.from;
  }
  return free_reduce(w);
}

Word relator_word(const Triangulation& t, const GeneratorSystem& gs) {
  Word r;
  for (std::size_t i = 0; i < gs.a.size(); ++i) {
    for (const Word* part : {&gs.a[i], &gs.b[i]}) r.insert(r.end(), part->begin(), part->end());
    for (const Word& part : {inverse_word(gs.a[i]), inverse_word(gs.b[i])})
      r.insert(r.end(), part.begin(), part.end());
  }
  for (const auto& c : gs.c) {
    const Word w = path_word(t, gs, c);
    r.insert(r.end(), w.begin(), w.end());
  }
  return free_reduce(r);
}

SimplicialPath reduce_path(const ModifiedDualGraph& g, const SimplicialPath& p) {
  path_end(g, p);
  SimplicialPath out{p.start, {}};
  for (const auto& s : p.steps) {
    if (!out.steps.empty() && out.steps.back().edge == s.edge && out.steps.back().forward != s.forward)
      out.steps.pop_back();
    else
      out.steps.push_back(s);
  }
  return out;
}

SimplicialPath word_path(const GeneratorSystem& gs, const Word& w) {
  SimplicialPath out{gs.base, {}};
  for (int x : w) {
    const SimplicialPath& loop = gs.pairing_loops.at(std::abs(x) - 1);
    out = concat(out, x > 0 ? loop : reversed(loop, gs.base));
  }
  return out;
}

SimplicialPath relator_path(const Triangulation& t, const GeneratorSystem& gs) {
  SimplicialPath r{gs.base, {}};
  for (std::size_t i = 0; i < gs.a.size(); ++i) {
    r = concat(r, word_path(gs, gs.a[i]));
    r = concat(r, word_path(gs, gs.b[i]));
    r = concat(r, word_path(gs, inverse_word(gs.a[i])));
    r = concat(r, word_path(gs, inverse_word(gs.b[i])));
  }
  for (const auto& c : gs.c) r = concat(r, c);
  return reduce_path(build_modified_dual(t), r);
}

}  // namespace cbend
