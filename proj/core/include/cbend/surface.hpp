#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbend/errors.hpp"

namespace cbend {

enum class Color : std::uint8_t { White, Black };

// Side k of a face runs from corner k to corner k+1 (counterclockwise).
// dir = +1 when the side traverses its edge from v0 to v1.
struct FaceSide {
  int edge = -1;
  int dir = 1;
};

struct Edge {
  int id = -1;
  int v0 = -1;
  int v1 = -1;
};

struct Face {
  std::array<FaceSide, 3> sides;
};

// Provenance: an ideal polygon with paired sides, cut into triangles.
// Side k runs from corner k to corner k+1; paired sides are glued reversed.
// The boundary word is a cyclic sequence of blocks, each starting at a corner:
// a handle x y x' y' or a fold d d'.
enum class BlockKind : std::uint8_t { Handle, Fold };

struct PolygonBlock {
  BlockKind kind = BlockKind::Handle;
  int start = 0;
};

struct Polygon {
  int corners = 0;
  std::vector<int> partner;
  std::vector<PolygonBlock> blocks;
  std::vector<std::array<int, 3>> triangles;  // face i <-> triangles[i]

  bool is_boundary_side(int a, int b) const { return b == (a + 1) % corners; }
  bool is_block_boundary(int corner) const;
};

struct Triangulation {
  int genus = 0;
  int punctures = 0;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::optional<Polygon> polygon;
  std::optional<std::vector<Color>> coloring;

  // Dual vertex id 3f+k -> id of the glued side. Filled by rebuild_index().
  std::vector<int> opposite;

  void rebuild_index();
  int num_vertices() const;
  int corner_vertex(int f, int k) const;
  int across(int dual_vertex) const { return opposite.at(dual_vertex); }
};

inline int dual_id(int face, int side) { return 3 * face + side; }
inline int dual_face(int v) { return v / 3; }
inline int dual_side(int v) { return v % 3; }

// Structural checks: counts, edge incidences, Euler characteristic. Empty when valid.
std::vector<std::string> validate(const Triangulation& t);

int expected_faces(int genus, int punctures);
int expected_edges(int genus, int punctures);

enum class BaseKind { Torus1, Sphere3 };

Triangulation generate_base(BaseKind kind);
Triangulation build_from_polygon(const Polygon& p, int genus, int punctures);

// Insertions along a polygon diagonal with an endpoint at a block boundary.
// Throws NotInternalEdge or MissingProvenance.
Triangulation increase_genus(const Triangulation& t, int edge);
Triangulation add_puncture(const Triangulation& t, int edge);

// Lowest edge id accepted by the insertions.
int lowest_insertion_edge(const Triangulation& t);

// Throws InvalidSignature.
Triangulation generate_surface(int genus, int punctures);

// Thrice-punctured sphere whose first face is glued to itself.
Triangulation synthetic_nonbipartite();

// Modified dual graph. Type-1 edge i crosses triangulation edge i;
// type-2 edge |E| + 3f + k runs from side k to side k+1 of face f.
struct DualEdge {
  int type = 1;
  int from = -1;
  int to = -1;
  int tri_edge = -1;  // type 1
  int face = -1;      // type 2
};

struct ModifiedDualGraph {
  int num_vertices = 0;
  int num_type1 = 0;
  int num_type2 = 0;
  std::vector<DualEdge> edges;

  std::vector<int> degrees() const;
};

ModifiedDualGraph build_modified_dual(const Triangulation& t);

class NotBipartiteError : public Error {
 public:
  NotBipartiteError(std::vector<int> cycle, const std::string& what)
      : Error(ErrorKind::NotBipartite, what), cycle_(std::move(cycle)) {}
  const std::vector<int>& odd_cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

// Face 0 is white. Throws NotBipartiteError with an odd face cycle.
std::vector<Color> bipartite_coloring(const Triangulation& t);
bool is_bipartite(const Triangulation& t);

struct DualStep {
  int edge = -1;
  bool forward = true;
};

struct SimplicialPath {
  int start = 0;
  std::vector<DualStep> steps;
};

// Walks the path; throws InvalidPath on broken chaining. Returns the end vertex.
int path_end(const ModifiedDualGraph& g, const SimplicialPath& p);
bool path_closed(const ModifiedDualGraph& g, const SimplicialPath& p);
int type1_count(const ModifiedDualGraph& g, const SimplicialPath& p);
SimplicialPath reversed(const SimplicialPath& p, int end_vertex);
SimplicialPath concat(const SimplicialPath& a, const SimplicialPath& b);
// Cancels adjacent backtracks (an edge followed by its reverse).
SimplicialPath reduce_path(const ModifiedDualGraph& g, const SimplicialPath& p);

// Move helpers on dual vertex ids.
DualStep step_E(const Triangulation& t, int v);      // (f,k) -> (f,k+1)
DualStep step_Einv(const Triangulation& t, int v);   // (f,k) -> (f,k-1)
DualStep step_cross(const Triangulation& t, int v);  // (f,k) -> glued side

struct PeripheralCycle {
  int puncture = -1;
  SimplicialPath path;             // positive: type-2 steps follow face orientation
  std::vector<int> crossed_edges;  // with multiplicity, in order
};

PeripheralCycle peripheral_cycle(const Triangulation& t, int puncture);
PeripheralCycle peripheral_cycle_from(const Triangulation& t, int start_vertex);

// Generators of the fundamental group read from the polygon side pairings.
// Words use letters +-(i+1) for pairing generator i.
using Word = std::vector<int>;

struct GeneratorSystem {
  int base = 0;
  std::vector<int> pair_side;                // lower polygon side of pair i
  std::vector<SimplicialPath> pairing_loops;  // closed at base
  std::vector<Word> a, b;                    // standard handle generators
  std::vector<SimplicialPath> c;             // peripheral loops, closed at base
  std::vector<int> c_puncture;
};

// The relator prod [a_i, b_i] prod c_j is trivial in the free group.
// Throws MissingProvenance.
GeneratorSystem generator_system(const Triangulation& t);

Word path_word(const Triangulation& t, const GeneratorSystem& gs, const SimplicialPath& p);
Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word relator_word(const Triangulation& t, const GeneratorSystem& gs);

// Closed loop at the base spelling a word in the pairing generators.
SimplicialPath word_path(const GeneratorSystem& gs, const Word& w);
// prod [a_i, b_i] prod c_j as one loop at the base, backtracks cancelled.
SimplicialPath relator_path(const Triangulation& t, const GeneratorSystem& gs);

}  // namespace cbend
