#include "cbend/serialize.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cbend {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) schema(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) schema("unknown key '" + k + "' in " + where);
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) schema("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  return j.get<int>();
}

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) schema(where + " must be a number");
  return j.get<double>();
}

int edge_key(const std::string& k, int n) {
  std::size_t pos = 0;
  int id = -1;
  try {
    id = std::stoi(k, &pos);
  } catch (...) {
    schema("edge key '" + k + "' is not an integer");
  }
  if (pos != k.size() || id < 0 || id >= n) schema("edge key '" + k + "' out of range");
  return id;
}

json polygon_json(const Polygon& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks)
    blocks.push_back({{"kind", b.kind == BlockKind::Handle ? "handle" : "fold"}, {"start", b.start}});
  json tris = json::array();
  for (const auto& t : p.triangles) tris.push_back({t[0], t[1], t[2]});
  return {{"corners", p.corners}, {"partner", p.partner}, {"blocks", blocks}, {"triangles", tris}};
}

Polygon polygon_from(const json& j) {
  only_keys(j, {"corners", "partner", "blocks", "triangles"}, "polygon");
  Polygon p;
  p.corners = as_int(need(j, "corners", "polygon"), "polygon.corners");
  const json& partner = need(j, "partner", "polygon");
  if (!partner.is_array() || static_cast<int>(partner.size()) != p.corners) schema("polygon.partner size");
  for (const auto& x : partner) {
    const int s = as_int(x, "polygon.partner[]");
    if (s < 0 || s >= p.corners) schema("polygon.partner out of range");
    p.partner.push_back(s);
  }
  for (const auto& b : need(j, "blocks", "polygon")) {
    only_keys(b, {"kind", "start"}, "polygon.blocks[]");
    const std::string kind = need(b, "kind", "block").get<std::string>();
    if (kind != "handle" && kind != "fold") schema("block kind must be handle or fold");
    p.blocks.push_back({kind == "handle" ? BlockKind::Handle : BlockKind::Fold,
                        as_int(need(b, "start", "block"), "block.start")});
  }
  for (const auto& t : need(j, "triangles", "polygon")) {
    if (!t.is_array() || t.size() != 3) schema("polygon triangle must have 3 corners");
    p.triangles.push_back({as_int(t[0], "corner"), as_int(t[1], "corner"), as_int(t[2], "corner")});
  }
  return p;
}

}  // namespace

std::string triangulation_to_json(const Triangulation& t) {
  json faces = json::array();
  for (const auto& f : t.faces) {
    json sides = json::array();
    for (const auto& s : f.sides) sides.push_back({{"edge", s.edge}, {"dir", s.dir}});
    faces.push_back(sides);
  }
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({{"id", e.id}, {"v0", e.v0}, {"v1", e.v1}});
  json j = {{"genus", t.genus}, {"punctures", t.punctures}, {"faces", faces}, {"edges", edges}};
  if (t.coloring) {
    json c = json::object();
    for (std::size_t f = 0; f < t.coloring->size(); ++f)
      c[std::to_string(f)] = (*t.coloring)[f] == Color::White ? "w" : "b";
    j["coloring"] = c;
  }
  if (t.polygon) j["polygon"] = polygon_json(*t.polygon);
  return j.dump(2);
}

Triangulation triangulation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  only_keys(j, {"genus", "punctures", "faces", "edges", "coloring", "polygon"}, "triangulation");
  Triangulation t;
  try {
    t.genus = as_int(need(j, "genus", "triangulation"), "genus");
    t.punctures = as_int(need(j, "punctures", "triangulation"), "punctures");
    for (const auto& e : need(j, "edges", "triangulation")) {
      only_keys(e, {"id", "v0", "v1"}, "edges[]");
      t.edges.push_back({as_int(need(e, "id", "edge"), "edge.id"), as_int(need(e, "v0", "edge"), "edge.v0"),
                         as_int(need(e, "v1", "edge"), "edge.v1")});
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i)
      if (t.edges[i].id != static_cast<int>(i)) schema("edge ids must be 0..n-1 in order");
    for (const auto& f : need(j, "faces", "triangulation")) {
      if (!f.is_array() || f.size() != 3) schema("face must list 3 sides");
      Face face;
      for (int k = 0; k < 3; ++k) {
        only_keys(f[k], {"edge", "dir"}, "face side");
        face.sides[k].edge = as_int(need(f[k], "edge", "face side"), "side.edge");
        face.sides[k].dir = as_int(need(f[k], "dir", "face side"), "side.dir");
        if (face.sides[k].dir != 1 && face.sides[k].dir != -1) schema("side.dir must be 1 or -1");
      }
      t.faces.push_back(face);
    }
    if (auto it = j.find("coloring"); it != j.end()) {
      std::vector<Color> c(t.faces.size(), Color::White);
      std::vector<bool> seen(t.faces.size(), false);
      for (const auto& [k, v] : it->items()) {
        const int f = edge_key(k, static_cast<int>(t.faces.size()));
        const std::string s = v.get<std::string>();
        if (s != "w" && s != "b") schema("coloring values must be 'w' or 'b'");
        c[f] = s == "w" ? Color::White : Color::Black;
        seen[f] = true;
      }
      for (bool b : seen)
        if (!b) schema("coloring must cover every face");
      t.coloring = c;
    }
    if (auto it = j.find("polygon"); it != j.end()) t.polygon = polygon_from(*it);
  } catch (const json::exception& e) {
    schema(std::string("malformed triangulation: ") + e.what());
  }
  t.rebuild_index();
  return t;
}

std::string decoration_to_json(const Decoration& d) {
  json edges = json::object();
  for (std::size_t e = 0; e < d.size(); ++e)
    edges[std::to_string(e)] = {{"re", d[e].real()}, {"im", d[e].imag()}};
  return json{{"edges", edges}}.dump(2);
}

Decoration decoration_from_json(const std::string& text, const Triangulation& t) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  const int n = static_cast<int>(t.edges.size());
  Decoration d(n);
  std::vector<bool> seen(n, false);
  try {
    if (j.contains("edges")) {
      only_keys(j, {"edges"}, "decoration");
      for (const auto& [k, v] : j["edges"].items()) {
        const int e = edge_key(k, n);
        if (v.is_object() && v.contains("modulus")) {
          only_keys(v, {"modulus", "angle"}, "decoration value");
          const double r = as_double(need(v, "modulus", "value"), "modulus");
          if (!(r > 0.0)) schema("modulus of edge " + k + " must be positive");
          d[e] = std::polar(r, as_double(need(v, "angle", "value"), "angle"));
        } else {
          only_keys(v, {"re", "im"}, "decoration value");
          d[e] = {as_double(need(v, "re", "value"), "re"), as_double(need(v, "im", "value"), "im")};
        }
        seen[e] = true;
      }
    } else {
      only_keys(j, {"theta", "moduli"}, "decoration");
      const double theta = as_double(need(j, "theta", "decoration"), "theta");
      std::vector<double> moduli(n, 0.0);
      for (const auto& [k, v] : need(j, "moduli", "decoration").items()) {
        const int e = edge_key(k, n);
        moduli[e] = as_double(v, "modulus");
        seen[e] = true;
      }
      for (bool b : seen)
        if (!b) schema("decoration must cover every edge");
      d = make_regular(moduli, theta);
    }
  } catch (const json::exception& e) {
    schema(std::string("malformed decoration: ") + e.what());
  }
  for (bool b : seen)
    if (!b) schema("decoration must cover every edge");
  check_decoration(t, d);
  return d;
}

namespace {

json point_json(const BoundaryPoint& p) {
  if (p.infinity) return "inf";
  return {{"z_re", p.z.real()}, {"z_im", p.z.imag()}, {"t", p.t}};
}

std::string word_string(const SimplicialPath& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    os << (i ? " " : "") << (p.steps[i].forward ? "" : "-") << p.steps[i].edge;
  return os.str();
}

}  // namespace

std::string realization_to_json(const BentRealization& rl) {
  json tris = json::array();
  for (const auto& n : rl.nodes) {
    json verts = json::array();
    for (const auto& p : n.corners) verts.push_back(point_json(p));
    tris.push_back({{"word", word_string(n.word)},
                    {"depth", n.depth},
                    {"color", n.color == Color::White ? "w" : "b"},
                    {"face", n.face},
                    {"vertices", verts},
                    {"cartan", cartan(n.triangle())}});
  }
  return json{{"depth", rl.depth}, {"triangles", tris}}.dump(2);
}

std::string realization_to_csv(const BentRealization& rl) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "index,depth,face,color,cartan\n";
  for (std::size_t i = 0; i < rl.nodes.size(); ++i) {
    const auto& n = rl.nodes[i];
    os << i << ',' << n.depth << ',' << n.face << ',' << (n.color == Color::White ? 'w' : 'b') << ','
       << cartan(n.triangle()) << '\n';
  }
  return os.str();
}

std::string certificate_to_csv(const CertificateReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "theta,r2,r3,re_trace,margin,class\n";
  for (const auto& p : r.points)
    os << p.theta << ',' << p.r2 << ',' << p.r3 << ',' << p.trace.real() << ',' << p.margin << ','
       << to_string(p.cls) << '\n';
  return os.str();
}

}  // namespace cbend
