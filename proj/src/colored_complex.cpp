#include "hfg/colored_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace hfg {

char color_letter(VertexColor c) {
  switch (c) {
    case VertexColor::R:
      return 'r';
    case VertexColor::G:
      return 'g';
    case VertexColor::B:
      return 'b';
    default:
      return 'y';
  }
}

std::optional<VertexColor> color_from_letter(char c) {
  switch (c) {
    case 'r':
      return VertexColor::R;
    case 'g':
      return VertexColor::G;
    case 'b':
      return VertexColor::B;
    case 'y':
      return VertexColor::Y;
    default:
      return std::nullopt;
  }
}

ColoredSimplicialComplex::ColoredSimplicialComplex(
    std::vector<VertexColor> colors, std::vector<std::array<uint32_t, 4>> tetrahedra)
    : colors_(std::move(colors)), tets_(std::move(tetrahedra)) {
  for (auto &t : tets_) {
    std::sort(t.begin(), t.end());
    if (t[3] >= colors_.size()) throw std::invalid_argument("colored complex: vertex id range");
  }
  std::sort(tets_.begin(), tets_.end());
  build_incidence();
}

void ColoredSimplicialComplex::build_incidence() {
  std::set<std::array<uint32_t, 2>> edge_set;
  std::set<std::array<uint32_t, 3>> face_set;
  for (const auto &t : tets_) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        edge_set.insert({t[a], t[b]});
      }
      std::array<uint32_t, 3> face{};
      int idx = 0;
      for (int b = 0; b < 4; ++b) {
        if (b != a) face[idx++] = t[b];
      }
      face_set.insert(face);
    }
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  faces_.assign(face_set.begin(), face_set.end());

  vertex_tets_.assign(colors_.size(), {});
  vertex_edges_.assign(colors_.size(), {});
  edge_tets_.assign(edges_.size(), {});
  edge_faces_.assign(edges_.size(), {});
  face_tets_.assign(faces_.size(), {});

  auto edge_id = [&](uint32_t a, uint32_t b) {
    std::array<uint32_t, 2> key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return static_cast<uint32_t>(it - edges_.begin());
  };
  auto face_id = [&](std::array<uint32_t, 3> key) {
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(faces_.begin(), faces_.end(), key);
    return static_cast<uint32_t>(it - faces_.begin());
  };

  for (uint32_t e = 0; e < edges_.size(); ++e) {
    vertex_edges_[edges_[e][0]].push_back(e);
    vertex_edges_[edges_[e][1]].push_back(e);
  }
  for (uint32_t ti = 0; ti < tets_.size(); ++ti) {
    const auto &t = tets_[ti];
    for (int a = 0; a < 4; ++a) {
      vertex_tets_[t[a]].push_back(ti);
      for (int b = a + 1; b < 4; ++b) {
        edge_tets_[edge_id(t[a], t[b])].push_back(ti);
      }
      std::array<uint32_t, 3> face{};
      int idx = 0;
      for (int b = 0; b < 4; ++b) {
        if (b != a) face[idx++] = t[b];
      }
      face_tets_[face_id(face)].push_back(ti);
    }
  }
  for (uint32_t f = 0; f < faces_.size(); ++f) {
    const auto &verts = faces_[f];
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        edge_faces_[edge_id(verts[a], verts[b])].push_back(f);
      }
    }
  }
}

std::pair<VertexColor, VertexColor> ColoredSimplicialComplex::edge_colors(uint32_t e) const {
  return {colors_[edges_[e][0]], colors_[edges_[e][1]]};
}

VertexColor ColoredSimplicialComplex::face_color(uint32_t f) const {
  bool present[4] = {false, false, false, false};
  for (uint32_t v : faces_[f]) present[static_cast<int>(colors_[v])] = true;
  for (int c = 0; c < 4; ++c) {
    if (!present[c]) return static_cast<VertexColor>(c);
  }
  throw std::logic_error("face has repeated colors");
}

uint32_t ColoredSimplicialComplex::edge_index(uint32_t a, uint32_t b) const {
  std::array<uint32_t, 2> key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw std::invalid_argument("no such edge");
  return static_cast<uint32_t>(it - edges_.begin());
}

std::optional<uint32_t> ColoredSimplicialComplex::find_face(std::array<uint32_t, 3> verts) const {
  std::sort(verts.begin(), verts.end());
  auto it = std::lower_bound(faces_.begin(), faces_.end(), verts);
  if (it == faces_.end() || *it != verts) return std::nullopt;
  return static_cast<uint32_t>(it - faces_.begin());
}

std::vector<uint32_t> ColoredSimplicialComplex::link_faces_of_vertex(uint32_t v) const {
  std::set<uint32_t> out;
  for (uint32_t ti : vertex_tets_[v]) {
    std::array<uint32_t, 3> opposite{};
    int idx = 0;
    for (uint32_t w : tets_[ti]) {
      if (w != v) opposite[idx++] = w;
    }
    out.insert(*find_face(opposite));
  }
  return {out.begin(), out.end()};
}

std::vector<uint32_t> ColoredSimplicialComplex::link_vertices_of_vertex(uint32_t v) const {
  std::set<uint32_t> out;
  for (uint32_t e : vertex_edges_[v]) {
    out.insert(edges_[e][0] == v ? edges_[e][1] : edges_[e][0]);
  }
  return {out.begin(), out.end()};
}

std::vector<uint32_t> ColoredSimplicialComplex::link_edges_of_edge(uint32_t e) const {
  std::set<uint32_t> out;
  const auto &ev = edges_[e];
  for (uint32_t ti : edge_tets_[e]) {
    std::array<uint32_t, 2> other{};
    int idx = 0;
    for (uint32_t w : tets_[ti]) {
      if (w != ev[0] && w != ev[1]) other[idx++] = w;
    }
    out.insert(edge_index(other[0], other[1]));
  }
  return {out.begin(), out.end()};
}

std::vector<uint32_t> ColoredSimplicialComplex::face_cycle_of_edge(uint32_t e) const {
  const std::vector<uint32_t> &around = edge_faces_[e];
  if (around.size() < 3) throw std::invalid_argument("edge link too small for a cycle");
  // Two faces around e are adjacent when they span a common tetrahedron.
  auto adjacent = [&](uint32_t f, uint32_t g) {
    for (uint32_t ti : face_tets_[f]) {
      for (uint32_t tj : face_tets_[g]) {
        if (ti == tj) return true;
      }
    }
    return false;
  };
  uint32_t start = *std::min_element(around.begin(), around.end());
  std::vector<uint32_t> neighbors;
  for (uint32_t f : around) {
    if (f != start && adjacent(start, f)) neighbors.push_back(f);
  }
  if (neighbors.size() != 2) {
    throw std::invalid_argument("edge link is not a single cycle (non-manifold input)");
  }
  std::vector<uint32_t> cycle{start, std::min(neighbors[0], neighbors[1])};
  while (cycle.size() < around.size()) {
    uint32_t current = cycle.back();
    uint32_t previous = cycle[cycle.size() - 2];
    std::optional<uint32_t> next;
    for (uint32_t f : around) {
      if (f != current && f != previous && adjacent(current, f)) {
        if (next) throw std::invalid_argument("edge link is not a single cycle (non-manifold input)");
        next = f;
      }
    }
    if (!next || *next == start) break;
    cycle.push_back(*next);
  }
  if (cycle.size() != around.size()) {
    throw std::invalid_argument("edge link is not a single cycle (non-manifold input)");
  }
  return cycle;
}

bool ColoredSimplicialComplex::vertex_interior(uint32_t v) const {
  for (uint32_t f = 0; f < faces_.size(); ++f) {
    if (!face_on_boundary(f)) continue;
    for (uint32_t w : faces_[f]) {
      if (w == v) return false;
    }
  }
  return true;
}

bool ColoredSimplicialComplex::edge_interior(uint32_t e) const {
  for (uint32_t f : edge_faces_[e]) {
    if (face_on_boundary(f)) return false;
  }
  return true;
}

bool ColoredSimplicialComplex::closed() const {
  for (uint32_t f = 0; f < faces_.size(); ++f) {
    if (face_tets_[f].size() != 2) return false;
  }
  return true;
}

ValidationReport ColoredSimplicialComplex::validate(bool require_closed) const {
  ValidationReport report;
  for (uint32_t ti = 0; ti < tets_.size(); ++ti) {
    bool present[4] = {false, false, false, false};
    for (uint32_t v : tets_[ti]) present[static_cast<int>(colors_[v])] = true;
    if (!(present[0] && present[1] && present[2] && present[3])) {
      report.ok = false;
      report.failures.push_back("tetrahedron " + std::to_string(ti) + " is not 4-colored");
    }
  }
  for (uint32_t f = 0; f < faces_.size(); ++f) {
    std::size_t mult = face_tets_[f].size();
    if (mult > 2 || (require_closed && mult != 2)) {
      report.ok = false;
      report.failures.push_back("face " + std::to_string(f) + " lies in " +
                                std::to_string(mult) + " tetrahedra");
    }
  }
  return report;
}

std::string ColoredSimplicialComplex::to_json() const {
  nlohmann::json j;
  nlohmann::json verts = nlohmann::json::array();
  for (uint32_t v = 0; v < colors_.size(); ++v) {
    verts.push_back({{"id", v}, {"color", std::string(1, color_letter(colors_[v]))}});
  }
  j["vertices"] = verts;
  nlohmann::json tets = nlohmann::json::array();
  for (const auto &t : tets_) tets.push_back(t);
  j["tetrahedra"] = tets;
  return j.dump();
}

ColoredSimplicialComplex ColoredSimplicialComplex::from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::map<uint32_t, VertexColor> colors;
  for (const auto &v : j.at("vertices")) {
    auto color = color_from_letter(v.at("color").get<std::string>().at(0));
    if (!color) throw std::invalid_argument("colored complex json: bad color");
    colors[v.at("id").get<uint32_t>()] = *color;
  }
  std::vector<VertexColor> color_vec(colors.size());
  for (auto [id, c] : colors) {
    if (id >= color_vec.size()) throw std::invalid_argument("colored complex json: ids not dense");
    color_vec[id] = c;
  }
  std::vector<std::array<uint32_t, 4>> tets;
  for (const auto &t : j.at("tetrahedra")) {
    auto ids = t.get<std::vector<uint32_t>>();
    if (ids.size() != 4) throw std::invalid_argument("colored complex json: tetrahedron size");
    tets.push_back({ids[0], ids[1], ids[2], ids[3]});
  }
  return ColoredSimplicialComplex(std::move(color_vec), std::move(tets));
}

namespace {

// Vertices 0..3 are +e_i (boundary after puncture), 4..7 are -e_i; the
// orthant with sign vector s (bit i set = -e_i chosen) is a tetrahedron.
std::array<uint32_t, 4> cross_polytope_tet(uint32_t s) {
  std::array<uint32_t, 4> t{};
  for (uint32_t i = 0; i < 4; ++i) {
    t[i] = ((s >> i) & 1) ? 4 + i : i;
  }
  return t;
}

std::vector<VertexColor> cross_polytope_colors() {
  return {VertexColor::R, VertexColor::G, VertexColor::B, VertexColor::Y,
          VertexColor::R, VertexColor::G, VertexColor::B, VertexColor::Y};
}

}  // namespace

ColoredSimplicialComplex colored_16cell() {
  std::vector<std::array<uint32_t, 4>> tets;
  for (uint32_t s = 0; s < 16; ++s) tets.push_back(cross_polytope_tet(s));
  return ColoredSimplicialComplex(cross_polytope_colors(), std::move(tets));
}

TetrahedralColorCode tetrahedral_color_code() {
  // Puncture the 16-cell at the all-plus orthant; the remaining 15 orthants
  // are the qubits, indexed by s = 1..15 as qubit s-1.
  std::vector<std::array<uint32_t, 4>> tets;
  for (uint32_t s = 1; s < 16; ++s) tets.push_back(cross_polytope_tet(s));
  ColoredSimplicialComplex complex(cross_polytope_colors(), std::move(tets));
  ValidationReport report = complex.validate(false);
  if (!report.ok) throw std::logic_error("tetrahedral instance: " + report.failures[0]);

  const std::size_t n = complex.num_tets();
  std::vector<uint32_t> interior_vertices;
  for (uint32_t v = 0; v < complex.num_vertices(); ++v) {
    if (complex.vertex_interior(v)) interior_vertices.push_back(v);
  }
  std::vector<uint32_t> interior_edges;
  for (uint32_t e = 0; e < complex.num_edges(); ++e) {
    if (complex.edge_interior(e)) interior_edges.push_back(e);
  }
  if (interior_vertices.size() != 4 || interior_edges.size() != 18) {
    throw std::logic_error("tetrahedral instance: unexpected interior structure");
  }

  // X(v) = prod_{t have v} X_t on interior vertices; Z(e) = prod_{t have e} Z_t
  // on interior edges.
  BitMatrix d1(interior_vertices.size(), n);
  for (uint32_t i = 0; i < interior_vertices.size(); ++i) {
    for (uint32_t t : complex.tets_of_vertex(interior_vertices[i])) d1.set(i, t, true);
  }
  BitMatrix d2(n, interior_edges.size());
  for (uint32_t j = 0; j < interior_edges.size(); ++j) {
    for (uint32_t t : complex.tets_of_edge(interior_edges[j])) d2.set(t, j, true);
  }
  CssCode code(ChainComplex({interior_vertices.size(), n, interior_edges.size()}, {d1, d2}));

  // Dual 2-coloring of the tetrahedra: adjacent orthants differ in one sign,
  // so the parity of the sign vector checkerboards them.
  std::vector<int> t_signs(n);
  for (uint32_t s = 1; s < 16; ++s) {
    t_signs[s - 1] = (__builtin_popcount(s) % 2 == 0) ? +1 : -1;
  }
  HigherFormGate gate = derive_from_t(code, t_signs);
  return TetrahedralColorCode{std::move(complex), std::move(code), std::move(gate),
                              std::move(t_signs), std::move(interior_vertices),
                              std::move(interior_edges)};
}

ColoredSimplicialComplex colored_3torus(std::size_t l) {
  if (l < 2 || l % 2 != 0) {
    throw std::invalid_argument("colored_3torus: coloring needs an even L >= 2");
  }
  const std::size_t nc = l * l * l;
  auto cubic = [&](std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<uint32_t>((x % l) + l * ((y % l) + l * (z % l)));
  };
  auto center = [&](std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<uint32_t>(nc + cubic(x, y, z));
  };
  std::vector<VertexColor> colors(2 * nc);
  for (std::size_t z = 0; z < l; ++z) {
    for (std::size_t y = 0; y < l; ++y) {
      for (std::size_t x = 0; x < l; ++x) {
        colors[cubic(x, y, z)] = (x + y + z) % 2 == 0 ? VertexColor::R : VertexColor::G;
        colors[center(x, y, z)] = (x + y + z) % 2 == 0 ? VertexColor::B : VertexColor::Y;
      }
    }
  }
  // One tetrahedron per (cubic face, boundary edge of that face): the two
  // cube centers astride the face plus the edge endpoints.
  std::vector<std::array<uint32_t, 4>> tets;
  for (std::size_t z = 0; z < l; ++z) {
    for (std::size_t y = 0; y < l; ++y) {
      for (std::size_t x = 0; x < l; ++x) {
        for (std::size_t d = 0; d < 3; ++d) {
          std::size_t np[3] = {x, y, z};
          np[d] += 1;
          uint32_t c1 = center(x, y, z);
          uint32_t c2 = center(np[0], np[1], np[2]);
          // The shared face lies at offset +1 along d; its corners span the
          // two other directions a and b.
          std::size_t a = (d + 1) % 3, b = (d + 2) % 3;
          std::array<uint32_t, 4> corner{};
          for (int da = 0; da < 2; ++da) {
            for (int db = 0; db < 2; ++db) {
              std::size_t p[3] = {x, y, z};
              p[d] += 1;
              p[a] += da;
              p[b] += db;
              corner[2 * da + db] = cubic(p[0], p[1], p[2]);
            }
          }
          // Face cycle: 00 -> 01 -> 11 -> 10.
          uint32_t loop[4] = {corner[0], corner[1], corner[3], corner[2]};
          for (int s = 0; s < 4; ++s) {
            tets.push_back({c1, c2, loop[s], loop[(s + 1) % 4]});
          }
        }
      }
    }
  }
  return ColoredSimplicialComplex(std::move(colors), std::move(tets));
}

std::vector<std::array<int, 3>> colored_3torus_positions(std::size_t l) {
  const std::size_t nc = l * l * l;
  std::vector<std::array<int, 3>> positions(2 * nc);
  for (std::size_t z = 0; z < l; ++z) {
    for (std::size_t y = 0; y < l; ++y) {
      for (std::size_t x = 0; x < l; ++x) {
        std::size_t idx = x + l * (y + l * z);
        positions[idx] = {static_cast<int>(2 * x), static_cast<int>(2 * y),
                          static_cast<int>(2 * z)};
        positions[nc + idx] = {static_cast<int>(2 * x + 1), static_cast<int>(2 * y + 1),
                               static_cast<int>(2 * z + 1)};
      }
    }
  }
  return positions;
}

}  // namespace hfg
