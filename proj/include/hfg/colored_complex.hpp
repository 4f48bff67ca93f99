#ifndef HFG_COLORED_COMPLEX_HPP
#define HFG_COLORED_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfg/chain_complex.hpp"
#include "hfg/css_code.hpp"
#include "hfg/higher_form_gate.hpp"

namespace hfg {

enum class VertexColor : uint8_t { R = 0, G = 1, B = 2, Y = 3 };

char color_letter(VertexColor c);
std::optional<VertexColor> color_from_letter(char c);

/// Simplicial 3-complex with 4-colored vertices: every tetrahedron carries
/// all four colors, faces are colored by the absent vertex color, and edges
/// by their endpoint pair. Faces belong to one tetrahedron (boundary) or two.
class ColoredSimplicialComplex {
 public:
  ColoredSimplicialComplex(std::vector<VertexColor> colors,
                           std::vector<std::array<uint32_t, 4>> tetrahedra);

  static ColoredSimplicialComplex from_json(const std::string &text);
  std::string to_json() const;

  std::size_t num_vertices() const { return colors_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_tets() const { return tets_.size(); }

  VertexColor color(uint32_t v) const { return colors_[v]; }
  const std::array<uint32_t, 2> &edge(uint32_t e) const { return edges_[e]; }
  const std::array<uint32_t, 3> &face(uint32_t f) const { return faces_[f]; }
  const std::array<uint32_t, 4> &tet(uint32_t t) const { return tets_[t]; }

  std::pair<VertexColor, VertexColor> edge_colors(uint32_t e) const;
  /// The color absent from the face.
  VertexColor face_color(uint32_t f) const;

  uint32_t edge_index(uint32_t a, uint32_t b) const;
  std::optional<uint32_t> find_face(std::array<uint32_t, 3> verts) const;

  const std::vector<uint32_t> &tets_of_vertex(uint32_t v) const { return vertex_tets_[v]; }
  const std::vector<uint32_t> &tets_of_edge(uint32_t e) const { return edge_tets_[e]; }
  const std::vector<uint32_t> &tets_of_face(uint32_t f) const { return face_tets_[f]; }
  const std::vector<uint32_t> &edges_of_vertex(uint32_t v) const { return vertex_edges_[v]; }
  const std::vector<uint32_t> &faces_of_edge(uint32_t e) const { return edge_faces_[e]; }

  /// Faces opposite to v inside the tetrahedra around it (the link's faces).
  std::vector<uint32_t> link_faces_of_vertex(uint32_t v) const;
  /// Vertices w adjacent to v through an edge.
  std::vector<uint32_t> link_vertices_of_vertex(uint32_t v) const;
  /// Edges e' disjoint from e with e u e' spanning a tetrahedron.
  std::vector<uint32_t> link_edges_of_edge(uint32_t e) const;
  /// Faces around an edge in rotational order (deterministic start and
  /// direction). Throws when the link is not a single cycle.
  std::vector<uint32_t> face_cycle_of_edge(uint32_t e) const;

  /// A face is on the boundary when only one tetrahedron contains it.
  bool face_on_boundary(uint32_t f) const { return face_tets_[f].size() == 1; }
  bool vertex_interior(uint32_t v) const;
  bool edge_interior(uint32_t e) const;
  bool closed() const;

  /// Rainbow tetrahedra and face multiplicities; `require_closed` also
  /// demands every face lie in exactly two tetrahedra.
  ValidationReport validate(bool require_closed) const;

 private:
  std::vector<VertexColor> colors_;
  std::vector<std::array<uint32_t, 4>> tets_;
  std::vector<std::array<uint32_t, 2>> edges_;
  std::vector<std::array<uint32_t, 3>> faces_;
  std::vector<std::vector<uint32_t>> vertex_tets_, edge_tets_, face_tets_;
  std::vector<std::vector<uint32_t>> vertex_edges_, edge_faces_;

  void build_incidence();
};

/// The smallest 3D color code: the boundary of the 4-dimensional
/// cross-polytope with one tetrahedron removed, giving 15 tetrahedron
/// qubits, X-checks on the four interior vertices and Z-checks on the 18
/// interior edges. The tetrahedra are bipartitioned by dual 2-coloring.
struct TetrahedralColorCode {
  ColoredSimplicialComplex complex;
  CssCode code;
  HigherFormGate gate;             // 1-form XS gate from the T(Lambda) pattern
  std::vector<int> t_signs;        // +1 black (T), -1 white (T^dag), per tet
  std::vector<uint32_t> interior_vertices;
  std::vector<uint32_t> interior_edges;  // Z-check order = gate-complex C_2 order
};

TetrahedralColorCode tetrahedral_color_code();

/// Closed 4-colorable 3-sphere: the full 16-cell (cross-polytope boundary).
ColoredSimplicialComplex colored_16cell();

/// 4-colored BCC-derived tetrahedralization of the 3-torus; L must be even.
/// Cubic vertices are colored r/g and cube centers b/y by parity.
ColoredSimplicialComplex colored_3torus(std::size_t l);

/// Vertex positions for colored_3torus in doubled integer coordinates:
/// cubic vertex (2x,2y,2z), cube center (2x+1,2y+1,2z+1). Used by the
/// geometric logical-operator constructions.
std::vector<std::array<int, 3>> colored_3torus_positions(std::size_t l);

}  // namespace hfg

#endif
