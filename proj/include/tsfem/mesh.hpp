#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tsfem/core.hpp"

namespace tsfem {

enum class CellKind { Line2, Quad4, Tet4 };

inline int cell_nv(CellKind k) { return k == CellKind::Line2 ? 2 : 4; }
inline int cell_dim(CellKind k) {
  switch (k) {
    case CellKind::Line2: return 1;
    case CellKind::Quad4: return 2;
    case CellKind::Tet4: return 3;
  }
  return 0;
}

struct Mesh {
  CellKind kind = CellKind::Line2;
  std::vector<Vec3> nodes;
  std::vector<std::array<int, 4>> elems;  // unused slots = -1
  std::map<std::string, std::vector<int>> node_sets;
  double length_scale = 1.0;  // domain scale L used by the dimensionless groups

  int dim() const { return cell_dim(kind); }
  int nv() const { return cell_nv(kind); }
  int n_nodes() const { return int(nodes.size()); }
  int n_elems() const { return int(elems.size()); }
};

// [0,L] split into n equal line elements; sets "left" = {0}, "right" = {n}
Mesh uniform_line(int n_elems, double L = 1.0);

// [0,L]^2 with nx-by-ny axis-aligned quads; edge sets "bottom", "top",
// "left", "right" (corners belong to both adjoining sets)
Mesh structured_quad(int nx, int ny, double L = 1.0);

// cylinder of given radius along z in [0, length]: a structured disk
// (center node + n_radial rings, ring k holding 6k nodes) triangulated,
// extruded into n_axial prism layers, each prism split into 3 tets with
// face-consistent diagonals; sets "inlet" (z=0), "outlet" (z=length),
// "wall" (outermost ring, all layers)
Mesh cylinder_tet(double radius, double length, int n_axial, int n_radial);

// the cross-section of cylinder_tet is the regular polygon with m = 6 n_radial
// vertices inscribed in the circle, so the exact mesh volume is
// (m/2) R^2 sin(2 pi/m) * length
double cylinder_polygon_volume(double radius, double length, int n_radial);

double element_volume(const Mesh& m, int e);
double mesh_volume(const Mesh& m);

// plain-text serialization:
//   mesh <kind> <n_nodes> <n_elems>
//   <node lines: coords>
//   <elem lines: node ids>
//   set <name> <count> followed by ids (whitespace separated)
void write_mesh(const Mesh& m, const std::string& path);
Mesh read_mesh(const std::string& path);

}  // namespace tsfem
