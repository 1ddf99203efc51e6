#include <cmath>
#include <cstdio>
#include <set>

#include "doctest.h"
#include "tsfem/fem.hpp"
#include "tsfem/mesh.hpp"

using namespace tsfem;

namespace {

Vec3 rotate(const Vec3& v) {
  // fixed rotation Rz(0.3) Ry(0.2)
  const double cy = std::cos(0.2), sy = std::sin(0.2);
  const double cz = std::cos(0.3), sz = std::sin(0.3);
  Vec3 w{cy * v.x + sy * v.z, v.y, -sy * v.x + cy * v.z};
  return {cz * w.x - sz * w.y, sz * w.x + cz * w.y, w.z};
}

double frob2(const double G[3][3]) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += G[i][j] * G[i][j];
  return s;
}

void check_shape_identities(const Mesh& m) {
  QuadPoint qp[4];
  int nq = quad_rule(m.kind, qp);
  for (int e = 0; e < m.n_elems(); ++e) {
    double vol = 0.0;
    for (int q = 0; q < nq; ++q) {
      ShapeEval s = shape_eval(m, e, qp[q]);
      REQUIRE(s.nv == m.nv());
      double sumN = 0.0;
      Vec3 sumG{};
      for (int i = 0; i < s.nv; ++i) {
        sumN += s.N[i];
        sumG.x += s.grad[i].x;
        sumG.y += s.grad[i].y;
        sumG.z += s.grad[i].z;
      }
      CHECK(sumN == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(norm(sumG) < 1e-12);
      CHECK(s.detJw > 0.0);
      vol += s.detJw;
    }
    CHECK(vol == doctest::Approx(element_volume(m, e)).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("uniform_line: geometry and node sets") {
  Mesh m = uniform_line(8, 2.0);
  CHECK(m.kind == CellKind::Line2);
  CHECK(m.n_nodes() == 9);
  CHECK(m.n_elems() == 8);
  CHECK(m.length_scale == 2.0);
  CHECK(m.node_sets.at("left") == std::vector<int>{0});
  CHECK(m.node_sets.at("right") == std::vector<int>{8});
  CHECK(m.nodes[3].x == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(mesh_volume(m) == doctest::Approx(2.0).epsilon(1e-14));
  check_shape_identities(m);
}

TEST_CASE("structured_quad: geometry, corner set membership") {
  Mesh m = structured_quad(4, 3, 1.0);
  CHECK(m.kind == CellKind::Quad4);
  CHECK(m.n_nodes() == 5 * 4);
  CHECK(m.n_elems() == 12);
  CHECK(mesh_volume(m) == doctest::Approx(1.0).epsilon(1e-14));

  auto contains = [&](const char* set, int id) {
    const auto& v = m.node_sets.at(set);
    return std::find(v.begin(), v.end(), id) != v.end();
  };
  // corner node 0 = (0,0) belongs to both bottom and left
  CHECK(contains("bottom", 0));
  CHECK(contains("left", 0));
  CHECK(m.node_sets.at("bottom").size() == 5);
  CHECK(m.node_sets.at("top").size() == 5);
  CHECK(m.node_sets.at("left").size() == 4);
  CHECK(m.node_sets.at("right").size() == 4);
  check_shape_identities(m);
}

TEST_CASE("cylinder_tet: counts, volume, boundary sets") {
  const int n_axial = 32, n_radial = 3;
  Mesh m = cylinder_tet(0.1, 1.0, n_axial, n_radial);
  CHECK(m.kind == CellKind::Tet4);

  // disk: 1 + 3 R (R+1) nodes, 6 R^2 triangles -> 3 tets per prism
  const int per_disk = 1 + 3 * n_radial * (n_radial + 1);
  CHECK(m.n_nodes() == per_disk * (n_axial + 1));
  CHECK(m.n_elems() == 3 * 6 * n_radial * n_radial * n_axial);
  CHECK(m.n_nodes() == 1221);
  CHECK(m.n_elems() == 5184);

  // the mesh fills the inscribed regular polygon prism exactly
  CHECK(mesh_volume(m) ==
        doctest::Approx(cylinder_polygon_volume(0.1, 1.0, n_radial))
            .epsilon(1e-12));
  for (int e = 0; e < m.n_elems(); ++e) {
    REQUIRE(element_volume(m, e) > 0.0);
  }

  CHECK(m.node_sets.at("inlet").size() == size_t(per_disk));
  CHECK(m.node_sets.at("outlet").size() == size_t(per_disk));
  CHECK(m.node_sets.at("wall").size() == size_t(6 * n_radial * (n_axial + 1)));
  for (int id : m.node_sets.at("inlet")) CHECK(m.nodes[id].z == 0.0);
  for (int id : m.node_sets.at("outlet")) CHECK(m.nodes[id].z == 1.0);
  for (int id : m.node_sets.at("wall")) {
    CHECK(std::hypot(m.nodes[id].x, m.nodes[id].y) ==
          doctest::Approx(0.1).epsilon(1e-12));
  }

  // element count sits within +-50% of 8604, the scale the sweeps target
  CHECK(m.n_elems() > 4302);
  CHECK(m.n_elems() < 12906);

  CHECK_THROWS_AS(cylinder_tet(0.1, 1.0, 3, 3), std::domain_error);
  CHECK_THROWS_AS(cylinder_tet(0.1, 1.0, 8, 1), std::domain_error);
}

TEST_CASE("cylinder_tet: shape identities on a small mesh") {
  Mesh m = cylinder_tet(0.5, 1.0, 4, 2);
  check_shape_identities(m);
}

TEST_CASE("metric tensor: G:G is invariant under rigid rotation") {
  Mesh m = cylinder_tet(0.5, 1.0, 4, 2);
  Mesh r = m;
  for (auto& p : r.nodes) p = rotate(p);

  QuadPoint qp[4];
  int nq = quad_rule(m.kind, qp);
  for (int e = 0; e < m.n_elems(); e += 7) {
    for (int q = 0; q < nq; ++q) {
      ShapeEval a = shape_eval(m, e, qp[q]);
      ShapeEval b = shape_eval(r, e, qp[q]);
      CHECK(frob2(a.G) == doctest::Approx(frob2(b.G)).epsilon(1e-11));
      CHECK(a.detJw == doctest::Approx(b.detJw).epsilon(1e-12));
    }
  }
}

TEST_CASE("mesh serialization: exact roundtrip") {
  Mesh m = cylinder_tet(0.3, 2.0, 4, 2);
  m.length_scale = 2.0;
  const char* path = "roundtrip_mesh.txt";
  write_mesh(m, path);
  Mesh r = read_mesh(path);
  std::remove(path);

  REQUIRE(r.kind == m.kind);
  REQUIRE(r.n_nodes() == m.n_nodes());
  REQUIRE(r.n_elems() == m.n_elems());
  CHECK(r.length_scale == m.length_scale);
  for (int i = 0; i < m.n_nodes(); ++i) {
    CHECK(r.nodes[i].x == m.nodes[i].x);
    CHECK(r.nodes[i].y == m.nodes[i].y);
    CHECK(r.nodes[i].z == m.nodes[i].z);
  }
  for (int e = 0; e < m.n_elems(); ++e) CHECK(r.elems[e] == m.elems[e]);
  REQUIRE(r.node_sets.size() == m.node_sets.size());
  for (const auto& [name, ids] : m.node_sets) CHECK(r.node_sets.at(name) == ids);

  CHECK_THROWS_AS(read_mesh("no_such_mesh_file.txt"), std::runtime_error);
}

TEST_CASE("quadrature rules: point counts and weight sums") {
  QuadPoint qp[4];
  CHECK(quad_rule(CellKind::Line2, qp) == 2);
  CHECK(quad_rule(CellKind::Quad4, qp) == 4);
  CHECK(quad_rule(CellKind::Tet4, qp) == 4);
}
