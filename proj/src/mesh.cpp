#include "tsfem/mesh.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tsfem {

Mesh uniform_line(int n_elems, double L) {
  if (n_elems < 1) throw std::domain_error("uniform_line: need at least 1 element");
  Mesh m;
  m.kind = CellKind::Line2;
  m.length_scale = L;
  m.nodes.resize(n_elems + 1);
  for (int i = 0; i <= n_elems; ++i) m.nodes[i] = {L * i / n_elems, 0.0, 0.0};
  m.elems.resize(n_elems);
  for (int e = 0; e < n_elems; ++e) m.elems[e] = {e, e + 1, -1, -1};
  m.node_sets["left"] = {0};
  m.node_sets["right"] = {n_elems};
  return m;
}

Mesh structured_quad(int nx, int ny, double L) {
  if (nx < 1 || ny < 1) throw std::domain_error("structured_quad: need nx, ny >= 1");
  Mesh m;
  m.kind = CellKind::Quad4;
  m.length_scale = L;
  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  m.nodes.resize((nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      m.nodes[id(i, j)] = {L * i / nx, L * j / ny, 0.0};
  m.elems.reserve(nx * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.elems.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  auto& bot = m.node_sets["bottom"];
  auto& top = m.node_sets["top"];
  auto& lef = m.node_sets["left"];
  auto& rig = m.node_sets["right"];
  for (int i = 0; i <= nx; ++i) { bot.push_back(id(i, 0)); top.push_back(id(i, ny)); }
  for (int j = 0; j <= ny; ++j) { lef.push_back(id(0, j)); rig.push_back(id(nx, j)); }
  return m;
}

namespace {

struct Disk {
  std::vector<double> x, y;          // node coords
  std::vector<std::array<int, 3>> tris;
  std::vector<int> rim;              // outermost-ring node ids
};

// center node + rings k = 1..n_radial with 6k nodes at radius k R/n_radial;
// annuli stitched by a two-pointer walk over the angular order
Disk build_disk(double R, int n_radial) {
  Disk d;
  d.x.push_back(0.0);
  d.y.push_back(0.0);
  std::vector<std::vector<int>> ring_ids(n_radial + 1);
  ring_ids[0] = {0};
  std::vector<std::vector<double>> ring_ang(n_radial + 1);
  ring_ang[0] = {0.0};
  for (int k = 1; k <= n_radial; ++k) {
    double r = R * k / n_radial;
    int nk = 6 * k;
    for (int j = 0; j < nk; ++j) {
      double th = 2.0 * PI * j / nk;
      ring_ids[k].push_back(int(d.x.size()));
      ring_ang[k].push_back(th);
      d.x.push_back(r * std::cos(th));
      d.y.push_back(r * std::sin(th));
    }
  }
  // k = 1: fan around the center
  for (int j = 0; j < 6; ++j)
    d.tris.push_back({0, ring_ids[1][j], ring_ids[1][(j + 1) % 6]});
  // k >= 2: stitch ring k-1 (inner) to ring k (outer)
  for (int k = 2; k <= n_radial; ++k) {
    const auto& in = ring_ids[k - 1];
    const auto& out = ring_ids[k];
    const auto& ain = ring_ang[k - 1];
    const auto& aout = ring_ang[k];
    int ni = int(in.size()), no = int(out.size());
    int i = 0, j = 0;
    // advance whichever ring has the smaller next angle; wraps close the loop
    while (i < ni || j < no) {
      double next_in = i < ni ? ain[(i + 1) % ni] + (i + 1 == ni ? 2.0 * PI : 0.0)
                              : std::numeric_limits<double>::infinity();
      double next_out = j < no ? aout[(j + 1) % no] + (j + 1 == no ? 2.0 * PI : 0.0)
                               : std::numeric_limits<double>::infinity();
      if (next_out <= next_in) {
        d.tris.push_back({in[i % ni], out[j % no], out[(j + 1) % no]});
        ++j;
      } else {
        d.tris.push_back({in[i % ni], out[j % no], in[(i + 1) % ni]});
        ++i;
      }
    }
  }
  // enforce counterclockwise orientation
  for (auto& t : d.tris) {
    double ax = d.x[t[1]] - d.x[t[0]], ay = d.y[t[1]] - d.y[t[0]];
    double bx = d.x[t[2]] - d.x[t[0]], by = d.y[t[2]] - d.y[t[0]];
    if (ax * by - ay * bx < 0.0) std::swap(t[1], t[2]);
  }
  d.rim = ring_ids[n_radial];
  return d;
}

double tet_signed_volume(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  Vec3 a{p1.x - p0.x, p1.y - p0.y, p1.z - p0.z};
  Vec3 b{p2.x - p0.x, p2.y - p0.y, p2.z - p0.z};
  Vec3 c{p3.x - p0.x, p3.y - p0.y, p3.z - p0.z};
  double det = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x)
               + a.z * (b.x * c.y - b.y * c.x);
  return det / 6.0;
}

}  // namespace

Mesh cylinder_tet(double radius, double length, int n_axial, int n_radial) {
  if (n_axial < 4) throw std::domain_error("cylinder_tet: need n_axial >= 4");
  if (n_radial < 2) throw std::domain_error("cylinder_tet: need n_radial >= 2");
  Disk d = build_disk(radius, n_radial);
  int n_disk = int(d.x.size());
  Mesh m;
  m.kind = CellKind::Tet4;
  m.length_scale = length;
  m.nodes.resize(size_t(n_disk) * (n_axial + 1));
  for (int l = 0; l <= n_axial; ++l) {
    double z = length * l / n_axial;
    for (int i = 0; i < n_disk; ++i)
      m.nodes[size_t(l) * n_disk + i] = {d.x[i], d.y[i], z};
  }
  // prism split with face-consistent diagonals: rotate the prism so its
  // smallest node id leads, then pick the template by the smaller of the two
  // remaining cross-diagonals; adjacent prisms then agree on each quad face
  auto emit_prism = [&](std::array<int, 6> v) {
    int base = 0;
    for (int i = 1; i < 3; ++i)
      if (v[i] < v[base]) base = i;
    std::array<int, 6> w;
    for (int i = 0; i < 3; ++i) {
      w[i] = v[(base + i) % 3];
      w[i + 3] = v[3 + (base + i) % 3];
    }
    auto push = [&](int a, int b, int c, int dd) {
      if (tet_signed_volume(m.nodes[a], m.nodes[b], m.nodes[c], m.nodes[dd]) < 0.0)
        std::swap(c, dd);
      m.elems.push_back({a, b, c, dd});
    };
    if (std::min(w[1], w[5]) < std::min(w[2], w[4])) {
      push(w[0], w[1], w[2], w[5]);
      push(w[0], w[1], w[5], w[4]);
      push(w[0], w[4], w[5], w[3]);
    } else {
      push(w[0], w[1], w[2], w[4]);
      push(w[0], w[4], w[2], w[5]);
      push(w[0], w[4], w[5], w[3]);
    }
  };
  for (int l = 0; l < n_axial; ++l) {
    int lo = l * n_disk, hi = (l + 1) * n_disk;
    for (const auto& t : d.tris)
      emit_prism({lo + t[0], lo + t[1], lo + t[2], hi + t[0], hi + t[1], hi + t[2]});
  }
  auto& inlet = m.node_sets["inlet"];
  auto& outlet = m.node_sets["outlet"];
  for (int i = 0; i < n_disk; ++i) {
    inlet.push_back(i);
    outlet.push_back(n_axial * n_disk + i);
  }
  auto& wall = m.node_sets["wall"];
  for (int l = 0; l <= n_axial; ++l)
    for (int r : d.rim) wall.push_back(l * n_disk + r);
  return m;
}

double cylinder_polygon_volume(double radius, double length, int n_radial) {
  double mring = 6.0 * n_radial;
  return 0.5 * mring * radius * radius * std::sin(2.0 * PI / mring) * length;
}

double element_volume(const Mesh& m, int e) {
  const auto& c = m.elems[e];
  switch (m.kind) {
    case CellKind::Line2:
      return std::abs(m.nodes[c[1]].x - m.nodes[c[0]].x);
    case CellKind::Quad4: {
      double s = 0.0;  // shoelace
      for (int i = 0; i < 4; ++i) {
        const Vec3& p = m.nodes[c[i]];
        const Vec3& q = m.nodes[c[(i + 1) % 4]];
        s += p.x * q.y - q.x * p.y;
      }
      return std::abs(s) / 2.0;
    }
    case CellKind::Tet4:
      return std::abs(tet_signed_volume(m.nodes[c[0]], m.nodes[c[1]],
                                        m.nodes[c[2]], m.nodes[c[3]]));
  }
  return 0.0;
}

double mesh_volume(const Mesh& m) {
  double v = 0.0;
  for (int e = 0; e < m.n_elems(); ++e) v += element_volume(m, e);
  return v;
}

namespace {
const char* kind_name(CellKind k) {
  switch (k) {
    case CellKind::Line2: return "line2";
    case CellKind::Quad4: return "quad4";
    case CellKind::Tet4: return "tet4";
  }
  return "?";
}
CellKind kind_from_name(const std::string& s) {
  if (s == "line2") return CellKind::Line2;
  if (s == "quad4") return CellKind::Quad4;
  if (s == "tet4") return CellKind::Tet4;
  throw std::runtime_error("read_mesh: unknown cell kind " + s);
}
}  // namespace

void write_mesh(const Mesh& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_mesh: cannot open " + path);
  f.precision(17);
  f << "mesh " << kind_name(m.kind) << " " << m.n_nodes() << " " << m.n_elems() << "\n";
  f << "scale " << m.length_scale << "\n";
  for (const auto& p : m.nodes) f << p.x << " " << p.y << " " << p.z << "\n";
  int nv = m.nv();
  for (const auto& e : m.elems) {
    for (int i = 0; i < nv; ++i) f << e[i] << (i + 1 < nv ? ' ' : '\n');
  }
  for (const auto& [name, ids] : m.node_sets) {
    f << "set " << name << " " << ids.size() << "\n";
    for (size_t i = 0; i < ids.size(); ++i)
      f << ids[i] << ((i + 1) % 16 == 0 || i + 1 == ids.size() ? '\n' : ' ');
  }
}

Mesh read_mesh(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("read_mesh: cannot open " + path);
  std::string tok, kind;
  int nn = 0, ne = 0;
  f >> tok >> kind >> nn >> ne;
  if (tok != "mesh") throw std::runtime_error("read_mesh: bad header");
  Mesh m;
  m.kind = kind_from_name(kind);
  f >> tok >> m.length_scale;
  if (tok != "scale") throw std::runtime_error("read_mesh: missing scale line");
  m.nodes.resize(nn);
  for (auto& p : m.nodes) f >> p.x >> p.y >> p.z;
  m.elems.resize(ne);
  int nv = m.nv();
  for (auto& e : m.elems) {
    e = {-1, -1, -1, -1};
    for (int i = 0; i < nv; ++i) f >> e[i];
  }
  while (f >> tok) {
    if (tok != "set") throw std::runtime_error("read_mesh: expected set block");
    std::string name;
    size_t cnt;
    f >> name >> cnt;
    auto& ids = m.node_sets[name];
    ids.resize(cnt);
    for (auto& v : ids) f >> v;
  }
  if (!f.eof() && f.fail()) throw std::runtime_error("read_mesh: parse error");
  return m;
}

}  // namespace tsfem
