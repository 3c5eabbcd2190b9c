#pragma once

// Tessellation of nets into triangle meshes, implicit-equation residuals,
// and the text formats: Wavefront-style "v/f" meshes, JSON net files and
// JSON fraction files.
//
// Net file:
//   { "kind": "triangular", "degree": m,
//     "frame": [[r_u, r_v], [s_u, s_v], [t_u, t_v]],
//     "points": [[x, y, z, w], ...] }              // canonical order, see nets.hpp
//   { "kind": "rectangular", "degree": [p, q],
//     "frame": [[r1, s1], [r2, s2]], "points": [...] }
// Optional fields: "name" (string), "rect" ([r1, s1, r2, s2]).
// Points are homogeneous: [x, y, z, w] is the weighted point (x/w, y/w, z/w).
//
// Fraction file:
//   { "name": "...", "x": [[i, j, c], ...], "y": [...], "z": [...], "w": [...] }
// with [i, j, c] the monomial c u^i v^j.

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"
#include "ratsurf/nets.hpp"
#include "ratsurf/polyform.hpp"
#include "ratsurf/surfaces.hpp"

namespace ratsurf {

struct Mesh {
  std::vector<Point3> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;
  std::vector<int> patch;    // per-vertex patch id
  std::size_t dropped = 0;   // vertices skipped because their weight vanished

  void append(const Mesh& other) {
    const auto offset = static_cast<std::uint32_t>(vertices.size());
    vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
    patch.insert(patch.end(), other.patch.begin(), other.patch.end());
    for (auto f : other.faces) faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
    dropped += other.dropped;
  }
};

/// What a sub-net contributes as mesh vertices.
enum class Sampling {
  surface,      // surface points at the sub-net's Bezier grid parameters
  control_net,  // the projected control points themselves
};

namespace detail {

// Collects vertices for one grid; -1 marks a dropped vertex.
struct GridBuilder {
  Mesh& mesh;
  int patch_id;
  std::vector<std::int64_t> ids;

  void add(const HPoint& h, double scale) {
    if (std::abs(h.w) <= 1e-12 * std::max(1.0, scale) || !h.is_finite()) {
      ++mesh.dropped;
      ids.push_back(-1);
      return;
    }
    ids.push_back(static_cast<std::int64_t>(mesh.vertices.size()));
    mesh.vertices.push_back(project(h));
    mesh.patch.push_back(patch_id);
  }

  void face(std::size_t a, std::size_t b, std::size_t c) {
    if (ids[a] < 0 || ids[b] < 0 || ids[c] < 0) return;
    mesh.faces.push_back({static_cast<std::uint32_t>(ids[a]), static_cast<std::uint32_t>(ids[b]),
                          static_cast<std::uint32_t>(ids[c])});
  }
};

inline void emit_tri(const TriNet& leaf, Sampling sampling, Mesh& mesh, int patch_id) {
  const int m = leaf.degree();
  const double scale = leaf.max_abs();
  GridBuilder g{mesh, patch_id, {}};
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m - i; ++j) {
      const int k = m - i - j;
      if (sampling == Sampling::control_net || m == 0) {
        g.add(leaf.at(i, j, k), scale);
      } else {
        const std::vector<Bary3> args(static_cast<std::size_t>(m), Bary3{double(i) / m, double(j) / m, double(k) / m});
        g.add(tri_blossom_bary(leaf, args), scale);
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - i; ++j) {
      g.face(TriNet::index(m, i, j), TriNet::index(m, i + 1, j), TriNet::index(m, i, j + 1));
      if (i + j <= m - 2) g.face(TriNet::index(m, i + 1, j), TriNet::index(m, i + 1, j + 1), TriNet::index(m, i, j + 1));
    }
  }
}

inline void emit_rect(const RectNet& leaf, Sampling sampling, Mesh& mesh, int patch_id) {
  const int p = leaf.p(), q = leaf.q();
  const double scale = leaf.max_abs();
  const Frame1& fu = leaf.frame_u();
  const Frame1& fv = leaf.frame_v();
  GridBuilder g{mesh, patch_id, {}};
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= q; ++j) {
      if (sampling == Sampling::control_net) {
        g.add(leaf.at(i, j), scale);
      } else {
        const double u = p == 0 ? fu.r() : fu.r() + (fu.s() - fu.r()) * i / p;
        const double v = q == 0 ? fv.r() : fv.r() + (fv.s() - fv.r()) * j / q;
        g.add(rect_eval(leaf, u, v), scale);
      }
    }
  }
  auto id = [q](int i, int j) { return static_cast<std::size_t>(i * (q + 1) + j); };
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      g.face(id(i, j), id(i + 1, j), id(i + 1, j + 1));
      g.face(id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  }
}

template <class Net, class Split>
void collect_leaves(const Net& net, int depth, Split&& split, std::vector<Net>& out) {
  if (depth == 0) {
    out.push_back(net);
    return;
  }
  for (const auto& child : split(net)) collect_leaves(child, depth - 1, split, out);
}

}  // namespace detail

/// Subdivides depth times (4^depth sub-nets) and emits every sub-net's grid
/// with the standard triangular-net triangulation (m^2 faces per sub-net).
/// Vertices whose weight vanishes are skipped and counted in Mesh::dropped.
inline Mesh tessellate_tri(const TriNet& net, int depth, Sampling sampling = Sampling::surface, int patch_id = 0) {
  if (depth < 0) throw DomainError("tessellate_tri: negative depth");
  std::vector<TriNet> leaves;
  detail::collect_leaves(net, depth, [](const TriNet& n) { return tri_subdivide(n); }, leaves);
  Mesh mesh;
  for (const auto& leaf : leaves) detail::emit_tri(leaf, sampling, mesh, patch_id);
  return mesh;
}

/// Same for rectangular nets; each quad of a sub-net grid becomes two triangles.
inline Mesh tessellate_rect(const RectNet& net, int depth, Sampling sampling = Sampling::surface,
                            int patch_id = 0) {
  if (depth < 0) throw DomainError("tessellate_rect: negative depth");
  std::vector<RectNet> leaves;
  detail::collect_leaves(net, depth, [](const RectNet& n) { return rect_subdivide(n); }, leaves);
  Mesh mesh;
  for (const auto& leaf : leaves) detail::emit_rect(leaf, sampling, mesh, patch_id);
  return mesh;
}

using AnyNet = std::variant<TriNet, RectNet>;

inline Mesh tessellate(const AnyNet& net, int depth, Sampling sampling = Sampling::surface, int patch_id = 0) {
  return std::visit(
      [&](const auto& n) {
        if constexpr (std::is_same_v<std::decay_t<decltype(n)>, TriNet>) {
          return tessellate_tri(n, depth, sampling, patch_id);
        } else {
          return tessellate_rect(n, depth, sampling, patch_id);
        }
      },
      net);
}

/// Tessellates the nets concurrently; patch ids follow input order.
inline Mesh tessellate_all(const std::vector<AnyNet>& nets, int depth, Sampling sampling = Sampling::surface) {
  std::vector<std::future<Mesh>> jobs;
  jobs.reserve(nets.size());
  for (std::size_t i = 0; i < nets.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] { return tessellate(nets[i], depth, sampling, int(i)); }));
  }
  Mesh all;
  for (auto& j : jobs) all.append(j.get());
  return all;
}

struct ResidualReport {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  std::size_t vertices = 0;
};

inline ResidualReport verify_implicit(const Mesh& mesh, const ImplicitSurface& surface) {
  ResidualReport rep;
  double sum = 0.0;
  for (const auto& v : mesh.vertices) {
    const double r = std::abs(surface.eval(v));
    rep.max_abs = std::max(rep.max_abs, r);
    sum += r;
  }
  rep.vertices = mesh.vertices.size();
  rep.mean_abs = rep.vertices ? sum / static_cast<double>(rep.vertices) : 0.0;
  return rep;
}

// ---------------------------------------------------------------------------
// OBJ
// ---------------------------------------------------------------------------

inline void write_obj(const Mesh& mesh, std::ostream& out) {
  char buf[96];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

inline void write_obj(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_obj(mesh, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

/// Reads "v" and "f" records; other records are ignored.
inline Mesh read_obj(std::istream& in, const std::string& source = "<obj>") {
  Mesh mesh;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Point3 p;
      if (!(ls >> p.x >> p.y >> p.z)) throw ParseError(source + ":" + std::to_string(lineno) + ": malformed vertex");
      mesh.vertices.push_back(p);
      mesh.patch.push_back(0);
    } else if (tag == "f") {
      std::vector<long> idx;
      std::string tok;
      while (ls >> tok) {
        try {
          idx.push_back(std::stol(tok.substr(0, tok.find('/'))));
        } catch (const std::exception&) {
          throw ParseError(source + ":" + std::to_string(lineno) + ": malformed face index '" + tok + "'");
        }
      }
      if (idx.size() < 3) throw ParseError(source + ":" + std::to_string(lineno) + ": face needs 3 indices");
      for (long& i : idx) {
        if (i < 0) i += static_cast<long>(mesh.vertices.size()) + 1;
        if (i < 1 || i > static_cast<long>(mesh.vertices.size())) {
          throw ParseError(source + ":" + std::to_string(lineno) + ": face index out of range");
        }
      }
      for (std::size_t k = 1; k + 1 < idx.size(); ++k) {
        mesh.faces.push_back({static_cast<std::uint32_t>(idx[0] - 1), static_cast<std::uint32_t>(idx[k] - 1),
                              static_cast<std::uint32_t>(idx[k + 1] - 1)});
      }
    }
  }
  return mesh;
}

inline Mesh read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_obj(in, path);
}

// ---------------------------------------------------------------------------
// Net files
// ---------------------------------------------------------------------------

struct NetFile {
  AnyNet net;
  std::string name;
  std::optional<std::array<double, 4>> rect;  // parameter rectangle r1 s1 r2 s2
};

namespace detail {

using nlohmann::json;

inline json point_json(const HPoint& p) { return json::array({p.x, p.y, p.z, p.w}); }

inline const json& field(const json& j, const char* key, const std::string& source) {
  if (!j.is_object()) throw ParseError(source + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(source + ": missing field '" + key + "'");
  return *it;
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

inline int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

inline std::vector<double> numbers(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(where + ": expected an array of " + std::to_string(n) + " numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<HPoint> points(const json& j, std::size_t expected, const std::string& source) {
  const std::string where = source + ": field 'points'";
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (j.size() != expected) {
    throw ParseError(where + ": expected " + std::to_string(expected) + " entries for the declared degree, got " +
                     std::to_string(j.size()));
  }
  std::vector<HPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto c = numbers(j[i], 4, where + "[" + std::to_string(i) + "]");
    out.push_back({c[0], c[1], c[2], c[3]});
  }
  return out;
}

inline json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace detail

/// One point per line; field order kind, name, degree, frame, rect, points.
inline std::string net_to_json(const NetFile& file) {
  using detail::json;
  std::ostringstream out;
  out << "{\n";
  auto points = [&](const std::vector<HPoint>& pts) {
    out << "  \"points\": [\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << "    " << detail::point_json(pts[i]).dump() << (i + 1 < pts.size() ? ",\n" : "\n");
    }
    out << "  ]\n";
  };
  auto header = [&](const char* kind, const json& degree, const json& frame) {
    out << "  \"kind\": \"" << kind << "\",\n";
    if (!file.name.empty()) out << "  \"name\": " << json(file.name).dump() << ",\n";
    out << "  \"degree\": " << degree.dump() << ",\n";
    out << "  \"frame\": " << frame.dump() << ",\n";
    if (file.rect) {
      const auto& r = *file.rect;
      out << "  \"rect\": " << json::array({r[0], r[1], r[2], r[3]}).dump() << ",\n";
    }
  };
  if (const auto* t = std::get_if<TriNet>(&file.net)) {
    const Frame2& f = t->frame();
    header("triangular", t->degree(),
           json::array({json::array({f.r().u, f.r().v}), json::array({f.s().u, f.s().v}),
                        json::array({f.t().u, f.t().v})}));
    points(t->points());
  } else {
    const auto& n = std::get<RectNet>(file.net);
    header("rectangular", json::array({n.p(), n.q()}),
           json::array({json::array({n.frame_u().r(), n.frame_u().s()}),
                        json::array({n.frame_v().r(), n.frame_v().s()})}));
    points(n.points());
  }
  out << "}\n";
  return out.str();
}

inline NetFile net_from_json(const std::string& text, const std::string& source = "<net>") {
  using detail::field;
  const auto j = detail::parse_json(text, source);
  const auto& kind = field(j, "kind", source);
  if (!kind.is_string()) throw ParseError(source + ": field 'kind': expected a string");
  const auto& deg = field(j, "degree", source);
  const auto& frame = field(j, "frame", source);
  const auto& pts = field(j, "points", source);
  NetFile out{TriNet(0, Frame2(), {HPoint{}}), {}, std::nullopt};
  try {
    if (kind == "triangular") {
      const int m = detail::integer(deg, source + ": field 'degree'");
      if (m < 0) throw ParseError(source + ": field 'degree': must be nonnegative");
      if (!frame.is_array() || frame.size() != 3) {
        throw ParseError(source + ": field 'frame': expected three [u, v] points");
      }
      std::array<Point2, 3> c;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto uv = detail::numbers(frame[i], 2, source + ": field 'frame[" + std::to_string(i) + "]'");
        c[i] = {uv[0], uv[1]};
      }
      out.net = TriNet(m, Frame2(c[0], c[1], c[2]), detail::points(pts, TriNet::size_for(m), source));
    } else if (kind == "rectangular") {
      if (!deg.is_array() || deg.size() != 2) throw ParseError(source + ": field 'degree': expected [p, q]");
      const int p = detail::integer(deg[0], source + ": field 'degree[0]'");
      const int q = detail::integer(deg[1], source + ": field 'degree[1]'");
      if (p < 0 || q < 0) throw ParseError(source + ": field 'degree': must be nonnegative");
      if (!frame.is_array() || frame.size() != 2) {
        throw ParseError(source + ": field 'frame': expected [[r1, s1], [r2, s2]]");
      }
      const auto f1 = detail::numbers(frame[0], 2, source + ": field 'frame[0]'");
      const auto f2 = detail::numbers(frame[1], 2, source + ": field 'frame[1]'");
      out.net = RectNet(p, q, Frame1(f1[0], f1[1]), Frame1(f2[0], f2[1]),
                        detail::points(pts, static_cast<std::size_t>((p + 1) * (q + 1)), source));
    } else {
      throw ParseError(source + ": field 'kind': expected \"triangular\" or \"rectangular\"");
    }
  } catch (const DomainError& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError(source + ": field 'name': expected a string");
    out.name = it->get<std::string>();
  }
  if (auto it = j.find("rect"); it != j.end()) {
    const auto r = detail::numbers(*it, 4, source + ": field 'rect'");
    out.rect = std::array<double, 4>{r[0], r[1], r[2], r[3]};
  }
  return out;
}

inline void write_net(const NetFile& file, const std::string& path) { detail::spit(path, net_to_json(file)); }
inline void write_net(const TriNet& net, const std::string& path) { write_net(NetFile{net, {}, std::nullopt}, path); }
inline void write_net(const RectNet& net, const std::string& path) { write_net(NetFile{net, {}, std::nullopt}, path); }

inline NetFile read_net(const std::string& path) { return net_from_json(detail::slurp(path), path); }

// ---------------------------------------------------------------------------
// Fraction files
// ---------------------------------------------------------------------------

struct FractionFile {
  std::string name;
  RationalMap map;
};

inline FractionFile fractions_from_json(const std::string& text, const std::string& source = "<fractions>") {
  const auto j = detail::parse_json(text, source);
  std::array<Poly2, 4> polys;
  const char* keys[] = {"x", "y", "z", "w"};
  for (int c = 0; c < 4; ++c) {
    const auto& terms = detail::field(j, keys[c], source);
    const std::string where = source + ": field '" + keys[c] + "'";
    if (!terms.is_array()) throw ParseError(where + ": expected an array of [i, j, coefficient]");
    int bound = 0;
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 3) throw ParseError(where + ": each term must be [i, j, coefficient]");
      bound = std::max(bound, detail::integer(t[0], where) + detail::integer(t[1], where));
    }
    Poly2 p(bound);
    for (const auto& t : terms) {
      const int i = detail::integer(t[0], where), jj = detail::integer(t[1], where);
      if (i < 0 || jj < 0) throw ParseError(where + ": negative exponent");
      p.add(i, jj, detail::number(t[2], where));
    }
    polys[c] = std::move(p);
  }
  std::string name;
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
  try {
    return {name, RationalMap(polys[0], polys[1], polys[2], polys[3])};
  } catch (const DomainError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline FractionFile read_fractions(const std::string& path) {
  return fractions_from_json(detail::slurp(path), path);
}

}  // namespace ratsurf
