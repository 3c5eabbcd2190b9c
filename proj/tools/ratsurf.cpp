// ratsurf: build, split, resolve, tessellate and verify rational surface nets.
//
// Exit status: 0 success, 1 validation error, 2 IO or parse error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratsurf/ratsurf.hpp"

using namespace ratsurf;
namespace fs = std::filesystem;

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw DomainError(what + ": '" + tok + "' is not a number");
    }
  }
  return out;
}

RectFrames parse_rect(const std::string& text) {
  const auto v = parse_numbers(text, "--rect");
  if (v.size() != 4) throw DomainError("--rect needs four numbers \"r1 s1 r2 s2\"");
  return rect_frames(v[0], v[1], v[2], v[3]);
}

std::array<double, 4> rect_array(const RectFrames& r) { return {r.r1, r.s1, r.r2, r.s2}; }

Frame2 pick_frame(const std::string& name, const RectFrames& rect) {
  if (name == "bca") return rect.bca;
  if (name == "dac") return rect.dac;
  if (name == "bad") return rect.bad;
  if (name == "unit") return Frame2();
  throw DomainError("unknown frame '" + name + "' (expected bca, dac, bad or unit)");
}

const TriNet& expect_tri(const NetFile& f, const std::string& path) {
  if (!std::holds_alternative<TriNet>(f.net)) throw DomainError(path + ": expected a triangular net");
  return std::get<TriNet>(f.net);
}

const RectNet& expect_rect(const NetFile& f, const std::string& path) {
  if (!std::holds_alternative<RectNet>(f.net)) throw DomainError(path + ": expected a rectangular net");
  return std::get<RectNet>(f.net);
}

void write_family(const auto& family, const std::string& dir, const std::string& name,
                  const std::optional<std::array<double, 4>>& rect) {
  fs::create_directories(dir);
  for (const auto& [member, net] : family.members()) {
    const std::string path = (fs::path(dir) / (std::string(member) + ".json")).string();
    write_net(NetFile{*net, name.empty() ? std::string(member) : name + ":" + std::string(member), rect}, path);
    std::printf("wrote %s\n", path.c_str());
  }
}

bool looks_like_obj(const std::string& path) {
  const std::string ext = fs::path(path).extension().string();
  return ext == ".obj" || ext == ".OBJ";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Bezier surface nets: patch families, base-point blow-up, tessellation."};
  app.require_subcommand(1);
  std::string rect_text = "-1 1 -1 1";
  app.add_option("--rect", rect_text, "Parameter rectangle \"r1 s1 r2 s2\"")->capture_default_str();

  // build
  auto* build = app.add_subcommand("build", "Build a control net from fractions or a named surface");
  std::string build_in, build_out, surface_name, params_text, kind = "tri", frame_name = "bca", degree_text;
  build->add_option("fractions", build_in, "Fraction file (JSON)");
  build->add_option("--surface", surface_name, "Named surface: sphere, ellipsoid, steiner, torus");
  build->add_option("--params", params_text, "Surface parameters, e.g. \"4 3 2\"");
  build->add_option("--kind", kind, "tri or rect")->check(CLI::IsMember({"tri", "rect"}))->capture_default_str();
  build->add_option("--degree", degree_text, "Degree m (tri) or \"p q\" (rect); defaults to the map's degree");
  build->add_option("--frame", frame_name, "Triangle frame: bca, dac, bad or unit")->capture_default_str();
  build->add_option("-o,--output", build_out, "Output net file")->required();

  // split
  auto* split = app.add_subcommand("split", "Write a whole-surface patch family");
  std::vector<std::string> split_in;
  std::string split_out;
  bool six = false, four_tri = false, four_rect = false;
  split->add_option("nets", split_in, "Net file, or alpha beta gamma for --six")->required();
  auto* o_six = split->add_flag("--six", six, "Six triangles (cube split)");
  auto* o_ft = split->add_flag("--four-tri", four_tri, "Four triangles (octahedron split)");
  auto* o_fr = split->add_flag("--four-rect", four_rect, "Four rectangles (torus split)");
  o_six->excludes(o_ft)->excludes(o_fr);
  o_ft->excludes(o_fr);
  split->add_option("-o,--output", split_out, "Output directory")->required();

  // subdivide
  auto* subdivide = app.add_subcommand("subdivide", "Split a net at its midpoints into four nets");
  std::string sub_in, sub_out;
  subdivide->add_option("net", sub_in, "Net file")->required();
  subdivide->add_option("-o,--output", sub_out, "Output directory")->required();

  // resolve
  auto* resolve = app.add_subcommand("resolve", "Blow up a corner of zeros");
  std::string res_in, res_out, res_rect_out;
  resolve->add_option("net", res_in, "Triangular net file")->required();
  resolve->add_option("-o,--output", res_out, "Resolved triangular net")->required();
  resolve->add_option("--rect-out", res_rect_out, "Also write the blown-up rectangular net");

  // tess
  auto* tess = app.add_subcommand("tess", "Tessellate nets into an OBJ mesh");
  std::vector<std::string> tess_in;
  std::string tess_out;
  int tess_depth = 3;
  bool control_net = false;
  tess->add_option("nets", tess_in, "Net files")->required();
  tess->add_option("-d,--depth", tess_depth, "Subdivision depth")->check(CLI::Range(0, 10))->capture_default_str();
  tess->add_flag("--control-net", control_net, "Emit control points instead of surface points");
  tess->add_option("-o,--output", tess_out, "Output OBJ file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Residual of an OBJ mesh or net against an implicit surface");
  std::vector<std::string> verify_in;
  std::string verify_surface, verify_params;
  int verify_depth = 3;
  double tol = 1e-9;
  verify->add_option("inputs", verify_in, "OBJ files or net files")->required();
  verify->add_option("--surface", verify_surface, "sphere, ellipsoid, steiner or torus")->required();
  verify->add_option("--params", verify_params, "Surface parameters");
  verify->add_option("-d,--depth", verify_depth, "Depth for net inputs")->check(CLI::Range(0, 10))->capture_default_str();
  verify->add_option("--tol", tol, "Maximum accepted residual")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const RectFrames rect = parse_rect(rect_text);

    if (*build) {
      if (build_in.empty() == surface_name.empty()) throw DomainError("give either a fraction file or --surface");
      std::string name;
      RationalMap F = surface_map("sphere");
      if (!build_in.empty()) {
        FractionFile ff = read_fractions(build_in);
        name = ff.name;
        F = std::move(ff.map);
      } else {
        name = surface_name;
        F = surface_map(surface_name, parse_numbers(params_text, "--params"));
      }
      const auto deg = parse_numbers(degree_text, "--degree");
      if (kind == "tri") {
        if (deg.size() > 1) throw DomainError("--degree takes one number for triangular nets");
        const int m = deg.empty() ? F.total_degree() : static_cast<int>(deg[0]);
        write_net(NetFile{tri_net_from_fractions(F, m, pick_frame(frame_name, rect)), name, rect_array(rect)},
                  build_out);
      } else {
        if (deg.size() == 1 || deg.size() > 2) throw DomainError("--degree takes \"p q\" for rectangular nets");
        const int p = deg.empty() ? F.degree_u() : static_cast<int>(deg[0]);
        const int q = deg.empty() ? F.degree_v() : static_cast<int>(deg[1]);
        write_net(NetFile{rect_net_from_fractions(F, p, q, Frame1(rect.r1, rect.s1), Frame1(rect.r2, rect.s2)), name,
                          rect_array(rect)},
                  build_out);
      }
      std::printf("wrote %s\n", build_out.c_str());
    } else if (*split) {
      if (!six && !four_tri && !four_rect) throw DomainError("choose one of --six, --four-tri, --four-rect");
      const NetFile first = read_net(split_in[0]);
      const auto rect_meta = first.rect ? first.rect : std::optional(rect_array(rect));
      if (six) {
        if (split_in.size() == 3) {
          write_family(six_patch_nets(expect_tri(first, split_in[0]), expect_tri(read_net(split_in[1]), split_in[1]),
                                      expect_tri(read_net(split_in[2]), split_in[2])),
                       split_out, first.name, rect_meta);
        } else if (split_in.size() == 1) {
          write_family(six_patch_nets(expect_tri(first, split_in[0]), rect), split_out, first.name, rect_meta);
        } else {
          throw DomainError("--six takes one net or three nets (alpha beta gamma)");
        }
      } else {
        if (split_in.size() != 1) throw DomainError("four-patch splits take one net");
        if (four_tri) {
          write_family(four_patch_tri_nets(expect_tri(first, split_in[0])), split_out, first.name, first.rect);
        } else {
          write_family(four_patch_rect_nets(expect_rect(first, split_in[0])), split_out, first.name, first.rect);
        }
      }
    } else if (*subdivide) {
      const NetFile in = read_net(sub_in);
      fs::create_directories(sub_out);
      std::vector<AnyNet> kids;
      if (const auto* t = std::get_if<TriNet>(&in.net)) {
        for (const auto& k : tri_subdivide(*t)) kids.emplace_back(k);
      } else {
        for (const auto& k : rect_subdivide(std::get<RectNet>(in.net))) kids.emplace_back(k);
      }
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const std::string path = (fs::path(sub_out) / ("child" + std::to_string(i) + ".json")).string();
        std::string corner;
        if (const auto* t = std::get_if<TriNet>(&kids[i])) {
          const CornerReport rep = corner_zero_depth(*t);
          if (rep.depth > 0) corner = " (corner " + std::string(to_string(rep.corner)) + ", depth " +
                                      std::to_string(rep.depth) + ")";
        }
        write_net(NetFile{kids[i], in.name, in.rect}, path);
        std::printf("wrote %s%s\n", path.c_str(), corner.c_str());
      }
    } else if (*resolve) {
      const NetFile in = read_net(res_in);
      const ResolvedPatch rp = resolve_corner(expect_tri(in, res_in));
      std::printf("corner %s, depth %d, degree %d -> rectangular (%d, %d), triangular %d\n",
                  to_string(rp.report.corner), rp.report.depth, rp.report.degree, rp.rect.p(), rp.rect.q(),
                  rp.tri.degree());
      write_net(NetFile{rp.tri, in.name, std::nullopt}, res_out);
      std::printf("wrote %s\n", res_out.c_str());
      if (!res_rect_out.empty()) {
        write_net(NetFile{rp.rect, in.name, std::nullopt}, res_rect_out);
        std::printf("wrote %s\n", res_rect_out.c_str());
      }
    } else if (*tess) {
      std::vector<AnyNet> nets;
      for (const auto& path : tess_in) nets.push_back(read_net(path).net);
      const Mesh mesh = tessellate_all(nets, tess_depth, control_net ? Sampling::control_net : Sampling::surface);
      write_obj(mesh, tess_out);
      std::printf("wrote %s: %zu vertices, %zu faces, %zu dropped\n", tess_out.c_str(), mesh.vertices.size(),
                  mesh.faces.size(), mesh.dropped);
    } else if (*verify) {
      const ImplicitSurface surface = implicit_surface(verify_surface, parse_numbers(verify_params, "--params"));
      Mesh mesh;
      for (const auto& path : verify_in) {
        if (looks_like_obj(path)) {
          mesh.append(read_obj(path));
        } else {
          mesh.append(tessellate(read_net(path).net, verify_depth));
        }
      }
      const ResidualReport rep = verify_implicit(mesh, surface);
      const bool ok = rep.max_abs <= tol;
      std::printf("%s: %zu vertices, %zu dropped, max residual %.3e, mean residual %.3e, tol %.1e: %s\n",
                  surface.name.c_str(), rep.vertices, mesh.dropped, rep.max_abs, rep.mean_abs, tol, ok ? "ok" : "FAIL");
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
