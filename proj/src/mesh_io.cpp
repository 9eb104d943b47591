#include "capzip/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "capzip/errors.hpp"

namespace capzip {

Surface read_obj(std::istream& in) {
  std::vector<Point3> verts;
  std::vector<std::vector<int>> faces;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Point3 p;
      if (!(ls >> p.x >> p.y >> p.z)) {
        throw ParseError("line " + std::to_string(lineno) + ": bad vertex");
      }
      verts.push_back(p);
    } else if (tag == "f") {
      std::vector<int> f;
      std::string tok;
      while (ls >> tok) {
        int idx = 0;
        try {
          idx = std::stoi(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(lineno) + ": bad face index '" + tok + "'");
        }
        if (idx < 0) idx = static_cast<int>(verts.size()) + idx + 1;
        if (idx < 1 || idx > static_cast<int>(verts.size())) {
          throw ParseError("line " + std::to_string(lineno) + ": face index out of range");
        }
        f.push_back(idx - 1);
      }
      if (f.size() < 3) throw ParseError("line " + std::to_string(lineno) + ": face needs 3 vertices");
      faces.push_back(std::move(f));
    }
  }
  if (faces.empty()) throw ParseError("OBJ has no faces");
  return Surface(std::move(verts), std::move(faces));
}

Surface read_obj_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_obj(in);
}

std::string write_obj(const Surface& s, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  char buf[128];
  for (const auto& p : s.vertices()) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
    out += buf;
  }
  for (const auto& f : s.faces()) {
    out += "f";
    for (int v : f) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace capzip
