#include "stlw/grid_io.hpp"

#include "stlw/geometry.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace stlw {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

struct LineParser {
  std::string_view rest;
  int line_no;

  bool done() const { return rest.empty(); }

  std::string_view token() {
    std::size_t i = 0;
    while (i < rest.size() && rest[i] == ' ') ++i;
    std::size_t j = i;
    while (j < rest.size() && rest[j] != ' ') ++j;
    std::string_view tok = rest.substr(i, j - i);
    rest = rest.substr(j);
    if (tok.empty()) fail("unexpected end of line");
    return tok;
  }

  double num() {
    std::string_view tok = token();
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) fail("bad number");
    return v;
  }

  long integer() {
    std::string_view tok = token();
    long v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) fail("bad integer");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("grid file, line " + std::to_string(line_no) + ": " + what);
  }
};

}  // namespace

void dump_grid(const SpaceTimeGrid& g, std::ostream& out) {
  out << "STGRID 1 " << g.num_cells() << ' ' << g.num_faces() << ' ' << format_double(g.T) << ' '
      << format_double(g.x_lo) << ' ' << format_double(g.x_hi) << ' ' << format_double(g.h)
      << '\n';
  for (const Cell& c : g.cells) {
    out << "C " << c.id << ' ' << c.layer << ' ' << c.vertices.size();
    for (const Vec2& v : c.vertices) out << ' ' << format_double(v[0]) << ' ' << format_double(v[1]);
    out << '\n';
  }
  for (const Face& f : g.faces) {
    out << "F " << f.id << ' ' << (f.kind == FaceKind::Interior ? 'I' : 'B') << ' ' << f.left
        << ' ' << f.right << ' ' << format_double(f.a[0]) << ' ' << format_double(f.a[1]) << ' '
        << format_double(f.b[0]) << ' ' << format_double(f.b[1]) << '\n';
  }
}

void dump_grid_file(const SpaceTimeGrid& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  dump_grid(g, out);
}

SpaceTimeGrid load_grid(std::istream& in) {
  SpaceTimeGrid g;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw std::runtime_error("grid file: empty input");
  ++line_no;
  LineParser hp{line, line_no};
  if (hp.token() != "STGRID") hp.fail("expected STGRID header");
  if (hp.integer() != 1) hp.fail("unsupported version");
  const long ncells = hp.integer();
  const long nfaces = hp.integer();
  g.T = hp.num();
  g.x_lo = hp.num();
  g.x_hi = hp.num();
  g.h = hp.num();
  g.family = GridFamily::Loaded;
  g.cells.reserve(ncells);
  g.faces.reserve(nfaces);
  g.cell_faces.assign(ncells, {});

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    LineParser p{line, line_no};
    const std::string_view tag = p.token();
    if (tag == "C") {
      Cell c;
      c.id = int(p.integer());
      c.layer = int(p.integer());
      const long nv = p.integer();
      if (nv < 3) p.fail("cell needs at least 3 vertices");
      c.vertices.resize(nv);
      for (long i = 0; i < nv; ++i) {
        const double t = p.num();
        const double x = p.num();
        c.vertices[i] = Vec2(t, x);
      }
      c.volume = polygon_area(c.vertices);
      if (c.id != int(g.cells.size())) p.fail("cell ids must be dense and ordered");
      g.cells.push_back(std::move(c));
    } else if (tag == "F") {
      Face f;
      f.id = int(p.integer());
      const std::string_view kind = p.token();
      f.left = int(p.integer());
      f.right = int(p.integer());
      const double ta = p.num(), xa = p.num(), tb = p.num(), xb = p.num();
      f.a = Vec2(ta, xa);
      f.b = Vec2(tb, xb);
      const Vec2 d = f.b - f.a;
      f.measure = d.norm();
      if (!(f.measure > 0.0)) p.fail("degenerate face");
      f.normal = Vec2(d[1], -d[0]) / f.measure;
      if (kind == "I") {
        f.kind = FaceKind::Interior;
        if (f.left < 0 || f.right < 0) p.fail("interior face must have two cells");
      } else if (kind == "B") {
        if (f.left == kExterior && ta == 0.0 && tb == 0.0)
          f.kind = FaceKind::Initial;
        else
          f.kind = FaceKind::Boundary;
      } else {
        p.fail("face kind must be I or B");
      }
      if (f.id != int(g.faces.size())) p.fail("face ids must be dense and ordered");
      if (f.left >= int(g.cells.size()) || f.right >= int(g.cells.size()))
        p.fail("face references unknown cell");
      if (f.left >= 0) g.cell_faces[f.left].push_back(f.id);
      if (f.right >= 0) g.cell_faces[f.right].push_back(f.id);
      g.faces.push_back(std::move(f));
    } else {
      p.fail("unknown record tag");
    }
  }
  if (long(g.cells.size()) != ncells) throw std::runtime_error("grid file: cell count mismatch");
  if (long(g.faces.size()) != nfaces) throw std::runtime_error("grid file: face count mismatch");

  int max_layer = -1;
  for (const Cell& c : g.cells) max_layer = std::max(max_layer, c.layer);
  g.layers.assign(max_layer + 1, {});
  g.layer_t0.assign(max_layer + 1, std::numeric_limits<double>::infinity());
  g.layer_t1.assign(max_layer + 1, -std::numeric_limits<double>::infinity());
  for (const Cell& c : g.cells) {
    g.layers[c.layer].push_back(c.id);
    for (const Vec2& v : c.vertices) {
      g.layer_t0[c.layer] = std::min(g.layer_t0[c.layer], v[0]);
      g.layer_t1[c.layer] = std::max(g.layer_t1[c.layer], v[0]);
    }
  }
  return g;
}

SpaceTimeGrid load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_grid(in);
}

}  // namespace stlw
