#include "fqc/pointset_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fqc {

namespace {

// Strips comments and returns the next non-blank line, or false at EOF.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return true;
  }
  return false;
}

}  // namespace

PointSet read_pointset(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("empty point-set file");
  std::istringstream header(line);
  std::uint64_t q;
  unsigned d;
  if (!(header >> q >> d)) throw std::runtime_error("bad point-set header");

  PointSet E;
  E.field = std::make_shared<Fq>(q);
  E.d = d;
  if (E.field->e() > 1) {
    std::vector<code_t> mod;
    std::uint64_t c;
    while (header >> c) mod.push_back(static_cast<code_t>(c));
    if (mod != E.field->modulus())
      throw std::runtime_error("point-set file uses an unsupported modulus");
  }

  while (next_line(in, line)) {
    std::istringstream row(line);
    Point pt;
    std::uint64_t c;
    while (row >> c) pt.push_back(static_cast<code_t>(c));
    if (pt.size() != d) throw std::runtime_error("point has wrong dimension");
    E.points.push_back(std::move(pt));
  }
  E.validate();
  return E;
}

PointSet read_pointset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_pointset(in);
}

void write_pointset(std::ostream& out, const PointSet& E) {
  out << E.F().q() << ' ' << E.d;
  if (E.F().e() > 1)
    for (code_t c : E.F().modulus()) out << ' ' << c;
  out << '\n';
  for (const Point& pt : E.points) {
    for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? " " : "") << pt[i];
    out << '\n';
  }
}

void write_pointset_file(const std::string& path, const PointSet& E) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_pointset(out, E);
}

}  // namespace fqc
