#pragma once

#include <iosfwd>
#include <string>

#include "fqc/geom.hpp"

namespace fqc {

/// File format: header line `q d [modulus coefficients, low degree first]`
/// (modulus present iff e > 1), then one point per line as d space-separated
/// integer codes. `#` starts a comment.
PointSet read_pointset(std::istream& in);
PointSet read_pointset_file(const std::string& path);

void write_pointset(std::ostream& out, const PointSet& E);
void write_pointset_file(const std::string& path, const PointSet& E);

}  // namespace fqc
