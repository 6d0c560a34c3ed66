#pragma once

#include <string>
#include <string_view>

#include "nervekit/collapse.h"
#include "nervekit/complex.h"
#include "nervekit/geometry.h"
#include "nervekit/graph.h"
#include "nervekit/interval.h"
#include "nervekit/poset.h"

// Plain-text formats. Every writer emits the canonical form its reader
// accepts, so write(read(write(x))) == write(x) byte for byte. `#` starts a
// comment everywhere. Readers throw InputError with a line number.
namespace nervekit {

// .cplx: "n=<int>", then one facet per line as vertex labels. A blank line is
// the empty facet, so {∅} is "n=3\n\n" while the void complex is "n=3\n".
SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& k);

// .collapse: one "free: <verts> facet: <verts>" line per step.
CollapseCertificate parse_certificate(std::string_view text);
std::string format_certificate(const CollapseCertificate& cert);

// .ivl: one "L R" pair per line. parse_line_rep also accepts "-" for a vertex
// without an interval.
IntervalRep parse_intervals(std::string_view text);
LineRep parse_line_rep(std::string_view text);
std::string format_intervals(const IntervalRep& rep);

// .poset: "n=<int>", then "i < j" lines; closure on read, covers on write.
Poset parse_poset(std::string_view text);
std::string format_poset(const Poset& p);

// .edges: "n=<int>", then "u v" lines.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// .vrep: "d=<int>", then blocks "set <name>:" followed by one point per line
// with p/q coordinates.
Representation parse_representation(std::string_view text);
std::string format_representation(const Representation& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace nervekit
