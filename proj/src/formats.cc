#include "nervekit/formats.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "nervekit/errors.h"

namespace nervekit {
namespace {

struct Line {
  int number;
  std::string text;   // comment removed, trimmed
  bool comment_only;  // had a '#' and nothing else
};

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0;
  int number = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    const auto hash = raw.find('#');
    const bool has_comment = hash != std::string_view::npos;
    std::string body = trim(raw.substr(0, hash));
    out.push_back({number, body, has_comment && body.empty()});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& why) {
  throw InputError("line " + std::to_string(line) + ": " + why);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int64_t to_int(const std::string& s, int line) {
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return value;
}

// Reads "key=<int>" from the first meaningful line and returns the rest.
int header(const std::vector<Line>& lines, std::size_t& i, const std::string& key) {
  while (i < lines.size() && (lines[i].comment_only || lines[i].text.empty())) ++i;
  if (i == lines.size()) throw InputError("missing '" + key + "=' header");
  const std::string& t = lines[i].text;
  if (t.rfind(key + "=", 0) != 0) fail(lines[i].number, "expected '" + key + "=<int>'");
  const int64_t value = to_int(trim(t.substr(key.size() + 1)), lines[i].number);
  if (value < 0 || value > kMaxVertices) fail(lines[i].number, key + " out of range");
  ++i;
  return static_cast<int>(value);
}

Face parse_face(const std::vector<std::string>& toks, std::size_t from, std::size_t to, int n,
                int line) {
  Face f;
  for (std::size_t k = from; k < to; ++k) {
    const int64_t v = to_int(toks[k], line);
    if (v < 1 || v > n) fail(line, "vertex " + toks[k] + " outside [" + std::to_string(n) + "]");
    f = f.with(static_cast<Vertex>(v));
  }
  return f;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  const int n = header(lines, i, "n");
  std::vector<Face> facets;
  for (; i < lines.size(); ++i) {
    if (lines[i].comment_only) continue;
    const auto toks = tokens(lines[i].text);
    facets.push_back(parse_face(toks, 0, toks.size(), n, lines[i].number));
  }
  return SimplicialComplex::from_facets(n, facets);
}

std::string format_complex(const SimplicialComplex& k) {
  std::string out = "n=" + std::to_string(k.n()) + "\n";
  for (Face f : k.facets()) out += to_string(f) + "\n";
  return out;
}

CollapseCertificate parse_certificate(std::string_view text) {
  CollapseCertificate cert;
  for (const Line& line : split_lines(text)) {
    if (line.text.empty()) continue;
    const auto toks = tokens(line.text);
    std::size_t split = 0;
    while (split < toks.size() && toks[split] != "facet:") ++split;
    if (toks.empty() || toks[0] != "free:" || split == toks.size()) {
      fail(line.number, "expected 'free: <verts> facet: <verts>'");
    }
    cert.steps.push_back({parse_face(toks, 1, split, kMaxVertices, line.number),
                          parse_face(toks, split + 1, toks.size(), kMaxVertices, line.number)});
  }
  int d = 0;
  for (const auto& s : cert.steps) d = std::max(d, s.free_face.size());
  cert.d = d;
  return cert;
}

std::string format_certificate(const CollapseCertificate& cert) {
  std::string out;
  for (const auto& s : cert.steps) {
    const std::string sigma = to_string(s.free_face);
    out += "free: " + sigma + (sigma.empty() ? "" : " ") + "facet: " + to_string(s.facet) + "\n";
  }
  return out;
}

LineRep parse_line_rep(std::string_view text) {
  LineRep out;
  for (const Line& line : split_lines(text)) {
    if (line.text.empty()) continue;
    if (line.text == "-") {
      out.push_back(std::nullopt);
      continue;
    }
    const auto toks = tokens(line.text);
    if (toks.size() != 2) fail(line.number, "expected 'L R'");
    const Interval iv{to_int(toks[0], line.number), to_int(toks[1], line.number)};
    if (iv.left > iv.right) fail(line.number, "left endpoint exceeds right endpoint");
    out.push_back(iv);
  }
  if (out.size() > kMaxVertices) throw InputError("more than 32 intervals");
  return out;
}

IntervalRep parse_intervals(std::string_view text) {
  std::vector<Interval> out;
  for (const auto& iv : parse_line_rep(text)) {
    if (!iv) throw InputError("'-' is only allowed in split-construction inputs");
    out.push_back(*iv);
  }
  return IntervalRep(std::move(out));
}

std::string format_intervals(const IntervalRep& rep) {
  std::string out;
  for (const Interval& iv : rep.intervals()) {
    out += std::to_string(iv.left) + " " + std::to_string(iv.right) + "\n";
  }
  return out;
}

Poset parse_poset(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  const int n = header(lines, i, "n");
  std::vector<std::pair<Vertex, Vertex>> rel;
  for (; i < lines.size(); ++i) {
    if (lines[i].text.empty()) continue;
    const auto toks = tokens(lines[i].text);
    if (toks.size() != 3 || toks[1] != "<") fail(lines[i].number, "expected 'i < j'");
    const int64_t a = to_int(toks[0], lines[i].number);
    const int64_t b = to_int(toks[2], lines[i].number);
    if (a < 1 || b < 1 || a > n || b > n) fail(lines[i].number, "element outside [n]");
    rel.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Poset::from_relations(n, rel);
}

std::string format_poset(const Poset& p) {
  std::string out = "n=" + std::to_string(p.n()) + "\n";
  for (auto [a, b] : p.cover_relations()) {
    out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  const int n = header(lines, i, "n");
  Graph g(n);
  for (; i < lines.size(); ++i) {
    if (lines[i].text.empty()) continue;
    const auto toks = tokens(lines[i].text);
    if (toks.size() != 2) fail(lines[i].number, "expected 'u v'");
    const int64_t u = to_int(toks[0], lines[i].number);
    const int64_t v = to_int(toks[1], lines[i].number);
    if (u < 1 || v < 1 || u > n || v > n || u == v) fail(lines[i].number, "bad edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Representation parse_representation(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].text.empty()) ++i;
  if (i == lines.size() || lines[i].text.rfind("d=", 0) != 0) {
    throw InputError("missing 'd=' header");
  }
  const int64_t d = to_int(trim(lines[i].text.substr(2)), lines[i].number);
  if (d < 1 || d > 16) fail(lines[i].number, "dimension out of range");
  ++i;
  Representation rep;
  rep.dim = static_cast<int>(d);
  std::vector<std::vector<Point>> points;
  for (; i < lines.size(); ++i) {
    const std::string& t = lines[i].text;
    if (t.empty()) continue;
    if (t.rfind("set ", 0) == 0) {
      if (t.back() != ':') fail(lines[i].number, "expected 'set <name>:'");
      const std::string name = trim(std::string_view(t).substr(4, t.size() - 5));
      if (name.empty()) fail(lines[i].number, "empty set name");
      rep.names.push_back(name);
      points.emplace_back();
      continue;
    }
    if (points.empty()) fail(lines[i].number, "point before the first 'set' block");
    const auto toks = tokens(t);
    if (static_cast<int64_t>(toks.size()) != d) {
      fail(lines[i].number, "expected " + std::to_string(d) + " coordinates");
    }
    Point p;
    try {
      for (const auto& tok : toks) p.push_back(parse_rational(tok));
    } catch (const InputError& e) {
      fail(lines[i].number, e.what());
    }
    points.back().push_back(std::move(p));
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].empty()) throw InputError("set '" + rep.names[k] + "' has no points");
    rep.sets.emplace_back(rep.dim, std::move(points[k]));
  }
  validate(rep);
  return rep;
}

std::string format_representation(const Representation& rep) {
  validate(rep);
  std::string out = "d=" + std::to_string(rep.dim) + "\n";
  for (int k = 0; k < rep.size(); ++k) {
    out += "set " + (rep.names.empty() ? std::to_string(k + 1) : rep.names[k]) + ":\n";
    for (const Point& p : rep.sets[k].points()) {
      for (std::size_t t = 0; t < p.size(); ++t) {
        out += (t ? " " : "") + format_rational(p[t]);
      }
      out += "\n";
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace nervekit
