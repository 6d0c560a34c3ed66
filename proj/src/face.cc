#include "nervekit/face.h"

#include <string>

#include "nervekit/errors.h"

namespace nervekit {

Face Face::of(std::span<const Vertex> vertices) {
  Face f;
  for (Vertex v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw InputError("vertex label " + std::to_string(v) + " outside 1..32");
    }
    f = f.with(v);
  }
  return f;
}

Face Face::of(std::initializer_list<Vertex> vertices) {
  return of(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string to_string(Face f) {
  std::string out;
  f.for_each([&](Vertex v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out;
}

}  // namespace nervekit
