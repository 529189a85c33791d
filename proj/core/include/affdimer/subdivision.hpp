#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "affdimer/arrangement.hpp"

namespace affdimer {

/// Crossing of two lines.
struct Vertex {
  RatVec2 point;                    // in [0,1)^2
  std::array<std::size_t, 2> line;  // line[0] < line[1]
  std::array<Rational, 2> t;        // parameter on each line
  /// Outgoing half-edges in counterclockwise order around the vertex.
  std::array<std::size_t, 4> out;
};

/// Piece of a line between consecutive crossings, running along +h.
struct Segment {
  std::size_t line;
  std::size_t from;  // vertex ids
  std::size_t to;
  Rational length;   // in units of h; 1 when the line has a single crossing
};

/// Half-edge 2*s runs along segment s in the direction of h, 2*s+1 against
/// it. The face of a half-edge lies on its left.
struct HalfEdge {
  std::size_t segment;
  int dir;  // +1 or -1
  std::size_t origin;
  std::size_t next;
  std::size_t face;

  std::size_t twin(std::size_t self) const { return self ^ 1u; }
};

struct Face {
  std::vector<std::size_t> half_edges;  // boundary walk, counterclockwise
};

/// Face complex of an arrangement in general position. Immutable.
class Subdivision {
 public:
  const Arrangement& arrangement() const { return arrangement_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Vertex ids on each line, ordered by parameter.
  const std::vector<std::vector<std::size_t>>& line_vertices() const { return line_vertices_; }

  std::size_t v() const { return vertices_.size(); }
  std::size_t e() const { return segments_.size(); }
  std::size_t f() const { return faces_.size(); }

  std::size_t head(std::size_t he) const { return half_edges_[he ^ 1u].origin; }
  /// Direction of travel of a half-edge as an integer vector (+-h).
  IntVec2 direction(std::size_t he) const;
  /// Slot (0..3) of an outgoing half-edge at its origin.
  int slot_of(std::size_t he) const;

  friend Subdivision build_subdivision(const Arrangement& a);

 private:
  Arrangement arrangement_;
  std::vector<Vertex> vertices_;
  std::vector<Segment> segments_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> line_vertices_;
};

/// Throws DegenerateArrangement if the input is not in general position and
/// InternalError if a structural self-check (degree, Euler) fails.
Subdivision build_subdivision(const Arrangement& a);

}  // namespace affdimer
