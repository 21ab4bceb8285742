#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mopiso/mop.hpp"
#include "mopiso/polygon.hpp"

namespace mopiso {

// MOP1: first line the order, then one "a b" line per chord, sorted.
Mop read_mop1(std::istream& in);
void write_mop1(std::ostream& out, const Mop& g);

// JSON mirror: {"n": int, "diagonals": [[a, b], ...]}.
Mop mop_from_json(const std::string& text);
std::string mop_to_json(const Mop& g);

// POLY1: first line the corner count, then one "x y" line per corner,
// counterclockwise.
SimplePolygon read_poly1(std::istream& in);
void write_poly1(std::ostream& out, const SimplePolygon& poly);

// Vertex sets: whitespace-separated indices.
std::vector<int> read_vertex_set(std::istream& in);
void write_vertex_set(std::ostream& out, const std::vector<int>& set);

// Sniffs JSON (leading '{') versus MOP1.
Mop read_mop_auto(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mopiso
