#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rado {

// Vertices are natural numbers. Witness construction for pairs drawn from
// [0,64) already needs ids up to 2^65, so a 64-bit id is not enough; 128 bits
// covers every value this toolkit can materialize.
using Vertex = unsigned __int128;

constexpr int kVertexBits = 128;

using VertexList = std::vector<Vertex>;

inline Vertex vpow2(unsigned k) { return Vertex(1) << k; }

std::string vertex_str(Vertex v);
std::optional<Vertex> parse_vertex(const std::string& s);

// Sorted, deduplicated copy.
VertexList sorted_unique(VertexList xs);

bool contains(const VertexList& sorted, Vertex v);

std::string list_str(const VertexList& xs);  // "{a,b,c}"

}  // namespace rado

// doctest and iostream-based diagnostics need a printer for __int128.
std::ostream& operator<<(std::ostream& os, unsigned __int128 v);
