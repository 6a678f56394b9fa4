#pragma once

#include <string>

#include "specex/graph.hpp"

namespace specex {

/// Standard graph6 text encoding (single-byte size form, n <= 62).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace specex
