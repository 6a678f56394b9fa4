#include "specex/graph6.hpp"

#include <stdexcept>

namespace specex {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 single-byte size form covers n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));

    // Upper triangle in column-major order, six bits per output byte.
    int bits = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            bits = (bits << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + bits));
                bits = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
    return out;
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    const unsigned char size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte == 126) throw std::invalid_argument("multi-byte graph6 size form not supported");
    if (size_byte < 63 || size_byte > 125) throw std::invalid_argument("graph6 size byte out of range");
    const int n = size_byte - 63;
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");

    const int needed_bits = n * (n - 1) / 2;
    const int needed_bytes = (needed_bits + 5) / 6;
    if (static_cast<int>(text.size()) - 1 < needed_bytes)
        throw std::invalid_argument("graph6 bit stream truncated");
    if (static_cast<int>(text.size()) - 1 > needed_bytes)
        throw std::invalid_argument("trailing bytes after graph6 bit stream");

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            const unsigned char byte = static_cast<unsigned char>(text[1 + bit_index / 6]);
            if (byte < 63 || byte > 126) throw std::invalid_argument("malformed graph6 byte");
            const int value = byte - 63;
            if ((value >> (5 - bit_index % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // Padding bits must be zero.
    for (; bit_index < needed_bytes * 6; ++bit_index) {
        const unsigned char byte = static_cast<unsigned char>(text[1 + bit_index / 6]);
        if (byte < 63 || byte > 126) throw std::invalid_argument("malformed graph6 byte");
        if (((byte - 63) >> (5 - bit_index % 6)) & 1)
            throw std::invalid_argument("nonzero padding bits in graph6 stream");
    }
    return Graph::from_edges(n, edges);
}

}  // namespace specex
