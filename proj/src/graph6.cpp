#include "dsr/graph6.hpp"

namespace dsr {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kMarker = ">>graph6<<";

int decode_byte(char c, std::size_t pos)
{
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw ParseError("graph6: byte " + std::to_string(v) + " at offset " +
                         std::to_string(pos) + " outside 63..126");
    return v - kBias;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(kMarker))
        text.remove_prefix(kMarker.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty line");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6: eight-byte order header exceeds the 64-vertex cap");
        if (text.size() < 4)
            throw ParseError("graph6: truncated order header");
        for (std::size_t k = 1; k <= 3; ++k)
            n = (n << 6) | decode_byte(text[k], k);
        if (n < 63)
            throw ParseError("graph6: long header used for order " + std::to_string(n));
        pos = 4;
    } else {
        n = decode_byte(text[0], 0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxVertices));

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - pos < payload)
        throw ParseError("graph6: payload truncated, expected " + std::to_string(payload) +
                         " bytes, found " + std::to_string(text.size() - pos));
    if (text.size() - pos > payload)
        throw ParseError("graph6: " + std::to_string(text.size() - pos - payload) +
                         " trailing bytes after payload");

    std::vector<VertexMask> rows(n, 0);
    std::size_t k = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0)
                chunk = decode_byte(text[pos + k / 6], pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    // Validate payload bytes even when no bits were consumed from them.
    for (std::size_t b = pos; b < text.size(); ++b)
        decode_byte(text[b], b);
    return Graph::from_rows(std::move(rows));
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

} // namespace dsr
