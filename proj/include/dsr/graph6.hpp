#pragma once

#include <string>
#include <string_view>

#include "dsr/graph.hpp"

namespace dsr {

class ParseError : public Error {
public:
    using Error::Error;
};

// graph6: header byte n+63 (or '~' plus three bytes for 63 <= n <= 64 here),
// then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per
// byte, most significant bit first, zero padded, each byte offset by 63.
// A leading ">>graph6<<" marker and trailing CR/LF are tolerated.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

} // namespace dsr
