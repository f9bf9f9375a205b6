#ifndef NICETURAN_GRAPH6_HPP
#define NICETURAN_GRAPH6_HPP

#include "niceturan/graph.hpp"

#include <string>
#include <string_view>

namespace niceturan
{
    // graph6 without the optional ">>graph6<<" header. Vertex counts up to 62
    // use one size byte, 63 and 64 use the four byte "~" form.
    auto to_graph6(const Graph & g) -> std::string;

    // Accepts an optional ">>graph6<<" header and trailing newline. Throws
    // ParseError on malformed input or on more than 64 vertices.
    auto from_graph6(std::string_view text) -> Graph;
}

#endif
