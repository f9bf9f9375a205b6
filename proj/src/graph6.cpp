#include "niceturan/graph6.hpp"
#include "niceturan/errors.hpp"

namespace niceturan
{
    auto to_graph6(const Graph & g) -> std::string
    {
        int n = g.order();
        std::string out;
        if (n <= 62)
            out.push_back(static_cast<char>(n + 63));
        else {
            out.push_back('~');
            out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
            out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
            out.push_back(static_cast<char>((n & 63) + 63));
        }

        int value = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(value + 63));
                    value = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((value << (6 - filled)) + 63));
        return out;
    }

    auto from_graph6(std::string_view text) -> Graph
    {
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("empty graph6 string");

        for (char c : text)
            if (c < 63 || c > 126)
                throw ParseError("graph6 byte out of range in '" + std::string(text) + "'");

        std::size_t pos = 0;
        long n;
        if (text[0] != '~') {
            n = text[0] - 63;
            pos = 1;
        }
        else {
            if (text.size() < 4 || text[1] == '~')
                throw ParseError("graph6 size prefix not supported for more than 64 vertices");
            n = (static_cast<long>(text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
            pos = 4;
        }
        if (n > max_vertices)
            throw ParseError("graph6 string has " + std::to_string(n) + " vertices, limit is 64");

        std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t expected = (bits + 5) / 6;
        if (text.size() - pos != expected)
            throw ParseError("graph6 body has wrong length for " + std::to_string(n) + " vertices");

        Graph g(static_cast<int>(n));
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = text[pos + k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    g.add_edge(i, j);
            }
        if (bits % 6 != 0) {
            int last = text.back() - 63;
            if (last & ((1 << (6 - bits % 6)) - 1))
                throw ParseError("graph6 padding bits must be zero");
        }
        return g;
    }
}
