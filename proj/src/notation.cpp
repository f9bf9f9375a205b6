#include "niceturan/notation.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph6.hpp"

#include <cctype>
#include <regex>

namespace niceturan
{
    namespace
    {
        auto strip(const std::string & text) -> std::string
        {
            std::string out;
            for (char c : text)
                if (! std::isspace(static_cast<unsigned char>(c)))
                    out.push_back(c);
            return out;
        }

        auto to_int(const std::string & digits, const std::string & context) -> int
        {
            if (digits.empty() || digits.size() > 4)
                throw ParseError("bad number in '" + context + "'");
            return std::stoi(digits);
        }

        auto parse_int_list(const std::string & body, const std::string & context) -> std::vector<int>
        {
            std::vector<int> values;
            std::size_t start = 0;
            while (start <= body.size()) {
                auto comma = body.find(',', start);
                auto item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (item.empty() || ! std::all_of(item.begin(), item.end(), ::isdigit))
                    throw ParseError("bad list in '" + context + "'");
                values.push_back(to_int(item, context));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
            return values;
        }

        // Splits on separator at parenthesis depth zero.
        auto split_top_level(const std::string & text, char separator) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            int depth = 0;
            std::string current;
            for (char c : text) {
                if (c == '(')
                    ++depth;
                else if (c == ')')
                    --depth;
                if (depth < 0)
                    throw ParseError("unbalanced parentheses in '" + text + "'");
                if (c == separator && depth == 0) {
                    parts.push_back(current);
                    current.clear();
                }
                else
                    current.push_back(c);
            }
            if (depth != 0)
                throw ParseError("unbalanced parentheses in '" + text + "'");
            parts.push_back(current);
            return parts;
        }
    }

    auto parse_pattern(const std::string & raw) -> Pattern
    {
        auto text = strip(raw);
        if (text.empty())
            throw ParseError("empty pattern");

        static const std::regex multipartite(R"(K\(([0-9,]+)\))");
        static const std::regex family(R"(([KPCB])([0-9]+))");
        static const std::regex theta(R"(theta\(([0-9]+),([0-9]+)\))");
        std::smatch m;
        try {
            if (std::regex_match(text, m, multipartite))
                return Pattern(complete_multipartite(parse_int_list(m[1], text)), text);
            if (std::regex_match(text, m, theta))
                return Pattern(theta_graph(to_int(m[1], text), to_int(m[2], text)), text);
            if (std::regex_match(text, m, family)) {
                int k = to_int(m[2], text);
                switch (text[0]) {
                    case 'K': return Pattern(complete_graph(k), text);
                    case 'P': return Pattern(path_graph(k), text);
                    case 'C': return Pattern(cycle_graph(k), text);
                    case 'B': return Pattern(book_graph(k), text);
                }
            }
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const std::exception & e) {
            throw ParseError("bad pattern '" + text + "': " + e.what());
        }

        auto g6 = text.starts_with("g6:") ? text.substr(3) : text;
        try {
            return Pattern(from_graph6(g6), text);
        }
        catch (const std::exception & e) {
            throw ParseError("unrecognised pattern '" + text + "' (" + e.what() + ")");
        }
    }

    auto parse_objective(const std::string & raw) -> Objective
    {
        auto text = strip(raw);
        if (text.empty())
            throw ParseError("empty objective");
        static const std::regex nice_term(R"(nice\((.+);k=([0-9]+)\))");
        static const std::regex plain_term(R"(plain\((.+)\))");

        Objective objective;
        for (const auto & term : split_top_level(text, '+')) {
            if (term.empty())
                throw ParseError("empty term in objective '" + text + "'");
            Rational weight = 1;
            std::string body = term;
            auto star = split_top_level(term, '*');
            if (star.size() == 2) {
                weight = parse_rational(star[0]);
                body = star[1];
            }
            else if (star.size() > 2)
                throw ParseError("bad term '" + term + "'");

            std::smatch m;
            if (std::regex_match(body, m, nice_term))
                objective.add_nice(weight, parse_pattern(m[1]), to_int(m[2], body));
            else if (std::regex_match(body, m, plain_term))
                objective.add_plain(weight, parse_pattern(m[1]));
            else
                throw ParseError("bad term '" + term + "', expected nice(H; k=K) or plain(H)");
        }
        return objective;
    }
}
