#ifndef NICETURAN_NOTATION_HPP
#define NICETURAN_NOTATION_HPP

#include "niceturan/pattern.hpp"
#include "niceturan/symmetrize.hpp"

#include <string>

namespace niceturan
{
    /// Pattern names used on the command line and in Python:
    ///   K(p1,...,pr)  complete multipartite     Kn   complete graph
    ///   Pk            path on k vertices        Ck   cycle
    ///   Bt            book with t pages         theta(p,len)
    /// Anything else is read as graph6. Throws ParseError.
    auto parse_pattern(const std::string & text) -> Pattern;

    /// Objective text such as "1 * nice(K(2,2); k=2) + 1/2 * plain(K(1,1,1))".
    /// A missing weight means 1. Throws ParseError, or std::invalid_argument
    /// for terms the objective rejects.
    auto parse_objective(const std::string & text) -> Objective;
}

#endif
