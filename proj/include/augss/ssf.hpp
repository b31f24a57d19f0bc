#pragma once

// SSF: the line-oriented text form of a finite augmented simplicial set.
//
//   ssf 1
//   set <name>
//   aug <e0> <e1> ...
//   gen <dim> <name>                          (dims >= 0, ascending)
//   face <gen> <i> = <collapsed|-> <target>   (one line per face)
//
// Printing is canonical ((dim, index) order everywhere); parse . print is
// the identity on canonical files.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "augss/sset.hpp"

namespace augss {

class ssf_error : public std::runtime_error {
public:
    ssf_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

AugSimplicialSet parse_ssf(std::istream& in);
AugSimplicialSet parse_ssf_text(const std::string& text);

std::string print_ssf(const AugSimplicialSet& X);

}  // namespace augss
