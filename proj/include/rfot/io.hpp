#pragma once

#include <iosfwd>
#include <string>

#include "rfot/model.hpp"

namespace rfot {

// Line-oriented text formats. '#' starts a comment; tokens are separated by
// whitespace.
//
//   instance T=<int> gamma=<int> s=<vid> d=<vid>
//   vertex <vid>
//   edge <eid> <tail> <head> u=<rat|inf> tau=<int> delta=<int|inf>
//
//   triple path=<eid>,<eid>,... rate=<rat> a=<int> b=<int>
//   trpath path=<eid>,... rate=<rat>

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);

// A solution file holds triple lines, trpath lines, or both.
struct SolutionFile {
  TripleSolution triples;
  TemporallyRepeatedFlow repeated;

  bool is_repeated_only() const {
    return triples.triples.empty() && !repeated.rates.empty();
  }
};

SolutionFile read_solution(std::istream& in, const Instance& inst);
SolutionFile read_solution_file(const std::string& path, const Instance& inst);
void write_solution(std::ostream& out, const TripleSolution& sol, const Instance& inst);
void write_solution(std::ostream& out, const TemporallyRepeatedFlow& flow,
                    const Instance& inst);

}  // namespace rfot
