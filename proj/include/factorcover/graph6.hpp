#ifndef FACTORCOVER_GRAPH6_HPP
#define FACTORCOVER_GRAPH6_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "factorcover/graph.hpp"

namespace fcover {

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { MalformedHeader, InvalidCharacter, LengthMismatch, TrailingBits, OrderTooLarge };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// newline are accepted.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

/// Reads one graph per non-blank line. Decode failures are rethrown as
/// std::runtime_error carrying the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace fcover

#endif  // FACTORCOVER_GRAPH6_HPP
