#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscut/crosscut.hpp"
#include "crosscut/fpp.hpp"
#include "crosscut/morphisms.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

// Poset text format:
//
//   elements: a b c ...      (first non-comment line; whitespace-separated labels)
//   x < y                    (y covers x; one pair per line)
//   # comment                (blank lines are ignored)
//
// Labels may be brace groups such as "{0 1 3}"; a brace group is one token.
// Crosscut posets add a "side: U U D ..." line after the elements line.

/// Throws ParseError (with a 1-based line number) or CycleError.
Poset parse_poset(std::string_view text);

/// The side tags of a crosscut-poset text, if it has a "side:" line.
std::optional<std::vector<Side>> parse_sides(std::string_view text);

/// Elements line followed by the Hasse covers in lexicographic order.
std::string emit_poset(const Poset& p);
std::string emit_crosscut(const CrosscutPoset& cc);

/// Map text format: one "x -> y" line per source element, over labels.
OrderMap parse_map(std::string_view text, const Poset& source, const Poset& target);
std::string emit_map(const OrderMap& f);

struct DotOptions {
  std::string graph_name = "P";
  /// Put elements of equal height on the same rank.
  bool rank_by_height = true;
};

/// DOT digraph of the cover relation, drawn bottom-to-top.
std::string emit_dot(const Poset& p, const DotOptions& options = {});
/// As above; covers from a U node to a D node are drawn dashed and red.
std::string emit_dot(const CrosscutPoset& cc, const DotOptions& options = {});

/// "FPP: true (method=search)" plus the witness map when there is one.
std::string format_verdict(const FppVerdict& verdict);
std::string format_trace(const Poset& p, const DismantlingTrace& trace);

/// Splits a line into tokens; "{...}" groups count as one token.
std::vector<std::string> tokenize(std::string_view line);

}  // namespace crosscut
