#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grt/lie_series.hpp"

namespace grt {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  // Maps a generator name as written to the alphabet's spelling
  // (e.g. "t21" -> "t12"). Identity when empty.
  std::function<std::string(std::string_view)> canonicalize;
};

// Grammar (whitespace insignificant):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational ['*'] atom | rational | atom
//   atom     := generator | '[' expr ',' expr ']' | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//   generator:= letter (letter|digit|'_')*
// A bare rational term must be zero: the algebra has no degree-0 part.
LieSeries parse_lie(std::string_view text, const FreeLiePtr& algebra,
                    const ParseOptions& options = {});

// Lyndon normal form, terms in (degree, word) order, each basis element as a
// fully bracketed expression. "0" for the zero series.
std::string format_lie(const LieSeries& s);

// Standard bracketing of a Lyndon word, e.g. "[x,[x,y]]".
std::string bracketed(const FreeLie& algebra, const Word& w);

// {"alphabet":[...], "max_degree":N, "terms":[{"word":"xxy","coeff":"-1/3"}]}
nlohmann::json to_json(const LieSeries& s);
// Words are split into generator names by longest match.
LieSeries lie_from_json(const nlohmann::json& j);

}  // namespace grt
