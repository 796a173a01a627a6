#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divdfa/dfa.hpp"
#include "divdfa/formula.hpp"

namespace divdfa {

/// A DFA plus optional per-state labels (empty, or one per state).
struct DfaDocument {
  Dfa dfa;
  std::vector<std::string> labels;
};

enum class DfaFormat { kText, kDot, kAtt };

/// "text" | "dot" | "att"; throws std::invalid_argument otherwise.
DfaFormat parse_format_name(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Native line-oriented format:
///   states N / alphabet B / start S / accept s1 s2 ... /
///   one "trans SRC SYM DST" per edge, '#' comment lines.
/// Labels, when present, are emitted as comments and not round-tripped.
///
/// AT&T-style format: "src<TAB>dst<TAB>symbol" transition lines (the start
/// state's lines first), final states as bare "state" lines; newline
/// terminated, no trailing blank line.
///
/// DOT output is presentational only and cannot be parsed back.
std::string serialize(const DfaDocument& doc, DfaFormat format);

/// Totality is validated on load; errors carry 1-based line numbers.
DfaDocument parse(std::istream& in, DfaFormat format);
DfaDocument parse_string(const std::string& text, DfaFormat format);

/// Digit-string text encoding: for base <= 36 compact alphanumeric
/// (0-9 then a-z, case-insensitive); for any base, comma-separated decimal
/// symbol values. A comma in the text (or base > 36) selects the latter.
DigitString parse_digits(std::string_view text, std::uint64_t base);

/// Aligned table of the breakdown rows with the
/// "A0=.. laminf=.. f=.." footer and the upper-bounds line.
std::string render_breakdown(const FormulaBreakdown& bd);

/// The fixed-k pattern table: rows z, k = x*y^z, f_b(k), successive
/// differences (the last difference needs f at z_max+1). Throws
/// CapacityError naming the first z whose k overflows 64 bits.
std::string render_pattern(std::uint64_t base, std::uint64_t x,
                           std::uint64_t y, std::uint32_t z_max);

}  // namespace divdfa
