#include "divdfa/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include "divdfa/arith.hpp"

namespace divdfa {

DfaFormat parse_format_name(std::string_view name) {
  if (name == "text") return DfaFormat::kText;
  if (name == "dot") return DfaFormat::kDot;
  if (name == "att") return DfaFormat::kAtt;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected text, dot or att)");
}

namespace {

std::uint64_t parse_number(std::string_view token, int line) {
  std::uint64_t value = 0;
  const auto* begin = token.data();
  const auto* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("number '" + std::string(token) + "' exceeds 64 bits",
                     line);
  if (ec != std::errc() || ptr != end || token.empty())
    throw ParseError("expected a number, got '" + std::string(token) + "'",
                     line);
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string serialize_text(const DfaDocument& doc) {
  const Dfa& dfa = doc.dfa;
  std::string out;
  out += "states " + std::to_string(dfa.num_states()) + '\n';
  out += "alphabet " + std::to_string(dfa.alphabet_size()) + '\n';
  out += "start " + std::to_string(dfa.start()) + '\n';
  out += "accept";
  for (State s : dfa.accepting_states()) out += ' ' + std::to_string(s);
  out += '\n';
  if (!doc.labels.empty()) {
    for (State s = 0; s < dfa.num_states(); ++s)
      out += "# state " + std::to_string(s) + ": " + doc.labels[s] + '\n';
  }
  for (State s = 0; s < dfa.num_states(); ++s)
    for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c)
      out += "trans " + std::to_string(s) + ' ' + std::to_string(c) + ' ' +
             std::to_string(dfa.next(s, c)) + '\n';
  return out;
}

DfaDocument parse_text(std::istream& in) {
  std::string raw;
  int line_no = 0;

  // Header fields must appear in order before any transition.
  const char* expected[] = {"states", "alphabet", "start", "accept"};
  std::size_t header_at = 0;
  std::uint64_t num_states = 0, alphabet = 0, start = 0;
  std::vector<State> accept_list;
  struct Edge {
    std::uint64_t src, sym, dst;
    int line;
  };
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto fields = split_ws(raw);
    if (fields.empty()) continue;
    if (fields[0].front() == '#') continue;
    const std::string_view keyword = fields[0];
    if (keyword == "trans") {
      if (header_at < 4)
        throw ParseError("transition before a complete header", line_no);
      if (fields.size() != 4)
        throw ParseError("trans takes SRC SYM DST", line_no);
      edges.push_back({parse_number(fields[1], line_no),
                       parse_number(fields[2], line_no),
                       parse_number(fields[3], line_no), line_no});
      continue;
    }
    if (header_at >= 4 || keyword != expected[header_at])
      throw ParseError("unexpected '" + std::string(keyword) + "'", line_no);
    switch (header_at) {
      case 0:
        if (fields.size() != 2) throw ParseError("states takes one value", line_no);
        num_states = parse_number(fields[1], line_no);
        if (num_states == 0) throw ParseError("states must be >= 1", line_no);
        break;
      case 1:
        if (fields.size() != 2)
          throw ParseError("alphabet takes one value", line_no);
        alphabet = parse_number(fields[1], line_no);
        if (alphabet == 0) throw ParseError("alphabet must be >= 1", line_no);
        break;
      case 2:
        if (fields.size() != 2) throw ParseError("start takes one value", line_no);
        start = parse_number(fields[1], line_no);
        if (start >= num_states)
          throw ParseError("start state " + std::to_string(start) +
                               " out of range",
                           line_no);
        break;
      case 3:
        for (std::size_t i = 1; i < fields.size(); ++i) {
          const std::uint64_t s = parse_number(fields[i], line_no);
          if (s >= num_states)
            throw ParseError("accepting state " + std::to_string(s) +
                                 " out of range",
                             line_no);
          accept_list.push_back(static_cast<State>(s));
        }
        break;
    }
    ++header_at;
  }
  if (header_at < 4) throw ParseError("incomplete header", line_no);
  if (num_states > 0xFFFFFFFFull || alphabet > 0xFFFFFFFFull)
    throw ParseError("automaton too large to materialize", 0);

  const auto n = static_cast<std::uint32_t>(num_states);
  const auto m = static_cast<std::uint32_t>(alphabet);
  std::vector<State> table(static_cast<std::size_t>(n) * m);
  std::vector<char> filled(table.size(), 0);
  for (const Edge& e : edges) {
    if (e.src >= n)
      throw ParseError("source state " + std::to_string(e.src) + " out of range",
                       e.line);
    if (e.sym >= m)
      throw ParseError("symbol " + std::to_string(e.sym) + " out of range",
                       e.line);
    if (e.dst >= n)
      throw ParseError("target state " + std::to_string(e.dst) + " out of range",
                       e.line);
    const std::size_t slot = static_cast<std::size_t>(e.src) * m + e.sym;
    if (filled[slot])
      throw ParseError("duplicate transition for state " +
                           std::to_string(e.src) + " on symbol " +
                           std::to_string(e.sym),
                       e.line);
    filled[slot] = 1;
    table[slot] = static_cast<State>(e.dst);
  }
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t c = 0; c < m; ++c)
      if (!filled[static_cast<std::size_t>(s) * m + c])
        throw ParseError("missing transition for state " + std::to_string(s) +
                             " on symbol " + std::to_string(c),
                         0);

  std::vector<bool> accepting(n, false);
  for (State s : accept_list) {
    if (accepting[s])
      throw ParseError("duplicate accepting state " + std::to_string(s), 0);
    accepting[s] = true;
  }
  return {Dfa(n, m, static_cast<State>(start), std::move(table),
              std::move(accepting)),
          {}};
}

std::string serialize_att(const Dfa& dfa) {
  std::string out;
  auto emit_state = [&](State s) {
    for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c)
      out += std::to_string(s) + '\t' + std::to_string(dfa.next(s, c)) + '\t' +
             std::to_string(c) + '\n';
  };
  emit_state(dfa.start());  // AT&T convention: first line names the start
  for (State s = 0; s < dfa.num_states(); ++s)
    if (s != dfa.start()) emit_state(s);
  for (State s : dfa.accepting_states()) out += std::to_string(s) + '\n';
  return out;
}

DfaDocument parse_att(std::istream& in) {
  std::string raw;
  int line_no = 0;
  struct Edge {
    std::uint64_t src, dst, sym;
    int line;
  };
  std::vector<Edge> edges;
  std::vector<std::pair<std::uint64_t, int>> finals;
  bool have_start = false;
  std::uint64_t start = 0;
  std::uint64_t max_state = 0, max_sym = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    const auto fields = split_on(raw, '\t');
    if (fields.size() == 3) {
      Edge e{parse_number(fields[0], line_no), parse_number(fields[1], line_no),
             parse_number(fields[2], line_no), line_no};
      if (!have_start) {
        have_start = true;
        start = e.src;
      }
      max_state = std::max({max_state, e.src, e.dst});
      max_sym = std::max(max_sym, e.sym);
      edges.push_back(e);
    } else if (fields.size() == 1) {
      const std::uint64_t s = parse_number(fields[0], line_no);
      max_state = std::max(max_state, s);
      finals.emplace_back(s, line_no);
    } else {
      throw ParseError("expected 'src<TAB>dst<TAB>symbol' or a final state",
                       line_no);
    }
  }
  if (!have_start) throw ParseError("no transitions found", line_no);
  if (max_state >= 0xFFFFFFFFull || max_sym >= 0xFFFFFFFFull)
    throw ParseError("automaton too large to materialize", 0);

  const auto n = static_cast<std::uint32_t>(max_state) + 1;
  const auto m = static_cast<std::uint32_t>(max_sym) + 1;
  std::vector<State> table(static_cast<std::size_t>(n) * m);
  std::vector<char> filled(table.size(), 0);
  for (const Edge& e : edges) {
    const std::size_t slot = static_cast<std::size_t>(e.src) * m + e.sym;
    if (filled[slot])
      throw ParseError("duplicate transition for state " +
                           std::to_string(e.src) + " on symbol " +
                           std::to_string(e.sym),
                       e.line);
    filled[slot] = 1;
    table[slot] = static_cast<State>(e.dst);
  }
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t c = 0; c < m; ++c)
      if (!filled[static_cast<std::size_t>(s) * m + c])
        throw ParseError("missing transition for state " + std::to_string(s) +
                             " on symbol " + std::to_string(c),
                         0);
  std::vector<bool> accepting(n, false);
  for (const auto& [s, line] : finals) {
    if (accepting[s])
      throw ParseError("duplicate final state " + std::to_string(s), line);
    accepting[s] = true;
  }
  return {Dfa(n, m, static_cast<State>(start), std::move(table),
              std::move(accepting)),
          {}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string serialize_dot(const DfaDocument& doc) {
  const Dfa& dfa = doc.dfa;
  std::string out = "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  __start [shape=point];\n";
  out += "  __start -> " + std::to_string(dfa.start()) + ";\n";
  for (State s = 0; s < dfa.num_states(); ++s) {
    std::vector<std::string> attrs;
    if (dfa.is_accepting(s)) attrs.push_back("shape=doublecircle");
    if (!doc.labels.empty())
      attrs.push_back("label=\"" + std::to_string(s) + ": " +
                      dot_escape(doc.labels[s]) + "\"");
    if (attrs.empty()) continue;
    out += "  " + std::to_string(s) + " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      if (i > 0) out += ", ";
      out += attrs[i];
    }
    out += "];\n";
  }
  for (State s = 0; s < dfa.num_states(); ++s) {
    std::map<State, std::string> merged;  // dst -> comma-joined symbols
    for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c) {
      std::string& syms = merged[dfa.next(s, c)];
      if (!syms.empty()) syms += ',';
      syms += std::to_string(c);
    }
    for (const auto& [dst, syms] : merged)
      out += "  " + std::to_string(s) + " -> " + std::to_string(dst) +
             " [label=\"" + syms + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string serialize(const DfaDocument& doc, DfaFormat format) {
  if (!doc.labels.empty() && doc.labels.size() != doc.dfa.num_states())
    throw std::invalid_argument("labels must cover all states");
  switch (format) {
    case DfaFormat::kText:
      return serialize_text(doc);
    case DfaFormat::kAtt:
      return serialize_att(doc.dfa);
    case DfaFormat::kDot:
      return serialize_dot(doc);
  }
  throw std::invalid_argument("bad format");
}

DfaDocument parse(std::istream& in, DfaFormat format) {
  switch (format) {
    case DfaFormat::kText:
      return parse_text(in);
    case DfaFormat::kAtt:
      return parse_att(in);
    case DfaFormat::kDot:
      throw std::invalid_argument("dot output is presentational and cannot be parsed");
  }
  throw std::invalid_argument("bad format");
}

DfaDocument parse_string(const std::string& text, DfaFormat format) {
  std::istringstream in(text);
  return parse(in, format);
}

DigitString parse_digits(std::string_view text, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  DigitString digits;
  if (text.empty()) return digits;
  const bool csv = base > 36 || text.find(',') != std::string_view::npos;
  if (csv) {
    for (std::string_view token : split_on(text, ',')) {
      if (token.empty())
        throw std::invalid_argument("empty digit in comma-separated input");
      std::uint64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("bad digit token '" + std::string(token) +
                                    "'");
      if (value >= base)
        throw std::invalid_argument("digit " + std::to_string(value) +
                                    " out of range for base " +
                                    std::to_string(base));
      digits.push_back(value);
    }
    return digits;
  }
  for (char ch : text) {
    std::uint64_t value;
    if (ch >= '0' && ch <= '9')
      value = static_cast<std::uint64_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'z')
      value = static_cast<std::uint64_t>(ch - 'a') + 10;
    else if (ch >= 'A' && ch <= 'Z')
      value = static_cast<std::uint64_t>(ch - 'A') + 10;
    else
      throw std::invalid_argument(std::string("bad digit character '") + ch +
                                  "'");
    if (value >= base)
      throw std::invalid_argument(std::string("digit '") + ch +
                                  "' out of range for base " +
                                  std::to_string(base));
    digits.push_back(value);
  }
  return digits;
}

namespace {

std::string render_columns(const std::vector<std::string>& headers,
                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += "  ";
      out.append(width[c] - cells[c].size(), ' ');
      out += cells[c];
    }
    out += '\n';
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  return out;
}

}  // namespace

std::string render_breakdown(const FormulaBreakdown& bd) {
  std::vector<std::vector<std::string>> rows;
  for (std::uint32_t alpha = 0; alpha <= bd.alpha_max; ++alpha) {
    const BreakdownRow& r = bd.rows[alpha];
    rows.push_back({std::to_string(alpha), std::to_string(r.lam_bk),
                    std::to_string(r.lam_kb), std::to_string(r.diff),
                    std::to_string(r.chosen)});
  }
  std::string out = render_columns(
      {"alpha", "lam(b^a,k)", "lam(k,b^a)", "diff", "chosen"}, rows);
  out += "A0=" + std::to_string(bd.a_zero) +
         " laminf=" + std::to_string(bd.lam_k_binf) +
         " f=" + std::to_string(bd.f) + '\n';
  const auto bounds = upper_bounds(bd.spec);
  out += "bounds " + std::to_string(bounds[0]) + ' ' +
         std::to_string(bounds[1]) + ' ' + std::to_string(bounds[2]) + '\n';
  return out;
}

std::string render_pattern(std::uint64_t base, std::uint64_t x,
                           std::uint64_t y, std::uint32_t z_max) {
  if (x < 1 || y < 1) throw std::invalid_argument("x and y must be >= 1");
  DivSpec probe{base, 1};
  probe.validate();

  // f at z_max + 1 feeds the last difference.
  std::vector<std::uint64_t> k_of, f_of;
  std::uint64_t k = x;
  for (std::uint64_t z = 0; z <= static_cast<std::uint64_t>(z_max) + 1; ++z) {
    f_of.push_back(f_count({base, k}));
    k_of.push_back(k);
    if (z <= z_max && y > 1 && k > kUint64Max / y)
      throw CapacityError("x*y^z exceeds the 64-bit width at z=" +
                          std::to_string(z + 1));
    k = sat_mul(k, y);
  }

  std::vector<std::string> headers{"z"};
  std::vector<std::string> row_k{"k"}, row_f{"f"}, row_diff{"diff"};
  for (std::uint32_t z = 0; z <= z_max; ++z) {
    headers.push_back(std::to_string(z));
    row_k.push_back(std::to_string(k_of[z]));
    row_f.push_back(std::to_string(f_of[z]));
    row_diff.push_back(std::to_string(f_of[z + 1] - f_of[z]));
  }

  // Label column left-aligned, value columns right-aligned.
  std::vector<std::size_t> width(headers.size(), 0);
  const std::vector<const std::vector<std::string>*> lines{&headers, &row_k,
                                                           &row_f, &row_diff};
  for (const auto* line : lines)
    for (std::size_t c = 0; c < line->size(); ++c)
      width[c] = std::max(width[c], (*line)[c].size());
  std::string out;
  for (const auto* line : lines) {
    out += (*line)[0];
    out.append(width[0] - (*line)[0].size(), ' ');
    for (std::size_t c = 1; c < line->size(); ++c) {
      out += "  ";
      out.append(width[c] - (*line)[c].size(), ' ');
      out += (*line)[c];
    }
    out += '\n';
  }
  return out;
}

}  // namespace divdfa
