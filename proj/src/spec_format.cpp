#include "nlfsr/spec_format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace nlfsr {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  unsigned line = 1;

  unsigned column() const { return static_cast<unsigned>(pos + 1); }

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column()) + ")",
                     line, column());
  }

  unsigned read_number() {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    unsigned long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<unsigned>(value);
  }

  void expect(char c) {
    skip_space();
    if (pos >= text.size() || peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

Monomial parse_term(Cursor& cur, unsigned n) {
  std::uint64_t mask = 0;
  for (;;) {
    cur.skip_space();
    if (cur.pos >= cur.text.size()) cur.fail("expected a factor");
    char c = cur.peek();
    if (c == '1') {
      ++cur.pos;  // the constant factor contributes nothing to the mask
    } else if (c == 'x') {
      ++cur.pos;
      unsigned idx = cur.read_number();
      if (idx >= n) cur.fail("variable index x" + std::to_string(idx) +
                             " out of range for n=" + std::to_string(n));
      mask |= std::uint64_t{1} << idx;
    } else {
      cur.fail(std::string("expected 'x<index>' or '1', got '") + c + "'");
    }
    cur.skip_space();
    if (cur.pos < cur.text.size() && cur.peek() == '*') {
      ++cur.pos;
      continue;
    }
    break;
  }
  return Monomial::from_mask(mask);
}

Anf parse_expr(Cursor& cur, unsigned n) {
  std::vector<Monomial> terms;
  for (;;) {
    terms.push_back(parse_term(cur, n));
    cur.skip_space();
    if (cur.pos < cur.text.size() && cur.peek() == '+') {
      ++cur.pos;
      continue;
    }
    break;
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  return Anf::from_terms(std::move(terms));
}

std::string_view strip_comment(std::string_view line) {
  std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Nlfsr parse_spec(std::string_view text) {
  std::optional<unsigned> n;
  std::map<unsigned, Anf> functions;
  std::map<unsigned, unsigned> defined_at;

  unsigned line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    std::string_view raw = text.substr(
        offset, end == std::string_view::npos ? text.size() - offset
                                              : end - offset);
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (!blank(line)) {
      Cursor cur{line, 0, line_no};
      cur.skip_space();
      char head = cur.peek();
      if (head == 'n') {
        ++cur.pos;
        cur.expect('=');
        unsigned value = cur.read_number();
        if (value < kMinLength || value > kMaxLength)
          cur.fail("n must be in [" + std::to_string(kMinLength) + ", " +
                   std::to_string(kMaxLength) + "]");
        if (n) cur.fail("duplicate n declaration");
        n = value;
        if (!cur.done()) cur.fail("unexpected trailing input");
      } else if (head == 'f') {
        if (!n) cur.fail("n must be declared before any feedback line");
        ++cur.pos;
        unsigned bit = cur.read_number();
        if (bit >= *n)
          cur.fail("bit f" + std::to_string(bit) + " out of range for n=" +
                   std::to_string(*n));
        if (functions.count(bit))
          cur.fail("duplicate definition of f" + std::to_string(bit) +
                   " (first at line " + std::to_string(defined_at[bit]) + ")");
        cur.expect('=');
        functions[bit] = parse_expr(cur, *n);
        defined_at[bit] = line_no;
      } else {
        cur.fail(std::string("expected 'n=' or 'f<bit>=', got '") + head +
                 "'");
      }
    }
    if (end == std::string_view::npos) break;
    offset = end + 1;
  }

  if (!n) throw ParseError("missing n declaration", line_no, 1);
  std::vector<Anf> g(*n);
  for (auto& [bit, f] : functions) {
    // lines give the full feedback; peel the shift tap off to get g_i
    g[bit] = f ^ Anf::var((bit + 1) % *n);
  }
  try {
    return Nlfsr::make(*n, std::move(g));
  } catch (const SingularityError& e) {
    unsigned line = defined_at.count(e.bit) ? defined_at[e.bit] : line_no;
    throw ParseError(std::string(e.what()) + " (line " + std::to_string(line) +
                         ")",
                     line, 1);
  }
}

std::string format_spec(const Nlfsr& r) {
  std::string out = "n=" + std::to_string(r.length()) + "\n";
  for (unsigned i = r.length(); i-- > 0;) {
    if (r.g(i).is_zero()) continue;
    Anf full = r.feedback(i);
    std::string body;
    bool first = true;
    for (Monomial t : full.terms()) {
      if (!first) body += " + ";
      body += t.to_string();
      first = false;
    }
    out += "f" + std::to_string(i) + " = " + body + "\n";
  }
  return out;
}

Monomial parse_monomial(std::string_view text, unsigned n) {
  Cursor cur{text, 0, 1};
  Monomial m = parse_term(cur, n);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return m;
}

Anf parse_anf(std::string_view text, unsigned n) {
  Cursor cur{text, 0, 1};
  return parse_expr(cur, n);
}

}  // namespace nlfsr
