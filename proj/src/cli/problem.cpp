#include "germforge/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "germforge/error.hpp"
#include "germforge/parse.hpp"

namespace germforge {

namespace {

struct Pos {
  int line = 1;
  int column = 1;
};

/// A statement's text between the previous ';' and the next one, with the
/// position of every character kept so errors point into the file.
struct Statement {
  std::string text;
  std::vector<Pos> pos;
  Pos end;
};

std::vector<Statement> split_statements(std::string_view src) {
  std::vector<Statement> out;
  Statement cur;
  Pos p;
  bool comment = false;
  for (char c : src) {
    if (comment) {
      if (c == '\n') comment = false;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      cur.end = p;
      out.push_back(std::move(cur));
      cur = {};
    } else {
      cur.text += c;
      cur.pos.push_back(p);
    }
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  bool blank = std::all_of(cur.text.begin(), cur.text.end(), [](unsigned char c) { return std::isspace(c); });
  if (!blank) {
    auto first = std::find_if(cur.text.begin(), cur.text.end(), [](unsigned char c) { return !std::isspace(c); });
    Pos at = cur.pos[static_cast<std::size_t>(first - cur.text.begin())];
    throw ParseError(ErrorCode::SyntaxError, "statement is missing its ';'", at.line, at.column);
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Statement& s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.text.size() && std::isspace(static_cast<unsigned char>(s_.text[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.text.size();
  }
  Pos here() const { return i_ < s_.pos.size() ? s_.pos[i_] : s_.end; }

  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const {
    Pos p = here();
    throw ParseError(code, msg, p.line, p.column);
  }

  bool at_ident() {
    skip_space();
    return i_ < s_.text.size() && std::isalpha(static_cast<unsigned char>(s_.text[i_]));
  }
  std::string ident() {
    skip_space();
    if (!at_ident()) fail("expected an identifier");
    std::string out;
    while (i_ < s_.text.size() && (std::isalnum(static_cast<unsigned char>(s_.text[i_])) || s_.text[i_] == '_'))
      out += s_.text[i_++];
    return out;
  }
  /// Option keys may contain dashes: theta-mode, degree-bound.
  std::string key() {
    std::string out = ident();
    while (i_ < s_.text.size() && (std::isalnum(static_cast<unsigned char>(s_.text[i_])) || s_.text[i_] == '_' ||
                                   s_.text[i_] == '-'))
      out += s_.text[i_++];
    return out;
  }
  void expect(char c) {
    skip_space();
    if (i_ >= s_.text.size() || s_.text[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  /// Remainder of the statement, with its start position.
  std::pair<std::string, Pos> rest() {
    skip_space();
    Pos p = here();
    std::string out = s_.text.substr(i_);
    i_ = s_.text.size();
    return {out, p};
  }
  /// Comma-separated pieces at parenthesis depth zero.
  std::vector<std::pair<std::string, Pos>> list() {
    std::vector<std::pair<std::string, Pos>> out;
    skip_space();
    std::size_t start = i_;
    int depth = 0;
    auto flush = [&](std::size_t end) {
      std::size_t b = start;
      while (b < end && std::isspace(static_cast<unsigned char>(s_.text[b]))) ++b;
      if (b == end) {
        Pos p = b < s_.pos.size() ? s_.pos[b] : s_.end;
        throw ParseError(ErrorCode::SyntaxError, "empty list entry", p.line, p.column);
      }
      out.push_back({s_.text.substr(b, end - b), s_.pos[b]});
    };
    for (; i_ < s_.text.size(); ++i_) {
      char c = s_.text[i_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        flush(i_);
        start = i_ + 1;
      }
    }
    flush(i_);
    return out;
  }

 private:
  const Statement& s_;
  std::size_t i_ = 0;
};

}  // namespace

ProblemFile parse_problem(std::string_view text, const MonomialOrder& order) {
  ProblemFile out;
  std::set<std::string> names;
  auto declare = [&](Cursor& c, const std::string& name) {
    if (!names.insert(name).second) c.fail("duplicate name '" + name + "'", ErrorCode::UnknownName);
    if (out.ring && out.ring->index_of(name)) c.fail("name '" + name + "' is a ring variable", ErrorCode::UnknownName);
  };
  for (const auto& st : split_statements(text)) {
    Cursor c(st);
    if (c.done()) continue;
    Pos kw_pos = c.here();
    std::string kw = c.ident();
    if (kw != "ring" && kw != "option" && !out.ring)
      throw ParseError(ErrorCode::SyntaxError, "'" + kw + "' before the ring declaration", kw_pos.line, kw_pos.column);
    if (kw == "ring") {
      if (out.ring) throw ParseError(ErrorCode::SyntaxError, "second ring declaration", kw_pos.line, kw_pos.column);
      std::vector<std::string> vars;
      while (!c.done()) {
        Pos p = c.here();
        auto v = c.ident();
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
          throw ParseError(ErrorCode::SyntaxError, "duplicate variable '" + v + "'", p.line, p.column);
        vars.push_back(v);
      }
      if (vars.empty()) c.fail("ring needs at least one variable");
      out.ring = Ring::make(std::move(vars));
    } else if (kw == "ideal") {
      auto name = c.ident();
      declare(c, name);
      c.expect('=');
      std::vector<Polynomial> gens;
      for (auto& [t, p] : c.list()) gens.push_back(parse_poly(t, out.ring, p.line, p.column));
      out.ideals.emplace(name, Ideal(out.ring, std::move(gens), order));
      out.ideal_names.push_back(name);
    } else if (kw == "poly") {
      auto name = c.ident();
      declare(c, name);
      c.expect('=');
      auto [t, p] = c.rest();
      if (t.empty()) c.fail("expected an expression");
      out.polys.emplace(name, parse_poly(t, out.ring, p.line, p.column));
      out.poly_names.push_back(name);
    } else if (kw == "unfolding") {
      auto name = c.ident();
      declare(c, name);
      Pos pp = c.here();
      if (c.ident() != "params") throw ParseError(ErrorCode::SyntaxError, "expected 'params'", pp.line, pp.column);
      auto vars = out.ring->names();
      std::vector<std::size_t> params;
      while (c.at_ident()) {
        Pos p = c.here();
        auto v = c.ident();
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
          throw ParseError(ErrorCode::SyntaxError, "parameter '" + v + "' clashes with a variable", p.line, p.column);
        params.push_back(vars.size());
        vars.push_back(v);
      }
      c.expect('=');
      auto total = Ring::make(std::move(vars));
      auto [t, p] = c.rest();
      if (t.empty()) c.fail("expected an expression");
      out.unfoldings.emplace(name, Unfolding(total, std::move(params), parse_poly(t, total, p.line, p.column)));
      out.unfolding_names.push_back(name);
    } else if (kw == "option") {
      Pos kp = c.here();
      auto key = c.key();
      c.expect('=');
      auto [t, p] = c.rest();
      auto e = t.find_last_not_of(" \t\r\n");
      if (e == std::string::npos) throw ParseError(ErrorCode::SyntaxError, "option '" + key + "' has no value", p.line, p.column);
      if (!out.options.emplace(key, t.substr(0, e + 1)).second)
        throw ParseError(ErrorCode::SyntaxError, "option '" + key + "' set twice", kp.line, kp.column);
    } else {
      throw ParseError(ErrorCode::SyntaxError, "unknown statement '" + kw + "'", kw_pos.line, kw_pos.column);
    }
  }
  if (!out.ring) throw ParseError(ErrorCode::SyntaxError, "missing ring declaration", 1, 1);
  return out;
}

}  // namespace germforge
