#include "cotwist/exprlang.hpp"

#include <cctype>
#include <sstream>

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  // Reads a NAME token (including an optional bracketed argument suffix).
  std::string read_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= src.size() || !name_start(src[pos]))
      throw ParseError("expected a generator name", pos);
    while (pos < src.size() && name_char(src[pos])) ++pos;
    if (pos < src.size() && src[pos] == '[') {
      auto close = src.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated '['", pos);
      pos = close + 1;
    }
    return src.substr(start, pos - start);
  }
};

Expr parse_expr_inner(Lexer& lx);

Expr parse_atom(Lexer& lx) {
  lx.skip_ws();
  if (lx.peek() == '(') {
    ++lx.pos;
    Expr e = parse_expr_inner(lx);
    if (lx.peek() != ')') throw ParseError("expected ')'", lx.pos);
    ++lx.pos;
    return e;
  }
  std::size_t at = lx.pos;
  std::string name = lx.read_name();
  if (name == "o" || name == "x") throw ParseError("operator in atom position", at);
  Expr e;
  e.kind = Expr::Kind::Gen;
  e.name = std::move(name);
  return e;
}

// Peeks the next token; consumes it when it is the requested operator keyword.
bool eat_op(Lexer& lx, char op) {
  lx.skip_ws();
  if (lx.pos + 1 <= lx.src.size() && lx.pos < lx.src.size() && lx.src[lx.pos] == op) {
    std::size_t after = lx.pos + 1;
    bool standalone = after >= lx.src.size() || !Lexer::name_char(lx.src[after]);
    if (standalone) {
      lx.pos = after;
      return true;
    }
  }
  return false;
}

Expr parse_term(Lexer& lx) {
  Expr first = parse_atom(lx);
  std::vector<Expr> parts{std::move(first)};
  while (eat_op(lx, 'x')) parts.push_back(parse_atom(lx));
  if (parts.size() == 1) return std::move(parts[0]);
  Expr e;
  e.kind = Expr::Kind::Tensor;
  e.children = std::move(parts);
  return e;
}

Expr parse_expr_inner(Lexer& lx) {
  Expr first = parse_term(lx);
  std::vector<Expr> parts{std::move(first)};
  while (eat_op(lx, 'o')) parts.push_back(parse_term(lx));
  if (parts.size() == 1) return std::move(parts[0]);
  Expr e;
  e.kind = Expr::Kind::Compose;
  e.children = std::move(parts);
  return e;
}

}  // namespace

Expr parse_expr(const std::string& src) {
  Lexer lx{src};
  Expr e = parse_expr_inner(lx);
  if (!lx.eof()) throw ParseError("trailing input", lx.pos);
  return e;
}

std::string pretty(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Gen:
      return e.name;
    case Expr::Kind::Tensor: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " x ";
        const Expr& c = e.children[i];
        bool paren = c.kind != Expr::Kind::Gen;
        s += paren ? "(" + pretty(c) + ")" : pretty(c);
      }
      return s;
    }
    case Expr::Kind::Compose: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " o ";
        const Expr& c = e.children[i];
        bool paren = c.kind == Expr::Kind::Compose;
        s += paren ? "(" + pretty(c) + ")" : pretty(c);
      }
      return s;
    }
  }
  return {};
}

void Env::bind(const std::string& name, LinMap m) { table.insert_or_assign(name, std::move(m)); }

void Env::bind_space(const std::string& name, const Space& s) {
  spaces.insert_or_assign(name, s);
}

void Env::finalize() {
  for (const auto& [n, s] : spaces) {
    table.emplace("id[" + n + "]", LinMap::identity(s));
  }
  for (const auto& [na, sa] : spaces)
    for (const auto& [nb, sb] : spaces) {
      if (!(sa.field == sb.field)) continue;
      table.emplace("swap[" + na + "," + nb + "]", swap_map(sa, sb));
    }
}

const LinMap& Env::lookup(const std::string& name) const {
  auto it = table.find(name);
  if (it == table.end()) throw UnknownGenerator("unknown generator \"" + name + "\"");
  return it->second;
}

LinMap elaborate(const Expr& e, const Env& env) {
  switch (e.kind) {
    case Expr::Kind::Gen:
      return env.lookup(e.name);
    case Expr::Kind::Tensor: {
      LinMap acc = elaborate(e.children[0], env);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = kronecker(acc, elaborate(e.children[i], env));
      return acc;
    }
    case Expr::Kind::Compose: {
      LinMap acc = elaborate(e.children.back(), env);
      for (std::size_t i = e.children.size() - 1; i-- > 0;) {
        LinMap outer = elaborate(e.children[i], env);
        if (!outer.domain().same(acc.codomain()))
          throw SpaceMismatch("composition mismatch at sub-expression \"" +
                              pretty(e.children[i]) + "\"");
        acc = compose(outer, acc);
      }
      return acc;
    }
  }
  throw Error("unreachable");
}

LinMap elaborate(const std::string& src, const Env& env) {
  return elaborate(parse_expr(src), env);
}

CheckReport check_equation(const std::string& lhs, const std::string& rhs, const Env& env,
                           const std::string& name) {
  CheckReport rep;
  rep.add_equal(name.empty() ? lhs + " == " + rhs : name, elaborate(lhs, env),
                elaborate(rhs, env));
  return rep;
}

std::vector<EquationLine> parse_equation_file(const std::string& content) {
  std::vector<EquationLine> out;
  std::istringstream is(content);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    auto eq = line.find("==");
    if (eq == std::string::npos)
      throw ParseError("equation line " + std::to_string(lineno) + " lacks '=='", 0);
    out.push_back({line.substr(0, eq), line.substr(eq + 2), lineno});
  }
  return out;
}

CheckReport check_equation_file(const std::string& content, const Env& env) {
  CheckReport rep;
  for (const auto& ln : parse_equation_file(content)) {
    std::string name = "line " + std::to_string(ln.lineno);
    rep.add_equal(name + ": " + ln.lhs + " ==" + ln.rhs, elaborate(ln.lhs, env),
                  elaborate(ln.rhs, env));
  }
  return rep;
}

}  // namespace cotwist
