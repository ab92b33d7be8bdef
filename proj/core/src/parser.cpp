// Copyright 2026 The tgdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tgdb/parser.hpp"

#include <set>

#include "tgdb/identifier.hpp"

namespace tgdb {

namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::String: return "string '" + t.lexeme + "'";
    case TokenKind::QuotedIdentifier: return "\"" + t.lexeme + "\"";
    default: return "'" + t.lexeme + "'";
  }
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t pos = 0)
      : toks_(tokens), pos_(pos) {}

  std::size_t position() const { return pos_; }

  Statement statement_to_end() {
    Statement s = statement();
    accept_punct(";");
    if (cur().kind != TokenKind::End) fail({"end of statement"});
    return s;
  }

  Doc doc() {
    expect_punct("{");
    Doc d;
    std::set<std::string> keys;
    if (!accept_punct("}")) {
      do {
        DocEntry e;
        e.pos = cur().pos;
        e.key = name("property name");
        if (!keys.insert(e.key).second)
          throw Error(ErrorCode::DuplicateDocKey,
                      "duplicate key " + render_identifier(e.key), e.pos);
        expect_punct(":");
        e.value = doc_value();
        d.push_back(std::move(e));
      } while (accept_punct(","));
      expect_punct("}");
    }
    return d;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t n) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  void bump() {
    if (cur().kind != TokenKind::End) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + describe(cur());
    throw Error(ErrorCode::SyntaxError, msg, cur().pos);
  }

  bool accept_punct(std::string_view p) {
    if (!cur().is_punct(p)) return false;
    bump();
    return true;
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail({"'" + std::string(p) + "'"});
  }
  bool accept_keyword(std::string_view k) {
    if (!cur().is_keyword(k)) return false;
    bump();
    return true;
  }
  void expect_keyword(std::string_view k) {
    if (!accept_keyword(k)) fail({std::string(k)});
  }

  std::string name(std::string_view what) {
    if (cur().is_name()) {
      std::string n = cur().lexeme;
      bump();
      return n;
    }
    if (cur().kind == TokenKind::Keyword)
      throw Error(ErrorCode::SyntaxError,
                  "reserved word " + cur().lexeme + " must be double-quoted to be used as " +
                      std::string(what),
                  cur().pos);
    fail({std::string(what)});
  }

  Statement statement() {
    Statement s;
    s.pos = cur().pos;
    if (accept_keyword("CREATE")) {
      if (accept_keyword("TYPE")) {
        s.node = create_type();
      } else {
        s.node = CreateGraph{paths()};
      }
    } else if (accept_keyword("MATCH")) {
      s.node = match();
    } else if (accept_keyword("SET")) {
      s.node = set_stmt();
    } else if (accept_keyword("DELETE")) {
      s.node = delete_stmt();
    } else {
      fail({"CREATE", "MATCH", "SET", "DELETE"});
    }
    return s;
  }

  std::vector<Path> paths() {
    std::vector<Path> out;
    do {
      out.push_back(path());
    } while (accept_punct(","));
    return out;
  }

  Path path() {
    Path p;
    p.nodes.push_back(node());
    for (;;) {
      if (cur().is_punct("-[")) {
        bump();
        EdgeItem e{Direction::Rightward, newg("edge label")};
        expect_punct("]->");
        p.edges.push_back(std::move(e));
      } else if (cur().is_punct("<-[")) {
        bump();
        EdgeItem e{Direction::Leftward, newg("edge label")};
        expect_punct("]-");
        p.edges.push_back(std::move(e));
      } else {
        break;
      }
      p.nodes.push_back(node());
    }
    return p;
  }

  NodeItem node() {
    if (!cur().is_punct("(")) fail({"'('"});
    bump();
    NodeItem n;
    n.node = newg("node");
    n.reference = !n.node.id.empty() && n.node.labels.empty() && !n.node.doc;
    expect_punct(")");
    return n;
  }

  NewG newg(std::string_view what) {
    NewG g;
    g.pos = cur().pos;
    if (cur().is_name()) {
      g.id = cur().lexeme;
      bump();
    } else if (cur().kind == TokenKind::Keyword) {
      name(what);
    }
    while (accept_punct(":")) {
      if (g.labels.size() == 2)
        throw Error(ErrorCode::SyntaxError,
                    "at most two labels (type and supertype) are allowed",
                    cur().pos);
      g.labels.push_back(name("label"));
    }
    if (cur().is_punct("{")) g.doc = doc();
    if (g.id.empty() && g.labels.empty() && !g.doc && what == "node") {
      if (!cur().is_punct(")")) fail({"identifier", "':'", "'{'", "')'"});
    }
    return g;
  }

  DocValue doc_value() {
    DocValue v;
    v.pos = cur().pos;
    if (cur().is_punct("{")) {
      v.kind = DocValue::Kind::Object;
      v.entries = doc();
    } else if (accept_punct("[")) {
      v.kind = DocValue::Kind::Array;
      if (!accept_punct("]")) {
        do {
          v.items.push_back(doc_value());
        } while (accept_punct(","));
        expect_punct("]");
      }
    } else if (accept_punct("*")) {
      v.kind = DocValue::Kind::Unbounded;
    } else {
      v.kind = DocValue::Kind::Scalar;
      v.scalar = expr();
    }
    return v;
  }

  CreateType create_type() {
    CreateType c;
    c.label = name("type name");
    if (accept_keyword("AS")) {
      expect_punct("(");
      do {
        ColumnDef col;
        col.name = name("column name");
        if (accept_keyword("DATE")) {
          col.type_name = "DATE";
        } else {
          col.type_name = name("column type");
        }
        c.columns.push_back(std::move(col));
      } while (accept_punct(","));
      expect_punct(")");
    }
    if (accept_keyword("NODETYPE")) {
      c.kind = CreateType::Kind::Node;
    } else if (accept_keyword("EDGETYPE")) {
      c.kind = CreateType::Kind::Edge;
      expect_punct("(");
      c.leaving = name("leaving node type");
      expect_punct(",");
      c.arriving = name("arriving node type");
      expect_punct(")");
    } else if (accept_keyword("UNDER")) {
      c.kind = CreateType::Kind::Under;
      c.under = name("supertype");
      accept_keyword("NODETYPE");
    } else {
      fail({"AS", "NODETYPE", "EDGETYPE", "UNDER"});
    }
    if (cur().is_punct("{")) c.metadata = doc();
    while (accept_keyword("CONSTRAINT")) {
      ConstraintDef k;
      k.name = name("constraint name");
      expect_keyword("CHECK");
      k.predicate = expr();
      c.constraints.push_back(std::move(k));
    }
    return c;
  }

  Match match() {
    Match m;
    m.paths = paths();
    if (accept_keyword("WHERE")) m.where = expr();
    Statement tail;
    tail.pos = cur().pos;
    if (accept_keyword("SET")) {
      tail.node = set_stmt();
      m.then.push_back(std::move(tail));
    } else if (accept_keyword("DELETE")) {
      tail.node = delete_stmt();
      m.then.push_back(std::move(tail));
    } else if (accept_keyword("CREATE")) {
      if (cur().is_keyword("TYPE"))
        throw Error(ErrorCode::SyntaxError,
                    "CREATE TYPE cannot follow MATCH", cur().pos);
      tail.node = CreateGraph{paths()};
      m.then.push_back(std::move(tail));
    }
    return m;
  }

  SetStmt set_stmt() {
    SetStmt s;
    do {
      Assignment a;
      a.pos = cur().pos;
      a.target = name("identifier");
      expect_punct(".");
      a.property = name("property name");
      expect_punct("=");
      a.value = expr();
      s.assignments.push_back(std::move(a));
    } while (accept_punct(","));
    return s;
  }

  DeleteStmt delete_stmt() {
    DeleteStmt d;
    do {
      d.positions.push_back(cur().pos);
      d.targets.push_back(name("identifier"));
    } while (accept_punct(","));
    return d;
  }

  Expr expr() {
    Expr lhs = and_expr();
    while (cur().is_keyword("OR")) {
      SourcePos p = cur().pos;
      bump();
      lhs = Expr::make_binary(ExprOp::Or, std::move(lhs), and_expr(), p);
    }
    return lhs;
  }

  Expr and_expr() {
    Expr lhs = not_expr();
    while (cur().is_keyword("AND")) {
      SourcePos p = cur().pos;
      bump();
      lhs = Expr::make_binary(ExprOp::And, std::move(lhs), not_expr(), p);
    }
    return lhs;
  }

  Expr not_expr() {
    if (cur().is_keyword("NOT")) {
      SourcePos p = cur().pos;
      bump();
      return Expr::make_not(not_expr(), p);
    }
    return comparison();
  }

  Expr comparison() {
    Expr lhs = primary();
    static const std::pair<std::string_view, ExprOp> kOps[] = {
        {"=", ExprOp::Eq},  {"<>", ExprOp::Ne}, {"<", ExprOp::Lt},
        {"<=", ExprOp::Le}, {">", ExprOp::Gt},  {">=", ExprOp::Ge}};
    for (const auto& [text, op] : kOps) {
      if (cur().is_punct(text)) {
        SourcePos p = cur().pos;
        bump();
        return Expr::make_binary(op, std::move(lhs), primary(), p);
      }
    }
    return lhs;
  }

  Expr primary() {
    const Token& t = cur();
    SourcePos p = t.pos;
    switch (t.kind) {
      case TokenKind::String: {
        bump();
        return Expr::make_literal(Literal::string(toks_[pos_ - 1].lexeme), p);
      }
      case TokenKind::Number: {
        bump();
        return Expr::make_literal(Literal::number(toks_[pos_ - 1].lexeme), p);
      }
      case TokenKind::DateLiteral: {
        bump();
        return Expr::make_literal(Literal::date(toks_[pos_ - 1].lexeme), p);
      }
      case TokenKind::Keyword:
        if (accept_keyword("TRUE")) return Expr::make_literal(Literal::boolean(true), p);
        if (accept_keyword("FALSE")) return Expr::make_literal(Literal::boolean(false), p);
        if (accept_keyword("NULL")) return Expr::make_literal(Literal::null(), p);
        break;
      case TokenKind::Identifier:
      case TokenKind::QuotedIdentifier: {
        std::string n = t.lexeme;
        bump();
        if (accept_punct(".")) {
          std::string prop = name("property name");
          return Expr::make_property(std::move(n), std::move(prop), p);
        }
        return Expr::make_identifier(std::move(n), p);
      }
      case TokenKind::Punct:
        if (accept_punct("(")) {
          Expr inner = expr();
          expect_punct(")");
          return inner;
        }
        if (t.is_punct("-") && ahead(1).kind == TokenKind::Number) {
          bump();
          std::string digits = "-" + cur().lexeme;
          bump();
          return Expr::make_literal(Literal::number(std::move(digits)), p);
        }
        break;
      default: break;
    }
    fail({"literal", "identifier", "'('"});
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
};

bool starts_statement(const Token& t) {
  if (t.kind == TokenKind::Identifier)
    return t.lexeme == "DUMP" || t.lexeme == "SCHEMA" || t.lexeme == "DATA" ||
           t.lexeme == "GRAPHS";
  return t.is_keyword("CREATE") || t.is_keyword("MATCH") || t.is_keyword("SET") ||
         t.is_keyword("DELETE");
}

}  // namespace

Statement parse(const std::vector<Token>& tokens) {
  return Parser(tokens).statement_to_end();
}

Statement parse(std::string_view source) { return parse(tokenize(source)); }

Doc parse_doc(const std::vector<Token>& tokens, std::size_t& pos) {
  Parser p(tokens, pos);
  Doc d = p.doc();
  pos = p.position();
  return d;
}

std::vector<std::vector<Token>> split_statements(const std::vector<Token>& tokens) {
  std::vector<std::vector<Token>> out;
  std::vector<Token> current;
  auto flush = [&](const SourcePos& end_pos) {
    if (current.empty()) return;
    Token end;
    end.kind = TokenKind::End;
    end.pos = end_pos;
    current.push_back(std::move(end));
    out.push_back(std::move(current));
    current.clear();
  };
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::End) {
      flush(t.pos);
      break;
    }
    if (t.is_punct(";")) {
      flush(t.pos);
      continue;
    }
    if (!current.empty() && t.after_blank_line && starts_statement(t))
      flush(t.pos);
    current.push_back(t);
  }
  return out;
}

SimpleKind infer_property_kind(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::String: return SimpleKind::Char;
    case Literal::Kind::Number: return SimpleKind::Int;
    case Literal::Kind::Date: return SimpleKind::Date;
    case Literal::Kind::Boolean: return SimpleKind::Boolean;
    case Literal::Kind::Null: break;
  }
  throw Error(ErrorCode::InvalidLiteral, "NULL does not determine a column type");
}

}  // namespace tgdb
