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

#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/expect_error.hpp"
#include "support/fixtures.hpp"
#include "tgdb/lexer.hpp"
#include "tgdb/parser.hpp"

namespace tgdb {
namespace {

using Kinds = std::vector<std::pair<TokenKind, std::string>>;

Kinds kinds_of(std::string_view src) {
  Kinds out;
  for (const auto& t : tokenize(src))
    if (t.kind != TokenKind::End) out.emplace_back(t.kind, t.lexeme);
  return out;
}

TEST(Lexer, FoldsUnquotedIdentifiers) {
  EXPECT_EQ(kinds_of("(Joe:Customer {"),
            (Kinds{{TokenKind::Punct, "("},
                   {TokenKind::Identifier, "JOE"},
                   {TokenKind::Punct, ":"},
                   {TokenKind::Identifier, "CUSTOMER"},
                   {TokenKind::Punct, "{"}}));
}

TEST(Lexer, EdgeArrowsAreSingleTokens) {
  EXPECT_EQ(kinds_of(R"(-[:Ordered {"Date":date'22/11/2002'} ]->)"),
            (Kinds{{TokenKind::Punct, "-["},
                   {TokenKind::Punct, ":"},
                   {TokenKind::Identifier, "ORDERED"},
                   {TokenKind::Punct, "{"},
                   {TokenKind::QuotedIdentifier, "Date"},
                   {TokenKind::Punct, ":"},
                   {TokenKind::DateLiteral, "22/11/2002"},
                   {TokenKind::Punct, "}"},
                   {TokenKind::Punct, "]->"}}));
  EXPECT_EQ(kinds_of("<-[ ]-"), (Kinds{{TokenKind::Punct, "<-["}, {TokenKind::Punct, "]-"}}));
}

TEST(Lexer, OperatorsKeywordsAndLiterals) {
  EXPECT_EQ(kinds_of("a <= 1 <> 'it''s' >= &12 match"),
            (Kinds{{TokenKind::Identifier, "A"},
                   {TokenKind::Punct, "<="},
                   {TokenKind::Number, "1"},
                   {TokenKind::Punct, "<>"},
                   {TokenKind::String, "it's"},
                   {TokenKind::Punct, ">="},
                   {TokenKind::Identifier, "&12"},
                   {TokenKind::Keyword, "MATCH"}}));
}

TEST(Lexer, CommentsAndPositions) {
  auto toks = tokenize("-- note\n  CREATE");
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_EQ(toks[0].lexeme, "CREATE");
  EXPECT_EQ(toks[0].pos.line, 2u);
  EXPECT_EQ(toks[0].pos.column, 3u);
  EXPECT_EQ(toks[0].pos.offset, 10u);
}

TEST(Lexer, BlankLinesAreRecorded) {
  auto toks = tokenize("A\nB\n\n  C");
  EXPECT_FALSE(toks[1].after_blank_line);
  EXPECT_TRUE(toks[2].after_blank_line);
}

TEST(Lexer, Errors) {
  EXPECT_TGDB_ERROR(tokenize("'unclosed"), UnterminatedString);
  EXPECT_TGDB_ERROR(tokenize("\"unclosed"), UnterminatedString);
  EXPECT_TGDB_ERROR(tokenize("a # b"), IllegalCharacter);
  EXPECT_TGDB_ERROR(tokenize("\"\""), IllegalCharacter);
}

TEST(Lexer, QuotedIdentifiersKeepUnicode) {
  auto toks = tokenize("\"Grüße\" \"a\"\"b\"");
  EXPECT_EQ(toks[0].lexeme, "Grüße");
  EXPECT_EQ(toks[1].lexeme, "a\"b");
}

TEST(Parser, OrderExampleHasFourPaths) {
  Statement s = parse(testing::kOrderExample);
  const auto& c = std::get<CreateGraph>(s.node);
  ASSERT_EQ(c.paths.size(), 4u);
  EXPECT_EQ(c.paths[0].nodes.size(), 1u);
  EXPECT_EQ(c.paths[1].nodes.size(), 3u);
  EXPECT_EQ(c.paths[2].nodes.size(), 2u);
  EXPECT_EQ(c.paths[3].nodes.size(), 2u);
  const NewG& joe = c.paths[0].nodes[0].node;
  EXPECT_EQ(joe.id, "JOE");
  EXPECT_EQ(joe.labels, (std::vector<std::string>{"CUSTOMER"}));
  ASSERT_TRUE(joe.doc);
  EXPECT_EQ((*joe.doc)[0].key, "Name");
  EXPECT_EQ((*joe.doc)[1].key, "ADDRESS");
  EXPECT_TRUE(c.paths[1].nodes[0].reference);
  EXPECT_EQ(c.paths[1].edges[0].edge.id, "");
  EXPECT_EQ(c.paths[1].edges[0].edge.labels, (std::vector<std::string>{"ORDERED"}));
  EXPECT_EQ(c.paths[1].nodes[2].node.id, "16/50x100");
}

TEST(Parser, MatchWithoutTrailingStatement) {
  Statement s = parse("MATCH (c:CUSTOMER)-[:ORDERED]->(o)");
  const auto& m = std::get<Match>(s.node);
  EXPECT_TRUE(m.then.empty());
  EXPECT_FALSE(m.where);
  ASSERT_EQ(m.paths.size(), 1u);
  EXPECT_EQ(m.paths[0].edges[0].direction, Direction::Rightward);
}

TEST(Parser, MatchWithWhereAndSet) {
  Statement s = parse("MATCH (o)-[i:ITEM]->(p) WHERE i.QTY > 1 AND NOT p.X = 'a' SET i.QTY = 2");
  const auto& m = std::get<Match>(s.node);
  ASSERT_TRUE(m.where);
  EXPECT_EQ(render(*m.where), "((I.QTY > 1) AND (NOT (P.X = 'a')))");
  ASSERT_EQ(m.then.size(), 1u);
  const auto& set = std::get<SetStmt>(m.then[0].node);
  EXPECT_EQ(set.assignments[0].target, "I");
  EXPECT_EQ(set.assignments[0].property, "QTY");
}

TEST(Parser, CreateTypeForms) {
  auto node = std::get<CreateType>(
      parse(R"(CREATE TYPE CUSTOMER as ("Name" char, ADDRESS char) NodeType)").node);
  EXPECT_EQ(node.kind, CreateType::Kind::Node);
  ASSERT_EQ(node.columns.size(), 2u);
  EXPECT_EQ(node.columns[0].name, "Name");
  EXPECT_EQ(node.columns[0].type_name, "CHAR");

  auto edge =
      std::get<CreateType>(parse(R"(CREATE TYPE ORDERED as ("Date" date) EdgeType(CUSTOMER,"Order"))").node);
  EXPECT_EQ(edge.kind, CreateType::Kind::Edge);
  EXPECT_EQ(edge.leaving, "CUSTOMER");
  EXPECT_EQ(edge.arriving, "Order");
  EXPECT_EQ(edge.columns[0].type_name, "DATE");

  auto under = std::get<CreateType>(parse("CREATE TYPE WoodScrew UNDER &1").node);
  EXPECT_EQ(under.kind, CreateType::Kind::Under);
  EXPECT_EQ(under.label, "WOODSCREW");
  EXPECT_EQ(under.under, "&1");
}

TEST(Parser, DocSemantics) {
  auto toks = tokenize(R"({"Name":'Joe Edwards', Address:'10 Station Rd.'} rest)");
  std::size_t pos = 0;
  Doc d = parse_doc(toks, pos);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].key, "Name");
  EXPECT_EQ(d[1].key, "ADDRESS");
  EXPECT_EQ(toks[pos].lexeme, "REST");

  auto qty = tokenize("{Qty: 5}");
  pos = 0;
  Doc q = parse_doc(qty, pos);
  EXPECT_EQ(q[0].key, "QTY");
  EXPECT_EQ(q[0].value.scalar.literal, Literal::number("5"));

  auto dup = tokenize("{Qty: 5, Qty: 6}");
  pos = 0;
  EXPECT_TGDB_ERROR(parse_doc(dup, pos), DuplicateDocKey);
}

TEST(Parser, CaseHandling) {
  EXPECT_EQ(parse("create (a:customer)"), parse("CREATE (A:CUSTOMER)"));
  EXPECT_FALSE(parse("CREATE (A:\"Customer\")") == parse("CREATE (A:CUSTOMER)"));
}

TEST(Parser, SyntaxErrorsCarryPositionAndExpectation) {
  try {
    parse("CREATE (");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    ASSERT_TRUE(e.position());
    EXPECT_EQ(e.position()->column, 9u);
    EXPECT_NE(e.detail().find("expected"), std::string::npos);
  }
  EXPECT_TGDB_ERROR(parse("CREATE (a:b:c:d)"), SyntaxError);
  EXPECT_TGDB_ERROR(parse("CREATE (match:T)"), SyntaxError);
  EXPECT_TGDB_ERROR(parse("MATCH (a) extra"), SyntaxError);
  EXPECT_TGDB_ERROR(parse("SELECT 1"), SyntaxError);
  EXPECT_TGDB_ERROR(parse("MATCH (a) CREATE TYPE X NodeType"), SyntaxError);
  EXPECT_TGDB_ERROR(parse("CREATE TYPE X"), SyntaxError);
}

TEST(Parser, ErrorPositionsStayInBounds) {
  for (std::string src : {"CREATE (", "MATCH (a)-[", "CREATE TYPE X AS (", "SET a.", "DELETE",
                          "MATCH (a) WHERE (a.x = ", "CREATE (a:T {x: })"}) {
    try {
      parse(src);
      ADD_FAILURE() << src;
    } catch (const Error& e) {
      ASSERT_TRUE(e.position()) << src;
      EXPECT_LE(e.position()->offset, src.size()) << src;
    }
  }
}

TEST(Parser, TrailingSemicolonAllowed) {
  EXPECT_EQ(parse("DELETE &3;"), parse("DELETE &3"));
}

TEST(Parser, SplitStatements) {
  auto pieces = split_statements(tokenize("CREATE (a:T); MATCH (a)\n\nDELETE a\nDUMP"));
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0].front().lexeme, "CREATE");
  EXPECT_EQ(pieces[1].front().lexeme, "MATCH");
  EXPECT_EQ(pieces[2].front().lexeme, "DELETE");
  EXPECT_EQ(pieces[2].back().kind, TokenKind::End);
  auto blank = split_statements(tokenize("MATCH (a)\n\nDUMP"));
  EXPECT_EQ(blank.size(), 2u);
}

TEST(Parser, InferPropertyKind) {
  EXPECT_EQ(infer_property_kind(Literal::string("Joe Edwards")), SimpleKind::Char);
  EXPECT_EQ(infer_property_kind(Literal::number("5")), SimpleKind::Int);
  EXPECT_EQ(infer_property_kind(Literal::date("22/11/2002")), SimpleKind::Date);
  EXPECT_EQ(infer_property_kind(Literal::boolean(true)), SimpleKind::Boolean);
  EXPECT_TGDB_ERROR(infer_property_kind(Literal::null()), InvalidLiteral);
}

TEST(Parser, RenderRoundTripsCorpus) {
  for (std::string_view src : testing::kParserCorpus) {
    Statement first = parse(src);
    std::string text = render(first);
    Statement second = parse(text);
    EXPECT_EQ(first, second) << src << "\n=> " << text;
    EXPECT_EQ(render(second), text);
  }
}

}  // namespace
}  // namespace tgdb
