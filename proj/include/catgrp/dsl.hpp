#pragma once

#include <string>
#include <variant>
#include <vector>

#include "catgrp/group.hpp"

namespace catgrp {

// Line-oriented text format for groups, homs, actions, crossed modules and
// internal categories. '#' starts a comment, tokens are separated by
// whitespace with '(' ')' ',' '=' ':' and '->' self-delimiting. Element 0 is
// the identity in every group table; the parser rejects tables violating
// this, checks ranges and row lengths, and enforces the order cap. Semantic
// checks (associativity, homomorphism property, axioms) are left to the
// check runner.

struct Diagnostic {
  std::string severity;  // "error"
  int line = 0;          // 1-based
  int column = 0;        // 1-based
  std::string message;
};

struct GroupDecl {
  int order = 0;
  std::vector<int> table;
};

struct HomDecl {
  std::string source, target;
  std::vector<int> map;
};

struct ActionDecl {
  std::string group, carrier;
  std::vector<int> table;  // |group| rows of |carrier| entries, flattened
};

struct XmodDecl {
  std::string c, g, boundary, action;
};

struct InternalCatDecl {
  std::string arrows, objects, src, tgt, unit;
  std::vector<int> comp;  // one entry per composable pair, canonical order
};

struct Declaration {
  std::string name;
  int line = 0, column = 0;
  std::variant<GroupDecl, HomDecl, ActionDecl, XmodDecl, InternalCatDecl>
      body;
};

struct SpecDocument {
  std::vector<Declaration> decls;
  const Declaration* find(const std::string& name) const;
};

struct ParseResult {
  SpecDocument doc;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

ParseResult parse_spec(const std::string& text);

// Canonical form: single spaces, declarations in original order, builtins
// expanded to explicit tables, LF line ends, trailing newline.
// parse_spec(serialize_spec(doc)) reproduces doc.
std::string serialize_spec(const SpecDocument& doc);

}  // namespace catgrp
