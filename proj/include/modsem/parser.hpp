#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "modsem/syntax.hpp"

namespace modsem {

struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct SourceProgram {
    std::vector<Module> modules;
    std::vector<SourceLocation> locations; // one per module

    friend bool operator==(const SourceProgram& a, const SourceProgram& b) { return a.modules == b.modules; }
};

// Grammar:
//   program  ::= module*
//   module   ::= "module" name "defines" [pred "/" int {"," pred "/" int}] "{" rule* "}"
//   rule     ::= atom [":-" literal {"," literal}] "."
//   literal  ::= ["not"] atom
//   atom     ::= name ["(" term {"," term} ")"]
// Variables start with an uppercase letter or '_'; constants with a lowercase
// letter or a digit. '%' starts a line comment.
//
// Throws ParseError on malformed text and SemanticError (message prefixed with
// "line:column:") on duplicate module names, arity clashes, unsafe rules, and
// heads outside the module's defines.
SourceProgram parse_program(std::string_view text);

// Comma-separated literals such as "q, not r(1)" or "path(1,Y)".
std::vector<Literal> parse_literals(std::string_view text);

std::string print_program(const SourceProgram& program);

} // namespace modsem
