#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace modsem {

struct Term {
    enum class Kind { constant, variable };

    Kind kind = Kind::constant;
    std::string name;

    static Term constant(std::string name) { return {Kind::constant, std::move(name)}; }
    static Term variable(std::string name) { return {Kind::variable, std::move(name)}; }
    bool is_variable() const { return kind == Kind::variable; }

    friend bool operator==(const Term&, const Term&) = default;
};

struct PredicateSymbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) = default;
    friend bool operator<(const PredicateSymbol& a, const PredicateSymbol& b) {
        return a.name != b.name ? a.name < b.name : a.arity < b.arity;
    }
};

using PredicateSet = std::set<PredicateSymbol>;

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    PredicateSymbol symbol() const { return {predicate, args.size()}; }
    bool is_ground() const;

    friend bool operator==(const Atom&, const Atom&) = default;
};

struct Literal {
    bool positive = true;
    Atom atom;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Rule {
    Atom head;
    std::vector<Literal> body;

    friend bool operator==(const Rule&, const Rule&) = default;
};

// Variables of a rule in order of first occurrence (head first, then body).
std::vector<std::string> variables_of(const Rule& rule);
std::vector<std::string> variables_of(const std::vector<Literal>& literals);

// Every variable of the head or of a negative literal must occur in a positive
// body literal. Throws SemanticError naming the rule and the variable.
void check_safety(const Rule& rule);

// A module <R, S>: rules plus the predicate symbols whose extension they define.
// Every head predicate must be in `defines`.
class Module {
public:
    Module() = default;
    // Throws SemanticError when a head predicate is not defined by the module.
    Module(std::string name, std::vector<Rule> rules, PredicateSet defines);

    const std::string& name() const { return name_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const PredicateSet& defines() const { return defines_; }
    // Set by union_modules when the two operands define a common predicate.
    bool overlap_warning() const { return overlap_warning_; }

    PredicateSet body_predicates() const;
    // Head, body and defined predicates.
    PredicateSet predicates() const;
    std::set<std::string> constants() const;

    friend bool operator==(const Module& a, const Module& b) {
        return a.name_ == b.name_ && a.rules_ == b.rules_ && a.defines_ == b.defines_;
    }

private:
    friend Module union_modules(const Module& p, const Module& q);
    friend Module union_modules(const std::vector<Module>& modules, const std::string& name);

    std::string name_;
    std::vector<Rule> rules_;
    PredicateSet defines_;
    bool overlap_warning_ = false;
};

// P >> Q: no predicate in a rule body of Q is defined by P.
bool precedes(const Module& p, const Module& q);

// Rule-set union (duplicates dropped, order kept) and defines union.
Module union_modules(const Module& p, const Module& q);
Module union_modules(const std::vector<Module>& modules, const std::string& name = "");

// Modules in evaluation order: every module comes after the modules it calls.
struct Plan {
    std::vector<Module> order;

    std::vector<std::string> names() const;
};

// Topological order of the inter-module call graph, ties broken by module name.
// Throws SemanticError on overlapping defines or a cross-module cycle.
Plan stratify(const std::vector<Module>& modules);

// Module { answer(vars) <- goal } defining answer/|vars|. Throws SemanticError
// if `answer_name` with that arity is already one of `existing`, or the goal is unsafe.
Module wrap_goal(const std::vector<Literal>& goal, const PredicateSet& existing,
                 const std::string& answer_name = "answer");

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const PredicateSymbol& p);
// Source text accepted by parse_program.
std::string to_string(const Module& m);

} // namespace modsem
