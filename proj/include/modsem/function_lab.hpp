#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "modsem/lattice.hpp"
#include "modsem/operator_algebra.hpp"

namespace modsem {

// Largest carriers the exhaustive enumerators accept.
inline constexpr std::size_t monotone_increasing_budget = 6;
inline constexpr std::size_t monotone_budget = 4;
inline constexpr std::size_t all_functions_budget = 3;
inline constexpr std::size_t gallery_cap = 10;

// Every f with x <= f(x) and x <= y => f(x) <= f(y), lexicographic by table.
std::vector<EndoFunction> enumerate_monotone_increasing(std::shared_ptr<const FinitePoset> domain);
// Every monotone f, lexicographic by table.
std::vector<EndoFunction> enumerate_monotone(std::shared_ptr<const FinitePoset> domain);
// All |S|^|S| self-maps, lexicographic by table.
std::vector<EndoFunction> enumerate_all_functions(std::shared_ptr<const FinitePoset> domain);

struct GalleryEntry {
    std::vector<std::string> functions;
    std::string witness;
};

struct PartTally {
    std::size_t hypothesis_held = 0;
    std::size_t conclusion_held = 0;
    std::size_t both = 0;
    // Hypothesis held, conclusion failed. Always zero unless the library is broken.
    std::size_t violations = 0;
    // Hypothesis failed and conclusion failed.
    std::size_t refuted = 0;
    std::vector<GalleryEntry> gallery;
};

struct CensusReport {
    std::string kind;    // "lemma" or "sandwich"
    std::string lattice;
    std::string mode;    // "monotone_increasing", "monotone", "all_functions"
    std::size_t functions = 0;
    std::size_t instances = 0;
    std::vector<PartTally> parts;
    // Sandwich only: instances where FPT(g) is strictly larger than FPT(f1) = FPT(f2).
    std::size_t strict_part6 = 0;
    std::vector<GalleryEntry> strict_part6_gallery;

    bool passed() const;
};

CensusReport run_lemma_census(std::shared_ptr<const FinitePoset> lattice);

enum class SandwichMode { all_functions, monotone };

CensusReport run_sandwich_census(std::shared_ptr<const FinitePoset> poset, SandwichMode mode);

struct DualityReport {
    bool f_monotone_decreasing = false;
    bool g_monotone_decreasing = false;
    // f-down . g <= g . f-down at every element.
    bool pointwise_condition = false;
    std::string sum_closure_at_top;    // (f+g) down-closure at the top element
    std::string staged_closure_at_top; // f down-closure after g down-closure at the top element
    bool reproduced = false;
};

// f(x) = {a,b} if x = {a,b,c} else {}, g(x) = {b,c} if x = {a,b,c} else {}.
DualityReport reproduce_duality_counterexample();

struct AppendixReport {
    bool monotone = false;
    bool sandwiched = false;
    std::vector<std::string> fixed_f1;
    std::vector<std::string> fixed_f2;
    std::vector<std::string> fixed_g;
    bool reproduced = false;
};

// On 1 < 2 < 3: f1 = (1,1,3), f2 = (1,3,3), g = identity.
AppendixReport reproduce_appendix_example();

// The three functions of the sandwich example, for tests and the CLI.
struct AppendixTriple {
    EndoFunction f1;
    EndoFunction g;
    EndoFunction f2;
};
AppendixTriple appendix_triple();

// The two decreasing functions of the duality example on powerset {a,b,c}.
struct DualityPair {
    EndoFunction f;
    EndoFunction g;
};
DualityPair duality_pair();

nlohmann::json to_json(const CensusReport& report);
nlohmann::json to_json(const DualityReport& report);
nlohmann::json to_json(const AppendixReport& report);
std::string to_text(const CensusReport& report);
std::string to_text(const DualityReport& report);
std::string to_text(const AppendixReport& report);

} // namespace modsem
