#pragma once

#include "wn/repkit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wn {

/// Ramification system: classes with multiplicities and centralizer
/// representation descriptors.
struct RSREntry {
    WeylElement u;
    int multiplicity = 1;
    std::vector<RepDescriptor> reps;
};

struct RSRDescriptor {
    GroupSpec spec;
    std::vector<RSREntry> entries;
};

struct YDSummand {
    WeylElement support;
    RepDescriptor rep;
};

struct YDModuleSpec {
    GroupSpec spec;
    std::vector<YDSummand> summands;
};

enum class Outcome { Infinite, Finite, MinusOneTypeCandidate, Unknown };

std::string outcome_name(Outcome o);

struct TraceEntry {
    std::string rule;    // e.g. "theorem-2/case-i", "theorem-4", "remark-3.8"
    std::string detail;
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::vector<TraceEntry> trace;
};

/// Data of the support-normalization step: a permutation moving the
/// character's support to a leading segment, and the conjugated sigma.
struct NormalizedCharacter {
    int nu = 0;
    Permutation sigma_prime;
    Permutation conjugator;
};

NormalizedCharacter normalize_character(const Permutation& sigma, const AbelianCharacter& chi);

/// sigma moves no point across the cut at nu.
bool is_matched(const Permutation& sigma, int nu);

enum class Theorem2Case { i, ii, iii, iv, v, vi, vii, viii, ix };
std::string theorem2_case_name(Theorem2Case c);

/// Outcome of matching one case against a descriptor: opaque labels can
/// leave a case undecidable.
enum class MatchState { No, Yes, Maybe };

struct Theorem2Match {
    std::vector<Theorem2Case> matched;
    bool indeterminate = false;  // some case blocked only by opaque labels
};

/// All finiteness-compatible cases for a matched support; the descriptor
/// blocks describe the representation on sigma's side of the cut, with the
/// side-adjusted fixed-point count as block 1.
Theorem2Match match_theorem2_cases(const Permutation& sigma, int nu, const RepDescriptor& desc,
                                   int rank);
std::optional<Theorem2Case> match_theorem2_case(const Permutation& sigma, int nu,
                                                const RepDescriptor& desc, int rank);

Verdict classify_irreducible(const Permutation& sigma, const AbelianCharacter& chi,
                             const RepDescriptor& desc, const GroupSpec& spec);
Verdict classify_reducible(const YDModuleSpec& m);
Verdict classify_module(const YDModuleSpec& m);

/// True when the ramification is supported on the central all-flips class
/// and every abelian character in play has odd weight.
bool is_central_quantum_linear(const RSRDescriptor& rsr);

Verdict classify_rsr(const RSRDescriptor& rsr);

/// Degree of one entry's representation bundle over the centralizer, when
/// every label is definite and the class is the central one; -1 otherwise.
long long rsr_entry_degree(const RSREntry& entry, const GroupSpec& spec);

}  // namespace wn
