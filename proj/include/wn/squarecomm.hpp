#pragma once

#include "wn/conjugacy.hpp"

#include <optional>
#include <vector>

namespace wn {

struct Witness {
    WeylElement s;
    WeylElement t;
};

struct PairVerdict {
    size_t first_class = 0;   // indices into the report's class list
    size_t second_class = 0;
    bool square_commutative = false;
    std::optional<Witness> witness;  // least failing pair when not commutative
};

struct SquareCommReport {
    GroupSpec spec;
    std::vector<ConjugacyClass> classes;  // the classes that were paired
    std::vector<PairVerdict> pairs;       // all unordered pairs, first <= second
};

/// Reduced test: fix the representative of c2 and range over all of c1.
bool square_commute(const ConjugacyClass& c1, const ConjugacyClass& c2);
/// Full quadratic sweep over both classes; the oracle for the reduced test.
bool square_commute_full(const ConjugacyClass& c1, const ConjugacyClass& c2);
/// Least (s, t) with stst != tsts, if any.
std::optional<Witness> square_commute_witness(const ConjugacyClass& c1,
                                              const ConjugacyClass& c2);

/// Decide every unordered pair of classes. The identity class is skipped
/// unless include_trivial is set. Deterministic; the pair grid may be
/// partitioned across workers.
SquareCommReport enumerate_pairs(const GroupSpec& spec, unsigned long long cutoff,
                                 bool include_trivial = false, int workers = 1);

/// Checks that square-commutativity of classes upstairs forces
/// square-commutativity of the projected permutation classes in S_n.
/// Returns true when no counterexample exists in the group.
bool lifted_necessity_check(const GroupSpec& spec, unsigned long long cutoff,
                            int workers = 1);

/// Rank-4 families only: checks that classes over a 2^2 permutation part
/// are mutually square-commutative exactly when their total sign parities
/// agree.
bool sign_condition_check(const GroupSpec& spec, unsigned long long cutoff);

}  // namespace wn
