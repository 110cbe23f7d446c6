#pragma once

#include "wn/sdp.hpp"
#include "wn/weyl.hpp"

#include <optional>
#include <vector>

namespace wn {

/// Cycle-type plus per-cycle sign parities; a conjugation invariant.
/// Stored as the sorted multiset of (length, parity) pairs.
struct ClassDescriptor {
    CycleType type;
    std::vector<std::pair<int, int>> cycle_signs;  // (length, parity), sorted
    int total_parity = 0;

    bool operator==(const ClassDescriptor&) const = default;
    auto operator<=>(const ClassDescriptor&) const = default;
    std::string to_string() const;
};

ClassDescriptor class_descriptor(const WeylElement& x);

struct ConjugacyClass {
    GroupSpec spec;
    WeylElement representative;       // least element of the orbit
    std::vector<WeylElement> elements;  // sorted
    ClassDescriptor descriptor;

    size_t size() const { return elements.size(); }
    bool contains(const WeylElement& x) const;
};

ConjugacyClass class_of(const WeylElement& x, const GroupSpec& spec,
                        unsigned long long cutoff);
/// All conjugacy classes, sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec,
                                              unsigned long long cutoff);

struct CentralizerFactorization {
    std::vector<SignVector> a_part;   // A^sigma, sorted
    std::vector<Permutation> d_part;  // (S_n)^sigma, sorted
};

struct Centralizer {
    std::vector<WeylElement> elements;  // sorted
    std::vector<WeylElement> generators;
    /// Present when the centralized element is (e, sigma):
    /// then the centralizer factors as A^sigma x| (S_n)^sigma.
    std::optional<CentralizerFactorization> factorization;

    size_t order() const { return elements.size(); }
};

Centralizer centralizer(const WeylElement& x, const GroupSpec& spec,
                        unsigned long long cutoff);
/// Centralizer of sigma inside S_n, sorted.
std::vector<Permutation> perm_centralizer(const Permutation& sigma);

/// Offsets r_j and point blocks Y_j of a cycle type: block j holds the
/// positions r_j .. r_{j+1}-1 (0-based half-open) carrying all j-cycles.
struct BlockData {
    std::vector<int> offsets;               // offsets[j-1] = r_j, 0-based
    std::vector<std::vector<int>> blocks;   // blocks[j-1] = Y_j (0-based points)
};

BlockData block_data(const CycleType& type);

/// The permutation whose cycles are laid out block-by-block: for every
/// length j, the l-th j-cycle is (r_j+(l-1)j, ..., r_j+lj-1) mapping each
/// point to its successor.
Permutation normal_form_permutation(const CycleType& type);
bool is_normal_form(const Permutation& sigma);

/// (gamma, sigma') with sigma' = gamma sigma gamma^-1 in normal form.
std::pair<Permutation, Permutation> normalize(const Permutation& sigma);

struct StandardGenerator {
    char kind;  // 'A' or 'B'
    int j;      // cycle length
    int index;  // l for A-kind (1-based), h for B-kind (1-based)
    Permutation perm;
};

/// The centralizer generators of a normal-form permutation: the cycles
/// themselves (A-kind) and the adjacent block swaps (B-kind).
std::vector<StandardGenerator> standard_generators(const Permutation& sigma);

/// Per-block image of a centralizing permutation in (C_j)^{lambda_j} x| S_{lambda_j}.
struct PhiImage {
    std::vector<std::pair<int, SdpElement>> per_block;  // (j, image), ascending j

    bool operator==(const PhiImage&) const = default;
    bool operator<(const PhiImage& o) const { return per_block < o.per_block; }
};

PhiImage phi(const Permutation& tau, const Permutation& sigma);
PhiImage phi_compose(const PhiImage& x, const PhiImage& y);

}  // namespace wn
