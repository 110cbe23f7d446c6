#pragma once

#include "wn/conjugacy.hpp"
#include "wn/rep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wn {

/// Character of an abelian exponent group (C_l)^m, written as an exponent
/// tuple. The base character of C_l is pinned to chi_l(g_l) = zeta_l^(l-1),
/// the unique choice with chi_l(g_l)^(l-1) = zeta_l; with it the evaluation
/// of a block character at the block's own cycles is exp(2 pi i sum t/l).
struct AbelianCharacter {
    int modulus = 2;
    std::vector<int> exps;  // each in [0, modulus)

    int size() const { return static_cast<int>(exps.size()); }
    bool is_constant() const;
    int weight() const;  // sum of exponents
    Cyclo eval(const std::vector<int>& a) const;
    Cyclo eval_sign(const SignVector& a) const;

    bool operator==(const AbelianCharacter&) const = default;
};

AbelianCharacter character_from_bits(const SignVector& bits);

/// chi^(nu): nu leading ones over C2^n. The family bounds the admissible
/// nu (A: 0 only; D: 0..n-1; B: 0..n).
AbelianCharacter chi_nu(int nu, const GroupSpec& spec);
/// Stabilizer of chi^(nu) in S_n: the Young subgroup fixing the cut.
FiniteGroup chi_nu_stabilizer(int nu, int n);

/// True when the full symmetric group stabilizes the character, i.e. the
/// exponent tuple is constant.
bool stabilizer_full(const AbelianCharacter& chi);
/// Brute-force stabilizer under the slot-permuting action, for cross-checks.
std::vector<Permutation> character_stabilizer_brute(const AbelianCharacter& chi);

enum class RhoKind { Epsilon, Sgn, Opaque };

struct RhoLabel {
    RhoKind kind = RhoKind::Epsilon;
    int degree = 1;     // used by Opaque
    std::string name;   // used by Opaque

    bool is_one_dimensional_label() const { return kind != RhoKind::Opaque || degree == 1; }
    bool operator==(const RhoLabel&) const = default;
};

RhoLabel rho_epsilon();
RhoLabel rho_sgn();
RhoLabel rho_opaque(std::string name, int degree);
RhoLabel parse_rho_label(const std::string& s);
std::string print_rho_label(const RhoLabel& r);

/// Per-cycle-length factor of a centralizer representation: the exponent
/// tuple of the block character plus a label for the stabilizer factor.
struct DescriptorBlock {
    int j = 1;
    std::vector<int> t;
    RhoLabel rho;
};

struct RepDescriptor {
    std::vector<DescriptorBlock> blocks;  // ascending j
    std::optional<int> nu;
    std::optional<SignVector> chi_bits;
    std::optional<RhoLabel> rho_prime;
    std::optional<RhoLabel> rho_prime_prime;
};

/// Blocks aligned with a cycle type: one entry per j with lambda_j > 0,
/// missing blocks defaulted to (0,...,0) and epsilon. Throws on shape or
/// exponent-range violations.
std::vector<DescriptorBlock> aligned_blocks(const RepDescriptor& desc, const CycleType& type);

/// [S_lambda : Young stabilizer of t] — the orbit size of the tuple.
long long tuple_stabilizer_index(const std::vector<int>& t);
long long descriptor_degree(const RepDescriptor& desc, const CycleType& type);

struct DistinguishedElement {
    Rat value;
};

DistinguishedElement distinguished_element(const RepDescriptor& desc, const CycleType& type);
/// Exact character value at the underlying permutation: a root of unity
/// times the degree.
Cyclo char_value_at_sigma(const RepDescriptor& desc, const Permutation& sigma);
/// xi integral and the permutation of even order.
bool is_minus_one_type(const RepDescriptor& desc, const Permutation& sigma);

/// All one-dimensional centralizer representations of sigma, as descriptors:
/// constant exponent tuples with epsilon/sgn stabilizer labels.
std::vector<RepDescriptor> enumerate_one_dim_reps(const Permutation& sigma);

/// The induced representation theta_{chi,rho} of g, where g_chi is cut out
/// by the permutation parts stabilizing chi on the exponent parts present
/// in g, and rho lives over those permutation parts (zero exponents).
Rep theta_rep(const FiniteGroup& g, const AbelianCharacter& chi, const Rep& rho_on_perms);
/// The stabilizer subgroup g_chi used by theta_rep.
FiniteGroup chi_stabilizer_subgroup(const FiniteGroup& g, const AbelianCharacter& chi);
/// Permutation parts of g with zero exponents, as a subgroup.
FiniteGroup perm_part_subgroup(const FiniteGroup& g);

/// Explicit matrix of a descriptor-defined representation evaluated at the
/// normal-form permutation of the type: per block, the induced block
/// representation at its central image, Kronecker-multiplied together.
/// Opaque labels are not realizable; throws for them.
Matrix descriptor_matrix_at_sigma(const RepDescriptor& desc, const CycleType& type);

/// Subrepresentation test by character inner product.
bool is_sub_rsr(const Rep& rho, const Rep& rho_prime);

}  // namespace wn
