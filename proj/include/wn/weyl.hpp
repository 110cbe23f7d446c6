#pragma once

#include "wn/perm.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wn {

/// Raised when an enumeration would exceed the configured group-order cutoff.
class cutoff_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector over C2^n, stored as packed bits (rank <= 64).
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(int n);
    static SignVector from_string(const std::string& bits);  // "1000"

    int size() const { return n_; }
    int bit(int i) const { return static_cast<int>((bits_ >> i) & 1u); }
    void set(int i, int v);
    int weight() const;
    int parity() const { return weight() & 1; }
    bool is_zero() const { return bits_ == 0; }
    uint64_t raw() const { return bits_; }

    SignVector operator^(const SignVector& o) const;  // componentwise sum mod 2

    bool operator==(const SignVector& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const SignVector& o) const { return !(*this == o); }
    /// Lexicographic on the bit sequence a1, a2, ..., an.
    bool operator<(const SignVector& o) const;

    std::string to_string() const;

private:
    uint64_t bits_ = 0;
    int n_ = 0;
};

enum class Family : char { A = 'A', B = 'B', D = 'D' };

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// One of the three classical families at a given rank. The sign subgroup A
/// is trivial for family A, the even-weight subgroup for D, everything for B.
struct GroupSpec {
    Family family = Family::B;
    int rank = 1;

    bool sign_allowed(const SignVector& s) const;
    unsigned long long order() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Element (a, sigma) of A x| S_n with the permutation acting on sign slots.
struct WeylElement {
    SignVector sign;
    Permutation perm;

    int rank() const { return perm.degree(); }
    bool is_identity() const { return sign.is_zero() && perm.is_identity(); }

    bool operator==(const WeylElement& o) const { return sign == o.sign && perm == o.perm; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const {
        if (sign != o.sign) return sign < o.sign;
        return perm < o.perm;
    }
};

WeylElement identity_element(int rank);
WeylElement make_element(const SignVector& sign, const Permutation& perm);

/// sigma . a: slot i of the result holds a at sigma^-1(i).
SignVector act(const Permutation& sigma, const SignVector& a);

WeylElement compose(const WeylElement& x, const WeylElement& y);
WeylElement compose(const WeylElement& x, const WeylElement& y, const GroupSpec& spec);
WeylElement inverse(const WeylElement& x);
/// g x g^-1, via the group law.
WeylElement conjugate(const WeylElement& x, const WeylElement& g);
/// The closed form (b (tau.a) (tau sigma tau^-1 . b^-1), tau sigma tau^-1);
/// kept separate from conjugate() so the two routes can be cross-checked.
WeylElement conjugate_closed_form(const WeylElement& x, const WeylElement& g);
int element_order(const WeylElement& x);
int total_sign_parity(const WeylElement& x);

struct SignedCycle {
    std::vector<int> support;   // cycle order, least point first (0-based)
    std::vector<int> sign_bits; // aligned with support
    int parity = 0;             // sum of sign_bits mod 2
};

/// Independent sign cycles: one per nontrivial permutation cycle, plus a
/// 1-cycle for every fixed point carrying a nonzero bit. Their product
/// reconstructs the element.
std::vector<SignedCycle> sign_cycle_decompose(const WeylElement& x);
WeylElement signed_cycle_element(int rank, const SignedCycle& c);

/// Visit every group element exactly once (deterministic order).
void for_each_element(const GroupSpec& spec, const std::function<void(const WeylElement&)>& fn);
/// Materialize the whole group; throws cutoff_error when |G| > cutoff.
std::vector<WeylElement> enumerate_group(const GroupSpec& spec, unsigned long long cutoff);

/// Conjugation generators: adjacent transpositions plus the family's sign flip.
std::vector<WeylElement> group_generators(const GroupSpec& spec);

std::string print_element(const WeylElement& x);

}  // namespace wn
