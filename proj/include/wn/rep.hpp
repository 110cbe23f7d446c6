#pragma once

#include "wn/cyclotomic.hpp"
#include "wn/finite_group.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace wn {

using Matrix = std::vector<std::vector<Cyclo>>;

Matrix mat_identity(int d);
Matrix mat_zero(int rows, int cols);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_kron(const Matrix& a, const Matrix& b);
Matrix mat_scaled(const Matrix& a, const Cyclo& c);
bool mat_equal(const Matrix& a, const Matrix& b);
Cyclo mat_trace(const Matrix& a);
bool is_scalar_matrix(const Matrix& a, Cyclo* scalar_out = nullptr);
bool is_minus_identity(const Matrix& a);

/// Explicit matrix representation of a FiniteGroup: one exact matrix per
/// element, in the group's element order.
class Rep {
public:
    Rep() = default;
    Rep(const FiniteGroup* group, int dim, std::vector<Matrix> images);

    static Rep one_dim(const FiniteGroup& g,
                       const std::function<Cyclo(const SdpElement&)>& value);
    static Rep trivial(const FiniteGroup& g);
    /// Parity of the permutation part.
    static Rep sign_of_perm(const FiniteGroup& g);

    const FiniteGroup& group() const { return *group_; }
    int dim() const { return dim_; }
    const Matrix& at_index(int i) const { return images_[static_cast<size_t>(i)]; }
    const Matrix& at(const SdpElement& x) const;

    std::vector<Cyclo> character() const;

    Rep tensor(const Rep& other) const;           // same group
    Rep restricted(const FiniteGroup& sub) const; // sub contained in group
    Rep induced(const FiniteGroup& big) const;    // group contained in big

    /// Full multiplicativity check; quadratic in |G|.
    bool is_homomorphism() const;
    /// Random spot check of the defining relations.
    bool spot_check(int samples, uint64_t seed) const;

private:
    const FiniteGroup* group_ = nullptr;
    int dim_ = 0;
    std::vector<Matrix> images_;
};

int perm_parity(const Permutation& p);

Cyclo char_inner_product(const FiniteGroup& g, const std::vector<Cyclo>& a,
                         const std::vector<Cyclo>& b);
bool is_irreducible_character(const FiniteGroup& g, const std::vector<Cyclo>& chi);

/// All one-dimensional representations, found by assigning root-of-unity
/// values to a small generating set and propagating across the group.
std::vector<Rep> one_dimensional_reps(const FiniteGroup& g);

/// Every irreducible representation with explicit matrices. Found by
/// inducing one-dimensional characters of small subgroups and closing
/// under tensoring with the group's own one-dimensionals; completeness is
/// certified by sum of squared degrees. Throws when the search fails.
std::vector<Rep> all_irreducibles(const FiniteGroup& g);

/// True when sub occurs in big restricted to sub's group
/// (character inner product >= 1).
bool contains_as_subrepresentation(const Rep& sub, const Rep& big);

}  // namespace wn
