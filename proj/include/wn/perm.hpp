#pragma once

#include <compare>
#include <string>
#include <vector>

namespace wn {

/// Permutation of {0..n-1}. Points are 1-based in all textual forms and
/// 0-based internally; the serialization functions own the boundary.
///
/// Composition is left action on points: (f*g)(x) = f(g(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation compose(const Permutation& g) const;  // this after g
    Permutation inverse() const;
    Permutation conjugated_by(const Permutation& g) const;  // g * this * g^-1
    int order() const;
    /// Embed into a larger degree, fixing the new points.
    Permutation extended(int degree) const;

    /// Nontrivial cycles, each rotated to start at its least point,
    /// sorted by least point. 0-based.
    std::vector<std::vector<int>> cycles() const;
    /// All cycles including fixed points, same ordering.
    std::vector<std::vector<int>> cycles_with_fixed() const;

    auto operator<=>(const Permutation& o) const = default;

    static Permutation transposition(int degree, int a, int b);
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

private:
    std::vector<int> img_;
};

/// Cycle type 1^l1 2^l2 ... n^ln with sum i*li = n.
struct CycleType {
    std::vector<int> counts;  // counts[i-1] = number of i-cycles

    int degree() const;
    long long element_order() const;  // lcm of lengths with count > 0
    int count(int len) const {
        return (len >= 1 && len <= static_cast<int>(counts.size())) ? counts[len - 1] : 0;
    }
    std::string to_string() const;  // e.g. "1^2 2^1"
    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);
CycleType parse_cycle_type(const std::string& text);

/// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; identity is "()".
std::string print_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& text, int degree);

}  // namespace wn
