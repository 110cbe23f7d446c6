#pragma once

#include "wn/sdp.hpp"
#include "wn/weyl.hpp"

#include <functional>
#include <map>
#include <vector>

namespace wn {

/// Desk-scale concrete group of SdpElements, closed under the product.
/// Element order is the sorted value order, so every derived object
/// (transversals, classes, tables) is deterministic.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_elements(std::vector<SdpElement> elems);
    static FiniteGroup closure(const std::vector<SdpElement>& gens);
    /// Full (C_l)^m x| S_m.
    static FiniteGroup wreath(int modulus, int m);
    static FiniteGroup symmetric(int m);
    /// Weyl group of the spec as a modulus-2 group.
    static FiniteGroup weyl(const GroupSpec& spec);

    int size() const { return static_cast<int>(elems_.size()); }
    int modulus() const { return modulus_; }
    int degree() const { return degree_; }
    const std::vector<SdpElement>& elements() const { return elems_; }
    const SdpElement& element(int i) const { return elems_[static_cast<size_t>(i)]; }
    int index_of(const SdpElement& x) const;
    bool contains(const SdpElement& x) const { return index_of(x) >= 0; }
    bool contains_all(const FiniteGroup& sub) const;

    int identity_index() const { return id_; }
    int mul(int i, int j) const;
    int inv(int i) const;
    int element_order(int i) const;

    FiniteGroup subgroup_where(const std::function<bool(const SdpElement&)>& pred) const;
    FiniteGroup centralizer_of(const SdpElement& x) const;
    FiniteGroup commutator_subgroup() const;
    /// Left transversal of H in this group: indices t with G = union t_i H,
    /// identity first, ascending.
    std::vector<int> left_transversal(const FiniteGroup& H) const;
    std::vector<std::vector<int>> conjugacy_class_indices() const;
    /// Greedy small generating set (indices).
    std::vector<int> small_generating_set() const;
    /// All subgroups generated by at most two elements, deduplicated.
    std::vector<FiniteGroup> one_and_two_generated_subgroups() const;

private:
    void finish();  // sort, index, identity, multiplication table

    int modulus_ = 1;
    int degree_ = 0;
    int id_ = -1;
    std::vector<SdpElement> elems_;
    std::map<SdpElement, int> index_;
    std::vector<int> table_;  // row-major i*n+j
    std::vector<int> inv_;
};

SdpElement weyl_to_sdp(const WeylElement& x);
WeylElement sdp_to_weyl(const SdpElement& x);

}  // namespace wn
