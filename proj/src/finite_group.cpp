#include "wn/finite_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wn {

void FiniteGroup::finish() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty()) throw std::invalid_argument("FiniteGroup: empty element set");
    if (elems_.size() > 4096)
        throw std::invalid_argument(
            "FiniteGroup: order " + std::to_string(elems_.size()) +
            " is past the explicit-table limit (4096); use the streaming group API");
    modulus_ = elems_.front().modulus;
    degree_ = elems_.front().degree();
    index_.clear();
    for (int i = 0; i < size(); ++i) {
        const auto& e = elems_[static_cast<size_t>(i)];
        if (e.modulus != modulus_ || e.degree() != degree_)
            throw std::invalid_argument("FiniteGroup: mixed element shapes");
        index_[e] = i;
    }
    const size_t n = elems_.size();
    table_.assign(n * n, -1);
    inv_.assign(n, -1);
    id_ = index_of(sdp_identity(modulus_, degree_));
    if (id_ < 0) throw std::invalid_argument("FiniteGroup: identity missing");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            int k = index_of(sdp_compose(elems_[i], elems_[j]));
            if (k < 0) throw std::invalid_argument("FiniteGroup: set is not closed");
            table_[i * n + j] = k;
            if (k == id_) inv_[i] = static_cast<int>(j);
        }
    }
}

FiniteGroup FiniteGroup::from_elements(std::vector<SdpElement> elems) {
    FiniteGroup g;
    g.elems_ = std::move(elems);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::closure(const std::vector<SdpElement>& gens) {
    if (gens.empty()) throw std::invalid_argument("FiniteGroup::closure: no generators");
    std::set<SdpElement> seen;
    seen.insert(sdp_identity(gens.front().modulus, gens.front().degree()));
    std::vector<SdpElement> frontier(seen.begin(), seen.end());
    for (const auto& g : gens)
        if (seen.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<SdpElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                SdpElement y = sdp_compose(x, g);
                if (seen.insert(y).second) next.push_back(y);
                SdpElement z = sdp_compose(g, x);
                if (seen.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    FiniteGroup out;
    out.elems_.assign(seen.begin(), seen.end());
    out.finish();
    return out;
}

FiniteGroup FiniteGroup::wreath(int modulus, int m) {
    std::vector<SdpElement> elems;
    std::vector<int> img(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<size_t>(i)] = i;
    std::vector<int> exps(static_cast<size_t>(m), 0);
    do {
        Permutation p(img);
        std::fill(exps.begin(), exps.end(), 0);
        while (true) {
            elems.push_back(SdpElement{modulus, exps, p});
            int k = 0;
            while (k < m && ++exps[static_cast<size_t>(k)] == modulus) {
                exps[static_cast<size_t>(k)] = 0;
                ++k;
            }
            if (k == m) break;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return from_elements(std::move(elems));
}

FiniteGroup FiniteGroup::symmetric(int m) { return wreath(1, m); }

FiniteGroup FiniteGroup::weyl(const GroupSpec& spec) {
    std::vector<SdpElement> elems;
    for_each_element(spec, [&](const WeylElement& x) { elems.push_back(weyl_to_sdp(x)); });
    return from_elements(std::move(elems));
}

int FiniteGroup::index_of(const SdpElement& x) const {
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
}

bool FiniteGroup::contains_all(const FiniteGroup& sub) const {
    for (const auto& e : sub.elements())
        if (!contains(e)) return false;
    return true;
}

int FiniteGroup::mul(int i, int j) const {
    return table_[static_cast<size_t>(i) * elems_.size() + static_cast<size_t>(j)];
}

int FiniteGroup::inv(int i) const { return inv_[static_cast<size_t>(i)]; }

int FiniteGroup::element_order(int i) const {
    int k = 1, acc = i;
    while (acc != id_) {
        acc = mul(acc, i);
        ++k;
    }
    return k;
}

FiniteGroup FiniteGroup::subgroup_where(
    const std::function<bool(const SdpElement&)>& pred) const {
    std::vector<SdpElement> sub;
    for (const auto& e : elems_)
        if (pred(e)) sub.push_back(e);
    return from_elements(std::move(sub));
}

FiniteGroup FiniteGroup::centralizer_of(const SdpElement& x) const {
    int xi = index_of(x);
    if (xi < 0) throw std::invalid_argument("centralizer_of: element not in group");
    std::vector<SdpElement> sub;
    for (int i = 0; i < size(); ++i)
        if (mul(i, xi) == mul(xi, i)) sub.push_back(elems_[static_cast<size_t>(i)]);
    return from_elements(std::move(sub));
}

FiniteGroup FiniteGroup::commutator_subgroup() const {
    std::vector<SdpElement> gens;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            int comm = mul(mul(i, j), mul(inv(i), inv(j)));
            if (comm != id_) gens.push_back(elems_[static_cast<size_t>(comm)]);
        }
    if (gens.empty()) gens.push_back(elems_[static_cast<size_t>(id_)]);
    return closure(gens);
}

std::vector<int> FiniteGroup::left_transversal(const FiniteGroup& H) const {
    std::vector<int> hidx;
    for (const auto& e : H.elements()) {
        int i = index_of(e);
        if (i < 0) throw std::invalid_argument("left_transversal: H is not a subgroup");
        hidx.push_back(i);
    }
    std::vector<char> covered(static_cast<size_t>(size()), 0);
    std::vector<int> ts;
    for (int g = 0; g < size(); ++g) {
        if (covered[static_cast<size_t>(g)]) continue;
        ts.push_back(g);
        for (int h : hidx) covered[static_cast<size_t>(mul(g, h))] = 1;
    }
    return ts;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_class_indices() const {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(static_cast<size_t>(size()), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cls;
        for (int g = 0; g < size(); ++g) {
            int c = mul(mul(g, i), inv(g));
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> FiniteGroup::small_generating_set() const {
    std::vector<int> gens;
    std::set<int> span{id_};
    auto grow = [&](int g) {
        std::vector<int> frontier(span.begin(), span.end());
        if (span.insert(g).second) frontier.push_back(g);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (int h : gens)
                    for (int z : {mul(x, h), mul(h, x)})
                        if (span.insert(z).second) next.push_back(z);
            frontier = std::move(next);
        }
    };
    for (int i = 0; i < size() && static_cast<int>(span.size()) < size(); ++i) {
        if (span.count(i)) continue;
        gens.push_back(i);
        grow(i);
    }
    return gens;
}

std::vector<FiniteGroup> FiniteGroup::one_and_two_generated_subgroups() const {
    std::set<std::vector<int>> seen_sets;
    std::vector<FiniteGroup> out;
    auto add = [&](const std::vector<SdpElement>& gens) {
        FiniteGroup h = closure(gens);
        std::vector<int> key;
        for (const auto& e : h.elements()) key.push_back(index_of(e));
        if (seen_sets.insert(key).second) out.push_back(std::move(h));
    };
    for (int i = 0; i < size(); ++i) add({elems_[static_cast<size_t>(i)]});
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            add({elems_[static_cast<size_t>(i)], elems_[static_cast<size_t>(j)]});
    return out;
}

SdpElement weyl_to_sdp(const WeylElement& x) {
    std::vector<int> exps(static_cast<size_t>(x.rank()), 0);
    for (int i = 0; i < x.rank(); ++i) exps[static_cast<size_t>(i)] = x.sign.bit(i);
    return SdpElement{2, std::move(exps), x.perm};
}

WeylElement sdp_to_weyl(const SdpElement& x) {
    if (x.modulus != 2 && x.modulus != 1)
        throw std::invalid_argument("sdp_to_weyl: modulus must be 1 or 2");
    SignVector s(x.degree());
    if (x.modulus == 2)
        for (int i = 0; i < x.degree(); ++i)
            if (x.exps[static_cast<size_t>(i)]) s.set(i, 1);
    return WeylElement{s, x.perm};
}

}  // namespace wn
