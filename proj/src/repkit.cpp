#include "wn/repkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wn {

bool AbelianCharacter::is_constant() const {
    for (int e : exps)
        if (e != exps[0]) return false;
    return true;
}

int AbelianCharacter::weight() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

Cyclo AbelianCharacter::eval(const std::vector<int>& a) const {
    if (a.size() != exps.size())
        throw std::invalid_argument("AbelianCharacter::eval: size mismatch");
    long long s = 0;
    for (size_t i = 0; i < exps.size(); ++i)
        s += static_cast<long long>(exps[i]) * a[i];
    // chi_l(g_l) = zeta_l^(l-1), so a tuple evaluates to zeta_l^((l-1) s).
    return Cyclo::root(modulus, (static_cast<long long>(modulus) - 1) * s);
}

Cyclo AbelianCharacter::eval_sign(const SignVector& a) const {
    std::vector<int> v(static_cast<size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) v[static_cast<size_t>(i)] = a.bit(i);
    return eval(v);
}

AbelianCharacter character_from_bits(const SignVector& bits) {
    AbelianCharacter c;
    c.modulus = 2;
    c.exps.resize(static_cast<size_t>(bits.size()));
    for (int i = 0; i < bits.size(); ++i) c.exps[static_cast<size_t>(i)] = bits.bit(i);
    return c;
}

AbelianCharacter chi_nu(int nu, const GroupSpec& spec) {
    int max_nu = spec.family == Family::A ? 0 : (spec.family == Family::D ? spec.rank - 1 : spec.rank);
    if (nu < 0 || nu > max_nu)
        throw std::invalid_argument("chi_nu: nu out of range for family " +
                                    family_name(spec.family));
    AbelianCharacter c;
    c.modulus = 2;
    c.exps.assign(static_cast<size_t>(spec.rank), 0);
    for (int i = 0; i < nu; ++i) c.exps[static_cast<size_t>(i)] = 1;
    return c;
}

FiniteGroup chi_nu_stabilizer(int nu, int n) {
    return FiniteGroup::symmetric(n).subgroup_where([&](const SdpElement& e) {
        for (int i = 0; i < nu; ++i)
            if (e.perm(i) >= nu) return false;
        return true;
    });
}

bool stabilizer_full(const AbelianCharacter& chi) { return chi.is_constant(); }

std::vector<Permutation> character_stabilizer_brute(const AbelianCharacter& chi) {
    const int m = chi.size();
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation h(img);
        // h . chi has tuple t o h^-1; equality as tuples.
        bool fixed = true;
        for (int i = 0; i < m && fixed; ++i)
            if (chi.exps[static_cast<size_t>(h.inverse()(i))] != chi.exps[static_cast<size_t>(i)])
                fixed = false;
        if (fixed) out.push_back(h);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

RhoLabel rho_epsilon() { return RhoLabel{RhoKind::Epsilon, 1, ""}; }
RhoLabel rho_sgn() { return RhoLabel{RhoKind::Sgn, 1, ""}; }
RhoLabel rho_opaque(std::string name, int degree) {
    return RhoLabel{RhoKind::Opaque, degree, std::move(name)};
}

RhoLabel parse_rho_label(const std::string& s) {
    if (s == "epsilon" || s == "eps" || s == "trivial" || s.empty()) return rho_epsilon();
    if (s == "sgn" || s == "sign") return rho_sgn();
    auto at = s.find('@');
    if (at != std::string::npos) {
        int deg = std::stoi(s.substr(at + 1));
        if (deg < 1) throw std::invalid_argument("parse_rho_label: bad degree");
        return rho_opaque(s.substr(0, at), deg);
    }
    return rho_opaque(s, 1);
}

std::string print_rho_label(const RhoLabel& r) {
    switch (r.kind) {
        case RhoKind::Epsilon: return "epsilon";
        case RhoKind::Sgn: return "sgn";
        case RhoKind::Opaque: return r.name + "@" + std::to_string(r.degree);
    }
    return "epsilon";
}

std::vector<DescriptorBlock> aligned_blocks(const RepDescriptor& desc, const CycleType& type) {
    std::map<int, DescriptorBlock> by_j;
    for (const auto& b : desc.blocks) {
        if (b.j < 1) throw std::invalid_argument("descriptor: block length must be >= 1");
        if (by_j.count(b.j)) throw std::invalid_argument("descriptor: duplicate block");
        by_j[b.j] = b;
    }
    std::vector<DescriptorBlock> out;
    for (int j = 1; j <= static_cast<int>(type.counts.size()); ++j) {
        int lam = type.count(j);
        auto it = by_j.find(j);
        if (lam == 0) {
            if (it != by_j.end() && !it->second.t.empty())
                throw std::invalid_argument("descriptor: block for absent cycle length " +
                                            std::to_string(j));
            continue;
        }
        DescriptorBlock b;
        if (it != by_j.end()) {
            b = it->second;
            by_j.erase(it);
        } else {
            b.j = j;
            b.rho = rho_epsilon();
        }
        if (b.t.empty()) b.t.assign(static_cast<size_t>(lam), 0);
        if (static_cast<int>(b.t.size()) != lam)
            throw std::invalid_argument("descriptor: tuple length mismatch at cycle length " +
                                        std::to_string(j));
        for (int v : b.t)
            if (v < 0 || v >= j)
                throw std::invalid_argument("descriptor: exponent out of range at cycle length " +
                                            std::to_string(j));
        out.push_back(std::move(b));
    }
    for (const auto& [j, b] : by_j)
        if (!b.t.empty())
            throw std::invalid_argument("descriptor: block for absent cycle length " +
                                        std::to_string(j));
    return out;
}

long long tuple_stabilizer_index(const std::vector<int>& t) {
    std::map<int, int> mult;
    for (int v : t) ++mult[v];
    long long idx = 1;
    int placed = 0;
    // multinomial m! / prod(count!)
    for (auto [v, c] : mult) {
        (void)v;
        for (int i = 1; i <= c; ++i) {
            ++placed;
            idx = idx * placed / i;  // binomial accumulation stays integral
        }
    }
    return idx;
}

long long descriptor_degree(const RepDescriptor& desc, const CycleType& type) {
    long long deg = 1;
    for (const auto& b : aligned_blocks(desc, type))
        deg *= tuple_stabilizer_index(b.t) * b.rho.degree;
    return deg;
}

DistinguishedElement distinguished_element(const RepDescriptor& desc, const CycleType& type) {
    Rat xi(1, 2);
    for (const auto& b : aligned_blocks(desc, type))
        for (int v : b.t) xi += Rat(v, b.j);
    return DistinguishedElement{xi};
}

Cyclo char_value_at_sigma(const RepDescriptor& desc, const Permutation& sigma) {
    CycleType type = cycle_type(sigma);
    Cyclo scalar = Cyclo::integer(1);
    for (const auto& b : aligned_blocks(desc, type)) {
        long long s = std::accumulate(b.t.begin(), b.t.end(), 0ll);
        scalar *= Cyclo::root(b.j, s);
    }
    return scalar.scaled(Rat(descriptor_degree(desc, type)));
}

bool is_minus_one_type(const RepDescriptor& desc, const Permutation& sigma) {
    CycleType type = cycle_type(sigma);
    Rat xi = distinguished_element(desc, type).value;
    return is_integer(xi) && type.element_order() % 2 == 0;
}

std::vector<RepDescriptor> enumerate_one_dim_reps(const Permutation& sigma) {
    CycleType type = cycle_type(sigma);
    std::vector<RepDescriptor> out{RepDescriptor{}};
    for (int j = 1; j <= static_cast<int>(type.counts.size()); ++j) {
        int lam = type.count(j);
        if (lam == 0) continue;
        std::vector<DescriptorBlock> variants;
        for (int t = 0; t < j; ++t) {
            DescriptorBlock b;
            b.j = j;
            b.t.assign(static_cast<size_t>(lam), t);
            b.rho = rho_epsilon();
            variants.push_back(b);
            if (lam >= 2) {
                b.rho = rho_sgn();
                variants.push_back(b);
            }
        }
        std::vector<RepDescriptor> next;
        for (const auto& d : out)
            for (const auto& v : variants) {
                RepDescriptor nd = d;
                nd.blocks.push_back(v);
                next.push_back(std::move(nd));
            }
        out = std::move(next);
    }
    return out;
}

FiniteGroup perm_part_subgroup(const FiniteGroup& g) {
    return g.subgroup_where([](const SdpElement& e) {
        for (int v : e.exps)
            if (v != 0) return false;
        return true;
    });
}

FiniteGroup chi_stabilizer_subgroup(const FiniteGroup& g, const AbelianCharacter& chi) {
    if (chi.size() != g.degree() || chi.modulus != g.modulus())
        throw std::invalid_argument("chi_stabilizer_subgroup: character shape mismatch");
    // Exponent vectors present in g.
    std::vector<std::vector<int>> a_part;
    for (const auto& e : g.elements())
        if (e.perm.is_identity()) a_part.push_back(e.exps);
    auto stabilizes = [&](const Permutation& h) {
        std::vector<int> moved(static_cast<size_t>(g.degree()));
        for (const auto& a : a_part) {
            for (int i = 0; i < g.degree(); ++i)
                moved[static_cast<size_t>(h(i))] = a[static_cast<size_t>(i)];
            if (chi.eval(moved) != chi.eval(a)) return false;
        }
        return true;
    };
    std::map<Permutation, bool> cache;
    return g.subgroup_where([&](const SdpElement& e) {
        auto it = cache.find(e.perm);
        if (it == cache.end()) it = cache.emplace(e.perm, stabilizes(e.perm)).first;
        return it->second;
    });
}

Rep theta_rep(const FiniteGroup& g, const AbelianCharacter& chi, const Rep& rho_on_perms) {
    FiniteGroup g_chi = chi_stabilizer_subgroup(g, chi);
    std::vector<Matrix> images;
    images.reserve(static_cast<size_t>(g_chi.size()));
    for (const auto& e : g_chi.elements()) {
        SdpElement perm_only = sdp_identity(g.modulus(), g.degree());
        perm_only.perm = e.perm;
        int pi = rho_on_perms.group().index_of(perm_only);
        if (pi < 0)
            throw std::invalid_argument("theta_rep: rho is not defined on the stabilizer");
        images.push_back(mat_scaled(rho_on_perms.at_index(pi), chi.eval(e.exps)));
    }
    Rep base(&g_chi, rho_on_perms.dim(), std::move(images));
    // Induce while g_chi is alive; the result carries images over g.
    return base.induced(g);
}

Matrix descriptor_matrix_at_sigma(const RepDescriptor& desc, const CycleType& type) {
    Matrix acc = mat_identity(1);
    for (const auto& b : aligned_blocks(desc, type)) {
        const int lam = type.count(b.j);
        FiniteGroup w = FiniteGroup::wreath(b.j, lam);
        AbelianCharacter chi{b.j, b.t};
        FiniteGroup d_chi = perm_part_subgroup(w).subgroup_where([&](const SdpElement& e) {
            for (int i = 0; i < lam; ++i)
                if (b.t[static_cast<size_t>(e.perm(i))] != b.t[static_cast<size_t>(i)])
                    return false;
            return true;
        });
        Rep rho;
        switch (b.rho.kind) {
            case RhoKind::Epsilon: rho = Rep::trivial(d_chi); break;
            case RhoKind::Sgn: rho = Rep::sign_of_perm(d_chi); break;
            case RhoKind::Opaque:
                throw std::invalid_argument("descriptor_matrix_at_sigma: opaque label has no matrices");
        }
        Rep theta = theta_rep(w, chi, rho);
        SdpElement central = sdp_identity(b.j, lam);
        for (auto& v : central.exps) v = b.j - 1;
        acc = mat_kron(acc, theta.at(central));
    }
    return acc;
}

bool is_sub_rsr(const Rep& rho, const Rep& rho_prime) {
    return contains_as_subrepresentation(rho, rho_prime);
}

}  // namespace wn
