#include "wn/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wn {

std::string ClassDescriptor::to_string() const {
    std::ostringstream os;
    os << type.to_string() << " signs";
    for (auto [len, par] : cycle_signs) os << ' ' << len << (par ? '-' : '+');
    return os.str();
}

ClassDescriptor class_descriptor(const WeylElement& x) {
    ClassDescriptor d;
    d.type = cycle_type(x.perm);
    for (const auto& sc : sign_cycle_decompose(x))
        d.cycle_signs.emplace_back(static_cast<int>(sc.support.size()), sc.parity);
    std::sort(d.cycle_signs.begin(), d.cycle_signs.end());
    d.total_parity = total_sign_parity(x);
    return d;
}

bool ConjugacyClass::contains(const WeylElement& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

ConjugacyClass class_of(const WeylElement& x, const GroupSpec& spec,
                        unsigned long long cutoff) {
    if (spec.order() > cutoff)
        throw cutoff_error("class_of: group order exceeds cutoff");
    if (!spec.sign_allowed(x.sign) || x.rank() != spec.rank)
        throw std::invalid_argument("class_of: element not in group");
    auto gens = group_generators(spec);
    std::set<WeylElement> orbit{x};
    std::vector<WeylElement> frontier{x};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& y : frontier) {
            for (const auto& g : gens) {
                WeylElement z = conjugate(y, g);
                if (orbit.insert(z).second) next.push_back(z);
            }
        }
        frontier = std::move(next);
    }
    ConjugacyClass c;
    c.spec = spec;
    c.elements.assign(orbit.begin(), orbit.end());
    c.representative = c.elements.front();
    c.descriptor = class_descriptor(c.representative);
    return c;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec,
                                              unsigned long long cutoff) {
    if (spec.order() > cutoff)
        throw cutoff_error("conjugacy_classes: group order exceeds cutoff");
    std::set<WeylElement> remaining;
    for_each_element(spec, [&](const WeylElement& x) { remaining.insert(x); });
    std::vector<ConjugacyClass> out;
    while (!remaining.empty()) {
        ConjugacyClass c = class_of(*remaining.begin(), spec, cutoff);
        for (const auto& y : c.elements) remaining.erase(y);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.representative < b.representative;
    });
    return out;
}

namespace {

// Greedy small generating set: add elements that grow the generated subgroup.
std::vector<WeylElement> small_generating_set(const std::vector<WeylElement>& sorted_elements) {
    std::vector<WeylElement> gens;
    if (sorted_elements.empty()) return gens;
    const int n = sorted_elements.front().rank();
    std::set<WeylElement> span{identity_element(n)};
    auto close = [&](const WeylElement& g) {
        std::vector<WeylElement> frontier(span.begin(), span.end());
        span.insert(g);
        frontier.push_back(g);
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (const auto& x : frontier)
                for (const auto& h : gens) {
                    for (const auto& z : {compose(x, h), compose(h, x)})
                        if (span.insert(z).second) next.push_back(z);
                }
            frontier = std::move(next);
        }
    };
    for (const auto& x : sorted_elements) {
        if (span.count(x)) continue;
        gens.push_back(x);
        close(x);
        if (span.size() == sorted_elements.size()) break;
    }
    return gens;
}

}  // namespace

std::vector<Permutation> perm_centralizer(const Permutation& sigma) {
    const int n = sigma.degree();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    std::vector<Permutation> out;
    do {
        Permutation p(img);
        if (p.compose(sigma) == sigma.compose(p)) out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Centralizer centralizer(const WeylElement& x, const GroupSpec& spec,
                        unsigned long long cutoff) {
    if (spec.order() > cutoff)
        throw cutoff_error("centralizer: group order exceeds cutoff");
    if (!spec.sign_allowed(x.sign) || x.rank() != spec.rank)
        throw std::invalid_argument("centralizer: element not in group");
    Centralizer c;
    for_each_element(spec, [&](const WeylElement& g) {
        if (compose(g, x) == compose(x, g)) c.elements.push_back(g);
    });
    std::sort(c.elements.begin(), c.elements.end());
    c.generators = small_generating_set(c.elements);
    if (x.sign.is_zero()) {
        CentralizerFactorization f;
        const int n = spec.rank;
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
            SignVector s(n);
            for (int i = 0; i < n; ++i)
                if ((bits >> i) & 1) s.set(i, 1);
            if (!spec.sign_allowed(s)) continue;
            if (act(x.perm, s) == s) f.a_part.push_back(s);
        }
        std::sort(f.a_part.begin(), f.a_part.end());
        f.d_part = perm_centralizer(x.perm);
        std::sort(f.d_part.begin(), f.d_part.end());
        c.factorization = std::move(f);
    }
    return c;
}

BlockData block_data(const CycleType& type) {
    const int n = type.degree();
    BlockData bd;
    bd.offsets.assign(static_cast<size_t>(n), 0);
    bd.blocks.assign(static_cast<size_t>(n), {});
    int r = 0;
    for (int j = 1; j <= n; ++j) {
        bd.offsets[static_cast<size_t>(j - 1)] = r;
        int sz = j * type.count(j);
        for (int p = r; p < r + sz; ++p) bd.blocks[static_cast<size_t>(j - 1)].push_back(p);
        r += sz;
    }
    return bd;
}

Permutation normal_form_permutation(const CycleType& type) {
    const int n = type.degree();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    BlockData bd = block_data(type);
    for (int j = 2; j <= n; ++j) {
        int r = bd.offsets[static_cast<size_t>(j - 1)];
        for (int l = 0; l < type.count(j); ++l) {
            int base = r + l * j;
            for (int k = 0; k + 1 < j; ++k) img[static_cast<size_t>(base + k)] = base + k + 1;
            img[static_cast<size_t>(base + j - 1)] = base;
        }
    }
    return Permutation(img);
}

bool is_normal_form(const Permutation& sigma) {
    return sigma == normal_form_permutation(cycle_type(sigma));
}

std::pair<Permutation, Permutation> normalize(const Permutation& sigma) {
    const int n = sigma.degree();
    auto cycles = sigma.cycles_with_fixed();
    // Shorter cycles first; ties by least point (cycles() already rotates
    // each cycle to start at its least point).
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a[0] < b[0];
                     });
    std::vector<int> gamma_img(static_cast<size_t>(n));
    int pos = 0;
    for (const auto& c : cycles)
        for (int p : c) gamma_img[static_cast<size_t>(p)] = pos++;
    Permutation gamma(gamma_img);
    Permutation normal = sigma.conjugated_by(gamma);
    if (!is_normal_form(normal)) throw std::logic_error("normalize: layout failure");
    return {gamma, normal};
}

std::vector<StandardGenerator> standard_generators(const Permutation& sigma) {
    if (!is_normal_form(sigma))
        throw std::invalid_argument("standard_generators: permutation not in normal form; normalize first");
    const int n = sigma.degree();
    CycleType type = cycle_type(sigma);
    BlockData bd = block_data(type);
    std::vector<StandardGenerator> out;
    for (int j = 1; j <= n; ++j) {
        const int lam = type.count(j);
        if (lam == 0) continue;
        const int r = bd.offsets[static_cast<size_t>(j - 1)];
        for (int l = 1; l <= lam; ++l) {
            std::vector<int> cyc;
            for (int k = 0; k < j; ++k) cyc.push_back(r + (l - 1) * j + k);
            std::vector<std::vector<int>> cs;
            if (cyc.size() > 1) cs.push_back(cyc);
            out.push_back({'A', j, l, Permutation::from_cycles(n, cs)});
        }
        for (int h = 1; h <= lam - 1; ++h) {
            std::vector<std::vector<int>> cs;
            for (int s = 0; s < j; ++s)
                cs.push_back({r + (h - 1) * j + s, r + h * j + s});
            out.push_back({'B', j, h, Permutation::from_cycles(n, cs)});
        }
    }
    return out;
}

PhiImage phi(const Permutation& tau, const Permutation& sigma) {
    if (!is_normal_form(sigma))
        throw std::invalid_argument("phi: sigma must be in normal form");
    if (!(tau.compose(sigma) == sigma.compose(tau)))
        throw std::invalid_argument("phi: tau does not centralize sigma");
    const int n = sigma.degree();
    CycleType type = cycle_type(sigma);
    BlockData bd = block_data(type);
    Permutation tinv = tau.inverse();
    PhiImage out;
    for (int j = 1; j <= n; ++j) {
        const int lam = type.count(j);
        if (lam == 0) continue;
        const int r = bd.offsets[static_cast<size_t>(j - 1)];
        std::vector<int> exps(static_cast<size_t>(lam), 0);
        std::vector<int> theta_inv(static_cast<size_t>(lam), 0);
        for (int i = 0; i < lam; ++i) {
            int p = tinv(r + i * j);  // image of the i-th cycle's base point
            if (p < r || p >= r + lam * j)
                throw std::logic_error("phi: centralizing element leaves the block");
            theta_inv[static_cast<size_t>(i)] = (p - r) / j;
            exps[static_cast<size_t>(i)] = (p - r) % j;
        }
        Permutation theta = Permutation(theta_inv).inverse();
        out.per_block.emplace_back(j, make_sdp(j, std::move(exps), std::move(theta)));
    }
    return out;
}

PhiImage phi_compose(const PhiImage& x, const PhiImage& y) {
    if (x.per_block.size() != y.per_block.size())
        throw std::invalid_argument("phi_compose: block mismatch");
    PhiImage out;
    for (size_t b = 0; b < x.per_block.size(); ++b) {
        if (x.per_block[b].first != y.per_block[b].first)
            throw std::invalid_argument("phi_compose: block mismatch");
        out.per_block.emplace_back(x.per_block[b].first,
                                   sdp_compose(x.per_block[b].second, y.per_block[b].second));
    }
    return out;
}

}  // namespace wn
