#include "wn/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wn {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Infinite: return "Infinite";
        case Outcome::Finite: return "Finite";
        case Outcome::MinusOneTypeCandidate: return "MinusOneTypeCandidate";
        case Outcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string theorem2_case_name(Theorem2Case c) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    return names[static_cast<int>(c)];
}

NormalizedCharacter normalize_character(const Permutation& sigma, const AbelianCharacter& chi) {
    if (chi.modulus != 2)
        throw std::invalid_argument("normalize_character: character must live over C2 powers");
    if (chi.size() != sigma.degree())
        throw std::invalid_argument("normalize_character: character rank mismatch");
    const int n = sigma.degree();
    std::vector<int> support, rest;
    for (int i = 0; i < n; ++i)
        (chi.exps[static_cast<size_t>(i)] ? support : rest).push_back(i);
    std::vector<int> img(static_cast<size_t>(n));
    int pos = 0;
    for (int i : support) img[static_cast<size_t>(i)] = pos++;
    for (int i : rest) img[static_cast<size_t>(i)] = pos++;
    NormalizedCharacter out;
    out.nu = static_cast<int>(support.size());
    out.conjugator = Permutation(img);
    out.sigma_prime = sigma.conjugated_by(out.conjugator);
    return out;
}

bool is_matched(const Permutation& sigma, int nu) {
    bool left = true, right = true;
    for (int i = 0; i < sigma.degree(); ++i) {
        if (sigma(i) == i) continue;
        if (i >= nu) left = false;
        if (i < nu) right = false;
    }
    return left || right;
}

namespace {

struct SideData {
    CycleType type;     // type on sigma's side of the cut, with adjusted 1-count
    int lambda1_prime;
};

SideData side_type(const Permutation& sigma, int nu, int rank) {
    CycleType full = cycle_type(sigma);
    bool left = true;
    for (int i = 0; i < sigma.degree(); ++i)
        if (sigma(i) != i && i >= nu) left = false;
    int side = left ? nu : rank - nu;
    SideData sd;
    sd.lambda1_prime = full.count(1) - (rank - side);
    if (sd.lambda1_prime < 0)
        throw std::logic_error("side_type: negative fixed-point count");
    sd.type.counts = full.counts;
    sd.type.counts.resize(static_cast<size_t>(std::max<size_t>(full.counts.size(), 1)), 0);
    sd.type.counts[0] = sd.lambda1_prime;
    return sd;
}

MatchState all_of(std::initializer_list<MatchState> states) {
    MatchState acc = MatchState::Yes;
    for (MatchState s : states) {
        if (s == MatchState::No) return MatchState::No;
        if (s == MatchState::Maybe) acc = MatchState::Maybe;
    }
    return acc;
}

MatchState any_of(std::initializer_list<MatchState> states) {
    MatchState acc = MatchState::No;
    for (MatchState s : states) {
        if (s == MatchState::Yes) return MatchState::Yes;
        if (s == MatchState::Maybe) acc = MatchState::Maybe;
    }
    return acc;
}

MatchState from_bool(bool b) { return b ? MatchState::Yes : MatchState::No; }

// One-dimensional stabilizer factor of a given flavor. On S_0 and S_1 all
// degree-1 labels name the same representation.
MatchState rho_is(const RhoLabel& rho, RhoKind want, int lambda) {
    if (rho.kind == RhoKind::Opaque) {
        if (rho.degree != 1) return MatchState::No;
        return lambda <= 1 ? MatchState::Yes : MatchState::Maybe;
    }
    if (lambda <= 1) return MatchState::Yes;
    return from_bool(rho.kind == want);
}

MatchState rho_one_dimensional(const RhoLabel& rho) {
    return from_bool(rho.degree == 1 || rho.kind != RhoKind::Opaque);
}

}  // namespace

Theorem2Match match_theorem2_cases(const Permutation& sigma, int nu, const RepDescriptor& desc,
                                   int rank) {
    if (!is_matched(sigma, nu))
        throw std::invalid_argument("match_theorem2_cases: support is not matched");
    SideData sd = side_type(sigma, nu, rank);
    const CycleType& ty = sd.type;
    auto blocks = aligned_blocks(desc, ty);

    auto block_of = [&](int j) -> const DescriptorBlock* {
        for (const auto& b : blocks)
            if (b.j == j) return &b;
        return nullptr;
    };
    auto only_lengths = [&](std::initializer_list<int> allowed) {
        for (int j = 2; j <= static_cast<int>(ty.counts.size()); ++j) {
            if (ty.count(j) == 0) continue;
            if (std::find(allowed.begin(), allowed.end(), j) == allowed.end()) return false;
        }
        return true;
    };
    auto tuple_is = [&](int j, const std::vector<int>& want) {
        const DescriptorBlock* b = block_of(j);
        return from_bool(b && b->t == want);
    };
    // Fully pinned one-dimensional factor: the stated tuple with a degree-1
    // stabilizer label.
    auto mu_pinned = [&](int j, const std::vector<int>& want) {
        const DescriptorBlock* b = block_of(j);
        if (!b || b->t != want) return MatchState::No;
        return from_bool(b->rho.degree == 1 || b->rho.kind != RhoKind::Opaque);
    };
    auto mu1_ok = [&]() -> MatchState {
        if (sd.lambda1_prime == 0) return MatchState::Yes;
        const DescriptorBlock* b1 = block_of(1);
        if (!b1) return MatchState::Yes;  // defaulted epsilon
        return from_bool(b1->rho.degree == 1 || b1->rho.kind != RhoKind::Opaque);
    };

    const int c1 = sd.lambda1_prime;
    const int c2 = ty.count(2);
    const int c4 = ty.count(4);
    bool odd_present = false;
    for (int j = 3; j <= static_cast<int>(ty.counts.size()); j += 2)
        if (ty.count(j) > 0) odd_present = true;

    std::vector<std::pair<Theorem2Case, MatchState>> evaluated;

    // (1^l, 2), mu2 = chi_(1;2)
    evaluated.emplace_back(
        Theorem2Case::i,
        all_of({from_bool(c2 == 1 && only_lengths({2})), mu1_ok(), mu_pinned(2, {1})}));

    // (2, odd cycles), mu2 = chi_(1;2), odd blocks with trivial block character
    {
        MatchState ms = from_bool(c1 == 0 && c2 == 1 && odd_present &&
                                  only_lengths({2, 3, 5, 7, 9, 11, 13}));
        if (ms == MatchState::Yes) {
            ms = all_of({ms, mu_pinned(2, {1})});
            for (int j = 3; j <= static_cast<int>(ty.counts.size()) && ms != MatchState::No;
                 j += 2) {
                if (ty.count(j) == 0) continue;
                const DescriptorBlock* b = block_of(j);
                bool zeros = b && std::all_of(b->t.begin(), b->t.end(),
                                              [](int v) { return v == 0; });
                ms = all_of({ms, from_bool(zeros)});
            }
        }
        evaluated.emplace_back(Theorem2Case::ii, ms);
    }

    // (1^l, 2^3), mu2 = chi_(1,1,1;2) x (epsilon | sgn); sgn forced when l > 0
    {
        MatchState shape = from_bool(c2 == 3 && only_lengths({2}));
        const DescriptorBlock* b2 = block_of(2);
        MatchState rho2 = b2 ? (c1 > 0 ? rho_is(b2->rho, RhoKind::Sgn, 3)
                                       : any_of({rho_is(b2->rho, RhoKind::Sgn, 3),
                                                 rho_is(b2->rho, RhoKind::Epsilon, 3)}))
                             : MatchState::No;
        evaluated.emplace_back(Theorem2Case::iii,
                               all_of({shape, mu1_ok(), tuple_is(2, {1, 1, 1}), rho2}));
    }

    // (2^5)
    {
        MatchState shape = from_bool(c1 == 0 && c2 == 5 && only_lengths({2}));
        const DescriptorBlock* b2 = block_of(2);
        MatchState rho2 = b2 ? any_of({rho_is(b2->rho, RhoKind::Sgn, 5),
                                       rho_is(b2->rho, RhoKind::Epsilon, 5)})
                             : MatchState::No;
        evaluated.emplace_back(Theorem2Case::iv,
                               all_of({shape, tuple_is(2, {1, 1, 1, 1, 1}), rho2}));
    }

    // (1^l, 4), mu4 = chi_(2;4)
    evaluated.emplace_back(
        Theorem2Case::v,
        all_of({from_bool(c2 == 0 && c4 == 1 && only_lengths({4})), mu1_ok(),
                mu_pinned(4, {2})}));

    // (1^l, 4^2), mu4 = chi_(1,1;4) x sgn or chi_(3,3;4) x sgn
    {
        MatchState shape = from_bool(c2 == 0 && c4 == 2 && only_lengths({4}));
        const DescriptorBlock* b4 = block_of(4);
        MatchState t4 = any_of({tuple_is(4, {1, 1}), tuple_is(4, {3, 3})});
        MatchState rho4 = b4 ? rho_is(b4->rho, RhoKind::Sgn, 2) : MatchState::No;
        evaluated.emplace_back(Theorem2Case::vi, all_of({shape, mu1_ok(), t4, rho4}));
    }

    // (2, 4): (mu2, mu4) = (chi_(1;2), trivial) or (trivial, chi_(2;4))
    {
        MatchState shape = from_bool(c1 == 0 && c2 == 1 && c4 == 1 && only_lengths({2, 4}));
        MatchState combo = any_of({all_of({mu_pinned(2, {1}), mu_pinned(4, {0})}),
                                   all_of({mu_pinned(2, {0}), mu_pinned(4, {2})})});
        evaluated.emplace_back(Theorem2Case::vii, all_of({shape, combo}));
    }

    // (2, 4^2), mu2 trivial, mu4 = chi_(1,1;4) x sgn or chi_(3,3;4) x sgn
    {
        MatchState shape = from_bool(c1 == 0 && c2 == 1 && c4 == 2 && only_lengths({2, 4}));
        const DescriptorBlock* b4 = block_of(4);
        MatchState t4 = any_of({tuple_is(4, {1, 1}), tuple_is(4, {3, 3})});
        MatchState rho4 = b4 ? rho_is(b4->rho, RhoKind::Sgn, 2) : MatchState::No;
        evaluated.emplace_back(Theorem2Case::viii,
                               all_of({shape, mu_pinned(2, {0}), t4, rho4}));
    }

    // (2^2, 4), deg mu2 = 1, mu4 = chi_(2;4)
    {
        MatchState shape = from_bool(c1 == 0 && c2 == 2 && c4 == 1 && only_lengths({2, 4}));
        const DescriptorBlock* b2 = block_of(2);
        MatchState mu2 = MatchState::No;
        if (b2 && b2->t.size() == 2 && b2->t[0] == b2->t[1])
            mu2 = rho_one_dimensional(b2->rho);
        evaluated.emplace_back(Theorem2Case::ix, all_of({shape, mu2, mu_pinned(4, {2})}));
    }

    Theorem2Match out;
    for (auto& [c, ms] : evaluated) {
        if (ms == MatchState::Yes) out.matched.push_back(c);
        if (ms == MatchState::Maybe) out.indeterminate = true;
    }
    return out;
}

std::optional<Theorem2Case> match_theorem2_case(const Permutation& sigma, int nu,
                                                const RepDescriptor& desc, int rank) {
    Theorem2Match m = match_theorem2_cases(sigma, nu, desc, rank);
    if (m.matched.empty()) return std::nullopt;
    return m.matched.front();
}

Verdict classify_irreducible(const Permutation& sigma, const AbelianCharacter& chi,
                             const RepDescriptor& desc, const GroupSpec& spec) {
    if (sigma.degree() != spec.rank)
        throw std::invalid_argument("classify_irreducible: rank mismatch");
    Verdict v;
    NormalizedCharacter norm = normalize_character(sigma, chi);
    if (!is_matched(norm.sigma_prime, norm.nu)) {
        v.outcome = Outcome::Unknown;
        v.trace.push_back({"theorem-2/hypothesis",
                           "support straddles the cut at nu=" + std::to_string(norm.nu) +
                               "; outside the matched hypothesis"});
        return v;
    }
    Theorem2Match m = match_theorem2_cases(norm.sigma_prime, norm.nu, desc, spec.rank);
    if (!m.matched.empty()) {
        v.outcome = Outcome::MinusOneTypeCandidate;
        for (Theorem2Case c : m.matched)
            v.trace.push_back({"theorem-2/case-" + theorem2_case_name(c),
                               "descriptor fits the finiteness-compatible case; "
                               "representation is of -1-type"});
        return v;
    }
    if (m.indeterminate) {
        v.outcome = Outcome::Unknown;
        v.trace.push_back({"theorem-2/indeterminate",
                           "opaque representation labels leave at least one case undecided"});
        return v;
    }
    v.outcome = Outcome::Infinite;
    v.trace.push_back({"theorem-2/contrapositive",
                       "matched module at nu=" + std::to_string(norm.nu) +
                           " fits no finiteness-compatible case"});
    return v;
}

namespace {

WeylElement central_flip(int rank) {
    SignVector s(rank);
    for (int i = 0; i < rank; ++i) s.set(i, 1);
    return WeylElement{s, Permutation(rank)};
}

}  // namespace

Verdict classify_reducible(const YDModuleSpec& m) {
    if (m.summands.size() < 2)
        throw std::invalid_argument("classify_reducible: at least two summands required");
    Verdict v;
    const int n = m.spec.rank;
    for (const auto& s : m.summands)
        if (s.support.rank() != n || !m.spec.sign_allowed(s.support.sign))
            throw std::invalid_argument("classify_reducible: summand outside the group");

    std::vector<const YDSummand*> outside;
    for (const auto& s : m.summands)
        if (!s.support.perm.is_identity()) outside.push_back(&s);

    if (outside.size() >= 2) {
        CycleType two_two = parse_cycle_type("2^2");
        if (n != 4) {
            v.outcome = Outcome::Infinite;
            v.trace.push_back({"theorem-4",
                               "two supports outside the sign subgroup at rank " +
                                   std::to_string(n) + " (rank 4 required)"});
            return v;
        }
        for (const auto* s : outside) {
            if (cycle_type(s->support.perm) != two_two) {
                v.outcome = Outcome::Infinite;
                v.trace.push_back({"theorem-4",
                                   "outside support " + print_element(s->support) +
                                       " is not of type 2^2"});
                return v;
            }
        }
        for (const auto* s : outside)
            if (total_sign_parity(s->support) != total_sign_parity(outside.front()->support)) {
                v.outcome = Outcome::Infinite;
                v.trace.push_back({"theorem-4", "outside supports carry different signs"});
                return v;
            }
        v.outcome = Outcome::Unknown;
        v.trace.push_back({"theorem-4",
                           "necessary conditions hold (rank 4, type 2^2, stable sign); "
                           "finiteness undecided"});
        return v;
    }

    WeylElement central = central_flip(n);
    bool all_central = m.spec.sign_allowed(central.sign);
    bool all_odd_nu = true;
    for (const auto& s : m.summands) {
        if (!(s.support == central)) all_central = false;
        if (!s.rep.nu || (*s.rep.nu % 2) == 0) all_odd_nu = false;
    }
    if (all_central && all_odd_nu) {
        v.outcome = Outcome::Finite;
        v.trace.push_back({"remark-3.8",
                           "every support is the central flip and every nu is odd"});
        return v;
    }
    v.outcome = Outcome::Unknown;
    v.trace.push_back({"coverage", "module is outside the decided configurations"});
    return v;
}

Verdict classify_module(const YDModuleSpec& m) {
    if (m.summands.empty())
        throw std::invalid_argument("classify_module: no summands");
    if (m.summands.size() >= 2) return classify_reducible(m);

    const YDSummand& s = m.summands.front();
    const int n = m.spec.rank;
    if (s.support.sign.is_zero()) {
        AbelianCharacter chi;
        if (s.rep.chi_bits)
            chi = character_from_bits(*s.rep.chi_bits);
        else if (s.rep.nu)
            chi = chi_nu(*s.rep.nu, m.spec);
        else
            chi = chi_nu(0, m.spec);
        return classify_irreducible(s.support.perm, chi, s.rep, m.spec);
    }
    WeylElement central = central_flip(n);
    if (s.support == central && m.spec.sign_allowed(central.sign) && s.rep.nu &&
        (*s.rep.nu % 2) == 1) {
        Verdict v;
        v.outcome = Outcome::Finite;
        v.trace.push_back({"theorem-3",
                           "central support with odd-weight leading character"});
        return v;
    }
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.trace.push_back({"coverage", "support carries signs; outside the decided cases"});
    return v;
}

Verdict classify_rsr(const RSRDescriptor& rsr) {
    Verdict v;
    if (rsr.entries.empty())
        throw std::invalid_argument("classify_rsr: no entries");
    for (const auto& e : rsr.entries)
        if (e.u.rank() != rsr.spec.rank || !rsr.spec.sign_allowed(e.u.sign))
            throw std::invalid_argument("classify_rsr: class representative outside the group");

    long long outside_pairs = 0;
    std::vector<const RSREntry*> outside;
    for (const auto& e : rsr.entries) {
        if (e.u.perm.is_identity()) continue;
        outside.push_back(&e);
        outside_pairs += std::max<size_t>(e.reps.size(), 1);
    }
    if (outside_pairs >= 2) {
        CycleType two_two = parse_cycle_type("2^2");
        if (rsr.spec.rank != 4) {
            v.outcome = Outcome::Infinite;
            v.trace.push_back({"theorem-4", "two class-representation pairs outside the sign "
                                            "subgroup at rank " +
                                                std::to_string(rsr.spec.rank)});
            return v;
        }
        for (const auto* e : outside)
            if (cycle_type(e->u.perm) != two_two) {
                v.outcome = Outcome::Infinite;
                v.trace.push_back({"theorem-4", "outside support " + print_element(e->u) +
                                                    " is not of type 2^2"});
                return v;
            }
        for (const auto* e : outside)
            if (total_sign_parity(e->u) != total_sign_parity(outside.front()->u)) {
                v.outcome = Outcome::Infinite;
                v.trace.push_back({"theorem-4", "outside supports carry different signs"});
                return v;
            }
        v.outcome = Outcome::Unknown;
        v.trace.push_back({"theorem-4", "necessary conditions hold; finiteness undecided"});
        return v;
    }
    if (is_central_quantum_linear(rsr)) {
        v.outcome = Outcome::Finite;
        v.trace.push_back({"theorem-3", "central quantum linear space: central class with "
                                        "odd-weight characters"});
        return v;
    }
    v.outcome = Outcome::Unknown;
    v.trace.push_back({"coverage", "ramification is outside the decided configurations"});
    return v;
}

long long rsr_entry_degree(const RSREntry& entry, const GroupSpec& spec) {
    SignVector ones(spec.rank);
    for (int i = 0; i < spec.rank; ++i) ones.set(i, 1);
    if (!(entry.u.sign == ones) || !entry.u.perm.is_identity()) return -1;
    long long total = 0;
    for (const auto& rep : entry.reps) {
        int weight = 0;
        if (rep.chi_bits)
            weight = character_from_bits(*rep.chi_bits).weight();
        else if (rep.nu)
            weight = *rep.nu;
        long long binom = 1;
        for (int i = 1; i <= weight; ++i)
            binom = binom * (spec.rank - weight + i) / i;
        long long deg = binom;
        for (const auto& label : {rep.rho_prime, rep.rho_prime_prime})
            if (label) {
                if (label->kind == RhoKind::Opaque && label->degree < 1) return -1;
                deg *= label->degree;
            }
        total += deg;
    }
    return total;
}

bool is_central_quantum_linear(const RSRDescriptor& rsr) {
    if (rsr.entries.empty()) return false;
    WeylElement central = central_flip(rsr.spec.rank);
    if (!rsr.spec.sign_allowed(central.sign)) return false;
    for (const auto& entry : rsr.entries) {
        if (!(entry.u == central)) return false;
        if (entry.reps.empty()) return false;
        for (const auto& rep : entry.reps) {
            int weight = -1;
            if (rep.chi_bits)
                weight = character_from_bits(*rep.chi_bits).weight();
            else if (rep.nu)
                weight = *rep.nu;
            else
                weight = 0;
            if (weight % 2 == 0) return false;
        }
    }
    return true;
}

}  // namespace wn
