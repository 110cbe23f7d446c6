#include "wn/verify.hpp"

#include "wn/repkit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wn {

namespace {

constexpr unsigned long long kCutoff = 1'000'000;

void partitions_of(int n, const std::function<void(const CycleType&)>& fn) {
    CycleType type;
    type.counts.assign(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            fn(type);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            ++type.counts[static_cast<size_t>(part - 1)];
            rec(remaining - part, part);
            --type.counts[static_cast<size_t>(part - 1)];
        }
    };
    rec(n, n);
}

/// All exponent assignments of a cycle type: one value in [0, j) per cycle.
void for_each_exponent_tuple(const CycleType& type,
                             const std::function<void(const RepDescriptor&)>& fn) {
    struct Slot {
        int j;
        int k;
    };
    std::vector<Slot> slots;
    for (int j = 1; j <= static_cast<int>(type.counts.size()); ++j)
        for (int k = 0; k < type.count(j); ++k) slots.push_back({j, k});
    std::vector<int> value(slots.size(), 0);
    while (true) {
        RepDescriptor desc;
        std::map<int, std::vector<int>> tuples;
        for (size_t s = 0; s < slots.size(); ++s)
            tuples[slots[s].j].push_back(value[s]);
        for (auto& [j, t] : tuples) desc.blocks.push_back({j, t, rho_epsilon()});
        fn(desc);
        size_t s = 0;
        while (s < slots.size() && ++value[s] == slots[s].j) {
            value[s] = 0;
            ++s;
        }
        if (s == slots.size()) break;
    }
}

RepDescriptor make_desc(std::vector<DescriptorBlock> blocks) {
    RepDescriptor d;
    d.blocks = std::move(blocks);
    return d;
}

std::string rat_str(const Rat& r) { return to_string(r); }

CheckResult check(const std::string& name, bool pass, const std::string& detail) {
    return CheckResult{name, pass, detail};
}

}  // namespace

std::vector<CheckResult> verify_xi_table() {
    std::vector<CheckResult> out;
    auto xi_of = [](const std::string& type_text, RepDescriptor desc) {
        return distinguished_element(desc, parse_cycle_type(type_text)).value;
    };
    struct Row {
        std::string name;
        std::string type;
        RepDescriptor desc;
        Rat expected;
    };
    std::vector<Row> rows = {
        {"2.8/i   (1^2 2), t2=(1)", "1^2 2^1", make_desc({{2, {1}, rho_epsilon()}}), Rat(1)},
        {"2.8/ii  (2 3), t2=(1)", "2^1 3^1",
         make_desc({{2, {1}, rho_epsilon()}, {3, {0}, rho_epsilon()}}), Rat(1)},
        {"2.8/iii (1^2 2^3), t2=(1,1,1)", "1^2 2^3",
         make_desc({{2, {1, 1, 1}, rho_sgn()}}), Rat(2)},
        {"2.8/iv  (2^5), t2=(1,...,1)", "2^5",
         make_desc({{2, {1, 1, 1, 1, 1}, rho_epsilon()}}), Rat(3)},
        {"2.8/v   (1^2 4), t4=(2)", "1^2 4^1", make_desc({{4, {2}, rho_epsilon()}}), Rat(1)},
        {"2.8/vi  (1 4^2), t4=(1,1)", "1^1 4^2",
         make_desc({{4, {1, 1}, rho_sgn()}}), Rat(1)},
        {"2.8/vi  (1 4^2), t4=(3,3)", "1^1 4^2",
         make_desc({{4, {3, 3}, rho_sgn()}}), Rat(2)},
        {"2.8/vii (2 4), t2=(1) t4=(0)", "2^1 4^1",
         make_desc({{2, {1}, rho_epsilon()}, {4, {0}, rho_epsilon()}}), Rat(1)},
        {"2.8/vii (2 4), t2=(0) t4=(2)", "2^1 4^1",
         make_desc({{2, {0}, rho_epsilon()}, {4, {2}, rho_epsilon()}}), Rat(1)},
        {"2.8/viii(2 4^2), t4=(1,1)", "2^1 4^2",
         make_desc({{2, {0}, rho_epsilon()}, {4, {1, 1}, rho_sgn()}}), Rat(1)},
        {"2.8/viii(2 4^2), t4=(3,3)", "2^1 4^2",
         make_desc({{2, {0}, rho_epsilon()}, {4, {3, 3}, rho_sgn()}}), Rat(2)},
        {"2.8/ix  (2^2 4), t2=(0,0) t4=(2)", "2^2 4^1",
         make_desc({{2, {0, 0}, rho_epsilon()}, {4, {2}, rho_epsilon()}}), Rat(1)},
        {"2.8/ix  (2^2 4), t2=(1,1) t4=(2)", "2^2 4^1",
         make_desc({{2, {1, 1}, rho_epsilon()}, {4, {2}, rho_epsilon()}}), Rat(2)},
    };
    for (auto& row : rows) {
        Rat got = xi_of(row.type, row.desc);
        out.push_back(check(row.name, got == row.expected,
                            "xi = " + rat_str(got) + ", expected " + rat_str(row.expected)));
    }
    // every table row is of -1-type
    for (auto& row : rows) {
        Permutation sigma = normal_form_permutation(parse_cycle_type(row.type));
        out.push_back(check(row.name + " is -1-type", is_minus_one_type(row.desc, sigma),
                            "xi integral and even order"));
    }
    return out;
}

std::vector<CheckResult> verify_integrality_equivalence(int max_n) {
    std::vector<CheckResult> out;
    if (max_n <= 0) max_n = 6;
    for (int n = 1; n <= max_n; ++n) {
        long long tuples = 0, mismatches = 0;
        partitions_of(n, [&](const CycleType& type) {
            Permutation sigma = normal_form_permutation(type);
            for_each_exponent_tuple(type, [&](const RepDescriptor& desc) {
                ++tuples;
                bool integral = is_integer(distinguished_element(desc, type).value);
                Cyclo value = char_value_at_sigma(desc, sigma);
                Cyclo minus_deg = Cyclo::rational(Rat(-descriptor_degree(desc, type)));
                bool minus = value == minus_deg;
                if (integral != minus) ++mismatches;
            });
        });
        std::ostringstream detail;
        detail << tuples << " exponent tuples over all types of degree " << n << ", "
               << mismatches << " mismatches";
        out.push_back(check("2.4/n=" + std::to_string(n), mismatches == 0, detail.str()));
    }
    return out;
}

std::vector<CheckResult> verify_centralizer_embedding() {
    std::vector<CheckResult> out;
    struct Case {
        int l, m;
    };
    for (Case c : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
        CycleType type;
        type.counts.assign(static_cast<size_t>(c.l * c.m), 0);
        type.counts[static_cast<size_t>(c.l - 1)] = c.m;
        Permutation sigma = normal_form_permutation(type);
        auto cent = perm_centralizer(sigma);
        std::string tag = "2.1/type " + type.to_string();

        long long expected = 1;
        for (int i = 0; i < c.m; ++i) expected *= c.l;
        for (int i = 2; i <= c.m; ++i) expected *= i;
        out.push_back(check(tag + " cardinality",
                            static_cast<long long>(cent.size()) == expected,
                            std::to_string(cent.size()) + " vs l^m m! = " +
                                std::to_string(expected)));

        bool hom = true;
        std::set<PhiImage> images;
        for (const auto& x : cent) {
            images.insert(phi(x, sigma));
            for (const auto& y : cent)
                if (!(phi(x.compose(y), sigma) == phi_compose(phi(x, sigma), phi(y, sigma))))
                    hom = false;
        }
        out.push_back(check(tag + " homomorphism+bijection",
                            hom && images.size() == cent.size(),
                            "checked all " + std::to_string(cent.size() * cent.size()) +
                                " pairs"));

        PhiImage ps = phi(sigma, sigma);
        bool central_ok = ps.per_block.size() == 1 &&
                          ps.per_block[0].second.perm.is_identity() &&
                          std::all_of(ps.per_block[0].second.exps.begin(),
                                      ps.per_block[0].second.exps.end(),
                                      [&](int e) { return e == c.l - 1; });
        out.push_back(check(tag + " image of sigma", central_ok,
                            "phi(sigma) = ((g^{l-1},...,g^{l-1}), id)"));
    }
    return out;
}

std::vector<CheckResult> verify_square_commuting_catalog(int n) {
    std::vector<CheckResult> out;
    std::vector<int> ns = n > 0 ? std::vector<int>{n} : std::vector<int>{3, 4, 5, 6};
    std::map<int, std::set<std::pair<std::string, std::string>>> expected = {
        {3, {{"1^1 2^1", "3^1"}, {"3^1", "3^1"}}},
        {4, {{"2^2", "2^2"}, {"2^2", "4^1"}, {"1^2 2^1", "2^2"}}},
        {5, {}},
        {6, {{"1^4 2^1", "2^3"}}},
    };
    for (int deg : ns) {
        SquareCommReport report = enumerate_pairs({Family::A, deg}, kCutoff);
        std::set<std::pair<std::string, std::string>> found;
        for (const auto& pv : report.pairs) {
            if (!pv.square_commutative) continue;
            std::string a = report.classes[pv.first_class].descriptor.type.to_string();
            std::string b = report.classes[pv.second_class].descriptor.type.to_string();
            if (b < a) std::swap(a, b);
            found.insert({a, b});
        }
        std::ostringstream detail;
        detail << "found {";
        for (const auto& [a, b] : found) detail << " (" << a << " , " << b << ")";
        detail << " }";
        bool pass = expected.count(deg) ? found == expected[deg] : false;
        out.push_back(check("3.10/n=" + std::to_string(deg), pass, detail.str()));
    }
    return out;
}

std::vector<CheckResult> verify_rank4_sign_pairs(Family family) {
    std::vector<CheckResult> out;
    GroupSpec spec{family, 4};
    auto classes = conjugacy_classes(spec, kCutoff);
    auto type_of = [](const ConjugacyClass& c) { return c.descriptor.type.to_string(); };

    struct NegativePair {
        const char* name;
        const char* t1;
        const char* t2;
    };
    std::vector<NegativePair> negatives = {
        {"3.11/i  over ((123),(123))", "1^1 3^1", "1^1 3^1"},
        {"3.11/ii over ((12),(123))", "1^2 2^1", "1^1 3^1"},
        {"3.11/iii over ((12)(34),(1234))", "2^2", "4^1"},
        {"3.11/iv over ((12),(12)(34))", "1^2 2^1", "2^2"},
    };
    for (const auto& np : negatives) {
        int pairs = 0, commuting = 0;
        std::string witness;
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i; j < classes.size(); ++j) {
                std::string a = type_of(classes[i]), b = type_of(classes[j]);
                bool match = (a == np.t1 && b == np.t2) || (a == np.t2 && b == np.t1);
                if (!match) continue;
                ++pairs;
                if (square_commute(classes[i], classes[j])) {
                    ++commuting;
                    if (witness.empty())
                        witness = print_element(classes[i].representative) + " ~ " +
                                  print_element(classes[j].representative);
                }
            }
        std::ostringstream detail;
        detail << pairs << " class pairs";
        if (commuting == 0)
            detail << ", none square-commutative";
        else
            detail << ", " << commuting << " square-commutative (e.g. " << witness << ")";
        out.push_back(check(std::string(np.name) + " [" + family_name(family) + "4]",
                            pairs > 0 && commuting == 0, detail.str()));
    }

    bool sign_rule = sign_condition_check(spec, kCutoff);
    out.push_back(check("3.11/v sign rule over 2^2 [" + family_name(family) + "4]", sign_rule,
                        "square-commutative exactly when total sign parities agree"));
    return out;
}

std::vector<CheckResult> verify_projection_necessity() {
    std::vector<CheckResult> out;
    for (GroupSpec spec : {GroupSpec{Family::B, 2}, GroupSpec{Family::B, 3},
                           GroupSpec{Family::D, 4}, GroupSpec{Family::B, 4}}) {
        bool ok = lifted_necessity_check(spec, kCutoff);
        out.push_back(check("3.9/" + family_name(spec.family) + std::to_string(spec.rank), ok,
                            "square-commutativity projects to the permutation classes"));
    }
    return out;
}

std::vector<CheckResult> verify_induction_oracle() {
    std::vector<CheckResult> out;
    for (int n : {2, 3}) {
        GroupSpec spec{Family::B, n};
        FiniteGroup g = FiniteGroup::wreath(2, n);
        std::string tag = "1.9/(C2)^" + std::to_string(n) + " x| S" + std::to_string(n);

        // Completeness of the induced family over orbit representatives.
        long long sumsq = 0;
        std::vector<std::vector<Cyclo>> chars;
        bool all_irreducible = true;
        for (int nu = 0; nu <= n; ++nu) {
            AbelianCharacter chi = chi_nu(nu, spec);
            FiniteGroup g_chi = chi_stabilizer_subgroup(g, chi);
            FiniteGroup d_chi = perm_part_subgroup(g_chi);
            for (const auto& rho : all_irreducibles(d_chi)) {
                Rep theta = theta_rep(g, chi, rho);
                auto chi_theta = theta.character();
                if (!is_irreducible_character(g, chi_theta)) all_irreducible = false;
                sumsq += static_cast<long long>(theta.dim()) * theta.dim();
                chars.push_back(std::move(chi_theta));
            }
        }
        bool distinct = true;
        for (size_t i = 0; i < chars.size(); ++i)
            for (size_t j = i + 1; j < chars.size(); ++j)
                if (char_inner_product(g, chars[i], chars[j]) != Cyclo::integer(0))
                    distinct = false;
        out.push_back(check(tag + " completeness", sumsq == g.size() && all_irreducible,
                            "sum of squared degrees " + std::to_string(sumsq) + " = |G| = " +
                                std::to_string(g.size())));
        out.push_back(check(tag + " distinct irreducibles", distinct,
                            std::to_string(chars.size()) + " pairwise-orthogonal characters"));

        // -1-type agreement between theta over the centralizer and rho over
        // the stabilized permutation part, for every class, character, rho.
        bool agreement = true, containment = true;
        long long combos = 0;
        FiniteGroup sym = FiniteGroup::symmetric(n);
        for (const auto& cls : sym.conjugacy_class_indices()) {
            Permutation sigma = sym.element(cls.front()).perm;
            SdpElement sig_hat = weyl_to_sdp(WeylElement{SignVector(n), sigma});
            FiniteGroup g_sigma = g.centralizer_of(sig_hat);
            auto cycles = sigma.cycles_with_fixed();
            for (uint64_t mask = 0; mask < (uint64_t{1} << cycles.size()); ++mask) {
                AbelianCharacter chi{2, std::vector<int>(static_cast<size_t>(n), 0)};
                for (size_t c = 0; c < cycles.size(); ++c)
                    if ((mask >> c) & 1)
                        for (int p : cycles[c]) chi.exps[static_cast<size_t>(p)] = 1;
                FiniteGroup g_chi_sigma = chi_stabilizer_subgroup(g_sigma, chi);
                FiniteGroup d_chi_sigma = perm_part_subgroup(g_chi_sigma);
                for (const auto& rho : all_irreducibles(d_chi_sigma)) {
                    Rep theta = theta_rep(g_sigma, chi, rho);
                    ++combos;
                    bool minus_theta = is_minus_identity(theta.at(sig_hat));
                    bool minus_rho = is_minus_identity(rho.at(sig_hat));
                    if (minus_theta != minus_rho) agreement = false;
                    if (!is_sub_rsr(rho, theta)) containment = false;
                }
            }
        }
        out.push_back(check(tag + " -1-type agreement", agreement,
                            std::to_string(combos) + " (sigma, chi, rho) combinations"));
        out.push_back(check(tag + " restriction containment", containment,
                            "rho occurs in theta restricted to the stabilized part"));
    }
    return out;
}

std::vector<CheckResult> verify_classifier_verdicts() {
    std::vector<CheckResult> out;

    {
        // two supports outside the sign subgroup at rank 5
        YDModuleSpec m;
        m.spec = {Family::B, 5};
        WeylElement s1{SignVector(5), parse_permutation("(1 2)", 5)};
        WeylElement s2{SignVector(5), parse_permutation("(1 2)(3 4)", 5)};
        m.summands = {{s1, RepDescriptor{}}, {s2, RepDescriptor{}}};
        Verdict v = classify_reducible(m);
        out.push_back(check("classifier/rank-5 outside pair",
                            v.outcome == Outcome::Infinite &&
                                v.trace.size() == 1 && v.trace[0].rule == "theorem-4",
                            outcome_name(v.outcome)));
    }
    {
        // rank-4 same-sign 2^2 pair stays undecided
        YDModuleSpec m;
        m.spec = {Family::B, 4};
        WeylElement s{SignVector(4), parse_permutation("(1 2)(3 4)", 4)};
        m.summands = {{s, RepDescriptor{}}, {s, RepDescriptor{}}};
        Verdict v = classify_reducible(m);
        out.push_back(check("classifier/rank-4 same-sign 2^2 pair",
                            v.outcome == Outcome::Unknown && v.trace.size() == 1 &&
                                v.trace[0].rule == "theorem-4",
                            outcome_name(v.outcome)));
    }
    {
        // all supports central with odd nu
        YDModuleSpec m;
        m.spec = {Family::B, 3};
        SignVector ones = SignVector::from_string("111");
        WeylElement central{ones, Permutation(3)};
        RepDescriptor r1, r2;
        r1.nu = 1;
        r2.nu = 3;
        m.summands = {{central, r1}, {central, r2}};
        Verdict v = classify_reducible(m);
        out.push_back(check("classifier/central odd-nu summands",
                            v.outcome == Outcome::Finite && v.trace.size() == 1 &&
                                v.trace[0].rule == "remark-3.8",
                            outcome_name(v.outcome)));
    }
    {
        // scalar-action oracle at rank 3: theta(central flip) = +-identity by
        // character weight, and the central-quantum-linear test agrees.
        FiniteGroup g = FiniteGroup::weyl({Family::B, 3});
        SdpElement central{2, {1, 1, 1}, Permutation(3)};
        bool scalar_ok = true, agree = true;
        for (uint64_t bits = 0; bits < 8; ++bits) {
            SignVector delta(3);
            for (int i = 0; i < 3; ++i)
                if ((bits >> i) & 1) delta.set(i, 1);
            AbelianCharacter chi = character_from_bits(delta);
            FiniteGroup g_chi = chi_stabilizer_subgroup(g, chi);
            FiniteGroup d_chi = perm_part_subgroup(g_chi);
            for (const auto& rho : all_irreducibles(d_chi)) {
                Rep theta = theta_rep(g, chi, rho);
                Cyclo scalar;
                if (!is_scalar_matrix(theta.at(central), &scalar)) {
                    scalar_ok = false;
                    continue;
                }
                Cyclo expected = Cyclo::integer(delta.weight() % 2 ? -1 : 1);
                if (scalar != expected) scalar_ok = false;
            }
            RSRDescriptor rsr;
            rsr.spec = {Family::B, 3};
            RSREntry entry;
            entry.u = WeylElement{SignVector::from_string("111"), Permutation(3)};
            RepDescriptor rep;
            rep.chi_bits = delta;
            entry.reps = {rep};
            rsr.entries = {entry};
            if (is_central_quantum_linear(rsr) != (delta.weight() % 2 == 1)) agree = false;
        }
        out.push_back(check("classifier/central scalar-action oracle", scalar_ok,
                            "theta(central flip) is the signed identity by weight"));
        out.push_back(check("classifier/central quantum linear agreement", agree,
                            "odd-weight characters exactly"));
    }
    return out;
}

std::vector<CheckResult> verify_property_suites(std::uint64_t seed, int cases) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);

    auto random_element_of = [&](const GroupSpec& spec) {
        std::vector<int> img(static_cast<size_t>(spec.rank));
        for (int i = 0; i < spec.rank; ++i) img[static_cast<size_t>(i)] = i;
        std::shuffle(img.begin(), img.end(), rng);
        SignVector s(spec.rank);
        if (spec.family != Family::A) {
            std::uniform_int_distribution<int> bit(0, 1);
            for (int i = 0; i < spec.rank; ++i) s.set(i, bit(rng));
            if (spec.family == Family::D && s.parity() == 1) s.set(0, 1 - s.bit(0));
        }
        return WeylElement{s, Permutation(img)};
    };

    {
        std::vector<GroupSpec> specs = {{Family::B, 5}, {Family::D, 4}, {Family::A, 6}};
        bool ok = true;
        for (int i = 0; i < cases && ok; ++i) {
            const GroupSpec& spec = specs[static_cast<size_t>(i) % specs.size()];
            WeylElement x = random_element_of(spec);
            WeylElement y = random_element_of(spec);
            WeylElement z = random_element_of(spec);
            ok = compose(compose(x, y), z) == compose(x, compose(y, z)) &&
                 compose(x, inverse(x)).is_identity() &&
                 conjugate(x, y) == conjugate_closed_form(x, y);
        }
        out.push_back(check("properties/group laws", ok,
                            std::to_string(cases) + " random triples"));
    }
    {
        std::vector<GroupSpec> specs = {{Family::B, 4}, {Family::D, 4}, {Family::B, 3}};
        bool ok = true;
        for (int i = 0; i < cases && ok; ++i) {
            const GroupSpec& spec = specs[static_cast<size_t>(i) % specs.size()];
            WeylElement x = random_element_of(spec);
            WeylElement gconj = random_element_of(spec);
            ok = class_descriptor(conjugate(x, gconj)) == class_descriptor(x);
        }
        out.push_back(check("properties/descriptor conjugation invariance", ok,
                            std::to_string(cases) + " random conjugations"));
    }
    {
        std::vector<GroupSpec> specs = {{Family::B, 3}, {Family::D, 3}, {Family::A, 4}};
        bool ok = true;
        for (int i = 0; i < cases && ok; ++i) {
            const GroupSpec& spec = specs[static_cast<size_t>(i) % specs.size()];
            WeylElement x = random_element_of(spec);
            ok = class_of(x, spec, kCutoff).size() *
                     centralizer(x, spec, kCutoff).order() ==
                 spec.order();
        }
        out.push_back(check("properties/orbit-stabilizer", ok,
                            std::to_string(cases) + " random elements"));
    }
    {
        // reduced test == full sweep on every pair at rank <= 4, then random
        // representative re-runs.
        bool ok = true;
        long long pair_count = 0;
        std::vector<SquareCommReport> reports;
        for (GroupSpec spec : {GroupSpec{Family::A, 3}, GroupSpec{Family::A, 4},
                               GroupSpec{Family::B, 2}, GroupSpec{Family::B, 3},
                               GroupSpec{Family::B, 4}, GroupSpec{Family::D, 3},
                               GroupSpec{Family::D, 4}}) {
            SquareCommReport r = enumerate_pairs(spec, kCutoff, true);
            for (const auto& pv : r.pairs) {
                ++pair_count;
                if (pv.square_commutative !=
                    square_commute_full(r.classes[pv.first_class], r.classes[pv.second_class]))
                    ok = false;
            }
            reports.push_back(std::move(r));
        }
        bool invariant = true;
        for (int i = 0; i < cases && invariant; ++i) {
            const auto& r = reports[static_cast<size_t>(i) % reports.size()];
            std::uniform_int_distribution<size_t> pickc(0, r.classes.size() - 1);
            const auto& c1 = r.classes[pickc(rng)];
            const auto& c2 = r.classes[pickc(rng)];
            // move a random element of c2 into the representative slot
            std::uniform_int_distribution<size_t> picke(0, c2.elements.size() - 1);
            ConjugacyClass shuffled = c2;
            shuffled.representative = c2.elements[picke(rng)];
            invariant = square_commute(c1, shuffled) == square_commute(c1, c2);
        }
        out.push_back(check("properties/reduced equals full sweep", ok,
                            std::to_string(pair_count) + " class pairs across rank <= 4"));
        out.push_back(check("properties/representative independence", invariant,
                            std::to_string(cases) + " random representative re-runs"));
    }
    return out;
}

std::vector<std::string> suite_catalog() {
    return {"2.1", "2.4", "2.8", "1.9", "3.9", "3.10", "3.11", "classifier", "properties"};
}

std::vector<CheckResult> run_suite(const SuiteRequest& req) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> more) {
        for (auto& c : more) out.push_back(std::move(c));
    };
    const std::string& id = req.lemma;
    bool all = id == "all" || id.empty();
    bool known = all;
    if (all || id == "2.8") append(verify_xi_table()), known = true;
    if (all || id == "2.4") append(verify_integrality_equivalence(req.n ? req.n : 6)), known = true;
    if (all || id == "2.1") append(verify_centralizer_embedding()), known = true;
    if (all || id == "3.10") append(verify_square_commuting_catalog(req.n)), known = true;
    if (all || id == "3.11") append(verify_rank4_sign_pairs(Family::B)), known = true;
    if (all || id == "3.9") append(verify_projection_necessity()), known = true;
    if (all || id == "1.9") append(verify_induction_oracle()), known = true;
    if (all || id == "classifier") append(verify_classifier_verdicts()), known = true;
    if (all || id == "properties")
        append(verify_property_suites(req.seed, req.cases)), known = true;
    if (!known)
        throw std::invalid_argument("unknown verification suite '" + id +
                                    "'; see the catalog");
    return out;
}

}  // namespace wn
