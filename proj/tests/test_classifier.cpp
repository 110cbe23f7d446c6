#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wn/classifier.hpp"
#include "wn/rep.hpp"
#include "wn/verify.hpp"

#include <functional>

using namespace wn;

namespace {

AbelianCharacter bits(const std::string& s) {
    return character_from_bits(SignVector::from_string(s));
}

RepDescriptor desc_of(std::vector<DescriptorBlock> blocks) {
    RepDescriptor d;
    d.blocks = std::move(blocks);
    return d;
}

}  // namespace

TEST_CASE("character normalization moves the support to a leading segment") {
    // already leading: identity conjugator
    NormalizedCharacter n1 =
        normalize_character(parse_permutation("(1 2)", 4), bits("1100"));
    CHECK(n1.nu == 2);
    CHECK(n1.conjugator.is_identity());
    CHECK(n1.sigma_prime == parse_permutation("(1 2)", 4));

    // support {2,4} at rank 4 maps to {1,2}
    NormalizedCharacter n2 =
        normalize_character(parse_permutation("(2 4)", 4), bits("0101"));
    CHECK(n2.nu == 2);
    CHECK(n2.conjugator(1) == 0);
    CHECK(n2.conjugator(3) == 1);
    CHECK(n2.sigma_prime == parse_permutation("(1 2)", 4));
    CHECK(parse_permutation("(2 4)", 4).conjugated_by(n2.conjugator) == n2.sigma_prime);

    // trivial character
    NormalizedCharacter n3 = normalize_character(Permutation(3), bits("000"));
    CHECK(n3.nu == 0);

    CHECK_THROWS_AS(normalize_character(Permutation(3), bits("0110")),
                    std::invalid_argument);
}

TEST_CASE("matched supports") {
    CHECK(is_matched(parse_permutation("(1 2)", 5), 2));
    CHECK(!is_matched(parse_permutation("(2 3)", 5), 2));
    CHECK(is_matched(parse_permutation("(4 5)", 5), 2));
    CHECK(is_matched(Permutation(5), 3));
}

TEST_CASE("finiteness-case matching") {
    // (1^l, 2) with mu1 = sgn, mu2 = chi_(1;2): case i. Support on the right
    // side of the cut at nu: sigma = (4 5) at rank 5, nu = 2, side size 3.
    Permutation sigma = parse_permutation("(4 5)", 5);
    RepDescriptor d1 = desc_of({{1, {0}, rho_sgn()}, {2, {1}, rho_epsilon()}});
    auto m1 = match_theorem2_case(sigma, 2, d1, 5);
    REQUIRE(m1.has_value());
    CHECK(*m1 == Theorem2Case::i);

    // (2,4) with mu2 trivial, mu4 = chi_(2;4): case vii. sigma on the right
    // side with nu = 0.
    Permutation s24 = normal_form_permutation(parse_cycle_type("2^1 4^1"));
    RepDescriptor d7 = desc_of({{2, {0}, rho_epsilon()}, {4, {2}, rho_epsilon()}});
    auto m7 = match_theorem2_case(s24, 0, d7, 6);
    REQUIRE(m7.has_value());
    CHECK(*m7 == Theorem2Case::vii);

    // a lone 3-cycle fits no case
    Permutation s3 = normal_form_permutation(parse_cycle_type("3^1"));
    CHECK(!match_theorem2_case(s3, 0, desc_of({{3, {0}, rho_epsilon()}}), 3).has_value());

    // (2, 3) with trivial odd block: case ii, any odd-block label
    Permutation s23 = normal_form_permutation(parse_cycle_type("2^1 3^1"));
    RepDescriptor d2 = desc_of({{2, {1}, rho_epsilon()}, {3, {0}, rho_epsilon()}});
    auto m2 = match_theorem2_case(s23, 0, d2, 5);
    REQUIRE(m2.has_value());
    CHECK(*m2 == Theorem2Case::ii);

    // unmatched support is rejected
    CHECK_THROWS_AS(match_theorem2_cases(parse_permutation("(2 3)", 4), 2,
                                         RepDescriptor{}, 4),
                    std::invalid_argument);
}

TEST_CASE("every matched finiteness case is of -1-type") {
    // exhaust matched one-dimensional descriptors: sigma occupies the right
    // side of the cut, block tuples are constant, labels epsilon or sgn
    for (int n = 2; n <= 8; ++n) {
        for (int nu = 0; nu <= n; ++nu) {
            int side = n - nu;
            if (side < 1) continue;
            std::function<void(CycleType&, int, int)> rec = [&](CycleType& side_type,
                                                                int remaining, int max_part) {
                if (remaining == 0) {
                    CycleType global = side_type;
                    global.counts.resize(static_cast<size_t>(n), 0);
                    global.counts[0] += nu;  // the left side is all fixed points
                    Permutation sigma_global = normal_form_permutation(global);
                    if (sigma_global.is_identity()) return;  // fits no case
                    // normal form puts fixed points first, so the support
                    // sits right of the cut at nu
                    Permutation sigma_side = normal_form_permutation(side_type);
                    for (const auto& d : enumerate_one_dim_reps(sigma_side)) {
                        RepDescriptor side_desc = d;
                        Theorem2Match m = match_theorem2_cases(sigma_global, nu, side_desc, n);
                        if (!m.matched.empty())
                            CHECK(is_minus_one_type(side_desc, sigma_side));
                    }
                    return;
                }
                for (int part = std::min(remaining, max_part); part >= 1; --part) {
                    ++side_type.counts[static_cast<size_t>(part - 1)];
                    rec(side_type, remaining - part, part);
                    --side_type.counts[static_cast<size_t>(part - 1)];
                }
            };
            CycleType side_type;
            side_type.counts.assign(static_cast<size_t>(side), 0);
            rec(side_type, side, side);
        }
    }
}

TEST_CASE("irreducible classification verdicts") {
    GroupSpec b5{Family::B, 5};
    // matched, case i data
    Verdict v1 = classify_irreducible(parse_permutation("(4 5)", 5), bits("11000"),
                                      desc_of({{1, {0}, rho_sgn()}, {2, {1}, rho_epsilon()}}),
                                      b5);
    CHECK(v1.outcome == Outcome::MinusOneTypeCandidate);
    REQUIRE(!v1.trace.empty());
    CHECK(v1.trace[0].rule == "theorem-2/case-i");

    // matched, a lone 5-cycle: no case applies
    Verdict v2 = classify_irreducible(parse_permutation("(1 2 3 4 5)", 5), bits("00000"),
                                      desc_of({{5, {0}, rho_epsilon()}}), b5);
    CHECK(v2.outcome == Outcome::Infinite);
    CHECK(v2.trace[0].rule == "theorem-2/contrapositive");

    // support straddles the cut: outside the hypothesis
    Verdict v3 = classify_irreducible(parse_permutation("(2 3)", 4), bits("1100"),
                                      desc_of({}), GroupSpec{Family::B, 4});
    CHECK(v3.outcome == Outcome::Unknown);

    // opaque label can leave a case undecided
    Verdict v4 = classify_irreducible(
        parse_permutation("(1 2)(3 4)(5 6)", 6), bits("000000"),
        desc_of({{2, {1, 1, 1}, rho_opaque("caller", 1)}}), GroupSpec{Family::B, 6});
    CHECK(v4.outcome == Outcome::Unknown);
    CHECK(v4.trace[0].rule == "theorem-2/indeterminate");
}

TEST_CASE("reducible classification verdicts") {
    // covered: the three worked verdicts
    auto checks = verify_classifier_verdicts();
    for (const auto& c : checks) CHECK(c.pass);

    // summand order does not matter
    YDModuleSpec m;
    m.spec = {Family::B, 4};
    WeylElement a{SignVector::from_string("0000"), parse_permutation("(1 2)(3 4)", 4)};
    WeylElement b{SignVector::from_string("1100"), parse_permutation("(1 3)(2 4)", 4)};
    m.summands = {{a, RepDescriptor{}}, {b, RepDescriptor{}}};
    Verdict v1 = classify_reducible(m);
    std::swap(m.summands[0], m.summands[1]);
    Verdict v2 = classify_reducible(m);
    CHECK(v1.outcome == v2.outcome);

    // differing outside signs at rank 4 force Infinite
    WeylElement c{SignVector::from_string("1000"), parse_permutation("(1 2)(3 4)", 4)};
    m.summands = {{a, RepDescriptor{}}, {c, RepDescriptor{}}};
    CHECK(classify_reducible(m).outcome == Outcome::Infinite);

    // a 2-cycle support among two outside supports at rank 4 forces Infinite
    WeylElement d{SignVector::from_string("0000"), parse_permutation("(1 2)", 4)};
    m.summands = {{a, RepDescriptor{}}, {d, RepDescriptor{}}};
    CHECK(classify_reducible(m).outcome == Outcome::Infinite);

    CHECK_THROWS_AS(classify_reducible(YDModuleSpec{{Family::B, 4}, {}}),
                    std::invalid_argument);
}

TEST_CASE("module dispatch for a single summand") {
    // permutation support routes through the matched analysis
    YDModuleSpec m;
    m.spec = {Family::B, 5};
    RepDescriptor rep = desc_of({{1, {0}, rho_sgn()}, {2, {1}, rho_epsilon()}});
    rep.nu = 2;
    m.summands = {{WeylElement{SignVector(5), parse_permutation("(4 5)", 5)}, rep}};
    CHECK(classify_module(m).outcome == Outcome::MinusOneTypeCandidate);

    // central support with odd nu is finite
    YDModuleSpec mc;
    mc.spec = {Family::B, 3};
    RepDescriptor rc;
    rc.nu = 1;
    mc.summands = {{WeylElement{SignVector::from_string("111"), Permutation(3)}, rc}};
    Verdict v = classify_module(mc);
    CHECK(v.outcome == Outcome::Finite);
    CHECK(v.trace[0].rule == "theorem-3");

    // signed non-central support stays undecided
    YDModuleSpec mu;
    mu.spec = {Family::B, 3};
    mu.summands = {{WeylElement{SignVector::from_string("100"), Permutation(3)},
                    RepDescriptor{}}};
    CHECK(classify_module(mu).outcome == Outcome::Unknown);
}

TEST_CASE("central quantum linear test") {
    auto make_rsr = [](const std::string& sign, const std::string& chi, int n) {
        RSRDescriptor rsr;
        rsr.spec = {Family::B, n};
        RSREntry e;
        e.u = WeylElement{SignVector::from_string(sign), Permutation(n)};
        RepDescriptor rep;
        rep.chi_bits = SignVector::from_string(chi);
        e.reps = {rep};
        rsr.entries = {e};
        return rsr;
    };
    CHECK(is_central_quantum_linear(make_rsr("111", "100", 3)));
    CHECK(!is_central_quantum_linear(make_rsr("111", "110", 3)));
    CHECK(!is_central_quantum_linear(make_rsr("110", "100", 3)));  // not the central class

    RSRDescriptor viaNu;
    viaNu.spec = {Family::B, 3};
    RSREntry e;
    e.u = WeylElement{SignVector::from_string("111"), Permutation(3)};
    RepDescriptor rep;
    rep.nu = 3;
    e.reps = {rep};
    viaNu.entries = {e};
    CHECK(is_central_quantum_linear(viaNu));

    // entry degree bookkeeping: weight-1 character at rank 3 has degree 3
    CHECK(rsr_entry_degree(make_rsr("111", "100", 3).entries[0], {Family::B, 3}) == 3);
    CHECK(rsr_entry_degree(make_rsr("111", "111", 3).entries[0], {Family::B, 3}) == 1);
}

TEST_CASE("rsr classification verdicts") {
    RSRDescriptor rsr;
    rsr.spec = {Family::B, 5};
    RSREntry e1, e2;
    e1.u = WeylElement{SignVector(5), parse_permutation("(1 2)", 5)};
    e1.reps = {RepDescriptor{}};
    e2.u = WeylElement{SignVector(5), parse_permutation("(1 2)(3 4)", 5)};
    e2.reps = {RepDescriptor{}};
    rsr.entries = {e1, e2};
    Verdict v = classify_rsr(rsr);
    CHECK(v.outcome == Outcome::Infinite);
    CHECK(v.trace[0].rule == "theorem-4");

    // one outside class with two representation slots also triggers the rule
    RSRDescriptor one_class;
    one_class.spec = {Family::B, 5};
    RSREntry e3;
    e3.u = WeylElement{SignVector(5), parse_permutation("(1 2)", 5)};
    e3.multiplicity = 2;
    e3.reps = {RepDescriptor{}, RepDescriptor{}};
    one_class.entries = {e3};
    CHECK(classify_rsr(one_class).outcome == Outcome::Infinite);

    // central odd-weight singleton: finite
    RSRDescriptor central;
    central.spec = {Family::B, 3};
    RSREntry e4;
    e4.u = WeylElement{SignVector::from_string("111"), Permutation(3)};
    RepDescriptor rep;
    rep.chi_bits = SignVector::from_string("100");
    e4.reps = {rep};
    e4.multiplicity = 3;
    central.entries = {e4};
    CHECK(classify_rsr(central).outcome == Outcome::Finite);
}

TEST_CASE("matched minus-one-type flag agrees with explicit induced matrices at rank 4") {
    // For every nontrivial support type at rank 4, every admissible cut nu,
    // and every one-dimensional side descriptor: build the induced
    // representation over the centralizer inside W(B4) explicitly and
    // compare theta(sigma) = -id against the rational-arithmetic route.
    const int n = 4;
    FiniteGroup g = FiniteGroup::weyl({Family::B, n});
    FiniteGroup sym = FiniteGroup::symmetric(n);
    for (const auto& cls : sym.conjugacy_class_indices()) {
        Permutation sigma = sym.element(cls.front()).perm;
        if (sigma.is_identity()) continue;
        auto [gamma, normal] = normalize(sigma);
        sigma = normal;  // fixed points first, support right of any cut
        CycleType type = cycle_type(sigma);
        const int lambda1 = type.count(1);
        SdpElement sig_hat{2, std::vector<int>(static_cast<size_t>(n), 0), sigma};
        FiniteGroup g_sigma = g.centralizer_of(sig_hat);
        for (int nu = 0; nu <= lambda1; ++nu) {
            AbelianCharacter chi = chi_nu(nu, {Family::B, n});
            FiniteGroup g_chi_sigma = chi_stabilizer_subgroup(g_sigma, chi);
            FiniteGroup d_chi_sigma = perm_part_subgroup(g_chi_sigma);

            // side permutation: the support side of the cut
            CycleType side_type = type;
            side_type.counts[0] = lambda1 - nu;
            Permutation sigma_side = normal_form_permutation(side_type);

            for (const auto& side_desc : enumerate_one_dim_reps(sigma_side)) {
                for (RhoLabel left_label : {rho_epsilon(), rho_sgn()}) {
                    // one-dimensional value through the per-block wreath data
                    auto value = [&](const SdpElement& e) {
                        PhiImage img = phi(e.perm, sigma);
                        Cyclo v = Cyclo::integer(1);
                        for (const auto& [j, w] : img.per_block) {
                            const DescriptorBlock* blk = nullptr;
                            for (const auto& b : side_desc.blocks)
                                if (b.j == j) blk = &b;
                            if (j == 1) {
                                // split the fixed-point permutation at the cut
                                int p_left = 0, p_right = 0;
                                for (const auto& cyc : w.perm.cycles())
                                    (cyc[0] < nu ? p_left : p_right) +=
                                        static_cast<int>(cyc.size()) - 1;
                                if (left_label.kind == RhoKind::Sgn && (p_left & 1))
                                    v = v * Cyclo::integer(-1);
                                if (blk && blk->rho.kind == RhoKind::Sgn && (p_right & 1))
                                    v = v * Cyclo::integer(-1);
                            } else {
                                long long s = 0;
                                for (size_t i = 0; i < w.exps.size(); ++i)
                                    s += static_cast<long long>(blk->t[i]) * w.exps[i];
                                v = v * Cyclo::root(j, (j - 1) * s);
                                if (blk->rho.kind == RhoKind::Sgn &&
                                    perm_parity(w.perm))
                                    v = v * Cyclo::integer(-1);
                            }
                        }
                        return v;
                    };
                    Rep rho = Rep::one_dim(d_chi_sigma, value);
                    REQUIRE(rho.is_homomorphism());
                    Rep theta = theta_rep(g_sigma, chi, rho);
                    bool explicit_flag = is_minus_identity(theta.at(sig_hat));
                    bool xi_flag = is_minus_one_type(side_desc, sigma_side);
                    CHECK(explicit_flag == xi_flag);
                }
            }
        }
    }
}

TEST_CASE("error paths: membership and group mismatch") {
    GroupSpec d2{Family::D, 2};
    WeylElement bad{SignVector::from_string("10"), Permutation(2)};  // odd weight
    CHECK_THROWS_AS(compose(bad, bad, d2), std::invalid_argument);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FiniteGroup s2 = FiniteGroup::symmetric(2);
    CHECK_THROWS_AS(is_sub_rsr(Rep::trivial(s3), Rep::trivial(s2)), std::invalid_argument);
}
