#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wn/repkit.hpp"

#include <set>

using namespace wn;

TEST_CASE("chi_nu representatives and family ranges") {
    GroupSpec b5{Family::B, 5};
    AbelianCharacter c = chi_nu(2, b5);
    CHECK(c.exps == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(chi_nu(0, b5).weight() == 0);
    CHECK(chi_nu(5, b5).weight() == 5);

    FiniteGroup stab = chi_nu_stabilizer(2, 5);
    CHECK(stab.size() == 12);  // S2 x S3

    CHECK_THROWS_AS(chi_nu(1, GroupSpec{Family::A, 4}), std::invalid_argument);
    CHECK_THROWS_AS(chi_nu(4, GroupSpec{Family::D, 4}), std::invalid_argument);
    CHECK(chi_nu(3, GroupSpec{Family::D, 4}).weight() == 3);
    CHECK_THROWS_AS(chi_nu(5, GroupSpec{Family::B, 4}), std::invalid_argument);
}

TEST_CASE("full-stabilizer criterion matches brute force") {
    CHECK(stabilizer_full({2, {1, 1, 1}}));
    CHECK(!stabilizer_full({2, {1, 0}}));
    CHECK(stabilizer_full({4, {3}}));

    for (const AbelianCharacter& chi :
         {AbelianCharacter{2, {1, 1, 1}}, AbelianCharacter{2, {1, 0, 0}},
          AbelianCharacter{3, {2, 2}}, AbelianCharacter{3, {1, 2}},
          AbelianCharacter{4, {0, 0, 0}}}) {
        size_t brute = character_stabilizer_brute(chi).size();
        long long m = chi.size();
        long long fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        CHECK(stabilizer_full(chi) == (static_cast<long long>(brute) == fact));
    }
}

TEST_CASE("distinguished element formula") {
    CHECK(distinguished_element(RepDescriptor{{{2, {1}, rho_epsilon()}}},
                                parse_cycle_type("1^3 2^1"))
              .value == Rat(1));
    CHECK(distinguished_element(RepDescriptor{{{4, {3, 3}, rho_epsilon()}}},
                                parse_cycle_type("4^2"))
              .value == Rat(2));
    // (2^2, 4) with t2 = (t,t): xi = 1 + t
    for (int t : {0, 1}) {
        RepDescriptor d{{{2, {t, t}, rho_epsilon()}, {4, {2}, rho_epsilon()}}};
        CHECK(distinguished_element(d, parse_cycle_type("2^2 4^1")).value == Rat(1 + t));
    }
    RepDescriptor bad{{{2, {5}, rho_epsilon()}}};
    CHECK_THROWS_AS(distinguished_element(bad, parse_cycle_type("2^1")), std::invalid_argument);
    RepDescriptor mismatch{{{3, {0}, rho_epsilon()}}};
    CHECK_THROWS_AS(distinguished_element(mismatch, parse_cycle_type("2^1")),
                    std::invalid_argument);
}

TEST_CASE("character value at sigma") {
    Permutation two = normal_form_permutation(parse_cycle_type("2^1"));
    RepDescriptor d1{{{2, {1}, rho_epsilon()}}};
    CHECK(char_value_at_sigma(d1, two) == Cyclo::integer(-1));

    RepDescriptor d0{{{2, {0}, rho_epsilon()}}};
    CHECK(char_value_at_sigma(d0, two) == Cyclo::integer(1));

    // degree scales with the tuple orbit: t = (1,0) over 2^2 has theta degree 2
    Permutation twotwo = normal_form_permutation(parse_cycle_type("2^2"));
    RepDescriptor d10{{{2, {1, 0}, rho_epsilon()}}};
    CHECK(descriptor_degree(d10, parse_cycle_type("2^2")) == 2);
    CHECK(char_value_at_sigma(d10, twotwo) == Cyclo::root(2, 1).scaled(Rat(2)));

    // order-3 block uses exact cube roots
    Permutation three = normal_form_permutation(parse_cycle_type("3^1"));
    RepDescriptor d3{{{3, {1}, rho_epsilon()}}};
    CHECK(char_value_at_sigma(d3, three) == Cyclo::root(3, 1));
}

TEST_CASE("minus-one-type decision") {
    // integral xi and even order
    CHECK(is_minus_one_type(RepDescriptor{{{2, {1}, rho_epsilon()}}},
                            normal_form_permutation(parse_cycle_type("1^2 2^1"))));
    // odd order never qualifies
    CHECK(!is_minus_one_type(RepDescriptor{{{3, {0}, rho_epsilon()}}},
                             normal_form_permutation(parse_cycle_type("3^1"))));
    // xi = 1/2 not integral
    CHECK(!is_minus_one_type(RepDescriptor{{{2, {0}, rho_epsilon()}}},
                             normal_form_permutation(parse_cycle_type("2^1"))));
}

TEST_CASE("one-dimensional descriptor enumeration with brute-force counts") {
    struct Case {
        std::string type;
        size_t expected;
    };
    for (const Case& c : {Case{"2^1", 2}, Case{"1^3", 2}, Case{"2^2", 4},
                          Case{"1^1 3^1", 3}, Case{"2^1 4^1", 8}}) {
        CycleType type = parse_cycle_type(c.type);
        Permutation sigma = normal_form_permutation(type);
        auto descs = enumerate_one_dim_reps(sigma);
        CHECK(descs.size() == c.expected);
        for (const auto& d : descs) CHECK(descriptor_degree(d, type) == 1);

        // brute force: one-dimensional representations of the centralizer
        FiniteGroup cent = FiniteGroup::symmetric(sigma.degree())
                               .centralizer_of(SdpElement{1,
                                                          std::vector<int>(static_cast<size_t>(
                                                              sigma.degree()), 0),
                                                          sigma});
        CHECK(one_dimensional_reps(cent).size() == descs.size());
    }
}

TEST_CASE("one-dimensional reps of standard groups") {
    CHECK(one_dimensional_reps(FiniteGroup::symmetric(3)).size() == 2);
    CHECK(one_dimensional_reps(FiniteGroup::symmetric(4)).size() == 2);
    CHECK(one_dimensional_reps(FiniteGroup::wreath(2, 2)).size() == 4);
    CHECK(one_dimensional_reps(FiniteGroup::wreath(3, 1)).size() == 3);
}

TEST_CASE("all irreducibles by induction search") {
    auto degrees = [](const std::vector<Rep>& reps) {
        std::multiset<int> d;
        for (const auto& r : reps) d.insert(r.dim());
        return d;
    };
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(degrees(all_irreducibles(s3)) == std::multiset<int>{1, 1, 2});

    FiniteGroup s4 = FiniteGroup::symmetric(4);
    CHECK(degrees(all_irreducibles(s4)) == std::multiset<int>{1, 1, 2, 3, 3});

    FiniteGroup w22 = FiniteGroup::wreath(2, 2);  // order 8
    CHECK(degrees(all_irreducibles(w22)) == std::multiset<int>{1, 1, 1, 1, 2});

    FiniteGroup w32 = FiniteGroup::wreath(3, 2);  // order 18
    CHECK(degrees(all_irreducibles(w32)) == std::multiset<int>{1, 1, 1, 1, 1, 1, 2, 2, 2});

    for (const auto& r : all_irreducibles(s4)) CHECK(r.spot_check(50, 7));
}

TEST_CASE("induced representation shape and the full sweep at rank 2") {
    GroupSpec b2{Family::B, 2};
    FiniteGroup g = FiniteGroup::wreath(2, 2);

    // chi^(1) has trivial stabilizer in S2, so theta has degree 2
    AbelianCharacter chi1 = chi_nu(1, b2);
    FiniteGroup g_chi = chi_stabilizer_subgroup(g, chi1);
    CHECK(g_chi.size() == 4);
    FiniteGroup d_chi = perm_part_subgroup(g_chi);
    CHECK(d_chi.size() == 1);
    Rep theta = theta_rep(g, chi1, Rep::trivial(d_chi));
    CHECK(theta.dim() == 2);
    CHECK(theta.is_homomorphism());
    CHECK(is_irreducible_character(g, theta.character()));

    // trivial chi and rho give the trivial representation
    AbelianCharacter chi0 = chi_nu(0, b2);
    FiniteGroup g0 = chi_stabilizer_subgroup(g, chi0);
    CHECK(g0.size() == 8);
    Rep triv = theta_rep(g, chi0, Rep::trivial(perm_part_subgroup(g0)));
    CHECK(triv.dim() == 1);
    for (int i = 0; i < g.size(); ++i) CHECK(triv.at_index(i)[0][0] == Cyclo::integer(1));

    // full sweep: sum of squared degrees is the group order
    long long sumsq = 0;
    for (int nu = 0; nu <= 2; ++nu) {
        AbelianCharacter chi = chi_nu(nu, b2);
        FiniteGroup gc = chi_stabilizer_subgroup(g, chi);
        FiniteGroup dc = perm_part_subgroup(gc);
        for (const auto& rho : all_irreducibles(dc)) {
            Rep th = theta_rep(g, chi, rho);
            CHECK(is_irreducible_character(g, th.character()));
            sumsq += static_cast<long long>(th.dim()) * th.dim();
        }
    }
    CHECK(sumsq == 8);
}

TEST_CASE("induction dimension law") {
    FiniteGroup g = FiniteGroup::wreath(2, 3);
    for (int nu = 0; nu <= 3; ++nu) {
        AbelianCharacter chi = chi_nu(nu, {Family::B, 3});
        FiniteGroup gc = chi_stabilizer_subgroup(g, chi);
        FiniteGroup dc = perm_part_subgroup(gc);
        for (const auto& rho : all_irreducibles(dc)) {
            Rep th = theta_rep(g, chi, rho);
            CHECK(th.dim() == (g.size() / gc.size()) * rho.dim());
        }
    }
}

TEST_CASE("scalar evaluation of induced blocks at the central image") {
    // theta_{chi,rho}(phi(sigma)) is scalar chi((g^{l-1},...,g^{l-1})) id
    for (auto [l, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 2}}) {
        FiniteGroup w = FiniteGroup::wreath(l, m);
        SdpElement central = sdp_identity(l, m);
        for (auto& e : central.exps) e = l - 1;
        // all characters chi^t of (C_l)^m
        std::vector<int> t(static_cast<size_t>(m), 0);
        while (true) {
            AbelianCharacter chi{l, t};
            FiniteGroup gc = chi_stabilizer_subgroup(w, chi);
            FiniteGroup dc = perm_part_subgroup(gc);
            for (const auto& rho : all_irreducibles(dc)) {
                Rep th = theta_rep(w, chi, rho);
                Cyclo scalar;
                REQUIRE(is_scalar_matrix(th.at(central), &scalar));
                CHECK(scalar == chi.eval(central.exps));
            }
            size_t k = 0;
            while (k < t.size() && ++t[k] == l) {
                t[k] = 0;
                ++k;
            }
            if (k == t.size()) break;
        }
    }
}

TEST_CASE("descriptor matrix oracle agrees with the xi criterion") {
    // on small types, the explicit matrix at sigma is -id exactly when
    // xi is integral and the order is even
    for (const auto& type_text : {"2^1", "2^2", "1^1 2^1", "4^1", "3^1", "2^1 4^1", "1^2 3^1"}) {
        CycleType type = parse_cycle_type(type_text);
        Permutation sigma = normal_form_permutation(type);
        for (const auto& desc : enumerate_one_dim_reps(sigma)) {
            Matrix m = descriptor_matrix_at_sigma(desc, type);
            CHECK(is_minus_identity(m) == is_minus_one_type(desc, sigma));
            // the matrix value matches the symbolic character value
            Cyclo scalar;
            REQUIRE(is_scalar_matrix(m, &scalar));
            CHECK(scalar.scaled(Rat(descriptor_degree(desc, type))) ==
                  char_value_at_sigma(desc, sigma));
        }
    }
}

TEST_CASE("tensor with a trivial factor preserves the minus-identity flag") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto irreps = all_irreducibles(s3);
    SdpElement transposition{1, {0, 0, 0}, parse_permutation("(1 2)", 3)};
    for (const auto& r1 : irreps)
        for (const auto& r2 : irreps) {
            // evaluated at (sigma, 1): the flag comes from the first factor
            Matrix left = mat_kron(r1.at(transposition), mat_identity(r2.dim()));
            CHECK(is_minus_identity(left) == is_minus_identity(r1.at(transposition)));
        }
}

TEST_CASE("subrepresentation test") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FiniteGroup a3 = s3.subgroup_where(
        [](const SdpElement& e) { return perm_parity(e.perm) == 0; });
    Rep triv_a3 = Rep::trivial(a3);
    Rep triv_s3 = Rep::trivial(s3);
    Rep sgn_s3 = Rep::sign_of_perm(s3);
    CHECK(is_sub_rsr(triv_a3, triv_s3));
    CHECK(is_sub_rsr(triv_a3, sgn_s3));  // sgn restricts trivially to A3
    CHECK(!is_sub_rsr(sgn_s3, triv_s3));
    // the induced 2-dim contains the nontrivial characters of C3
    FiniteGroup c3 = FiniteGroup::closure({SdpElement{1, {0, 0, 0},
                                                      parse_permutation("(1 2 3)", 3)}});
    auto chars_c3 = one_dimensional_reps(c3);
    REQUIRE(chars_c3.size() == 3);
    for (const auto& ch : chars_c3) {
        Rep ind = ch.induced(s3);
        CHECK(is_sub_rsr(ch, ind));
    }
}

TEST_CASE("block-subgroup centralizers factor over a product split") {
    // split S5 as S2 x S3 on {1,2} | {3,4,5}
    FiniteGroup s5 = FiniteGroup::symmetric(5);
    FiniteGroup young = s5.subgroup_where([](const SdpElement& e) {
        return e.perm(0) < 2 && e.perm(1) < 2;
    });
    CHECK(young.size() == 12);
    for (const auto& sigma : young.elements()) {
        FiniteGroup z = young.centralizer_of(sigma);
        // product of the centralizers in the two factors
        std::vector<int> factor_sizes;
        for (auto cut : {std::pair{0, 2}, std::pair{2, 5}}) {
            int count = 0;
            for (const auto& e : young.elements()) {
                bool in_factor = true;
                for (int i = 0; i < 5; ++i)
                    if ((i < cut.first || i >= cut.second) && e.perm(i) != i) in_factor = false;
                if (!in_factor) continue;
                SdpElement prod1 = sdp_compose(e, sigma);
                SdpElement prod2 = sdp_compose(sigma, e);
                if (prod1 == prod2) ++count;
            }
            factor_sizes.push_back(count);
        }
        CHECK(static_cast<int>(z.size()) == factor_sizes[0] * factor_sizes[1]);
    }
}
