#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wn/squarecomm.hpp"

#include <random>
#include <set>

using namespace wn;

namespace {
constexpr unsigned long long kCutoff = 1'000'000;

ConjugacyClass perm_class(const std::string& text, const GroupSpec& spec) {
    return class_of(WeylElement{SignVector(spec.rank), parse_permutation(text, spec.rank)},
                    spec, kCutoff);
}
}  // namespace

TEST_CASE("square commutativity worked pairs") {
    GroupSpec s3{Family::A, 3};
    CHECK(square_commute(perm_class("(1 2 3)", s3), perm_class("(1 2 3)", s3)));
    CHECK(!square_commute(perm_class("(1 2)", s3), perm_class("(1 2)", s3)));
    CHECK(square_commute(perm_class("(1 2)", s3), perm_class("(1 2 3)", s3)));

    GroupSpec s6{Family::A, 6};
    CHECK(square_commute(perm_class("(1 2)", s6), perm_class("(1 2)(3 4)(5 6)", s6)));

    GroupSpec s4{Family::A, 4};
    auto four = perm_class("(1 2 3 4)", s4);
    CHECK(!square_commute(four, four));
    auto witness = square_commute_witness(four, four);
    REQUIRE(witness.has_value());
    WeylElement st = compose(witness->s, witness->t);
    WeylElement ts = compose(witness->t, witness->s);
    CHECK(compose(st, st) != compose(ts, ts));
    // least witness under the canonical ordering: nothing smaller fails
    bool smaller_fails = false;
    for (const auto& s : four.elements) {
        if (witness->s < s || s == witness->s) break;
        for (const auto& t : four.elements) {
            WeylElement a = compose(s, t), b = compose(t, s);
            if (compose(a, a) != compose(b, b)) smaller_fails = true;
        }
    }
    CHECK(!smaller_fails);

    // the displayed witness: ((1234)(4231))^2 fixes 1, ((4231)(1234))^2 moves 1 to 2
    Permutation p = parse_permutation("(1 2 3 4)", 4);
    Permutation q = parse_permutation("(4 2 3 1)", 4);
    Permutation st2 = p.compose(q).compose(p).compose(q);
    Permutation ts2 = q.compose(p).compose(q).compose(p);
    CHECK(st2(0) != ts2(0));
}

TEST_CASE("pair enumeration catalogs for the symmetric groups") {
    auto type_pairs = [](const SquareCommReport& r) {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& pv : r.pairs) {
            if (!pv.square_commutative) continue;
            std::string a = r.classes[pv.first_class].descriptor.type.to_string();
            std::string b = r.classes[pv.second_class].descriptor.type.to_string();
            if (b < a) std::swap(a, b);
            out.insert({a, b});
        }
        return out;
    };
    SquareCommReport r3 = enumerate_pairs({Family::A, 3}, kCutoff);
    CHECK(type_pairs(r3) ==
          std::set<std::pair<std::string, std::string>>{{"1^1 2^1", "3^1"}, {"3^1", "3^1"}});
    SquareCommReport r4 = enumerate_pairs({Family::A, 4}, kCutoff);
    CHECK(type_pairs(r4) == std::set<std::pair<std::string, std::string>>{
                                {"2^2", "2^2"}, {"2^2", "4^1"}, {"1^2 2^1", "2^2"}});
    SquareCommReport r5 = enumerate_pairs({Family::A, 5}, kCutoff);
    CHECK(type_pairs(r5).empty());
}

TEST_CASE("identity class only pairs under the flag, and commutes with everything") {
    SquareCommReport without = enumerate_pairs({Family::A, 3}, kCutoff, false);
    for (const auto& c : without.classes) CHECK(!c.representative.is_identity());
    SquareCommReport with_id = enumerate_pairs({Family::A, 3}, kCutoff, true);
    CHECK(with_id.classes.size() == without.classes.size() + 1);
    for (const auto& pv : with_id.pairs) {
        if (with_id.classes[pv.first_class].representative.is_identity() ||
            with_id.classes[pv.second_class].representative.is_identity())
            CHECK(pv.square_commutative);
    }
}

TEST_CASE("reduced test agrees with the full sweep at rank <= 3") {
    for (GroupSpec spec : {GroupSpec{Family::A, 3}, GroupSpec{Family::A, 4},
                           GroupSpec{Family::B, 2}, GroupSpec{Family::B, 3},
                           GroupSpec{Family::D, 3}}) {
        SquareCommReport r = enumerate_pairs(spec, kCutoff, true);
        for (const auto& pv : r.pairs)
            CHECK(pv.square_commutative ==
                  square_commute_full(r.classes[pv.first_class], r.classes[pv.second_class]));
    }
}

TEST_CASE("verdicts do not depend on the chosen representative") {
    std::mt19937_64 rng(2025);
    SquareCommReport r = enumerate_pairs({Family::B, 3}, kCutoff, true);
    for (int iter = 0; iter < 200; ++iter) {
        std::uniform_int_distribution<size_t> pick(0, r.classes.size() - 1);
        const auto& c1 = r.classes[pick(rng)];
        ConjugacyClass c2 = r.classes[pick(rng)];
        std::uniform_int_distribution<size_t> picke(0, c2.elements.size() - 1);
        c2.representative = c2.elements[picke(rng)];
        CHECK(square_commute(c1, c2) == square_commute_full(c1, c2));
    }
}

TEST_CASE("projection necessity holds in the sign families") {
    CHECK(lifted_necessity_check({Family::B, 2}, kCutoff));
    CHECK(lifted_necessity_check({Family::B, 3}, kCutoff));
    CHECK(lifted_necessity_check({Family::D, 4}, kCutoff));
}

TEST_CASE("rank-4 sign rule over 2^2 permutation parts") {
    CHECK(sign_condition_check({Family::B, 4}, kCutoff));
    CHECK(sign_condition_check({Family::D, 4}, kCutoff));
    CHECK_THROWS_AS(sign_condition_check({Family::B, 3}, kCutoff), std::invalid_argument);

    // spot checks: equal parities commute, opposite parities do not
    GroupSpec b4{Family::B, 4};
    auto pos = class_of(WeylElement{SignVector(4), parse_permutation("(1 2)(3 4)", 4)}, b4,
                        kCutoff);
    auto neg = class_of(WeylElement{SignVector::from_string("1000"),
                                    parse_permutation("(1 2)(3 4)", 4)},
                        b4, kCutoff);
    CHECK(pos.descriptor.total_parity == 0);
    CHECK(neg.descriptor.total_parity == 1);
    CHECK(square_commute(pos, pos));
    CHECK(square_commute(neg, neg));
    CHECK(!square_commute(pos, neg));
}

TEST_CASE("worker pool gives the same deterministic report") {
    SquareCommReport serial = enumerate_pairs({Family::B, 3}, kCutoff, true, 1);
    SquareCommReport parallel = enumerate_pairs({Family::B, 3}, kCutoff, true, 4);
    REQUIRE(serial.pairs.size() == parallel.pairs.size());
    for (size_t i = 0; i < serial.pairs.size(); ++i) {
        CHECK(serial.pairs[i].square_commutative == parallel.pairs[i].square_commutative);
        CHECK(serial.pairs[i].witness.has_value() == parallel.pairs[i].witness.has_value());
        if (serial.pairs[i].witness)
            CHECK(serial.pairs[i].witness->s == parallel.pairs[i].witness->s);
    }
}

TEST_CASE("group mismatch is rejected") {
    GroupSpec s3{Family::A, 3}, s4{Family::A, 4};
    CHECK_THROWS_AS(square_commute(perm_class("(1 2)", s3), perm_class("(1 2)", s4)),
                    std::invalid_argument);
}
