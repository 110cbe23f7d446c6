#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylnichols.h"

#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

struct Ctx {
    wn_context* p = wn_context_new();
    ~Ctx() { wn_context_free(p); }
};

struct Out {
    char* p = nullptr;
    ~Out() { wn_free(p); }
    json parsed() const { return json::parse(p); }
};

}  // namespace

TEST_CASE("classes through the C surface") {
    Ctx ctx;
    Out out;
    REQUIRE(wn_classes_json(ctx.p, 'B', 2, &out.p) == WN_OK);
    json r = out.parsed();
    CHECK(r["order"] == 8);
    CHECK(r["classes"].size() == 5);  // W(B2) is dihedral of order 8
    unsigned long long covered = 0;
    for (const auto& c : r["classes"]) covered += c["size"].get<unsigned long long>();
    CHECK(covered == 8);
}

TEST_CASE("centralizer and factorization") {
    Ctx ctx;
    Out out;
    REQUIRE(wn_centralizer_json(ctx.p, 'A', 5, "(1 2 3)", "", 0, &out.p) == WN_OK);
    json r = out.parsed();
    CHECK(r["centralizerOrder"] == 6);  // C3 x S2 on the fixed points
    CHECK(r.contains("factorization"));
}

TEST_CASE("xi through the C surface") {
    Ctx ctx;
    Out out;
    REQUIRE(wn_xi_json(ctx.p, "4^2", "4:[3,3]", "", &out.p) == WN_OK);
    json r = out.parsed();
    CHECK(r["xi"] == "2");
    CHECK(r["minusOneType"] == true);

    Out out2;
    REQUIRE(wn_xi_json(ctx.p, "1^2 2^3", "2:[1,1,1]", "2:sgn", &out2.p) == WN_OK);
    CHECK(out2.parsed()["xi"] == "2");

    Out bad;
    CHECK(wn_xi_json(ctx.p, "4^2", "4:[9,9]", "", &bad.p) == WN_ERR_DOMAIN);
    CHECK(std::string(wn_last_error(ctx.p)).find("exponent") != std::string::npos);
}

TEST_CASE("phi through the C surface") {
    Ctx ctx;
    Out out;
    REQUIRE(wn_phi_json(ctx.p, 4, "(1 3)(2 4)", nullptr, &out.p) == WN_OK);
    json r = out.parsed();
    CHECK(r["normalForm"] == "(1 2)(3 4)");
    REQUIRE(r["blocks"].size() == 1);
    CHECK(r["blocks"][0]["j"] == 2);
    CHECK(r["blocks"][0]["f"] == json::array({1, 1}));
    CHECK(r["blocks"][0]["theta"] == "()");
}

TEST_CASE("squarecomm respects the cutoff") {
    Ctx ctx;
    wn_context_set_cutoff(ctx.p, 100);
    Out out;
    CHECK(wn_squarecomm_json(ctx.p, 'B', 4, 0, &out.p) == WN_ERR_CUTOFF);
    wn_context_set_cutoff(ctx.p, 1000);
    Out out2;
    REQUIRE(wn_squarecomm_json(ctx.p, 'B', 4, 0, &out2.p) == WN_OK);
    CHECK(out2.parsed()["classes"].size() == 19);  // 20 classes minus the identity
}

TEST_CASE("classify through the C surface") {
    Ctx ctx;
    const char* module_json = R"json({
        "family": "B", "rank": 5,
        "module": {"summands": [
            {"support": {"perm": "(1 2)"}},
            {"support": {"perm": "(1 2)(3 4)"}}
        ]}
    })json";
    Out out;
    REQUIRE(wn_classify_json(ctx.p, module_json, &out.p) == WN_OK);
    json r = out.parsed();
    CHECK(r["outcome"] == "Infinite");
    CHECK(r["trace"][0]["rule"] == "theorem-4");

    Out bad;
    CHECK(wn_classify_json(ctx.p, "{not json", &bad.p) == WN_ERR_DOMAIN);
    CHECK(wn_classify_json(ctx.p, R"json({"family":"B","rank":4})json", &bad.p) == WN_ERR_DOMAIN);

    const char* rsr_json = R"json({
        "family": "B", "rank": 3,
        "rsr": {"entries": [
            {"u": {"sign": "111", "perm": "()"}, "multiplicity": 3,
             "reps": [{"chi": "100"}]}
        ]}
    })json";
    Out out3;
    REQUIRE(wn_classify_json(ctx.p, rsr_json, &out3.p) == WN_OK);
    json r3 = out3.parsed();
    CHECK(r3["outcome"] == "Finite");
    CHECK(r3["centralQuantumLinear"] == true);

    // the stated multiplicity must match the computable degree
    const char* rsr_bad = R"json({
        "family": "B", "rank": 3,
        "rsr": {"entries": [
            {"u": {"sign": "111", "perm": "()"}, "multiplicity": 1,
             "reps": [{"chi": "100"}]}
        ]}
    })json";
    Out bad2;
    CHECK(wn_classify_json(ctx.p, rsr_bad, &bad2.p) == WN_ERR_DOMAIN);
}

TEST_CASE("verify through the C surface") {
    Ctx ctx;
    Out out;
    REQUIRE(wn_verify_json(ctx.p, "2.8", 0, &out.p) == WN_OK);
    json r = out.parsed();
    CHECK(r["pass"] == true);
    CHECK(r["suite"] == "2.8");

    Out unknown;
    CHECK(wn_verify_json(ctx.p, "9.99", 0, &unknown.p) == WN_ERR_DOMAIN);

    // the rank-4 sign suite contains the documented red check, so the
    // verification exit path must fire
    Out red;
    wn_status st = wn_verify_json(ctx.p, "3.11", 0, &red.p);
    CHECK(st == WN_ERR_VERIFY_FAILED);
    REQUIRE(red.p != nullptr);
    json rr = red.parsed();
    CHECK(rr["pass"] == false);
    int failing = 0;
    for (const auto& c : rr["checks"])
        if (!c["pass"].get<bool>()) ++failing;
    CHECK(failing == 1);  // only the (iv) item
}

TEST_CASE("null handling") {
    CHECK(wn_classes_json(nullptr, 'B', 2, nullptr) == WN_ERR_DOMAIN);
    Ctx ctx;
    CHECK(wn_classes_json(ctx.p, 'Q', 2, nullptr) == WN_ERR_DOMAIN);
    Out out;
    CHECK(wn_classes_json(ctx.p, 'Q', 2, &out.p) == WN_ERR_DOMAIN);
    CHECK(std::string(wn_last_error(ctx.p)).find("family") != std::string::npos);
    CHECK(wn_classes_json(ctx.p, 'B', 0, &out.p) == WN_ERR_DOMAIN);
}
