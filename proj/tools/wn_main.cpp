// Command-line front end; talks to the library exclusively through the
// C interface in weylnichols.h.

#include "weylnichols.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct CliOptions {
    std::string family = "B";
    int rank = 3;
    uint64_t cutoff = 1'000'000;
    int workers = 1;
    std::string format = "text";
    uint64_t seed = 20240801;
    int cases = 10000;
};

struct Owned {
    char* p = nullptr;
    ~Owned() { wn_free(p); }
};

int status_to_exit(wn_status st) {
    switch (st) {
        case WN_OK: return 0;
        case WN_ERR_VERIFY_FAILED: return 2;
        default: return 1;
    }
}

std::string element_text(const json& e) {
    return e.value("sign", "") + "|" + e.value("perm", "()");
}

std::string descriptor_text(const json& d) {
    std::ostringstream os;
    os << d.value("type", "?") << " [";
    bool first = true;
    for (const auto& c : d.value("cycles", json::array())) {
        if (!first) os << ' ';
        first = false;
        os << c.value("length", 0) << (c.value("parity", 0) ? '-' : '+');
    }
    os << "] total " << (d.value("sign", 0) ? '-' : '+');
    return os.str();
}

void print_classes_text(const json& r) {
    std::cout << "family " << r.value("family", "?") << " rank " << r.value("rank", 0)
              << ", order " << r.value("order", 0) << ", "
              << r.value("classes", json::array()).size() << " classes\n";
    for (const auto& c : r.value("classes", json::array()))
        std::cout << "  " << element_text(c["representative"]) << "  size " << c.value("size", 0)
                  << "  " << descriptor_text(c["descriptor"]) << "\n";
}

void print_centralizer_text(const json& r) {
    std::cout << "element " << element_text(r["element"]) << " in "
              << r.value("family", "?") << r.value("rank", 0) << " (order "
              << r.value("order", 0) << ")\n";
    std::cout << "centralizer order " << r.value("centralizerOrder", 0) << ", class size "
              << r.value("classSize", 0) << "\n";
    std::cout << "generators:";
    for (const auto& g : r.value("generators", json::array()))
        std::cout << "  " << element_text(g);
    std::cout << "\n";
    if (r.contains("factorization"))
        std::cout << "splits as sign part x| permutation part: |A^s| = "
                  << r["factorization"]["aPart"].size() << ", |D^s| = "
                  << r["factorization"]["dPart"].size() << "\n";
}

void print_phi_text(const json& r) {
    std::cout << "sigma = " << r.value("sigma", "?") << ", normal form "
              << r.value("normalForm", "?") << " via conjugator "
              << r.value("conjugator", "?") << "\n";
    std::cout << "tau = " << r.value("tau", "?") << "\n";
    for (const auto& b : r.value("blocks", json::array())) {
        std::cout << "  block j=" << b.value("j", 0) << "  f=[";
        bool first = true;
        for (const auto& v : b.value("f", json::array())) {
            if (!first) std::cout << ',';
            first = false;
            std::cout << v.get<int>();
        }
        std::cout << "]  theta=" << b.value("theta", "?") << "\n";
    }
}

void print_xi_text(const json& r) {
    std::cout << "type " << r.value("type", "?") << ", degree " << r.value("degree", 0) << "\n";
    std::cout << "xi = " << r.value("xi", "?")
              << (r.value("xiIntegral", false) ? " (integer)" : " (not an integer)") << "\n";
    std::cout << "order of sigma " << (r.value("sigmaOrderEven", false) ? "even" : "odd")
              << "; -1-type: " << (r.value("minusOneType", false) ? "yes" : "no") << "\n";
    std::cout << "character value at sigma: " << r.value("charValueAtSigma", "?") << "\n";
}

void print_squarecomm_text(const json& r) {
    const auto& classes = r["classes"];
    std::cout << "family " << r.value("family", "?") << " rank " << r.value("rank", 0) << ", "
              << classes.size() << " classes paired\n";
    for (const auto& p : r.value("pairs", json::array())) {
        const auto& c1 = classes[p.value("first", 0)];
        const auto& c2 = classes[p.value("second", 0)];
        std::cout << "  " << element_text(c1["representative"]) << "  ~  "
                  << element_text(c2["representative"]) << "  : "
                  << (p.value("squareCommutative", false) ? "square-commutative"
                                                          : "not square-commutative");
        if (p.contains("witness"))
            std::cout << "  witness s=" << element_text(p["witness"]["s"])
                      << " t=" << element_text(p["witness"]["t"]);
        std::cout << "\n";
    }
}

void print_classify_text(const json& r) {
    std::cout << "outcome: " << r.value("outcome", "?") << "\n";
    for (const auto& t : r.value("trace", json::array()))
        std::cout << "  [" << t.value("rule", "?") << "] " << t.value("detail", "") << "\n";
    if (r.contains("centralQuantumLinear"))
        std::cout << "central quantum linear: "
                  << (r["centralQuantumLinear"].get<bool>() ? "yes" : "no") << "\n";
}

void print_checks_text(const json& r) {
    for (const auto& c : r.value("checks", json::array()))
        std::cout << (c.value("pass", false) ? "[PASS] " : "[FAIL] ") << c.value("name", "?")
                  << " — " << c.value("detail", "") << "\n";
    std::cout << (r.value("pass", false) ? "all checks passed" : "some checks FAILED") << "\n";
}

int emit(wn_context* ctx, wn_status st, const Owned& out, const CliOptions& opt,
         void (*text_printer)(const json&)) {
    if (st != WN_OK && !(st == WN_ERR_VERIFY_FAILED && out.p)) {
        std::cerr << "error: " << wn_last_error(ctx) << "\n";
        return status_to_exit(st);
    }
    json r = json::parse(out.p);
    if (opt.format == "json")
        std::cout << r.dump(2) << "\n";
    else
        text_printer(r);
    return status_to_exit(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for signed-permutation groups: conjugacy, induced "
                 "characters, square-commutativity, and classification verdicts"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    CliOptions opt;
    app.add_option("--cutoff", opt.cutoff, "largest group order enumerated")
        ->envname("WN_CUTOFF");
    app.add_option("--workers", opt.workers, "worker threads for pair grids")
        ->envname("WN_WORKERS");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("WN_FORMAT");
    app.add_option("--seed", opt.seed, "seed for the randomized property suites")
        ->envname("WN_SEED");
    app.add_option("--cases", opt.cases, "random cases per property suite")
        ->envname("WN_CASES");

    auto add_group_flags = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family, "group family: A, B, or D")
            ->check(CLI::IsMember({"A", "B", "D", "a", "b", "d"}))
            ->envname("WN_FAMILY");
        sub->add_option("--rank", opt.rank, "rank n")->required()->envname("WN_RANK");
    };

    auto* classes = app.add_subcommand("classes", "list conjugacy classes");
    add_group_flags(classes);

    auto* cent = app.add_subcommand("centralizer", "centralizer of an element");
    add_group_flags(cent);
    std::string perm_text = "()", sign_text;
    bool full = false;
    cent->add_option("--element", perm_text, "permutation part in cycle notation")->required();
    cent->add_option("--sign", sign_text, "sign part as a 0/1 string");
    cent->add_flag("--full", full, "include the full element list");

    auto* phi = app.add_subcommand("phi", "per-block wreath image of a centralizing element");
    int phi_rank = 0;
    std::string sigma_text, tau_text;
    phi->add_option("--rank", phi_rank, "degree n")->required();
    phi->add_option("--sigma", sigma_text, "base permutation")->required();
    phi->add_option("--tau", tau_text, "centralizing permutation (defaults to sigma)");

    auto* xi = app.add_subcommand("xi", "distinguished element of a representation descriptor");
    std::string type_text;
    std::vector<std::string> t_specs, rho_specs;
    xi->add_option("--type", type_text, "cycle type, e.g. \"1^2 2^3\"")->required();
    xi->add_option("--t", t_specs, "exponent tuple per length, e.g. 2:[1,1,1]");
    xi->add_option("--rho", rho_specs, "stabilizer label per length, e.g. 2:sgn");

    auto* sq = app.add_subcommand("squarecomm", "square-commutativity of class pairs");
    add_group_flags(sq);
    bool include_trivial = false;
    sq->add_flag("--include-trivial", include_trivial, "also pair the identity class");

    auto* cl = app.add_subcommand("classify", "classification verdict for a module file");
    std::string spec_path;
    cl->add_option("--spec", spec_path, "JSON file with a module or rsr description")
        ->required();

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string lemma = "all";
    int ver_n = 0;
    ver->add_option("--lemma", lemma, "suite id: all, 2.1, 2.4, 2.8, 1.9, 3.9, 3.10, 3.11, "
                                      "classifier, properties");
    ver->add_option("--n", ver_n, "restrict the suite to one size");

    CLI11_PARSE(app, argc, argv);

    wn_context* ctx = wn_context_new();
    if (!ctx) {
        std::cerr << "error: context allocation failed\n";
        return 1;
    }
    wn_context_set_cutoff(ctx, opt.cutoff);
    wn_context_set_workers(ctx, opt.workers);
    wn_context_set_seed(ctx, opt.seed);
    wn_context_set_property_cases(ctx, opt.cases);

    int rc = 1;
    Owned out;
    try {
        if (classes->parsed()) {
            wn_status st = wn_classes_json(ctx, opt.family[0], opt.rank, &out.p);
            rc = emit(ctx, st, out, opt, print_classes_text);
        } else if (cent->parsed()) {
            wn_status st = wn_centralizer_json(ctx, opt.family[0], opt.rank, perm_text.c_str(),
                                               sign_text.c_str(), full ? 1 : 0, &out.p);
            rc = emit(ctx, st, out, opt, print_centralizer_text);
        } else if (phi->parsed()) {
            wn_status st = wn_phi_json(ctx, phi_rank, sigma_text.c_str(),
                                       tau_text.empty() ? nullptr : tau_text.c_str(), &out.p);
            rc = emit(ctx, st, out, opt, print_phi_text);
        } else if (xi->parsed()) {
            std::string joined_t, joined_rho;
            for (const auto& s : t_specs) joined_t += (joined_t.empty() ? "" : ";") + s;
            for (const auto& s : rho_specs) joined_rho += (joined_rho.empty() ? "" : ";") + s;
            wn_status st = wn_xi_json(ctx, type_text.c_str(), joined_t.c_str(),
                                      joined_rho.c_str(), &out.p);
            rc = emit(ctx, st, out, opt, print_xi_text);
        } else if (sq->parsed()) {
            wn_status st = wn_squarecomm_json(ctx, opt.family[0], opt.rank,
                                              include_trivial ? 1 : 0, &out.p);
            rc = emit(ctx, st, out, opt, print_squarecomm_text);
        } else if (cl->parsed()) {
            std::ifstream in(spec_path);
            if (!in) {
                std::cerr << "error: cannot read " << spec_path << "\n";
                wn_context_free(ctx);
                return 1;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            wn_status st = wn_classify_json(ctx, buf.str().c_str(), &out.p);
            rc = emit(ctx, st, out, opt, print_classify_text);
        } else if (ver->parsed()) {
            wn_status st = wn_verify_json(ctx, lemma.c_str(), ver_n, &out.p);
            rc = emit(ctx, st, out, opt, print_checks_text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    }
    wn_context_free(ctx);
    return rc;
}
