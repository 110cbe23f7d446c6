#include "wn/json_io.hpp"

#include "wn/repkit.hpp"

#include <algorithm>
#include <stdexcept>

namespace wn::io {

json element_to_json(const WeylElement& x) {
    return json{{"sign", x.sign.to_string()}, {"perm", print_permutation(x.perm)}};
}

WeylElement element_from_json(const json& j, int rank) {
    if (!j.is_object()) throw std::invalid_argument("element: expected an object");
    SignVector sign(rank);
    if (j.contains("sign")) sign = SignVector::from_string(j.at("sign").get<std::string>());
    Permutation perm(rank);
    if (j.contains("perm")) perm = parse_permutation(j.at("perm").get<std::string>(), rank);
    return make_element(sign, perm);
}

json descriptor_to_json(const RepDescriptor& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks)
        blocks.push_back(json{{"j", b.j}, {"t", b.t}, {"rho", print_rho_label(b.rho)}});
    json out{{"blocks", blocks}};
    if (d.nu) out["nu"] = *d.nu;
    if (d.chi_bits) out["chi"] = d.chi_bits->to_string();
    if (d.rho_prime) out["rhoPrime"] = print_rho_label(*d.rho_prime);
    if (d.rho_prime_prime) out["rhoPrimePrime"] = print_rho_label(*d.rho_prime_prime);
    return out;
}

RepDescriptor descriptor_from_json(const json& j) {
    RepDescriptor d;
    if (j.contains("blocks")) {
        for (const auto& jb : j.at("blocks")) {
            DescriptorBlock b;
            b.j = jb.at("j").get<int>();
            if (jb.contains("t")) b.t = jb.at("t").get<std::vector<int>>();
            b.rho = jb.contains("rho") ? parse_rho_label(jb.at("rho").get<std::string>())
                                       : rho_epsilon();
            d.blocks.push_back(std::move(b));
        }
        std::sort(d.blocks.begin(), d.blocks.end(),
                  [](const DescriptorBlock& a, const DescriptorBlock& b) { return a.j < b.j; });
    }
    if (j.contains("nu")) d.nu = j.at("nu").get<int>();
    if (j.contains("chi")) d.chi_bits = SignVector::from_string(j.at("chi").get<std::string>());
    if (j.contains("rhoPrime")) d.rho_prime = parse_rho_label(j.at("rhoPrime").get<std::string>());
    if (j.contains("rhoPrimePrime"))
        d.rho_prime_prime = parse_rho_label(j.at("rhoPrimePrime").get<std::string>());
    return d;
}

json verdict_to_json(const Verdict& v) {
    json trace = json::array();
    for (const auto& t : v.trace) trace.push_back(json{{"rule", t.rule}, {"detail", t.detail}});
    return json{{"outcome", outcome_name(v.outcome)}, {"trace", trace}};
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    bool all = true;
    for (const auto& c : checks) {
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all = all && c.pass;
    }
    return json{{"pass", all}, {"checks", arr}};
}

namespace {

json descriptor_json(const ClassDescriptor& d) {
    json cycles = json::array();
    for (auto [len, parity] : d.cycle_signs)
        cycles.push_back(json{{"length", len}, {"parity", parity}});
    return json{{"type", d.type.to_string()}, {"cycles", cycles}, {"sign", d.total_parity}};
}

json spec_json(const GroupSpec& spec) {
    return json{{"family", family_name(spec.family)}, {"rank", spec.rank},
                {"order", spec.order()}};
}

GroupSpec spec_from_json(const json& j) {
    GroupSpec spec;
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.rank = j.at("rank").get<int>();
    if (spec.rank < 1 || spec.rank > 64)
        throw std::invalid_argument("rank must be between 1 and 64");
    return spec;
}

}  // namespace

json classes_report(const GroupSpec& spec, const Config& cfg) {
    json out = spec_json(spec);
    json classes = json::array();
    for (const auto& c : conjugacy_classes(spec, cfg.cutoff))
        classes.push_back(json{{"representative", element_to_json(c.representative)},
                               {"size", c.size()},
                               {"descriptor", descriptor_json(c.descriptor)}});
    out["classes"] = classes;
    return out;
}

json centralizer_report(const GroupSpec& spec, const std::string& perm_text,
                        const std::string& sign_text, const Config& cfg, bool full) {
    SignVector sign = sign_text.empty() ? SignVector(spec.rank)
                                        : SignVector::from_string(sign_text);
    WeylElement x = make_element(sign, parse_permutation(perm_text, spec.rank));
    if (!spec.sign_allowed(x.sign))
        throw std::invalid_argument("element sign vector is outside the family");
    Centralizer z = centralizer(x, spec, cfg.cutoff);
    json out = spec_json(spec);
    out["element"] = element_to_json(x);
    out["centralizerOrder"] = z.order();
    out["classSize"] = spec.order() / z.order();
    json gens = json::array();
    for (const auto& g : z.generators) gens.push_back(element_to_json(g));
    out["generators"] = gens;
    if (z.factorization) {
        json a = json::array(), d = json::array();
        for (const auto& s : z.factorization->a_part) a.push_back(s.to_string());
        for (const auto& p : z.factorization->d_part) d.push_back(print_permutation(p));
        out["factorization"] = json{{"aPart", a}, {"dPart", d}};
    }
    if (full) {
        json elems = json::array();
        for (const auto& e : z.elements) elems.push_back(element_to_json(e));
        out["elements"] = elems;
    }
    return out;
}

json phi_report(int rank, const std::string& sigma_text, const std::string& tau_text) {
    Permutation sigma = parse_permutation(sigma_text, rank);
    Permutation tau = tau_text.empty() ? sigma : parse_permutation(tau_text, rank);
    auto [gamma, normal] = normalize(sigma);
    Permutation tau_moved = tau.conjugated_by(gamma);
    json out{{"rank", rank},
             {"sigma", print_permutation(sigma)},
             {"normalForm", print_permutation(normal)},
             {"conjugator", print_permutation(gamma)},
             {"tau", print_permutation(tau)}};
    PhiImage img = phi(tau_moved, normal);
    json blocks = json::array();
    for (const auto& [j, e] : img.per_block)
        blocks.push_back(json{{"j", j}, {"f", e.exps}, {"theta", print_permutation(e.perm)}});
    out["blocks"] = blocks;
    return out;
}

json xi_report(const std::string& type_text, const std::vector<std::string>& t_specs,
               const std::vector<std::string>& rho_specs) {
    CycleType type = parse_cycle_type(type_text);
    RepDescriptor desc;
    auto block_for = [&](int j) -> DescriptorBlock& {
        for (auto& b : desc.blocks)
            if (b.j == j) return b;
        desc.blocks.push_back(DescriptorBlock{j, {}, rho_epsilon()});
        return desc.blocks.back();
    };
    for (const auto& s : t_specs) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("exponent assignment must look like 2:[1,1,1]");
        int j = std::stoi(s.substr(0, colon));
        json arr = json::parse(s.substr(colon + 1));
        block_for(j).t = arr.get<std::vector<int>>();
    }
    for (const auto& s : rho_specs) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("label assignment must look like 2:sgn");
        int j = std::stoi(s.substr(0, colon));
        block_for(j).rho = parse_rho_label(s.substr(colon + 1));
    }
    std::sort(desc.blocks.begin(), desc.blocks.end(),
              [](const DescriptorBlock& a, const DescriptorBlock& b) { return a.j < b.j; });
    Permutation sigma = normal_form_permutation(type);
    Rat xi = distinguished_element(desc, type).value;
    bool minus_one = is_minus_one_type(desc, sigma);
    json out{{"type", type.to_string()},
             {"descriptor", descriptor_to_json(desc)},
             {"xi", to_string(xi)},
             {"xiIntegral", is_integer(xi)},
             {"sigmaOrderEven", type.element_order() % 2 == 0},
             {"minusOneType", minus_one},
             {"charValueAtSigma", char_value_at_sigma(desc, sigma).to_string()},
             {"degree", descriptor_degree(desc, type)}};
    return out;
}

json squarecomm_report(const GroupSpec& spec, const Config& cfg, bool include_trivial) {
    SquareCommReport r = enumerate_pairs(spec, cfg.cutoff, include_trivial, cfg.workers);
    json out = spec_json(spec);
    json classes = json::array();
    for (const auto& c : r.classes)
        classes.push_back(json{{"representative", element_to_json(c.representative)},
                               {"size", c.size()},
                               {"descriptor", descriptor_json(c.descriptor)}});
    out["classes"] = classes;
    json pairs = json::array();
    json commuting = json::array();
    for (const auto& pv : r.pairs) {
        json p{{"first", pv.first_class},
               {"second", pv.second_class},
               {"squareCommutative", pv.square_commutative}};
        if (pv.witness)
            p["witness"] = json{{"s", element_to_json(pv.witness->s)},
                                {"t", element_to_json(pv.witness->t)}};
        pairs.push_back(std::move(p));
        if (pv.square_commutative)
            commuting.push_back(json{{"first", pv.first_class}, {"second", pv.second_class}});
    }
    out["pairs"] = pairs;
    out["squareCommutativePairs"] = commuting;
    return out;
}

json classify_report(const json& input) {
    GroupSpec spec = spec_from_json(input);
    if (input.contains("module") == input.contains("rsr"))
        throw std::invalid_argument("classify input needs exactly one of 'module' or 'rsr'");
    Verdict v;
    if (input.contains("module")) {
        YDModuleSpec m;
        m.spec = spec;
        for (const auto& js : input.at("module").at("summands")) {
            YDSummand s;
            s.support = element_from_json(js.at("support"), spec.rank);
            if (!spec.sign_allowed(s.support.sign))
                throw std::invalid_argument("summand support is outside the family");
            if (js.contains("rep")) s.rep = descriptor_from_json(js.at("rep"));
            m.summands.push_back(std::move(s));
        }
        v = classify_module(m);
    } else {
        RSRDescriptor rsr;
        rsr.spec = spec;
        for (const auto& je : input.at("rsr").at("entries")) {
            RSREntry e;
            e.u = element_from_json(je.at("u"), spec.rank);
            e.multiplicity = je.value("multiplicity", 1);
            if (e.multiplicity < 1)
                throw std::invalid_argument("rsr entry multiplicity must be positive");
            if (je.contains("reps"))
                for (const auto& jr : je.at("reps"))
                    e.reps.push_back(descriptor_from_json(jr));
            long long deg = rsr_entry_degree(e, spec);
            if (deg >= 0 && deg != e.multiplicity)
                throw std::invalid_argument(
                    "rsr entry degree " + std::to_string(deg) +
                    " does not match its multiplicity " + std::to_string(e.multiplicity));
            rsr.entries.push_back(std::move(e));
        }
        v = classify_rsr(rsr);
        json out = verdict_to_json(v);
        out["centralQuantumLinear"] = is_central_quantum_linear(rsr);
        return out;
    }
    return verdict_to_json(v);
}

json verify_report(const SuiteRequest& req) {
    auto checks = run_suite(req);
    json out = checks_to_json(checks);
    out["suite"] = req.lemma.empty() ? "all" : req.lemma;
    if (req.n) out["n"] = req.n;
    return out;
}

}  // namespace wn::io
