#include "weylnichols.h"

#include "wn/json_io.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct wn_context {
    wn::Config config;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

wn_status fail(wn_context* ctx, wn_status code, const std::string& message) {
    if (ctx) ctx->last_error = message;
    return code;
}

template <typename Fn>
wn_status guarded(wn_context* ctx, char** out_json, Fn&& fn) {
    if (!ctx || !out_json) return WN_ERR_DOMAIN;
    try {
        nlohmann::json result = fn();
        char* s = dup_string(result.dump());
        if (!s) return fail(ctx, WN_ERR_INTERNAL, "out of memory");
        *out_json = s;
        ctx->last_error.clear();
        return WN_OK;
    } catch (const wn::cutoff_error& e) {
        return fail(ctx, WN_ERR_CUTOFF, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ctx, WN_ERR_DOMAIN, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ctx, WN_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, WN_ERR_INTERNAL, e.what());
    }
}

wn::GroupSpec make_spec(char family, int rank) {
    wn::GroupSpec spec;
    spec.family = wn::parse_family(std::string(1, family));
    if (rank < 1 || rank > 64) throw std::invalid_argument("rank must be between 1 and 64");
    spec.rank = rank;
    return spec;
}

std::vector<std::string> split_specs(const char* s) {
    std::vector<std::string> out;
    if (!s) return out;
    std::string cur;
    for (const char* p = s; *p; ++p) {
        if (*p == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(*p);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

extern "C" {

wn_context* wn_context_new(void) { return new (std::nothrow) wn_context(); }

void wn_context_free(wn_context* ctx) { delete ctx; }

void wn_context_set_cutoff(wn_context* ctx, uint64_t max_group_order) {
    if (ctx && max_group_order > 0) ctx->config.cutoff = max_group_order;
}

void wn_context_set_workers(wn_context* ctx, int workers) {
    if (ctx && workers > 0) ctx->config.workers = workers;
}

void wn_context_set_seed(wn_context* ctx, uint64_t seed) {
    if (ctx) ctx->config.seed = seed;
}

void wn_context_set_property_cases(wn_context* ctx, int cases) {
    if (ctx && cases > 0) ctx->config.property_cases = cases;
}

const char* wn_last_error(const wn_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void wn_free(char* p) { std::free(p); }

wn_status wn_classes_json(wn_context* ctx, char family, int rank, char** out_json) {
    return guarded(ctx, out_json,
                   [&] { return wn::io::classes_report(make_spec(family, rank), ctx->config); });
}

wn_status wn_centralizer_json(wn_context* ctx, char family, int rank, const char* perm,
                              const char* sign, int include_elements, char** out_json) {
    return guarded(ctx, out_json, [&] {
        return wn::io::centralizer_report(make_spec(family, rank), perm ? perm : "()",
                                          sign ? sign : "", ctx->config,
                                          include_elements != 0);
    });
}

wn_status wn_phi_json(wn_context* ctx, int rank, const char* sigma, const char* tau,
                      char** out_json) {
    return guarded(ctx, out_json, [&] {
        if (!sigma) throw std::invalid_argument("sigma is required");
        return wn::io::phi_report(rank, sigma, tau ? tau : "");
    });
}

wn_status wn_xi_json(wn_context* ctx, const char* cycle_type, const char* exponents,
                     const char* labels, char** out_json) {
    return guarded(ctx, out_json, [&] {
        if (!cycle_type) throw std::invalid_argument("cycle type is required");
        return wn::io::xi_report(cycle_type, split_specs(exponents), split_specs(labels));
    });
}

wn_status wn_squarecomm_json(wn_context* ctx, char family, int rank, int include_trivial,
                             char** out_json) {
    return guarded(ctx, out_json, [&] {
        return wn::io::squarecomm_report(make_spec(family, rank), ctx->config,
                                         include_trivial != 0);
    });
}

wn_status wn_classify_json(wn_context* ctx, const char* spec_json, char** out_json) {
    return guarded(ctx, out_json, [&] {
        if (!spec_json) throw std::invalid_argument("input JSON is required");
        return wn::io::classify_report(nlohmann::json::parse(spec_json));
    });
}

wn_status wn_verify_json(wn_context* ctx, const char* suite, int n, char** out_json) {
    wn_status st = guarded(ctx, out_json, [&] {
        wn::SuiteRequest req;
        req.lemma = suite ? suite : "all";
        req.n = n;
        req.seed = ctx->config.seed;
        req.cases = ctx->config.property_cases;
        req.workers = ctx->config.workers;
        return wn::io::verify_report(req);
    });
    if (st != WN_OK) return st;
    try {
        nlohmann::json parsed = nlohmann::json::parse(*out_json);
        if (!parsed.at("pass").get<bool>()) {
            ctx->last_error = "verification suite reported failing checks";
            return WN_ERR_VERIFY_FAILED;
        }
    } catch (const std::exception& e) {
        return fail(ctx, WN_ERR_INTERNAL, e.what());
    }
    return WN_OK;
}

}  // extern "C"
