#include "mwplet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"
#include "textform.hpp"
#include "verify.hpp"

using namespace mwplet;

struct mwp_model {
    WeierstrassModel model;
};

struct mwp_section {
    Section section;
};

namespace {

thread_local std::string g_last_error;

mwp_status status_of(const MwpError& e) {
    g_last_error = e.what();
    switch (e.code()) {
    case Err::Parse: return MWP_ERR_PARSE;
    case Err::Domain: return MWP_ERR_DOMAIN;
    case Err::TowerOverflow: return MWP_ERR_TOWER;
    case Err::UnsupportedPlace: return MWP_ERR_UNSUPPORTED_PLACE;
    case Err::UnsupportedFiber: return MWP_ERR_UNSUPPORTED_FIBER;
    case Err::NodeMeeting: return MWP_ERR_NODE_MEETING;
    case Err::Degenerate: return MWP_ERR_DEGENERATE;
    case Err::ScanExhausted: return MWP_ERR_SCAN_EXHAUSTED;
    case Err::VerifyFailed: return MWP_ERR_VERIFY;
    case Err::Internal: return MWP_ERR_INTERNAL;
    }
    return MWP_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
mwp_status guarded(F&& f) {
    try {
        f();
        return MWP_OK;
    } catch (const MwpError& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MWP_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

unsigned int mwp_abi_version(void) { return 1; }

const char* mwp_last_error(void) { return g_last_error.c_str(); }

void mwp_string_free(char* s) { std::free(s); }

mwp_status mwp_model_default(mwp_model** out) {
    return guarded([&] { *out = new mwp_model{catalog().model}; });
}

mwp_status mwp_model_from_factored(const char* text, mwp_model** out) {
    return guarded([&] {
        MPoly rhs = parse_mpoly(text, {"t", "x"});
        *out = new mwp_model{WeierstrassModel::expand_factored(rhs)};
    });
}

void mwp_model_free(mwp_model* m) { delete m; }

mwp_status mwp_model_fibers_json(const mwp_model* m, char** json_out) {
    return guarded([&] {
        Json j = fibers_json(m->model.classify_fibers());
        *json_out = dup_string(j.dump());
    });
}

mwp_status mwp_section_parse(const mwp_model* m, const char* text, mwp_section** out) {
    return guarded([&] { *out = new mwp_section{resolve_section(m->model, text)}; });
}

void mwp_section_free(mwp_section* s) { delete s; }

mwp_status mwp_section_json(const mwp_section* s, char** json_out) {
    return guarded([&] { *json_out = dup_string(section_json(s->section).dump()); });
}

mwp_status mwp_section_group(const mwp_model* m, const char* op, const mwp_section* p,
                             const mwp_section* q, long multiplier, mwp_section** out) {
    return guarded([&] {
        std::string o = op ? op : "";
        Section r;
        if (o == "add") {
            if (!q) fail(Err::Domain, "add needs a second section");
            r = section_add(m->model, p->section, q->section);
        } else if (o == "neg") {
            r = section_neg(p->section);
        } else if (o == "mul" || o == "dbl") {
            long mm = (o == "dbl") ? 2 : multiplier;
            r = section_mul(m->model, mm, p->section);
        } else {
            fail(Err::Domain, "unknown group operation '" + o + "'");
        }
        *out = new mwp_section{r};
    });
}

mwp_status mwp_height_json(const mwp_model* m, const mwp_section* p, const mwp_section* q,
                           char** json_out) {
    return guarded([&] {
        HeightReport rep = height_pairing(m->model, p->section, q->section);
        *json_out = dup_string(height_json(rep).dump());
    });
}

mwp_status mwp_bisection_json(int family, const char* parameter, char** json_out) {
    return guarded([&] {
        if (family < 1 || family > 3) fail(Err::Domain, "family index must be 1..3");
        FieldElem a(parse_rational(parameter));
        ResidualQuadratic member = catalog().family[family - 1].specialized(a);
        Section image = verify_abel_jacobi_image(catalog().model, member);
        Json j;
        j["family"] = family;
        j["parameter"] = rational_string(a.rational());
        j["conic"] = member.plane_conic().str();
        j["image"] = section_json(image);
        j["image_is_family_image"] = (image == catalog().family_image[family - 1]);
        *json_out = dup_string(j.dump());
    });
}

mwp_status mwp_implicitize(const char* x_of_t, char** conic_out) {
    return guarded([&] {
        RatFunc x = parse_ratfunc(x_of_t);
        PlaneCurve c = implicitize_graph(x.as_poly());
        *conic_out = dup_string(c.str());
    });
}

mwp_status mwp_arrange_json(long k, long k1, long k2, long k3, const char* kind,
                            char** json_out) {
    return guarded([&] {
        std::string kd = kind ? kind : "full";
        ArrangementKind ak;
        if (kd == "weak")
            ak = ArrangementKind::Weak;
        else if (kd == "full")
            ak = ArrangementKind::Full;
        else
            fail(Err::Domain, "kind must be weak or full");
        NTArrangement arr = build_arrangement(k, Partition3{k1, k2, k3}, ak);
        *json_out = dup_string(arrangement_json(arr).dump());
    });
}

mwp_status mwp_plet_json(long k, long prime, char** json_out) {
    return guarded([&] {
        PletCertificate cert = certify_plet(k, prime);
        *json_out = dup_string(plet_json(cert).dump());
    });
}

mwp_status mwp_young_count(long k, long* out) {
    return guarded([&] { *out = young_count(k); });
}

mwp_status mwp_verify_reference_json(char** json_out, int* all_pass) {
    return guarded([&] {
        std::vector<Check> checks = run_reference_verification();
        if (all_pass) *all_pass = mwplet::all_pass(checks) ? 1 : 0;
        Json j = checks_json(checks, "verify-paper");
        *json_out = dup_string(j.dump(2));
    });
}

} // extern "C"
