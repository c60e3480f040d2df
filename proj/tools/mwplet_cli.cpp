// Command-line front end for libmwplet. Talks to the library exclusively
// through the C interface in mwplet.h; every subcommand prints one JSON
// report and exits nonzero if any asserted check failed.

#include <mwplet.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int fail_with(mwp_status st) {
    std::cerr << "error (" << static_cast<int>(st) << "): " << mwp_last_error() << "\n";
    return 2;
}

void emit(const std::string& payload, const std::string& json_out) {
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << payload << "\n";
    }
    std::cout << payload << "\n";
}

struct ModelHandle {
    mwp_model* m = nullptr;
    ~ModelHandle() { mwp_model_free(m); }
};

struct SectionHandle {
    mwp_section* s = nullptr;
    ~SectionHandle() { mwp_section_free(s); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { mwp_string_free(s); }
};

int open_model(const std::string& curve, ModelHandle& h) {
    mwp_status st = curve.empty() ? mwp_model_default(&h.m)
                                  : mwp_model_from_factored(curve.c_str(), &h.m);
    return st == MWP_OK ? 0 : fail_with(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Mordell-Weil / bisection-conic / arrangement toolkit"};
    app.require_subcommand(1);

    std::string curve, json_out;
    app.add_option("--curve", curve,
                   "factored Weierstrass right-hand side over Q(t); default is the built-in "
                   "reference curve");
    app.add_option("--json-out", json_out, "also write the JSON report to this path");

    auto* cmd_verify = app.add_subcommand("verify-paper",
                                          "run the full built-in verification suite");

    auto* cmd_fibers = app.add_subcommand("fibers", "classify the singular fibers");

    std::string p_text, q_text;
    auto* cmd_height = app.add_subcommand("height", "Shioda height pairing of two sections");
    cmd_height->add_option("--p", p_text, "first section")->required();
    cmd_height->add_option("--q", q_text, "second section")->required();

    std::string op;
    long multiplier = 2;
    auto* cmd_group = app.add_subcommand("group", "group law on sections");
    cmd_group->add_option("--op", op, "add | neg | dbl | mul")->required();
    cmd_group->add_option("--p", p_text, "first section")->required();
    cmd_group->add_option("--q", q_text, "second section (for add)");
    cmd_group->add_option("--m", multiplier, "multiplier (for mul)");

    int family = 1;
    std::string parameter = "1";
    auto* cmd_bisection = app.add_subcommand(
        "bisection", "family member with verified Abel-Jacobi image");
    cmd_bisection->add_option("--family", family, "family index 1..3")->required();
    cmd_bisection->add_option("--param", parameter, "rational parameter value");

    std::string x_of_t;
    auto* cmd_implicitize = app.add_subcommand("implicitize",
                                               "conic closure of a graph x = x(t)");
    cmd_implicitize->add_option("--x", x_of_t, "polynomial in t, degree <= 2")->required();

    long k = 3;
    std::string partition = "1,1,1", kind = "full";
    auto* cmd_arrange = app.add_subcommand("arrange", "assemble and verify one arrangement");
    cmd_arrange->add_option("--k", k, "number of extra conics")->required();
    cmd_arrange->add_option("--partition", partition, "k1,k2,k3 with k1>=k2>=k3");
    cmd_arrange->add_option("--kind", kind, "weak | full");

    long prime = 3;
    auto* cmd_plet = app.add_subcommand("plet", "certificates for all partitions of k");
    cmd_plet->add_option("--k", k, "number of extra conics")->required();
    cmd_plet->add_option("--prime", prime, "odd prime for the cover predicate");

    long young_k = 0;
    auto* cmd_young = app.add_subcommand("young", "diagrams with at most three rows");
    cmd_young->add_option("--k", young_k, "box count")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_verify->parsed()) {
        StringHandle s;
        int all = 0;
        mwp_status st = mwp_verify_reference_json(&s.s, &all);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return all ? 0 : 1;
    }

    if (cmd_fibers->parsed()) {
        ModelHandle m;
        if (int rc = open_model(curve, m)) return rc;
        StringHandle s;
        mwp_status st = mwp_model_fibers_json(m.m, &s.s);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return 0;
    }

    if (cmd_height->parsed()) {
        ModelHandle m;
        if (int rc = open_model(curve, m)) return rc;
        SectionHandle p, q;
        mwp_status st = mwp_section_parse(m.m, p_text.c_str(), &p.s);
        if (st != MWP_OK) return fail_with(st);
        st = mwp_section_parse(m.m, q_text.c_str(), &q.s);
        if (st != MWP_OK) return fail_with(st);
        StringHandle s;
        st = mwp_height_json(m.m, p.s, q.s, &s.s);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return 0;
    }

    if (cmd_group->parsed()) {
        ModelHandle m;
        if (int rc = open_model(curve, m)) return rc;
        SectionHandle p, q, r;
        mwp_status st = mwp_section_parse(m.m, p_text.c_str(), &p.s);
        if (st != MWP_OK) return fail_with(st);
        if (!q_text.empty()) {
            st = mwp_section_parse(m.m, q_text.c_str(), &q.s);
            if (st != MWP_OK) return fail_with(st);
        }
        st = mwp_section_group(m.m, op.c_str(), p.s, q.s, multiplier, &r.s);
        if (st != MWP_OK) return fail_with(st);
        StringHandle s;
        st = mwp_section_json(r.s, &s.s);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return 0;
    }

    if (cmd_bisection->parsed()) {
        StringHandle s;
        mwp_status st = mwp_bisection_json(family, parameter.c_str(), &s.s);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return 0;
    }

    if (cmd_implicitize->parsed()) {
        StringHandle s;
        mwp_status st = mwp_implicitize(x_of_t.c_str(), &s.s);
        if (st != MWP_OK) return fail_with(st);
        std::string payload = std::string("{\"conic\":\"") + s.s + "\"}";
        emit(payload, json_out);
        return 0;
    }

    if (cmd_arrange->parsed()) {
        long k1 = 0, k2 = 0, k3 = 0;
        if (std::sscanf(partition.c_str(), "%ld,%ld,%ld", &k1, &k2, &k3) != 3) {
            std::cerr << "error: --partition expects k1,k2,k3\n";
            return 2;
        }
        StringHandle s;
        mwp_status st = mwp_arrange_json(k, k1, k2, k3, kind.c_str(), &s.s);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return 0;
    }

    if (cmd_plet->parsed()) {
        StringHandle s;
        mwp_status st = mwp_plet_json(k, prime, &s.s);
        if (st != MWP_OK) return fail_with(st);
        emit(s.s, json_out);
        return 0;
    }

    if (cmd_young->parsed()) {
        long value = 0;
        mwp_status st = mwp_young_count(young_k, &value);
        if (st != MWP_OK) return fail_with(st);
        emit("{\"k\":" + std::to_string(young_k) + ",\"count\":" + std::to_string(value) + "}",
             json_out);
        return 0;
    }

    return 2;
}
