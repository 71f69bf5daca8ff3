#include "cremona.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "actions.hpp"
#include "cases.hpp"
#include "curves.hpp"
#include "group.hpp"
#include "json_io.hpp"
#include "surfaces.hpp"
#include "tables.hpp"

namespace {

using namespace cremona;
using nlohmann::json;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs the body, routing exceptions to status codes. When `out` is
/// given, errors leave a diagnostic message in it.
template <typename F>
crm_status guarded(char** out, F&& body) {
    if (out) *out = nullptr;
    try {
        return body();
    } catch (const ResourceError& e) {
        if (out) *out = dup_string(e.what());
        return CRM_ERESOURCE;
    } catch (const std::invalid_argument& e) {
        if (out) *out = dup_string(e.what());
        return CRM_EINVAL;
    } catch (const json::exception& e) {
        if (out) *out = dup_string(e.what());
        return CRM_EINVAL;
    } catch (const std::exception& e) {
        if (out) *out = dup_string(e.what());
        return CRM_EINTERNAL;
    }
}

int rank_of_degree(int degree) {
    if (degree < 1 || degree > 8)
        throw std::invalid_argument("degree must lie in 1..8");
    return 9 - degree;
}

json classify_json(const Isometry& w) {
    auto inv = class_invariant(w);
    json j = to_json(inv);
    j["minimal"] = cyclic_minimality(w);
    j["lefschetz"] = lefschetz_fixed_euler(w);
    j["trace_pic"] = inv.trace_on_Er + 1;
    return j;
}

json action_json_report(const ActionSpec& spec) {
    auto group = close_action(spec);
    json j;
    j["r"] = spec.r;
    j["group_order"] = group.size();
    j["invariant_rank_formula"] = invariant_picard_rank(spec);
    j["invariant_rank_oracle"] = fixed_sublattice_rank(group);

    std::vector<Isometry> gens = spec.generators;
    auto configs = invariant_exceptional(gens, spec.sigma, spec.r);
    auto verts = enumerate_minus_one_classes(spec.r);
    json inv = json::array();
    for (const auto& c : configs) {
        json e;
        e["class"] = to_json(verts[c.index]);
        if (c.pair_index >= 0) {
            e["conjugate"] = to_json(verts[c.pair_index]);
            e["disjoint"] = c.disjoint;
        }
        inv.push_back(e);
    }
    j["invariant_exceptional"] = inv;

    json orbs = json::array();
    for (const auto& orbit : orbits(group, spec.r)) orbs.push_back(orbit);
    j["orbits"] = orbs;
    return j;
}

}  // namespace

extern "C" {

struct crm_group {
    cremona::GroupTable table;
};

void crm_string_free(char* s) { delete[] s; }

crm_status crm_lines_count(int degree, int* count) {
    if (!count) return CRM_EINVAL;
    return guarded(nullptr, [&] {
        *count = static_cast<int>(enumerate_minus_one_classes(rank_of_degree(degree)).size());
        return CRM_OK;
    });
}

crm_status crm_roots_count(int degree, int* count) {
    if (!count) return CRM_EINVAL;
    return guarded(nullptr, [&] {
        *count = static_cast<int>(enumerate_roots(rank_of_degree(degree)).roots.size());
        return CRM_OK;
    });
}

crm_status crm_lines_json(int degree, char** out) {
    if (!out) return CRM_EINVAL;
    return guarded(out, [&] {
        json j = json::array();
        for (const auto& v : enumerate_minus_one_classes(rank_of_degree(degree)))
            j.push_back(to_json(v));
        *out = dup_string(j.dump());
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

crm_status crm_roots_json(int degree, char** out) {
    if (!out) return CRM_EINVAL;
    return guarded(out, [&] {
        json j = json::array();
        for (const auto& v : enumerate_roots(rank_of_degree(degree)).roots)
            j.push_back(to_json(v));
        *out = dup_string(j.dump());
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

crm_status crm_graph_json(int degree, char** out) {
    if (!out) return CRM_EINVAL;
    return guarded(out, [&] {
        *out = dup_string(graph_json(build_graph(rank_of_degree(degree))));
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

crm_status crm_graph_dot(int degree, char** out) {
    if (!out) return CRM_EINVAL;
    return guarded(out, [&] {
        *out = dup_string(graph_dot(build_graph(rank_of_degree(degree))));
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

crm_status crm_classify(const char* isometry_json, char** out) {
    if (!isometry_json || !out) return CRM_EINVAL;
    return guarded(out, [&] {
        auto w = isometry_from_json(json::parse(isometry_json));
        *out = dup_string(classify_json(w).dump());
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

crm_status crm_action_analyze(const char* action_json, char** out) {
    if (!action_json || !out) return CRM_EINVAL;
    return guarded(out, [&] {
        auto spec = action_from_json(json::parse(action_json));
        *out = dup_string(action_json_report(spec).dump());
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

crm_status crm_group_build(int rank, int allow_large, crm_group** out) {
    if (!out) return CRM_EINVAL;
    *out = nullptr;
    return guarded(nullptr, [&] {
        auto table = GroupTable::generate(rank, allow_large != 0);
        *out = new crm_group{std::move(table)};
        return CRM_OK;
    });
}

crm_status crm_group_order(const crm_group* g, long long* order) {
    if (!g || !order) return CRM_EINVAL;
    *order = static_cast<long long>(g->table.size());
    return CRM_OK;
}

void crm_group_free(crm_group* g) { delete g; }

crm_status crm_verify(const char* suite, int allow_large, unsigned long long seed,
                      char** report) {
    if (!suite || !report) return CRM_EINVAL;
    return guarded(report, [&] {
        SuiteOptions opts;
        opts.allow_large = allow_large != 0;
        opts.seed = seed ? seed : kDefaultSeed;
        auto verdicts = run_suite(suite, opts);
        json j = json::array();
        bool passed = true;
        for (const auto& v : verdicts) {
            passed = passed && v.passed;
            j.push_back(to_json(v));
        }
        *report = dup_string(j.dump());
        if (!*report) return CRM_EINTERNAL;
        return passed ? CRM_OK : CRM_FAIL;
    });
}

crm_status crm_surfaces_verify(const char* example, char** report) {
    if (!example || !report) return CRM_EINVAL;
    return guarded(report, [&] {
        std::string name = example;
        Verdict v;
        if (name == "tau0")
            v = verify_tau0();
        else if (name == "g0")
            v = verify_g0();
        else if (name == "s_alpha")
            v = verify_s_alpha_lines();
        else if (name == "quadric")
            v = verify_quadric_rotation();
        else if (name == "forms")
            v = verify_trilinear_forms();
        else
            throw std::invalid_argument("unknown example: " + name);
        *report = dup_string(to_json(v).dump());
        if (!*report) return CRM_EINTERNAL;
        return v.passed ? CRM_OK : CRM_FAIL;
    });
}

crm_status crm_emit_tables(char** out) {
    if (!out) return CRM_EINVAL;
    return guarded(out, [&] {
        *out = dup_string(emit_tables_tsv());
        return *out ? CRM_OK : CRM_EINTERNAL;
    });
}

}  // extern "C"
