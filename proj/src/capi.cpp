#include "condorcet/cws.h"

#include <cstring>
#include <string>

#include "embedding.hpp"
#include "harness.hpp"
#include "json_io.hpp"
#include "planar.hpp"
#include "tournament.hpp"

using namespace cws;

struct cws_profile_s {
    Profile profile;
};

struct cws_election_s {
    SpatialElection election;
    std::optional<Norm> norm; // carried from the document, flag may override
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
cws_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return CWS_OK;
    } catch (const ParseError& e) {
        g_last_error = std::string(e.code()) + ": " + e.what();
        return CWS_ERR_PARSE;
    } catch (const DomainError& e) {
        g_last_error = std::string(e.code()) + ": " + e.what();
        return CWS_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CWS_ERR_DOMAIN;
    }
}

Norm parse_norm_arg(const char* norm) {
    if (norm == nullptr) throw ParseError("MalformedDocument", "norm argument is null");
    return Norm::from_string(norm);
}

void emit(const Json& j, char** out_json) {
    *out_json = dup_string(j.dump());
}

} // namespace

extern "C" {

cws_status cws_profile_from_json(const char* json, cws_profile** out) {
    return guarded([&] {
        if (json == nullptr || out == nullptr)
            throw ParseError("MalformedDocument", "null argument");
        *out = new cws_profile_s{profile_from_json(parse_document(json))};
    });
}

cws_status cws_election_from_json(const char* json, cws_election** out) {
    return guarded([&] {
        if (json == nullptr || out == nullptr)
            throw ParseError("MalformedDocument", "null argument");
        std::optional<Norm> norm;
        SpatialElection e = election_from_json(parse_document(json), &norm);
        *out = new cws_election_s{std::move(e), norm};
    });
}

void cws_profile_free(cws_profile* p) { delete p; }
void cws_election_free(cws_election* e) { delete e; }
void cws_string_free(char* s) { delete[] s; }

cws_status cws_profile_to_json(const cws_profile* p, char** out_json) {
    return guarded([&] { emit(profile_to_json(p->profile), out_json); });
}

cws_status cws_election_to_json(const cws_election* e, char** out_json) {
    return guarded([&] { emit(election_to_json(e->election, e->norm), out_json); });
}

int cws_profile_num_candidates(const cws_profile* p) { return p->profile.num_candidates(); }
int cws_profile_num_voters(const cws_profile* p) { return p->profile.num_voters(); }

cws_status cws_condorcet_dimension(const cws_profile* p, int k_max, char** out_json) {
    return guarded([&] {
        int k = k_max > 0 ? k_max : default_k_max(p->profile);
        emit(dimension_result_to_json(condorcet_dimension(p->profile, k)), out_json);
    });
}

cws_status cws_check_winning_set(const cws_profile* p, const int* ids, size_t count,
                                 char** out_json) {
    return guarded([&] {
        std::vector<int> s(ids, ids + count);
        auto check = is_condorcet_winning_set(p->profile, s);
        Json out{{"schema_version", kSchemaVersion}, {"winning", check.certificate.has_value()}};
        if (check.certificate)
            out["certificate"] = certificate_to_json(*check.certificate);
        else
            out["first_failing_challenger"] = check.first_failing_challenger;
        emit(out, out_json);
    });
}

cws_status cws_majority_digraph_json(const cws_profile* p, char** out_json) {
    return guarded([&] {
        Tournament t = majority_digraph(p->profile);
        Json arcs = Json::array();
        // Arc (j, i): the majority prefers i over j.
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j)
                if (t.beats(i, j)) arcs.push_back(Json::array({j, i}));
        emit(Json{{"schema_version", kSchemaVersion},
                  {"m", t.size()},
                  {"complete", t.complete()},
                  {"arcs", std::move(arcs)}},
             out_json);
    });
}

cws_status cws_majority_digraph_dot(const cws_profile* p, char** out_dot) {
    return guarded([&] { *out_dot = dup_string(majority_digraph(p->profile).to_dot()); });
}

cws_status cws_greedy_dominating_set(const cws_profile* p, char** out_json) {
    return guarded([&] {
        Tournament t = majority_digraph(p->profile);
        GreedyResult g = greedy_dominating_set(t);
        Json rounds = Json::array();
        for (const auto& r : g.rounds)
            rounds.push_back(Json{{"chosen", r.chosen},
                                  {"in_degree", r.in_degree},
                                  {"remaining_before", r.remaining_before}});
        emit(Json{{"schema_version", kSchemaVersion},
                  {"set", g.set},
                  {"bound", ceil_log2(t.size())},
                  {"rounds", std::move(rounds)}},
             out_json);
    });
}

cws_status cws_derive_profile(const cws_election* e, const char* norm, char** out_json) {
    return guarded([&] {
        Norm n = norm != nullptr && *norm != '\0'
                     ? parse_norm_arg(norm)
                     : (e->norm ? *e->norm
                                : throw ParseError("MalformedDocument",
                                                   "no norm given by flag or document"));
        emit(derived_profile_to_json(derive_profile(e->election, n)), out_json);
    });
}

cws_status cws_planar_winning_set(const cws_election* e, const char* norm, char** out_json) {
    return guarded([&] {
        std::string text = norm != nullptr && *norm != '\0'
                               ? norm
                               : (e->norm ? e->norm->to_string() : "");
        PlanarNorm pn;
        if (text == "inf" || text == "infinity")
            pn = PlanarNorm::LInfinity;
        else if (text == "1" || text == "p:1")
            pn = PlanarNorm::L1;
        else
            throw ParseError("MalformedDocument",
                             "planar winning sets are defined for norms \"1\" and \"inf\"");
        emit(planar_result_to_json(planar_winning_set(e->election, pn)), out_json);
    });
}

cws_status cws_lemma4_instance(char** out_json) {
    return guarded([&] { emit(election_to_json(lemma4_instance()), out_json); });
}

cws_status cws_embed(const cws_profile* p, const char* construction, const char* norm,
                     char** out_json) {
    return guarded([&] {
        if (construction == nullptr)
            throw ParseError("MalformedDocument", "construction argument is null");
        Norm n = parse_norm_arg(norm);
        std::string which = construction;
        EmbeddingResult result = [&] {
            if (which == "candidate-simplex") return embed_candidate_simplex(p->profile, n);
            if (which == "voter-simplex") return embed_voter_simplex(p->profile, n);
            throw ParseError("MalformedDocument", "unknown construction: " + which);
        }();
        Json out = election_to_json(result.election, n);
        out["construction"] = which;
        if (result.scale_b) out["B"] = rational_to_json(*result.scale_b);
        emit(out, out_json);
    });
}

cws_status cws_run_survey(const char* config_json, int threads, char** out_json) {
    return guarded([&] {
        if (config_json == nullptr) throw ParseError("MalformedDocument", "null config");
        ExperimentConfig cfg = experiment_config_from_json(parse_document(config_json));
        cfg.threads = threads > 0 ? threads : 1;
        emit(experiment_report_to_json(run_dimension_survey(cfg)), out_json);
    });
}

cws_status cws_hunt(const char* config_json, int target, char** out_json) {
    return guarded([&] {
        if (config_json == nullptr) throw ParseError("MalformedDocument", "null config");
        ExperimentConfig cfg = experiment_config_from_json(parse_document(config_json));
        emit(hunt_result_to_json(hunt_high_dimension(cfg, target)), out_json);
    });
}

const char* cws_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
