#include "json_io.hpp"

#include <limits>

namespace cws {

namespace {

int require_int(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError("MalformedDocument", std::string("missing integer field: ") + field);
    return j[field].get<int>();
}

const Json& require_array(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError("MalformedDocument", std::string("missing array field: ") + field);
    return j[field];
}

Point point_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("MalformedDocument", "a point must be an array");
    Point p;
    p.reserve(j.size());
    for (const auto& coord : j) p.push_back(rational_from_json(coord));
    return p;
}

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& coord : p) out.push_back(rational_to_json(coord));
    return out;
}

} // namespace

Json rational_to_json(const Rational& r) {
    if (is_integer(r)) {
        const BigInt num = boost::multiprecision::numerator(r);
        if (num >= std::numeric_limits<int64_t>::min() &&
            num <= std::numeric_limits<int64_t>::max())
            return num.convert_to<int64_t>();
    }
    return format_rational(r);
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("MalformedDocument", "a rational must be an integer or \"num/den\" string");
}

Json profile_to_json(const Profile& p) {
    return Json{{"schema_version", kSchemaVersion},
                {"m", p.num_candidates()},
                {"n", p.num_voters()},
                {"rankings", p.rankings()}};
}

Profile profile_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("MalformedDocument", "profile document must be an object");
    const int m = require_int(j, "m");
    const int n = require_int(j, "n");
    const Json& rk = require_array(j, "rankings");
    std::vector<std::vector<int>> rankings;
    rankings.reserve(rk.size());
    for (const auto& row : rk) {
        if (!row.is_array()) throw ParseError("MalformedDocument", "ranking rows must be arrays");
        std::vector<int> r;
        for (const auto& c : row) {
            if (!c.is_number_integer())
                throw ParseError("MalformedDocument", "candidate ids must be integers");
            r.push_back(c.get<int>());
        }
        rankings.push_back(std::move(r));
    }
    if (static_cast<int>(rankings.size()) != n)
        throw ParseError("MalformedDocument", "rankings count does not match n");
    try {
        return Profile(m, std::move(rankings));
    } catch (const DomainError& e) {
        throw ParseError(e.code(), e.what());
    }
}

Json election_to_json(const SpatialElection& e, const std::optional<Norm>& norm) {
    Json out{{"schema_version", kSchemaVersion}, {"dimension", e.dimension}};
    if (norm) out["norm"] = norm->to_string();
    Json voters = Json::array();
    for (const auto& v : e.voters) voters.push_back(point_to_json(v));
    Json candidates = Json::array();
    for (const auto& c : e.candidates) candidates.push_back(point_to_json(c));
    out["voters"] = std::move(voters);
    out["candidates"] = std::move(candidates);
    return out;
}

SpatialElection election_from_json(const Json& j, std::optional<Norm>* norm_out) {
    if (!j.is_object()) throw ParseError("MalformedDocument", "spatial document must be an object");
    SpatialElection e;
    e.dimension = require_int(j, "dimension");
    for (const auto& v : require_array(j, "voters")) e.voters.push_back(point_from_json(v));
    for (const auto& c : require_array(j, "candidates")) e.candidates.push_back(point_from_json(c));
    for (const auto& p : e.voters)
        if (static_cast<int>(p.size()) != e.dimension)
            throw ParseError("MalformedDocument", "voter point dimension mismatch");
    for (const auto& p : e.candidates)
        if (static_cast<int>(p.size()) != e.dimension)
            throw ParseError("MalformedDocument", "candidate point dimension mismatch");
    if (norm_out) {
        *norm_out = std::nullopt;
        if (j.contains("norm")) {
            if (!j["norm"].is_string())
                throw ParseError("MalformedDocument", "norm must be a string");
            *norm_out = Norm::from_string(j["norm"].get<std::string>());
        }
    }
    return e;
}

Json certificate_to_json(const WinningSetCertificate& c) {
    Json per = Json::object();
    for (const auto& [challenger, count] : c.per_challenger)
        per[std::to_string(challenger)] = count;
    return Json{{"set", c.set}, {"per_challenger", std::move(per)}, {"n", c.n}};
}

WinningSetCertificate certificate_from_json(const Json& j) {
    WinningSetCertificate c;
    for (const auto& id : require_array(j, "set")) c.set.push_back(id.get<int>());
    c.n = require_int(j, "n");
    if (j.contains("per_challenger"))
        for (const auto& [key, value] : j["per_challenger"].items())
            c.per_challenger[std::stoi(key)] = value.get<int>();
    return c;
}

Json dimension_result_to_json(const DimensionResult& r) {
    return Json{{"schema_version", kSchemaVersion},
                {"dimension", r.dimension},
                {"witness", certificate_to_json(r.witness)},
                {"k_searched", r.k_searched}};
}

Json derived_profile_to_json(const DerivedProfile& d) {
    Json out = profile_to_json(d.profile);
    Json ties = Json::array();
    for (const auto& t : d.ties)
        ties.push_back(Json{{"voter", t.voter},
                            {"closer_candidate", t.closer_candidate},
                            {"other_candidate", t.other_candidate}});
    out["ties"] = std::move(ties);
    return out;
}

Json planar_result_to_json(const PlanarResult& r) {
    Json quadrants = Json::array();
    for (int q = 0; q < 4; ++q)
        quadrants.push_back(r.selection.closest[q] ? Json(*r.selection.closest[q]) : Json());
    return Json{{"schema_version", kSchemaVersion},
                {"set", r.certificate.set},
                {"certificate", certificate_to_json(r.certificate)},
                {"median_x", rational_to_json(r.selection.median_x)},
                {"median_y", rational_to_json(r.selection.median_y)},
                {"quadrant_representatives", std::move(quadrants)}};
}

Json experiment_config_to_json(const ExperimentConfig& cfg) {
    Json gen;
    if (cfg.generator.kind == GeneratorSpec::Kind::ImpartialCulture) {
        gen = Json{{"type", "impartial-culture"}, {"m", cfg.generator.m}, {"n", cfg.generator.n}};
    } else {
        gen = Json{{"type", "spatial"},
                   {"m", cfg.generator.m},
                   {"n", cfg.generator.n},
                   {"dimension", cfg.generator.dimension},
                   {"box", rational_to_json(cfg.generator.box)},
                   {"norm", cfg.generator.norm.to_string()}};
    }
    return Json{{"schema_version", kSchemaVersion},
                {"generator", std::move(gen)},
                {"instances", cfg.instances},
                {"seed", cfg.seed},
                {"k_max", cfg.k_max}};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("MalformedDocument", "config must be an object");
    ExperimentConfig cfg;
    if (!j.contains("generator") || !j["generator"].is_object())
        throw ParseError("MalformedDocument", "config needs a generator object");
    const Json& gen = j["generator"];
    const std::string type = gen.value("type", "");
    if (type == "impartial-culture") {
        cfg.generator.kind = GeneratorSpec::Kind::ImpartialCulture;
    } else if (type == "spatial") {
        cfg.generator.kind = GeneratorSpec::Kind::Spatial;
        cfg.generator.dimension = require_int(gen, "dimension");
        if (gen.contains("box")) cfg.generator.box = rational_from_json(gen["box"]);
        if (gen.contains("norm"))
            cfg.generator.norm = Norm::from_string(gen["norm"].get<std::string>());
    } else {
        throw ParseError("MalformedDocument", "unknown generator type: " + type);
    }
    cfg.generator.m = require_int(gen, "m");
    cfg.generator.n = require_int(gen, "n");
    cfg.instances = j.value("instances", 100);
    cfg.seed = j.value("seed", uint64_t{0});
    cfg.k_max = j.value("k_max", 0);
    if (cfg.instances < 1) throw ParseError("MalformedDocument", "instances must be >= 1");
    return cfg;
}

namespace {

Json witness_to_json(const Witness& w) {
    Json out{{"instance_index", w.instance_index},
             {"seed", w.seed},
             {"dimension", w.dimension},
             {"profile", profile_to_json(w.profile)},
             {"certificate", certificate_to_json(w.certificate)}};
    if (w.election) out["election"] = election_to_json(*w.election);
    return out;
}

} // namespace

Json experiment_report_to_json(const ExperimentReport& r) {
    Json histogram = Json::object();
    for (const auto& [dim, count] : r.histogram) histogram[std::to_string(dim)] = count;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));
    Json instances = Json::array();
    for (const auto& rec : r.instances) {
        Json item{{"index", rec.index}, {"exact_dimension", rec.exact_dimension}};
        if (rec.planar_set_size > 0) item["planar_set_size"] = rec.planar_set_size;
        instances.push_back(std::move(item));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"config", experiment_config_to_json(r.config)},
                {"histogram", std::move(histogram)},
                {"witnesses", std::move(witnesses)},
                {"instances", std::move(instances)},
                {"wall_time_ms", r.wall_time_ms}};
}

Json hunt_result_to_json(const HuntResult& r) {
    Json out{{"schema_version", kSchemaVersion},
             {"instances_examined", r.instances_examined},
             {"found", r.witness.has_value()}};
    if (r.witness) out["witness"] = witness_to_json(*r.witness);
    return out;
}

Json error_to_json(const std::string& code, const std::string& detail) {
    return Json{{"error", code}, {"detail", detail}};
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError("MalformedDocument", e.what());
    }
}

} // namespace cws
