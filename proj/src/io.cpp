#include "beatty/io.hpp"

#include "beatty/literal.hpp"

namespace beatty {

Json json_of(const Rational& r) {
    return r.str();
}

Json json_of(const ExactReal& x) {
    return Json{{"a", x.rat_part().str()},
                {"b", x.sqrt_coeff().str()},
                {"d", x.radicand()}};
}

Json json_of(const BeattySeq& s) {
    return Json{{"alpha", json_of(s.alpha())}, {"beta", json_of(s.beta())}};
}

Json json_of(const PartitionVerdict& v) {
    Json j{{"kind", to_string(v.kind)}};
    if (v.exception) j["n0"] = v.exception->str();
    if (v.kind == VerdictKind::NotEventualPartition) {
        Json rep = Json::array();
        for (const auto& k : v.repeated) rep.push_back(k.str());
        Json mis = Json::array();
        for (const auto& k : v.missing) mis.push_back(k.str());
        j["repeated"] = rep;
        j["missing"] = mis;
    }
    return j;
}

Json json_of(const WindowReport& r) {
    Json mis = Json::array();
    for (const auto& k : r.missing) mis.push_back(k.str());
    Json rep = Json::array();
    for (const auto& [k, m] : r.repeated) rep.push_back(Json::array({k.str(), m}));
    return Json{{"lo", r.lo},
                {"hi", r.hi},
                {"missing", mis},
                {"repeated", rep},
                {"per_seq_counts", r.per_seq_counts}};
}

Json json_of(const DisjointnessFinding& f) {
    Json j{{"kind", to_string(f.kind)}};
    if (f.m) j["m"] = f.m->str();
    if (f.n) j["n"] = f.n->str();
    return j;
}

Json json_of(const RecordEvent& e) {
    return Json{{"t", e.time.str()}, {"athlete", e.athlete}, {"recorded", e.recorded.str()}};
}

ExactReal real_from_json(const Json& j) {
    Rational a = parse_rational(j.at("a").get<std::string>());
    Rational b = parse_rational(j.at("b").get<std::string>());
    long long d = j.at("d").get<long long>();
    if (b.is_zero()) return ExactReal(std::move(a));
    return ExactReal::quadratic(std::move(a), std::move(b), d);
}

BeattySeq seq_from_json(const Json& j) {
    return BeattySeq(real_from_json(j.at("alpha")), real_from_json(j.at("beta")));
}

}  // namespace beatty
