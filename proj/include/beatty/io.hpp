#pragma once

#include <json.hpp>

#include "beatty/criteria.hpp"
#include "beatty/disjointness.hpp"
#include "beatty/oracle.hpp"
#include "beatty/sequence.hpp"
#include "beatty/stadium.hpp"

namespace beatty {

using Json = nlohmann::json;

// Interchange keeps every number exact: rationals and big integers travel as
// strings; only radicands and window bounds are plain JSON integers.

Json json_of(const Rational& r);
Json json_of(const ExactReal& x);      // {"a": "p/q", "b": "p/q", "d": int}
Json json_of(const BeattySeq& s);      // {"alpha": ..., "beta": ...}
Json json_of(const PartitionVerdict& v);
Json json_of(const WindowReport& r);
Json json_of(const DisjointnessFinding& f);
Json json_of(const RecordEvent& e);

ExactReal real_from_json(const Json& j);
BeattySeq seq_from_json(const Json& j);

}  // namespace beatty
