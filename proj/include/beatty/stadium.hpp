#pragma once

#include <string>
#include <vector>

#include "beatty/exact_real.hpp"

namespace beatty {

// Two athletes on the unit-circumference track, opposite directions, with
// speeds 1/alpha1 and 1/alpha2.  Circle coordinate is [0,1) with O at 0 and
// X's direction positive; at t = 0 each athlete sits at distance beta/alpha
// behind O relative to its own direction.  Requires alpha > 1 and canonical
// offsets (0 <= beta < alpha).
struct StadiumConfig {
    ExactReal alpha1, alpha2;
    ExactReal beta1, beta2;

    StadiumConfig(ExactReal a1, ExactReal a2, ExactReal b1, ExactReal b2);
};

// X(t) = fr((t - beta1)/alpha1), increasing; passes O at t = beta1 + k*alpha1.
ExactReal position_x(const StadiumConfig& c, const ExactReal& t);
// Y(t) = fr((beta2 - t)/alpha2), decreasing; passes O at t = beta2 + m*alpha2.
ExactReal position_y(const StadiumConfig& c, const ExactReal& t);

struct RecordEvent {
    ExactReal time;
    std::string athlete;
    BigInt recorded;  // floor(time)
};

// O-passage events of both athletes with time in [t_lo, t_hi), sorted by
// time (X before Y on simultaneous passages).
std::vector<RecordEvent> simulate_two(const StadiumConfig& c, long long t_lo, long long t_hi);

struct Occupancy {
    bool in_a = false;
    bool in_b = false;
};

// Domains behind O for complementary moduli: A = {0} u (1 - 1/alpha1, 1) for
// X, B = [0, 1/alpha2) for Y.  Occupancy at integer time k says which athlete
// passes O during [k, k+1), i.e. which sequence records k.
Occupancy domain_occupancy(const StadiumConfig& c, long long k);

// Position of the missed edge point E = 1/alpha2 for a complementary config.
ExactReal edge_point(const StadiumConfig& c);

// n+1 athletes running in the same direction; the j-th starts d_j behind the
// base athlete, d_j = fr(sum_{i<=j} beta_i/alpha_i), and moves with relative
// speed sum_{i<=j} 1/alpha_i.  Athlete i records floor(t) whenever it passes
// athlete i-1.  The base speed never affects the records.
struct MultiConfig {
    std::vector<std::pair<ExactReal, ExactReal>> athletes;  // (alpha_i, beta_i), canonical
    ExactReal base_speed;

    explicit MultiConfig(std::vector<std::pair<ExactReal, ExactReal>> athletes,
                         ExactReal base_speed = ExactReal(0));
};

std::vector<RecordEvent> simulate_multi(const MultiConfig& c, long long t_lo, long long t_hi);

}  // namespace beatty
