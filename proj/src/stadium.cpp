#include "beatty/stadium.hpp"

#include <algorithm>

#include "beatty/criteria.hpp"

namespace beatty {

static void require_canonical(const ExactReal& alpha, const ExactReal& beta, const char* who) {
    if (ExactReal::compare(alpha, ExactReal(1)) != std::strong_ordering::greater)
        throw BadModuli(std::string(who) + ": alpha must exceed 1");
    if (beta.sign() < 0 || ExactReal::compare(beta, alpha) != std::strong_ordering::less)
        throw BadModuli(std::string(who) + ": beta must be canonical (0 <= beta < alpha)");
}

StadiumConfig::StadiumConfig(ExactReal a1, ExactReal a2, ExactReal b1, ExactReal b2)
    : alpha1(std::move(a1)), alpha2(std::move(a2)), beta1(std::move(b1)), beta2(std::move(b2)) {
    require_canonical(alpha1, beta1, "stadium X");
    require_canonical(alpha2, beta2, "stadium Y");
}

ExactReal position_x(const StadiumConfig& c, const ExactReal& t) {
    return ((t - c.beta1) / c.alpha1).frac();
}

ExactReal position_y(const StadiumConfig& c, const ExactReal& t) {
    return ((c.beta2 - t) / c.alpha2).frac();
}

// O-passage times of one athlete form beta + alpha*Z; emit those in
// [t_lo, t_hi) in order.
static void passages(const ExactReal& alpha, const ExactReal& beta, const std::string& name,
                     long long t_lo, long long t_hi, std::vector<RecordEvent>& out) {
    BigInt k = ((ExactReal(BigInt(t_lo)) - beta) / alpha).ceil();
    ExactReal t = beta + ExactReal(k) * alpha;
    ExactReal hi{BigInt(t_hi)};
    while (ExactReal::compare(t, hi) == std::strong_ordering::less) {
        out.push_back({t, name, t.floor()});
        t = t + alpha;
    }
}

static void sort_events(std::vector<RecordEvent>& events) {
    std::stable_sort(events.begin(), events.end(), [](const RecordEvent& a, const RecordEvent& b) {
        return ExactReal::compare(a.time, b.time) == std::strong_ordering::less;
    });
}

std::vector<RecordEvent> simulate_two(const StadiumConfig& c, long long t_lo, long long t_hi) {
    if (t_lo >= t_hi) throw InvalidRange("simulate_two: t_lo >= t_hi");
    std::vector<RecordEvent> events;
    passages(c.alpha1, c.beta1, "X", t_lo, t_hi, events);
    passages(c.alpha2, c.beta2, "Y", t_lo, t_hi, events);
    sort_events(events);
    return events;
}

ExactReal edge_point(const StadiumConfig& c) {
    if (!complementary(c.alpha1, c.alpha2))
        throw NotComplementary("edge point needs complementary moduli");
    return c.alpha2.reciprocal();
}

Occupancy domain_occupancy(const StadiumConfig& c, long long k) {
    if (!complementary(c.alpha1, c.alpha2))
        throw NotComplementary("domain occupancy needs complementary moduli");
    ExactReal t{BigInt(k)};
    ExactReal x = position_x(c, t);
    ExactReal y = position_y(c, t);
    Occupancy occ;
    // A = {0} u (1 - 1/alpha1, 1): X reaches O before time k+1.
    ExactReal a_edge = ExactReal(1) - c.alpha1.reciprocal();
    occ.in_a = x.is_zero() ||
               ExactReal::compare(x, a_edge) == std::strong_ordering::greater;
    // B = [0, 1/alpha2): Y reaches O before time k+1.
    occ.in_b = ExactReal::compare(y, c.alpha2.reciprocal()) == std::strong_ordering::less;
    return occ;
}

MultiConfig::MultiConfig(std::vector<std::pair<ExactReal, ExactReal>> ath, ExactReal base)
    : athletes(std::move(ath)), base_speed(std::move(base)) {
    if (athletes.empty()) throw BadModuli("multi config needs at least one athlete");
    for (const auto& [alpha, beta] : athletes) {
        if (alpha.sign() <= 0) throw BadModuli("multi config: alpha must be positive");
        if (beta.sign() < 0 || ExactReal::compare(beta, alpha) != std::strong_ordering::less)
            throw BadModuli("multi config: beta must be canonical");
    }
}

std::vector<RecordEvent> simulate_multi(const MultiConfig& c, long long t_lo, long long t_hi) {
    if (t_lo >= t_hi) throw InvalidRange("simulate_multi: t_lo >= t_hi");
    std::vector<RecordEvent> events;
    // Athlete i passes athlete i-1 when their relative phase
    // t/alpha_i - (d_i - d_{i-1}) is integral: every alpha_i time units,
    // anchored at alpha_i * fr(d_i - d_{i-1}).  The base speed cancels from
    // every relative motion, which is exactly why the records ignore it.
    ExactReal d_prev{0};
    ExactReal partial{0};
    for (std::size_t i = 0; i < c.athletes.size(); ++i) {
        const auto& [alpha, beta] = c.athletes[i];
        partial = partial + beta / alpha;
        ExactReal d_i = partial.frac();
        ExactReal anchor = alpha * (d_i - d_prev).frac();
        passages(alpha, anchor, "X" + std::to_string(i + 1), t_lo, t_hi, events);
        d_prev = d_i;
    }
    sort_events(events);
    return events;
}

}  // namespace beatty
