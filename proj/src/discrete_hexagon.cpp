#include "bead/discrete_hexagon.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace bead {

DiscreteHexagon::DiscreteHexagon(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
    if (n < 1 || p < 1 || q < p) throw std::domain_error("discrete hexagon needs n >= 1, 1 <= p <= q");
}

int DiscreteHexagon::particles(int t) const {
    if (t < 0 || t > p + q) throw std::domain_error("line out of range: " + std::to_string(t));
    if (t <= p) return t;
    if (t <= q) return p;
    return p + q - t;
}

std::pair<int, int> boundary_positions(const DiscreteHexagon& hex, int t) {
    hex.particles(t);
    int a = t <= hex.q ? 2 * (hex.n - 1) + t : 2 * (hex.n + hex.q - 1) - t;
    int b = t <= hex.p ? -t : -2 * hex.p + t;
    return {a, b};
}

namespace {

bool valid_tuple(const DiscreteHexagon& hex, int t, const std::vector<int>& xs) {
    if (static_cast<int>(xs.size()) != hex.particles(t)) return false;
    auto [a, b] = boundary_positions(hex, t);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < b || xs[i] > a || std::abs(xs[i] - b) % 2) return false;
        if (i + 1 < xs.size() && !(xs[i + 1] < xs[i])) return false;
    }
    return true;
}

// allowed open intervals (lo, hi) for each particle of line t+1 given line t
std::vector<std::pair<int, int>> forward_slots(const DiscreteHexagon& hex, int t, const std::vector<int>& x) {
    auto [a, b] = boundary_positions(hex, t + 1);
    const int r = static_cast<int>(x.size());
    const int top = a + 1, bot = b - 1;  // exclusive
    std::vector<std::pair<int, int>> s;
    auto above = [&](int i) { return i == 0 ? top : x[i - 1]; };  // x_0 = +inf
    if (t < hex.p) {
        for (int i = 0; i <= r; ++i) s.push_back({i < r ? x[i] : bot, above(i)});
    } else if (t < hex.q) {
        for (int i = 0; i < r; ++i) s.push_back({x[i], above(i)});
    } else {
        for (int i = 0; i + 1 < r; ++i) s.push_back({x[i + 1], x[i]});
    }
    for (auto& [lo, hi] : s) {
        lo = std::max(lo, bot);
        hi = std::min(hi, top);
    }
    return s;
}

// enumerate the product of slot choices with the parity of `parity_line`
void for_each_choice(const std::vector<std::pair<int, int>>& slots, int parity_line,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(slots.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == slots.size()) {
            fn(cur);
            return;
        }
        auto [lo, hi] = slots[i];
        int v = hi - 1;
        if (std::abs(v - parity_line) % 2) --v;
        for (; v > lo; v -= 2) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

std::vector<LatticeConfiguration> enumerate_configurations(const DiscreteHexagon& hex, std::size_t budget) {
    std::vector<LatticeConfiguration> out;
    const int T = hex.p + hex.q;
    LatticeConfiguration cur;
    cur.lines.assign(T + 1, {});
    std::function<void(int)> rec = [&](int t) {
        if (t == T) {
            if (out.size() >= budget) throw budget_error("enumeration budget exceeded");
            out.push_back(cur);
            return;
        }
        for_each_choice(forward_slots(hex, t, cur.lines[t]), t + 1, [&](const std::vector<int>& y) {
            cur.lines[t + 1] = y;
            rec(t + 1);
        });
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> line_tuples(const DiscreteHexagon& hex, int t) {
    auto [a, b] = boundary_positions(hex, t);
    const int r = hex.particles(t);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        int left = r - static_cast<int>(cur.size()) - 1;
        for (int v = hi; v - 2 * left >= b; v -= 2) {
            cur.push_back(v);
            rec(v - 2);
            cur.pop_back();
        }
    };
    rec(a);
    return out;
}

bigint left_count(const DiscreteHexagon& hex, int t, const std::vector<int>& xs) {
    if (t < 1 || t > hex.p) throw std::domain_error("left_count: need 1 <= t <= p");
    if (!valid_tuple(hex, t, xs)) throw std::domain_error("left_count: tuple violates parity/bounds/order");
    if (t == 1) return 1;
    // line t-1 particle i sits strictly between xs[i+1] and xs[i]
    std::vector<std::pair<int, int>> slots;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) slots.push_back({xs[i + 1], xs[i]});
    bigint total = 0;
    for_each_choice(slots, t - 1, [&](const std::vector<int>& x) { total += left_count(hex, t - 1, x); });
    return total;
}

rational left_count_constant(int t) {
    bigint den = 1;
    for (int i = 0; i < t * (t - 1) / 2; ++i) den *= 2;
    bigint f = 1;
    for (int k = 1; k < t; ++k) {
        f *= k;
        den *= f;
    }
    return rational(1, den);
}

bigint vandermonde(const std::vector<int>& xs) {
    bigint v = 1;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
    return v;
}

bigint hahn_weight(const DiscreteHexagon& hex, int t, int x) {
    auto [a, b] = boundary_positions(hex, t);
    bigint v = 1;
    for (int k = 1; k <= std::abs(hex.q - t); ++k) v *= a + 2 * k - x;
    for (int k = 1; k <= std::abs(hex.p - t); ++k) v *= x - b + 2 * k;
    return v;
}

bigint hahn_marginal_unnormalized(const DiscreteHexagon& hex, int t, const std::vector<int>& xs) {
    if (!valid_tuple(hex, t, xs)) throw std::domain_error("hahn_marginal: tuple violates parity/bounds/order");
    bigint d = vandermonde(xs);
    bigint v = d * d;
    for (int x : xs) v *= hahn_weight(hex, t, x);
    return v;
}

std::map<std::vector<int>, bigint> bruteforce_line_counts(const DiscreteHexagon& hex, int t) {
    hex.particles(t);
    std::map<std::vector<int>, bigint> counts;
    for (const auto& c : enumerate_configurations(hex)) counts[c.lines[t]] += 1;
    return counts;
}

bigint bruteforce_marginal(const DiscreteHexagon& hex, int t, const std::vector<int>& xs) {
    auto counts = bruteforce_line_counts(hex, t);
    auto it = counts.find(xs);
    return it == counts.end() ? bigint(0) : it->second;
}

ProportionalityReport hahn_proportionality(const DiscreteHexagon& hex, int t) {
    auto counts = bruteforce_line_counts(hex, t);
    ProportionalityReport rep;
    rep.holds = true;
    bool first = true;
    for (const auto& xs : line_tuples(hex, t)) {
        auto it = counts.find(xs);
        bigint c = it == counts.end() ? bigint(0) : it->second;
        bigint w = hahn_marginal_unnormalized(hex, t, xs);
        ++rep.tuples;
        if (w == 0) {
            if (c != 0) rep.holds = false;
            continue;
        }
        rational ratio(c, w);
        if (first) {
            rep.constant = ratio;
            first = false;
        } else if (ratio != rep.constant) {
            rep.holds = false;
        }
    }
    if (first || rep.constant <= 0) rep.holds = false;
    return rep;
}

bool left_count_identity(const DiscreteHexagon& hex, int t) {
    rational c = left_count_constant(t);
    for (const auto& xs : line_tuples(hex, t))
        if (rational(left_count(hex, t, xs)) != c * rational(vandermonde(xs))) return false;
    return true;
}

}  // namespace bead
