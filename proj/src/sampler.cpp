#include "bead/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace bead {

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t substream) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(substream), static_cast<std::uint32_t>(substream >> 32)};
    gen_.seed(ss);
}

double RandomStream::uniform() {
    // 53 random bits, offset by half a step so 0 is never produced
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::exponential() { return -std::log(uniform()); }

double RandomStream::gamma_int(int k) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += exponential();
    return s;
}

std::vector<double> dirichlet_draw(RandomStream& rs, const std::vector<int>& multiplicities) {
    if (multiplicities.empty()) throw std::domain_error("dirichlet_draw: empty multiplicities");
    std::vector<double> g(multiplicities.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (multiplicities[i] < 1) throw std::domain_error("dirichlet_draw: multiplicity must be >= 1");
        g[i] = rs.gamma_int(multiplicities[i]);
    }
    double tot = std::accumulate(g.begin(), g.end(), 0.0);
    for (double& v : g) v /= tot;
    return g;
}

std::vector<double> secular_zeros(const std::vector<double>& poles, const std::vector<double>& weights) {
    const std::size_t n = poles.size();
    if (n < 2 || weights.size() != n) throw std::domain_error("secular_zeros: need >= 2 poles with weights");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(poles[i] < poles[i + 1])) throw std::domain_error("secular_zeros: poles not increasing");

    auto f = [&](double x) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += weights[i] / (x - poles[i]);
        return s;
    };
    std::vector<double> z(n - 1);
    for (std::size_t g = 0; g + 1 < n; ++g) {
        // f runs from +inf to -inf across the gap, decreasing
        double lo = poles[g], hi = poles[g + 1];
        double mid = lo + 0.5 * (hi - lo);
        for (int it = 0; it < 2000; ++it) {
            mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) break;
            if (f(mid) > 0) lo = mid;
            else hi = mid;
        }
        if (!(mid > poles[g] && mid < poles[g + 1])) {
            // interval collapsed onto a pole; take whichever interior end survives
            mid = (lo > poles[g]) ? lo : hi;
            if (!(mid > poles[g] && mid < poles[g + 1]))
                throw std::runtime_error("secular_zeros: no interior root representable");
        }
        z[g] = mid;
    }
    return z;
}

BeadConfiguration sample_configuration(RandomStream& rs, const HexagonSpec& spec) {
    const int p = spec.p, q = spec.q, L = spec.num_lines();
    BeadConfiguration cfg;
    cfg.lines.resize(L);

    std::vector<double> prev;  // increasing
    {
        auto w = dirichlet_draw(rs, {p, q});
        prev = {w[0]};
    }
    cfg.lines[0] = prev;

    std::vector<double> poles;
    std::vector<int> mult;
    for (int r = 2; r <= L; ++r) {
        poles.clear();
        mult.clear();
        if (r <= p) {
            poles.push_back(0.0);
            mult.push_back(p - r + 1);
        }
        for (double v : prev) {
            poles.push_back(v);
            mult.push_back(1);
        }
        if (r <= q) {
            poles.push_back(1.0);
            mult.push_back(q - r + 1);
        }
        auto w = dirichlet_draw(rs, mult);
        prev = secular_zeros(poles, w);
        cfg.lines[r - 1] = prev;
    }
    for (auto& line : cfg.lines) std::reverse(line.begin(), line.end());
    return cfg;
}

void sample_each(const HexagonSpec& spec, std::size_t count, std::uint64_t seed, unsigned threads,
                 const std::function<void(std::size_t, const BeadConfiguration&)>& fn) {
    threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1)));
    auto work = [&](unsigned id) {
        for (std::size_t i = id; i < count; i += threads) {
            RandomStream rs(seed, i);
            fn(i, sample_configuration(rs, spec));
        }
    };
    if (threads == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
}

std::vector<BeadConfiguration> sample_many(const HexagonSpec& spec, std::size_t count,
                                           std::uint64_t seed, unsigned threads) {
    std::vector<BeadConfiguration> out(count);
    sample_each(spec, count, seed, threads, [&](std::size_t i, const BeadConfiguration& c) { out[i] = c; });
    return out;
}

}  // namespace bead
