#include "bead/joint_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace bead {

JointOracle::JointOracle(HexagonSpec spec) : spec_(spec) {
    const int L = spec.num_lines();
    for (int t = 1; t <= L; ++t) {
        first_.push_back(static_cast<int>(line_of_.size()));
        for (int i = 0; i < particles_per_line(spec, t); ++i) line_of_.push_back(t);
    }
    if (num_vars() > 24) throw std::domain_error("JointOracle: too many coordinates");
    auto V = [&](int t, int i) { return var_index(t, i); };
    for (int t = 1; t <= L; ++t) {
        int r = particles_per_line(spec, t);
        for (int i = 1; i < r; ++i) cons_.push_back({V(t, i + 1), V(t, i)});
        cons_.push_back({-1, V(t, r)});
        cons_.push_back({V(t, 1), -2});
    }
    for (int t = 1; t < L; ++t) {
        int r = particles_per_line(spec, t), r2 = particles_per_line(spec, t + 1);
        if (r2 == r + 1) {
            for (int i = 1; i <= r; ++i) {
                cons_.push_back({V(t + 1, i + 1), V(t, i)});
                cons_.push_back({V(t, i), V(t + 1, i)});
            }
        } else if (r2 == r) {
            for (int i = 1; i <= r; ++i) cons_.push_back({V(t, i), V(t + 1, i)});
            for (int i = 1; i < r; ++i) cons_.push_back({V(t + 1, i + 1), V(t, i)});
        } else {
            for (int i = 1; i <= r2; ++i) {
                cons_.push_back({V(t, i + 1), V(t + 1, i)});
                cons_.push_back({V(t + 1, i), V(t, i)});
            }
        }
    }
    Z_ = volume({});
}

int JointOracle::var_index(int t, int i) const {
    if (i < 1 || i > particles_per_line(spec_, t)) throw std::domain_error("JointOracle: bad particle label");
    return first_[t - 1] + i - 1;
}

double JointOracle::volume(const std::vector<std::pair<int, double>>& fixed) const {
    const int nv = num_vars();
    std::vector<double> val(nv, 0.0);
    std::vector<char> is_fixed(nv, 0);
    for (auto [v, x] : fixed) {
        if (is_fixed[v]) throw std::invalid_argument("JointOracle: coordinate pinned twice");
        is_fixed[v] = 1;
        val[v] = x;
    }
    auto known = [&](int u) { return u < 0 || is_fixed[u]; };
    auto value = [&](int u) { return u == -1 ? 0.0 : u == -2 ? 1.0 : val[u]; };

    for (const auto& c : cons_)
        if (known(c.u) && known(c.v) && !(value(c.u) < value(c.v))) return 0.0;

    std::vector<double> cuts{0.0, 1.0};
    for (auto [v, x] : fixed) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const int G = static_cast<int>(cuts.size()) - 1;
    std::vector<double> len(G);
    for (int g = 0; g < G; ++g) len[g] = cuts[g + 1] - cuts[g];
    auto cut_index = [&](double x) {
        return static_cast<int>(std::lower_bound(cuts.begin(), cuts.end(), x) - cuts.begin());
    };

    // free coordinates renumbered 0..nf-1
    std::vector<int> fid(nv, -1);
    int nf = 0;
    for (int v = 0; v < nv; ++v)
        if (!is_fixed[v]) fid[v] = nf++;
    std::vector<std::uint32_t> pred(nf, 0);
    std::vector<int> lo(nf, 0), hi(nf, G - 1);
    for (const auto& c : cons_) {
        bool fu = !known(c.u), fv = !known(c.v);
        if (fu && fv) pred[fid[c.v]] |= 1u << fid[c.u];
        else if (fv) lo[fid[c.v]] = std::max(lo[fid[c.v]], cut_index(value(c.u)));
        else if (fu) hi[fid[c.u]] = std::min(hi[fid[c.u]], cut_index(value(c.v)) - 1);
    }
    const std::uint32_t full = nf == 32 ? ~0u : ((1u << nf) - 1);

    // place free coordinates in increasing order; state = (placed, current gap, count in it)
    std::unordered_map<std::uint64_t, double> memo;
    std::function<double(std::uint32_t, int, int)> f = [&](std::uint32_t mask, int g, int c) -> double {
        if (mask == full) return 1.0;
        std::uint64_t key = (std::uint64_t(mask) << 16) | (std::uint64_t(g) << 8) | std::uint64_t(c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        double s = 0.0;
        for (int v = 0; v < nf; ++v) {
            if (mask >> v & 1u) continue;
            if ((pred[v] & mask) != pred[v]) continue;
            for (int gg = std::max(g, lo[v]); gg <= hi[v]; ++gg) {
                if (gg == g) s += len[g] / (c + 1) * f(mask | (1u << v), g, c + 1);
                else s += len[gg] * f(mask | (1u << v), gg, 1);
            }
        }
        memo.emplace(key, s);
        return s;
    };
    return f(0u, 0, 0);
}

double JointOracle::correlation(const std::vector<SpacePoint>& pts) const {
    std::vector<int> label(pts.size());
    std::vector<std::pair<int, double>> fixed(pts.size());
    double total = 0.0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == pts.size()) {
            for (std::size_t j = 0; j < k; ++j) fixed[j] = {label[j], pts[j].position};
            total += volume(fixed);
            return;
        }
        int t = pts[k].line;
        for (int i = 1; i <= particles_per_line(spec_, t); ++i) {
            int v = var_index(t, i);
            if (std::find(label.begin(), label.begin() + k, v) != label.begin() + k) continue;
            label[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return total / Z_;
}

}  // namespace bead
