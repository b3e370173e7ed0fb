#include "clawfree/recon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace clawfree {

bool iso_utc(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("iso_utc: vertex counts differ");
    return is_isomorphic(g, h).has_value() ||
           is_isomorphic(g, complement(h)).has_value();
}

namespace {

// Advance a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

HypomorphyReport hypomorphic_utc(const Graph& g, const Graph& h, int k) {
    int n = g.vertex_count();
    if (n != h.vertex_count())
        throw std::invalid_argument("hypomorphic_utc: vertex counts differ");
    if (k < 1 || k > n) throw std::invalid_argument("hypomorphic_utc: k out of range");
    HypomorphyReport rep;
    rep.k = k;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
        if (!iso_utc(induced_on(g, idx), induced_on(h, idx))) {
            rep.result = false;
            rep.failing_subset = idx;
            return rep;
        }
    } while (next_combination(idx, n));
    rep.result = true;
    return rep;
}

namespace {

// Lazy canonical iso-utc codes for all edge masks at a fixed vertex count.
class CanonUtcCache {
public:
    explicit CanonUtcCache(int n)
        : n_(n), bits_(pair_count(n)), codes_(1ull << bits_, kUnset) {}

    std::uint64_t code(std::uint64_t mask) {
        std::uint64_t& slot = codes_[mask];
        if (slot == kUnset) {
            std::uint64_t full = bits_ == 64 ? ~0ull : (1ull << bits_) - 1;
            std::uint64_t c1 = canonical_code(Graph::from_edge_mask(n_, mask));
            std::uint64_t c2 = canonical_code(Graph::from_edge_mask(n_, ~mask & full));
            slot = std::min(c1, c2);
            codes_[~mask & full] = slot;  // same iso-utc class
        }
        return slot;
    }

private:
    static constexpr std::uint64_t kUnset = ~0ull;
    int n_;
    int bits_;
    std::vector<std::uint64_t> codes_;
};

std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
        out.push_back(idx);
    } while (next_combination(idx, n));
    return out;
}

}  // namespace

ReconTable build_recon_table(int v, int k) {
    if (v < 1 || v > 6) throw std::invalid_argument("build_recon_table: need 1 <= v <= 6");
    if (k < 1 || k > v) throw std::invalid_argument("build_recon_table: k out of range");
    ReconTable t;
    t.v = v;
    t.k = k;
    int m = pair_count(v);
    std::uint64_t total = 1ull << m;
    auto subsets = all_subsets(v, k);
    // per subset: global pair-index positions of its local pairs
    std::vector<std::vector<int>> positions;
    for (const auto& sub : subsets) {
        std::vector<int> pos;
        for (std::size_t a = 0; a < sub.size(); ++a)
            for (std::size_t b = a + 1; b < sub.size(); ++b)
                pos.push_back(pair_index(v, sub[a], sub[b]));
        positions.push_back(std::move(pos));
    }
    CanonUtcCache sub_cache(k);
    CanonUtcCache full_cache(v);
    t.canon_utc.resize(total);
    t.sig.resize(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        t.canon_utc[mask] = full_cache.code(mask);
        std::vector<std::uint64_t> sig;
        sig.reserve(subsets.size());
        for (const auto& pos : positions) {
            std::uint64_t sub_mask = 0;
            for (std::size_t i = 0; i < pos.size(); ++i)
                sub_mask |= ((mask >> pos[i]) & 1u) << i;
            sig.push_back(sub_cache.code(sub_mask));
        }
        t.sig[mask] = std::move(sig);
    }
    return t;
}

std::optional<Graph> reconstructible_utc(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n > 6) throw std::invalid_argument("reconstructible_utc: n > 6");
    if (k < 1 || k > n) throw std::invalid_argument("reconstructible_utc: k out of range");
    ReconTable t = build_recon_table(n, k);
    std::uint64_t gm = g.edge_mask();
    for (std::uint64_t hm = 0; hm < (1ull << pair_count(n)); ++hm)
        if (t.sig[hm] == t.sig[gm] && t.canon_utc[hm] != t.canon_utc[gm])
            return Graph::from_edge_mask(n, hm);
    return std::nullopt;
}

bool check_prop_down(const Graph& g, const Graph& h, int k, int t) {
    int n = g.vertex_count();
    if (t > std::min(k, n - k))
        throw std::invalid_argument("check_prop_down: need t <= min(k, n-k)");
    if (!hypomorphic_utc(g, h, k).result) return true;
    return hypomorphic_utc(g, h, t).result;
}

ReconSweepResult recon_sweep(int v, int k) {
    ReconTable t = build_recon_table(v, k);
    ReconSweepResult res;
    std::uint64_t total = 1ull << pair_count(v);
    res.graphs = total;
    for (std::uint64_t gm = 0; gm < total; ++gm)
        for (std::uint64_t hm = 0; hm < total; ++hm)
            if (t.sig[hm] == t.sig[gm] && t.canon_utc[hm] != t.canon_utc[gm]) {
                res.failures.emplace_back(gm, hm);
                break;  // first counterexample per g
            }
    return res;
}

PropDownResult propdown_sweep(int v, int k, int t, int /*jobs*/) {
    if (t > std::min(k, v - k))
        throw std::invalid_argument("propdown_sweep: need t <= min(k, v-k)");
    ReconTable tk = build_recon_table(v, k);
    ReconTable tt = build_recon_table(v, t);
    PropDownResult res;
    std::uint64_t total = 1ull << pair_count(v);
    res.pairs = total * total;
    for (std::uint64_t gm = 0; gm < total; ++gm)
        for (std::uint64_t hm = 0; hm < total; ++hm)
            if (tk.sig[gm] == tk.sig[hm] && tt.sig[gm] != tt.sig[hm])
                res.violations.emplace_back(gm, hm);
    return res;
}

}  // namespace clawfree
