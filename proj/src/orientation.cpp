#include "starcol/orientation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace starcol {

std::vector<std::pair<int, int>> Orientation::arcs(const Graph& g) const {
    if (forward.size() != g.edges().size()) throw input_error("orientation size mismatch");
    std::vector<std::pair<int, int>> out;
    out.reserve(forward.size());
    for (size_t e = 0; e < forward.size(); ++e) {
        auto [u, v] = g.edges()[e];
        out.emplace_back(forward[e] ? u : v, forward[e] ? v : u);
    }
    return out;
}

std::vector<int> in_degrees(const Graph& g, const Orientation& o) {
    std::vector<int> indeg(g.n(), 0);
    for (const auto& arc : o.arcs(g)) ++indeg[arc.second];
    return indeg;
}

bool is_eulerian(const Graph& g, const Orientation& o) {
    auto indeg = in_degrees(g, o);
    for (int v = 0; v < g.n(); ++v)
        if (2 * indeg[v] != g.degree(v)) return false;
    return true;
}

std::optional<Orientation> eulerian_orientation(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) % 2 != 0) return std::nullopt;
    // Orient every edge in the direction it is first traversed: the walk
    // decomposes the edge set into closed trails, so in-degree = out-degree.
    std::vector<std::vector<std::pair<int, int>>> inc(g.n());  // (neighbour, edge id)
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        inc[u].emplace_back(v, e);
        inc[v].emplace_back(u, e);
    }
    Orientation o;
    o.forward.assign(g.m(), 0);
    std::vector<char> used(g.m(), 0);
    std::vector<size_t> ptr(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (g.degree(s) == 0) continue;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            if (ptr[v] == inc[v].size()) {
                stack.pop_back();
                continue;
            }
            auto [w, e] = inc[v][ptr[v]++];
            if (used[e]) continue;
            used[e] = 1;
            o.forward[e] = (g.edges()[e].first == v);
            stack.push_back(w);
        }
    }
    return o;
}

ColourfulVerdict check_colourful(const Graph& g, const Orientation& o, const Colouring& c) {
    if (!is_eulerian(g, o)) throw input_error("orientation is not Eulerian");
    for (auto [u, v] : g.edges())
        if (c.at[u] == c.at[v]) throw input_error("colouring is not proper");
    std::vector<std::vector<int>> in(g.n()), out(g.n());
    for (auto [t, h] : o.arcs(g)) {
        out[t].push_back(h);
        in[h].push_back(t);
    }
    ColourfulVerdict r;
    for (int v = 0; v < g.n(); ++v) {
        if (in[v].empty()) continue;
        int cv = c.at[in[v][0]];
        for (int w : in[v])
            if (c.at[w] != cv) {
                r.vertex = v;
                r.condition = 1;
                r.detail = "in-neighbours of " + std::to_string(v) + " have different colours";
                return r;
            }
        std::vector<int> outcols;
        for (int w : out[v]) {
            if (c.at[w] == cv) {
                r.vertex = v;
                r.condition = 2;
                r.detail = "out-neighbour of " + std::to_string(v) + " has the in-colour";
                return r;
            }
            outcols.push_back(c.at[w]);
        }
        std::sort(outcols.begin(), outcols.end());
        if (std::adjacent_find(outcols.begin(), outcols.end()) != outcols.end()) {
            r.vertex = v;
            r.condition = 3;
            r.detail = "out-neighbours of " + std::to_string(v) + " repeat a colour";
            return r;
        }
    }
    r.ok = true;
    return r;
}

Orientation in_orientation(const Graph& g, const Colouring& c) {
    if (!verify_star(g, c).ok) throw input_error("colouring is not a star colouring");
    Orientation o;
    o.forward.assign(g.m(), 1);  // fallback: lower index -> higher index
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        // u is the middle of a bicoloured P3 through this edge iff u has
        // another neighbour coloured like v.
        auto is_middle = [&](int a, int b) {
            for (int w : g.adj(a))
                if (w != b && c.at[w] == c.at[b]) return true;
            return false;
        };
        bool mu = is_middle(u, v), mv = is_middle(v, u);
        if (mu && mv)
            throw std::logic_error("both endpoints are bicoloured-P3 middles (verifier bug)");
        if (mu)
            o.forward[e] = 0;  // v -> u
        else if (mv)
            o.forward[e] = 1;  // u -> v
    }
    return o;
}

CeoCertificate colouring_to_ceo(const Graph& g, const Colouring& c) {
    auto d = is_regular(g);
    if (!d || *d < 4 || *d % 2 != 0) throw input_error("graph is not 2p-regular with p >= 2");
    if (c.k != *d / 2 + 2) throw input_error("colouring must use p+2 colours");
    CeoCertificate cert;
    cert.orientation = in_orientation(g, c);
    cert.colouring = c;
    cert.in_colour.assign(g.n(), -1);
    for (auto [t, h] : cert.orientation.arcs(g)) {
        if (cert.in_colour[h] == -1)
            cert.in_colour[h] = c.at[t];
        else if (cert.in_colour[h] != c.at[t])
            throw std::logic_error("in-orientation left mixed in-colours at a vertex");
    }
    auto verdict = check_colourful(g, cert.orientation, c);
    if (!verdict.ok)
        throw std::logic_error("in-orientation failed the colourful conditions: " + verdict.detail);
    return cert;
}

Colouring ceo_to_colouring(const Graph& g, const CeoCertificate& cert) {
    auto verdict = check_colourful(g, cert.orientation, cert.colouring);
    if (!verdict.ok) throw input_error("invalid certificate: " + verdict.detail);
    if (!verify_star(g, cert.colouring).ok)
        throw std::logic_error("certificate colouring is not a star colouring");
    return cert.colouring;
}

namespace {

// Colouring backtracking for one fixed Eulerian orientation: vertices in
// index order, canonical first-use colours, conditions checked against
// coloured vertices only.
struct CeoColourer {
    const Graph& g;
    const std::vector<std::vector<int>>& in;
    const std::vector<std::vector<int>>& out;
    int q;
    std::vector<int> col;
    long long* nodes;
    long long budget;
    bool aborted = false;

    bool consistent(int x) {
        for (int v : g.adj(x)) {
            if (col[v] != -1 && col[v] == col[x]) return false;
        }
        // Check conditions at x and at each neighbour against coloured vertices.
        auto check_at = [&](int v) {
            int cv = -1;
            for (int w : in[v])
                if (col[w] != -1) {
                    if (cv == -1)
                        cv = col[w];
                    else if (col[w] != cv)
                        return false;
                }
            uint64_t seen = 0;
            for (int w : out[v]) {
                if (col[w] == -1) continue;
                if (cv != -1 && col[w] == cv) return false;
                if (seen >> col[w] & 1) return false;
                seen |= 1ull << col[w];
            }
            return true;
        };
        if (!check_at(x)) return false;
        for (int v : g.adj(x))
            if (!check_at(v)) return false;
        return true;
    }

    bool rec(int v, int max_used) {
        if (v == g.n()) return true;
        int limit = std::min(q - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            ++*nodes;
            if (budget >= 0 && *nodes > budget) {
                aborted = true;
                return false;
            }
            col[v] = c;
            if (consistent(v) && rec(v + 1, std::max(max_used, c))) return true;
            col[v] = -1;
            if (aborted) return false;
        }
        return false;
    }
};

struct ShardResult {
    long long mask = -1;
    std::vector<int> colouring;
    bool aborted = false;
    long long tried = 0;
};

ShardResult ceo_scan(const Graph& g, int q, long long first, long long stride, long long limit,
                     long long budget, std::atomic<long long>* best) {
    ShardResult res;
    long long nodes = 0;
    int m = g.m();
    for (long long mask = first; mask < limit; mask += stride) {
        if (best && mask > best->load(std::memory_order_relaxed)) break;
        ++res.tried;
        Orientation o;
        o.forward.assign(m, 0);
        for (int e = 0; e < m; ++e) o.forward[e] = (mask >> e) & 1;
        if (!is_eulerian(g, o)) continue;
        std::vector<std::vector<int>> in(g.n()), out(g.n());
        for (auto [t, h] : o.arcs(g)) {
            out[t].push_back(h);
            in[h].push_back(t);
        }
        CeoColourer col{g, in, out, q, std::vector<int>(g.n(), -1), &nodes, budget};
        if (col.rec(0, -1)) {
            res.mask = mask;
            res.colouring = col.col;
            if (best) {
                long long cur = best->load(std::memory_order_relaxed);
                while (mask < cur && !best->compare_exchange_weak(cur, mask)) {
                }
            }
            return res;
        }
        if (col.aborted) {
            res.aborted = true;
            return res;
        }
    }
    return res;
}

}  // namespace

CeoSearchResult ceo_exists(const Graph& g, int q_max, long long budget, int jobs) {
    if (q_max < 1) throw input_error("q_max must be >= 1");
    if (g.m() > 24) throw input_error("ceo_exists exhaustive mode supports m <= 24");
    CeoSearchResult r;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) % 2 != 0) {
            r.status = SolveStatus::Unsat;
            r.reason = "odd-degree vertex (no Eulerian orientation exists)";
            return r;
        }
    }
    int q = std::min(q_max, std::max(g.n(), 1));
    long long total = 1ll << g.m();
    std::vector<ShardResult> shards;
    if (jobs <= 1) {
        shards.push_back(ceo_scan(g, q, 0, 1, total, budget, nullptr));
    } else {
        std::atomic<long long> best{total};
        std::vector<std::thread> pool;
        std::mutex mx;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                ShardResult s = ceo_scan(g, q, t, jobs, total, budget, &best);
                std::lock_guard<std::mutex> lk(mx);
                shards.push_back(std::move(s));
            });
        for (auto& th : pool) th.join();
    }
    ShardResult* win = nullptr;
    bool any_abort = false;
    for (auto& s : shards) {
        r.orientations_tried += s.tried;
        any_abort = any_abort || s.aborted;
        if (s.mask >= 0 && (!win || s.mask < win->mask)) win = &s;
    }
    if (win) {
        CeoCertificate cert;
        cert.orientation.forward.assign(g.m(), 0);
        for (int e = 0; e < g.m(); ++e) cert.orientation.forward[e] = (win->mask >> e) & 1;
        cert.colouring = Colouring{q, win->colouring};
        cert.in_colour.assign(g.n(), -1);
        for (auto [t, h] : cert.orientation.arcs(g)) cert.in_colour[h] = cert.colouring.at[t];
        auto verdict = check_colourful(g, cert.orientation, cert.colouring);
        if (!verdict.ok) throw std::logic_error("ceo_exists produced invalid certificate");
        r.status = SolveStatus::Sat;
        r.certificate = std::move(cert);
        return r;
    }
    r.status = any_abort ? SolveStatus::Indeterminate : SolveStatus::Unsat;
    if (any_abort) r.reason = "budget exhausted";
    return r;
}

std::optional<ObstructionHit> obstruction_reject(const Graph& g) {
    for (PatternId id : kAllPatterns) {
        auto emb = contains_subgraph(g, id);
        if (emb) return ObstructionHit{id, *emb};
    }
    return std::nullopt;
}

}  // namespace starcol
