#include "starcol/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>

namespace starcol {

namespace {

constexpr int kMaxColours = 62;

// Backtracking core shared by decide / count / enumerate. Maintains, per
// vertex, the allowed-colour mask implied by properness and by the
// bicoloured-P3 rule: for every bicoloured path e1,m,e2 the neighbours of
// the endpoints e1 and e2 must avoid the middle colour. Detecting those
// implications when the last vertex of a P3 is coloured also catches every
// bicoloured P4 among coloured vertices as soon as it appears.
class Searcher {
public:
    Searcher(const Graph& g, int k, const SolveConfig& cfg, bool counting)
        : g_(g), k_(k), cfg_(cfg), counting_(counting) {
        full_mask_ = (k >= 64) ? ~0ull : ((1ull << k) - 1);
        colour_.assign(g.n(), -1);
        allowed_.assign(g.n(), full_mask_);
        nbr_count_.assign(static_cast<size_t>(g.n()) * k, 0);
        sat_.assign(g.n(), 0);
        heavy_.assign(g.n(), 0);
        used_count_.assign(k, 0);
        auto d = is_regular(g);
        if (d && *d >= 4 && *d % 2 == 0 && k == *d / 2 + 2) {
            regular_rule_ = true;
            preg_ = *d / 2;
        }
    }

    std::atomic<bool>* stop = nullptr;

    long long nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

    bool apply_pins() {
        for (auto [v, c] : cfg_.pinned) {
            if (v < 0 || v >= g_.n()) throw input_error("pinned vertex out of range");
            if (c < 0 || c >= k_) throw input_error("pinned colour >= k");
        }
        for (auto [v, c] : cfg_.pinned) {
            if (colour_[v] == c) continue;
            if (colour_[v] != -1 || !(allowed_[v] >> c & 1)) return false;
            if (!assign(v, c) || !flush_forced()) return false;
        }
        return true;
    }

    // Decision search. Returns Sat/Unsat/Indeterminate.
    SolveStatus decide() {
        symmetry_break_ = cfg_.pinned.empty();
        if (!apply_pins()) return SolveStatus::Unsat;
        bool found = dfs_decide();
        if (aborted_) return SolveStatus::Indeterminate;
        return found ? SolveStatus::Sat : SolveStatus::Unsat;
    }

    Colouring result_colouring() const { return Colouring{k_, colour_}; }

    // Exhaustive enumeration in vertex index order. Calls on_leaf for every
    // complete colouring; returns false if the budget was exhausted.
    bool enumerate(bool canonical, const std::function<bool(const std::vector<int>&)>& on_leaf) {
        canonical_ = canonical;
        on_leaf_ = on_leaf;
        stop_enum_ = false;
        for (auto [v, c] : cfg_.pinned) {
            if (v < 0 || v >= g_.n()) throw input_error("pinned vertex out of range");
            if (c < 0 || c >= k_) throw input_error("pinned colour >= k");
            allowed_[v] = 1ull << c;
        }
        dfs_enumerate(0, -1);
        return !aborted_;
    }

private:
    const Graph& g_;
    int k_;
    SolveConfig cfg_;
    bool counting_;
    uint64_t full_mask_;
    std::vector<int> colour_;
    std::vector<uint64_t> allowed_;
    std::vector<int> nbr_count_;  // coloured neighbours of v per colour
    std::vector<int> sat_;        // distinct colours among coloured neighbours
    std::vector<int> heavy_;      // colours with >= 2 coloured neighbours
    bool regular_rule_ = false;   // 2p-regular with k == p+2, p >= 2
    int preg_ = 0;
    bool symmetry_break_ = false;
    bool canonical_ = false;
    std::vector<int> used_count_;
    int assigned_ = 0;
    long long nodes_ = 0;
    bool aborted_ = false;
    bool stop_enum_ = false;
    std::function<bool(const std::vector<int>&)> on_leaf_;

    std::vector<std::pair<int, uint64_t>> mask_trail_;
    std::vector<int> assign_trail_;
    std::vector<int> forced_;

    int& cnt(int v, int c) { return nbr_count_[static_cast<size_t>(v) * k_ + c]; }

    bool budget_tick() {
        ++nodes_;
        if ((cfg_.node_budget >= 0 && nodes_ > cfg_.node_budget) ||
            (stop && (nodes_ & 1023) == 0 && stop->load(std::memory_order_relaxed))) {
            aborted_ = true;
            return false;
        }
        return true;
    }

    bool forbid(int x, int c) {
        if (colour_[x] == c) return false;  // bicoloured P4 completed
        if (colour_[x] != -1) return true;
        uint64_t bit = 1ull << c;
        if (!(allowed_[x] & bit)) return true;
        mask_trail_.emplace_back(x, allowed_[x]);
        allowed_[x] &= ~bit;
        if (allowed_[x] == 0) return false;
        if (!counting_ && (allowed_[x] & (allowed_[x] - 1)) == 0) forced_.push_back(x);
        return true;
    }

    bool assign(int v, int c) {
        if (!budget_tick()) return false;
        assert(colour_[v] == -1);
        colour_[v] = c;
        assign_trail_.push_back(v);
        ++assigned_;
        ++used_count_[c];
        for (int w : g_.adj(v)) {
            int& n = cnt(w, c);
            ++n;
            if (n == 1) ++sat_[w];
            if (regular_rule_) {
                if (n == 2 && ++heavy_[w] == 2) return false;
                if (n == preg_ + 1) return false;
            }
        }
        // Properness.
        for (int w : g_.adj(v)) {
            if (colour_[w] == c) return false;
            if (colour_[w] == -1 && !forbid(w, c)) return false;
        }
        // New bicoloured P3s centred at v: endpoints u,w coloured b.
        for (int u : g_.adj(v)) {
            int b = colour_[u];
            if (b == -1 || cnt(v, b) < 2) continue;
            for (int x : g_.adj(u))
                if (x != v && !forbid(x, c)) return false;
        }
        // New bicoloured P3s with endpoint v: v,u,w with colour(w) == c.
        for (int u : g_.adj(v)) {
            int b = colour_[u];
            if (b == -1) continue;
            for (int w : g_.adj(u)) {
                if (w == v || colour_[w] != c) continue;
                for (int x : g_.adj(v))
                    if (x != u && !forbid(x, b)) return false;
                for (int x : g_.adj(w))
                    if (x != u && !forbid(x, b)) return false;
            }
        }
        return true;
    }

    void undo_to(size_t assign_mark, size_t mask_mark) {
        while (assign_trail_.size() > assign_mark) {
            int v = assign_trail_.back();
            assign_trail_.pop_back();
            int c = colour_[v];
            colour_[v] = -1;
            --assigned_;
            --used_count_[c];
            for (int w : g_.adj(v)) {
                int& n = cnt(w, c);
                if (regular_rule_ && n == 2) --heavy_[w];
                --n;
                if (n == 0) --sat_[w];
            }
        }
        while (mask_trail_.size() > mask_mark) {
            auto [x, old] = mask_trail_.back();
            mask_trail_.pop_back();
            allowed_[x] = old;
        }
    }

    bool flush_forced() {
        while (!forced_.empty()) {
            int v = forced_.back();
            forced_.pop_back();
            if (colour_[v] != -1) continue;
            uint64_t m = allowed_[v];
            assert(m && (m & (m - 1)) == 0);
            int c = std::countr_zero(m);
            if (!assign(v, c)) return false;
        }
        return true;
    }

    int pick_vertex() const {
        int best = -1;
        long best_key = -1;
        int n = g_.n();
        for (int v = 0; v < n; ++v) {
            if (colour_[v] != -1) continue;
            int idx = cfg_.seed ? static_cast<int>((v + cfg_.seed) % n) : v;
            long key = (static_cast<long>(sat_[v]) << 40) +
                       (static_cast<long>(g_.degree(v)) << 20) + (n - idx);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        return best;
    }

    bool dfs_decide() {
        if (aborted_) return false;
        if (assigned_ == g_.n()) return true;
        int v = pick_vertex();
        uint64_t cand = allowed_[v];
        if (symmetry_break_) {
            int max_used = -1;
            for (int c = 0; c < k_; ++c)
                if (used_count_[c]) max_used = c;
            if (max_used + 1 < k_ - 1)
                cand &= (1ull << (max_used + 2)) - 1;  // used colours plus one fresh
        }
        size_t am = assign_trail_.size(), mm = mask_trail_.size();
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            forced_.clear();
            if (assign(v, c) && flush_forced()) {
                if (dfs_decide()) return true;
            }
            if (aborted_) return false;
            undo_to(am, mm);
        }
        forced_.clear();
        return false;
    }

    void dfs_enumerate(int v, int max_used_prefix) {
        if (aborted_ || stop_enum_) return;
        if (v == g_.n()) {
            stop_enum_ = !on_leaf_(colour_);
            return;
        }
        uint64_t cand = allowed_[v];
        if (canonical_)
            cand &= (1ull << std::min<long long>(k_, max_used_prefix + 2)) - 1;
        size_t am = assign_trail_.size(), mm = mask_trail_.size();
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            if (assign(v, c)) dfs_enumerate(v + 1, std::max(max_used_prefix, c));
            if (aborted_ || stop_enum_) {
                undo_to(am, mm);
                return;
            }
            undo_to(am, mm);
        }
    }
};

DecideResult decide_once(const Graph& g, int k, const SolveConfig& cfg,
                         std::atomic<bool>* stop) {
    Searcher s(g, k, cfg, false);
    s.stop = stop;
    DecideResult r;
    r.status = s.decide();
    r.nodes = s.nodes();
    if (r.status == SolveStatus::Sat) {
        Colouring c = s.result_colouring();
        auto verdict = verify_star(g, c);
        if (!verdict.ok) throw std::logic_error("solver produced an invalid star colouring");
        r.colouring = std::move(c);
    }
    return r;
}

}  // namespace

DecideResult decide_k_star(const Graph& g, int k, const SolveConfig& cfg) {
    if (k < 0) throw input_error("k must be nonnegative");
    if (k > kMaxColours) throw input_error("solver supports k <= 62");
    for (auto [v, c] : cfg.pinned) {
        if (v < 0 || v >= g.n()) throw input_error("pinned vertex out of range");
        if (c < 0 || c >= k) throw input_error("pinned colour >= k");
    }
    DecideResult r;
    if (g.n() == 0) {
        r.status = SolveStatus::Sat;
        r.colouring = Colouring{k, {}};
        return r;
    }
    if (k == 0) {
        r.status = SolveStatus::Unsat;
        return r;
    }
    if (cfg.use_known_bounds) {
        auto d = is_regular(g);
        if (d && *d >= 4 && *d % 2 == 0 && k == *d / 2 + 2) {
            int p = *d / 2;
            if (g.n() % ((p + 1) * (p + 2)) != 0) {
                r.status = SolveStatus::Unsat;
                r.reason = "divisibility";
                return r;
            }
        }
    }
    if (cfg.jobs > 1 && !cfg.deterministic) {
        std::atomic<bool> stop{false};
        std::mutex mx;
        std::optional<DecideResult> winner;
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.jobs; ++t) {
            pool.emplace_back([&, t] {
                SolveConfig c2 = cfg;
                c2.seed = cfg.seed + t;
                DecideResult mine = decide_once(g, k, c2, &stop);
                std::lock_guard<std::mutex> lk(mx);
                if (mine.status != SolveStatus::Indeterminate && !winner) {
                    winner = std::move(mine);
                    stop.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& th : pool) th.join();
        if (winner) return *winner;
        r.status = SolveStatus::Indeterminate;
        return r;
    }
    return decide_once(g, k, cfg, nullptr);
}

ChiResult star_chromatic_number(const Graph& g, const SolveConfig& cfg) {
    ChiResult r;
    if (g.n() == 0) {
        r.exact = true;
        r.colouring = Colouring{0, {}};
        return r;
    }
    int lb = 1;
    if (g.m() > 0) lb = 2;
    // Greedy clique from each start vertex: any clique size lower-bounds chi.
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> clique = {s};
        for (int v : g.adj(s)) {
            bool ok = true;
            for (int u : clique)
                if (u != s && !g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        lb = std::max(lb, static_cast<int>(clique.size()));
    }
    if (cfg.use_known_bounds) {
        auto d = is_regular(g);
        if (d && *d >= 2) lb = std::max(lb, (*d + 5) / 2);  // ceil((d+4)/2)
    }
    int cap = cfg.upper_bound_k > 0 ? std::min(cfg.upper_bound_k, g.n()) : g.n();
    for (int k = lb; k <= cap; ++k) {
        DecideResult dr = decide_k_star(g, k, cfg);
        r.nodes += dr.nodes;
        if (dr.status == SolveStatus::Sat) {
            r.lo = r.hi = k;
            r.exact = true;
            r.colouring = std::move(dr.colouring);
            return r;
        }
        if (dr.status == SolveStatus::Indeterminate) {
            r.lo = k;
            r.hi = g.n();
            return r;
        }
    }
    if (cap < g.n()) {  // search capped below the trivial upper bound
        r.lo = cap + 1;
        r.hi = g.n();
        return r;
    }
    // Unreachable: the all-distinct colouring is a star colouring.
    throw std::logic_error("star_chromatic_number found no colouring with n colours");
}

CountResult count_k_star(const Graph& g, int k, bool up_to_swaps, const SolveConfig& cfg) {
    if (k < 0) throw input_error("k must be nonnegative");
    if (k > kMaxColours) throw input_error("solver supports k <= 62");
    if (up_to_swaps && !cfg.pinned.empty())
        throw input_error("up_to_swaps cannot be combined with pins");
    CountResult r;
    if (g.n() == 0) {
        r.complete = true;
        r.count = 1;  // the empty colouring
        return r;
    }
    if (k == 0) {
        r.complete = true;
        return r;
    }
    Searcher s(g, k, cfg, true);
    long long count = 0;
    bool fine = s.enumerate(up_to_swaps, [&](const std::vector<int>& col) {
        auto verdict = verify_star(g, Colouring{k, col});
        if (!verdict.ok) throw std::logic_error("counted colouring failed verification");
        ++count;
        return true;
    });
    r.complete = fine;
    r.count = count;
    r.nodes = s.nodes();
    return r;
}

AnotherResult another_colouring(const Graph& g, const Colouring& c, int k,
                                const SolveConfig& cfg) {
    if (c.k != k || static_cast<int>(c.at.size()) != g.n())
        throw input_error("reference colouring does not match graph/k");
    if (!verify_star(g, c).ok) throw input_error("reference colouring is not a star colouring");
    if (k > kMaxColours) throw input_error("solver supports k <= 62");
    AnotherResult r;
    if (g.n() == 0) {
        r.status = SolveStatus::Unsat;
        return r;
    }
    Colouring ref = canonical_colouring(c);
    Searcher s(g, k, cfg, true);
    std::optional<Colouring> found;
    bool fine = s.enumerate(true, [&](const std::vector<int>& col) {
        if (col != ref.at) {
            Colouring cand{k, col};
            if (!verify_star(g, cand).ok)
                throw std::logic_error("enumerated colouring failed verification");
            found = std::move(cand);
            return false;  // stop enumeration
        }
        return true;
    });
    r.nodes = s.nodes();
    if (found) {
        r.status = SolveStatus::Sat;
        r.colouring = std::move(found);
    } else {
        r.status = fine ? SolveStatus::Unsat : SolveStatus::Indeterminate;
    }
    return r;
}

}  // namespace starcol
