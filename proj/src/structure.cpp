#include "starcol/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace starcol {

namespace {

std::vector<std::pair<int, int>> pair_labels(int p) {
    std::vector<std::pair<int, int>> labels;
    for (int i = 0; i <= p + 1; ++i)
        for (int j = 0; j <= p + 1; ++j)
            if (i != j) labels.emplace_back(i, j);
    return labels;
}

int require_2p_regular(const Graph& g, int min_p) {
    auto d = is_regular(g);
    if (!d || *d % 2 != 0 || *d / 2 < min_p)
        throw input_error("graph is not 2p-regular with p >= " + std::to_string(min_p));
    return *d / 2;
}

}  // namespace

std::vector<std::pair<int, int>> StarPartition::cell_of(int n) const {
    std::vector<std::pair<int, int>> of(n, {-1, -1});
    for (const auto& [ij, verts] : cells) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i > p + 1 || j > p + 1 || i == j)
            throw input_error("cell index out of range");
        for (int v : verts) {
            if (v < 0 || v >= n) throw input_error("cell vertex out of range");
            if (of[v].first != -1) throw input_error("cells are not disjoint");
            of[v] = ij;
        }
    }
    for (int v = 0; v < n; ++v)
        if (of[v].first == -1)
            throw input_error("cells do not cover vertex " + std::to_string(v));
    return of;
}

DivisibilityVerdict divisibility_reject(const Graph& g, int p) {
    if (p < 2) throw input_error("divisibility_reject requires p >= 2");
    auto d = is_regular(g);
    if (!d || *d != 2 * p) throw input_error("graph is not 2p-regular");
    return (g.n() % ((p + 1) * (p + 2)) != 0) ? DivisibilityVerdict::Reject
                                              : DivisibilityVerdict::Inconclusive;
}

StarPartition extract_partition(const Graph& g, const Colouring& c) {
    int p = require_2p_regular(g, 2);
    if (c.k != p + 2) throw input_error("colouring must use p+2 colours");
    if (static_cast<int>(c.at.size()) != g.n()) throw input_error("colouring size mismatch");
    StarPartition sp;
    sp.p = p;
    for (auto ij : pair_labels(p)) sp.cells[ij];  // all cells present, possibly empty
    std::vector<int> count(c.k);
    for (int v = 0; v < g.n(); ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (int w : g.adj(v)) ++count[c.at[w]];
        int i = c.at[v];
        int j = -1;
        for (int col = 0; col < c.k; ++col) {
            if (col == i) {
                if (count[col] != 0)
                    throw input_error("vertex " + std::to_string(v) +
                                      " has a same-coloured neighbour");
                continue;
            }
            if (count[col] == p) {
                if (j != -1)
                    throw input_error("vertex " + std::to_string(v) +
                                      " has two classes with p neighbours");
                j = col;
            } else if (count[col] != 1) {
                throw input_error("vertex " + std::to_string(v) + " has " +
                                  std::to_string(count[col]) + " neighbours in class " +
                                  std::to_string(col));
            }
        }
        if (j == -1)
            throw input_error("vertex " + std::to_string(v) + " has no class with p neighbours");
        sp.cells[{i, j}].push_back(v);
    }
    return sp;
}

PartitionReport verify_partition(const Graph& g, const StarPartition& sp) {
    PartitionReport r;
    int p = sp.p;
    if (p < 2) throw input_error("verify_partition requires p >= 2");
    auto of = sp.cell_of(g.n());
    int q = sp.cell_count();
    for (int v = 0; v < g.n(); ++v) {
        auto [i, j] = of[v];
        int row_j = 0;  // neighbours in cells (j,k), k not in {i,j}
        std::vector<int> col_i(p + 2, 0);  // neighbours in V_k^i per k
        int elsewhere = 0;
        for (int w : g.adj(v)) {
            auto [a, b] = of[w];
            if (a == j && b != i && b != j)
                ++row_j;
            else if (b == i && a != i && a != j)
                ++col_i[a];
            else
                ++elsewhere;
        }
        if (elsewhere != 0) {
            r.detail = "vertex " + std::to_string(v) + " has a neighbour outside row V_j^* and column V_*^i";
            return r;
        }
        if (row_j != p) {
            r.detail = "vertex " + std::to_string(v) + " has " + std::to_string(row_j) +
                       " neighbours in U_k V_j^k (expected " + std::to_string(p) + ")";
            return r;
        }
        for (int k = 0; k <= p + 1; ++k) {
            if (k == i || k == j) continue;
            if (col_i[k] != 1) {
                r.detail = "vertex " + std::to_string(v) + " has " + std::to_string(col_i[k]) +
                           " neighbours in V_" + std::to_string(k) + "^" + std::to_string(i);
                return r;
            }
        }
    }
    r.ok = true;
    r.equal_cells = g.n() % q == 0;
    if (r.equal_cells) {
        size_t want = g.n() / q;
        for (const auto& [ij, verts] : sp.cells)
            if (verts.size() != want) r.equal_cells = false;
    }
    return r;
}

DegreeConstraintMatrix build_dq(int p) {
    if (p < 0) throw input_error("p must be nonnegative");
    DegreeConstraintMatrix m;
    m.p = p;
    m.labels = pair_labels(p);
    m.q = static_cast<int>(m.labels.size());
    m.entry.assign(static_cast<size_t>(m.q) * m.q, CountConstraint::Zero);
    for (int r = 0; r < m.q; ++r) {
        auto [i, j] = m.labels[r];
        for (int c = 0; c < m.q; ++c) {
            auto [k, l] = m.labels[c];
            CountConstraint e = CountConstraint::Zero;
            if (k != j && l == i)
                e = CountConstraint::One;
            else if (k == j && l != i)
                e = CountConstraint::Any;
            m.entry[static_cast<size_t>(r) * m.q + c] = e;
        }
    }
    return m;
}

DegreeConstraintMatrix build_eq(int p) {
    DegreeConstraintMatrix m = build_dq(p);
    for (auto& e : m.entry)
        if (e == CountConstraint::Any) e = CountConstraint::One;
    return m;
}

Verdict verify_dq_partition(const Graph& g, const StarPartition& sp,
                            const DegreeConstraintMatrix& m) {
    Verdict v;
    if (sp.p != m.p) throw input_error("partition and matrix label mismatch");
    auto of = sp.cell_of(g.n());
    std::map<std::pair<int, int>, int> row_of;
    for (int r = 0; r < m.q; ++r) row_of[m.labels[r]] = r;
    std::vector<int> counts(m.q);
    for (int u = 0; u < g.n(); ++u) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int w : g.adj(u)) ++counts[row_of.at(of[w])];
        int r = row_of.at(of[u]);
        for (int c = 0; c < m.q; ++c) {
            CountConstraint e = m.at(r, c);
            if ((e == CountConstraint::Zero && counts[c] != 0) ||
                (e == CountConstraint::One && counts[c] != 1)) {
                v.detail = "vertex " + std::to_string(u) + " has " + std::to_string(counts[c]) +
                           " neighbours in cell (" + std::to_string(m.labels[c].first) + "," +
                           std::to_string(m.labels[c].second) + ")";
                return v;
            }
        }
    }
    v.ok = true;
    return v;
}

bool check_cover(const Graph& g, const Graph& h, const std::vector<int>& label) {
    if (static_cast<int>(label.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v) {
        int lv = label[v];
        if (lv < 0 || lv >= h.n()) return false;
        if (g.degree(v) != h.degree(lv)) return false;
        // Labels of N_g(v) must be exactly N_h(lv), one each.
        std::vector<int> got;
        got.reserve(g.degree(v));
        for (int w : g.adj(v)) got.push_back(label[w]);
        std::sort(got.begin(), got.end());
        if (got != h.adj(lv)) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_cover(const Graph& g, const Graph& h, int cap) {
    if (g.n() > cap)
        throw input_error("find_cover cap exceeded (cap " + std::to_string(cap) + ", n " +
                          std::to_string(g.n()) + ")");
    if (h.n() == 0) return g.n() == 0 ? std::optional<std::vector<int>>({}) : std::nullopt;
    // Degree prefilter.
    for (int v = 0; v < g.n(); ++v) {
        bool any = false;
        for (int u = 0; u < h.n(); ++u)
            if (h.degree(u) == g.degree(v)) {
                any = true;
                break;
            }
        if (!any) return std::nullopt;
    }
    // BFS order from vertex 0 (per component, components in index order).
    std::vector<int> order;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : g.adj(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    std::vector<int> label(g.n(), -1);
    // used[v] marks h-labels already present among v's labelled neighbours.
    std::vector<std::vector<char>> used(g.n(), std::vector<char>(h.n(), 0));

    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == g.n()) return true;
        int v = order[pos];
        for (int cand = 0; cand < h.n(); ++cand) {
            if (h.degree(cand) != g.degree(v)) continue;
            bool ok = true;
            for (int w : g.adj(v)) {
                if (label[w] == -1) continue;
                // Edge consistency plus local injectivity on both sides.
                if (!h.has_edge(label[w], cand) || used[w][cand] || used[v][label[w]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            label[v] = cand;
            for (int w : g.adj(v))
                if (label[w] != -1) {
                    used[w][cand] = 1;
                    used[v][label[w]] = 1;
                }
            if (rec(pos + 1)) return true;
            for (int w : g.adj(v))
                if (label[w] != -1) {
                    used[w][cand] = 0;
                    used[v][label[w]] = 0;
                }
            label[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    if (!check_cover(g, h, label)) throw std::logic_error("find_cover produced invalid labelling");
    return label;
}

std::vector<int> independent_set_it(const StarPartition& sp, int t) {
    if (t <= 0 || t >= sp.p + 1) throw input_error("t out of range (0 < t < p+1)");
    std::vector<int> out;
    for (const auto& [ij, verts] : sp.cells) {
        auto [i, j] = ij;
        if (i < t && j >= t) out.insert(out.end(), verts.begin(), verts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Recursive 3-log2(p+2) proper colouring of a graph with a D_q-style
// partition given as vertex -> (i,j) over index set `idx` (sorted).
int recolour(const Graph& g, const std::vector<std::pair<int, int>>& of,
             const std::vector<int>& verts, const std::vector<int>& idx, int base,
             std::vector<int>& out) {
    if (verts.empty()) return 0;
    int s = static_cast<int>(idx.size());  // = p+2 for this level
    if (s <= 2) {
        // D_2: no edges at all; one colour.
        for (int v : verts) out[v] = base;
        return 1;
    }
    if (s == 3) {
        // D_6: the three row unions are independent.
        for (int v : verts) {
            int row = static_cast<int>(std::lower_bound(idx.begin(), idx.end(), of[v].first) -
                                       idx.begin());
            out[v] = base + row;
        }
        return 3;
    }
    int p = s - 2;
    int lo_max = p / 2;               // rows/cols 0..floor(p/2) -> W1 side
    int hi_min = (p + 1) / 2 + 1;     // rows/cols ceil(p/2)+1.. -> W2 side
    auto pos = [&](int label) {
        return static_cast<int>(std::lower_bound(idx.begin(), idx.end(), label) - idx.begin());
    };
    std::vector<int> w1, w2;
    bool has_c = (p % 2 == 1);
    int fresh = has_c ? 3 : 2;
    for (int v : verts) {
        int i = pos(of[v].first), j = pos(of[v].second);
        if (has_c && i == (p + 1) / 2) {
            out[v] = base + 2;  // C row
        } else if (i <= lo_max && j >= lo_max + 1) {
            out[v] = base;  // A
        } else if (i >= hi_min && j <= (p + 1) / 2) {
            out[v] = base + 1;  // B
        } else if (i <= lo_max && j <= lo_max) {
            w1.push_back(v);
        } else {
            w2.push_back(v);
        }
    }
    std::vector<int> idx_lo(idx.begin(), idx.begin() + lo_max + 1);
    std::vector<int> idx_hi(idx.begin() + hi_min, idx.end());
    int c1 = recolour(g, of, w1, idx_lo, base + fresh, out);
    int c2 = recolour(g, of, w2, idx_hi, base + fresh, out);
    return fresh + std::max(c1, c2);
}

}  // namespace

Colouring colour_from_partition(const Graph& g, const StarPartition& sp) {
    auto check = verify_dq_partition(g, sp, build_dq(sp.p));
    if (!check.ok) throw input_error("partition is not a D_q-partition: " + check.detail);
    auto of = sp.cell_of(g.n());
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    std::vector<int> idx;
    for (int i = 0; i <= sp.p + 1; ++i) idx.push_back(i);
    std::vector<int> out(g.n(), -1);
    int used = recolour(g, of, all, idx, 0, out);
    Colouring c{std::max(used, 1), out};
    if (g.n() == 0) c.k = 0;
    for (auto [u, v] : g.edges())
        if (c.at[u] == c.at[v])
            throw std::logic_error("colour_from_partition produced an improper colouring");
    return c;
}

FallEquitableReport check_fall_equitable(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.at.size()) != g.n()) throw input_error("colouring size mismatch");
    FallEquitableReport r;
    r.class_sizes.assign(c.k, 0);
    for (int v = 0; v < g.n(); ++v) ++r.class_sizes[c.at[v]];
    int mn = g.n(), mx = 0;
    for (int s : r.class_sizes) {
        mn = std::min(mn, s);
        mx = std::max(mx, s);
    }
    if (c.k == 0) mn = mx = 0;
    r.equitable = mx - mn <= 1;
    r.all_equal = mx == mn;
    r.fall = true;
    std::vector<char> seen(c.k);
    for (int v = 0; v < g.n() && r.fall; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[c.at[v]] = 1;
        for (int w : g.adj(v)) seen[c.at[w]] = 1;
        for (int col = 0; col < c.k; ++col)
            if (!seen[col]) {
                r.fall = false;
                break;
            }
    }
    return r;
}

}  // namespace starcol
