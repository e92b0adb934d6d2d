#include "chromatopo/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "chromatopo/bits.hpp"

namespace chromatopo {

ChainComplex chain_complex(const Z2Complex& k, Ring ring) {
    ChainComplex c;
    c.ring = ring;
    const int top = k.num_dims();
    c.sizes.resize(top);
    c.boundary.resize(top);
    for (int d = 0; d < top; ++d) {
        const auto& level = k.simplices(d);
        c.sizes[d] = static_cast<int>(level.size());
        c.boundary[d].resize(level.size());
        for (std::size_t j = 0; j < level.size(); ++j) {
            const auto& s = level[j];
            if (d == 0) {
                c.boundary[0][j] = {{0, 1}};  // augmentation
                continue;
            }
            auto& col = c.boundary[d][j];
            std::vector<int> face(s.begin() + 1, s.end());
            int sign = 1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                col.emplace_back(k.index_of(d - 1, face), sign);
                if (i + 1 < s.size()) face[i] = s[i];
                sign = -sign;
            }
        }
    }
    return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
    for (std::size_t d = 1; d < c.boundary.size(); ++d) {
        int prev = d >= 2 ? c.sizes[d - 2] : 1;
        for (const auto& col : c.boundary[d]) {
            std::vector<int> acc(prev, 0);
            for (auto [row, sign] : col)
                for (auto [row2, sign2] : c.boundary[d - 1][row]) acc[row2] += sign * sign2;
            for (int v : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

namespace {

// Ranks of all augmented boundary maps over GF(2); ranks[k] = rank of d_k.
std::vector<int> gf2_boundary_ranks(const Z2Complex& k) {
    const int top = k.num_dims();
    std::vector<int> ranks(top + 1, 0);
    if (top == 0) return ranks;
    ranks[0] = 1;  // augmentation has rank 1 whenever there is a vertex
    for (int d = 1; d < top; ++d) {
        const auto& level = k.simplices(d);
        const int prev = static_cast<int>(k.simplices(d - 1).size());
        std::vector<BitVec> rows;
        rows.reserve(level.size());
        for (const auto& s : level) {
            BitVec row(prev);
            std::vector<int> face(s.begin() + 1, s.end());
            for (std::size_t i = 0; i < s.size(); ++i) {
                row.set(k.index_of(d - 1, face));
                if (i + 1 < s.size()) face[i] = s[i];
            }
            rows.push_back(std::move(row));
        }
        ranks[d] = gf2_rank(std::move(rows));
    }
    return ranks;
}

// --- exact integer Smith normal form on a sparse matrix ---

struct SparseInt {
    std::vector<std::map<int, Integer>> row;
    std::vector<std::set<int>> col_rows;

    void add_entry(int r, int c, const Integer& v) {
        if (v == 0) return;
        row[r][c] = v;
        col_rows[c].insert(r);
    }
    void drop(int r, int c) {
        row[r].erase(c);
        col_rows[c].erase(r);
    }
    // row[dst] += q * row[src]
    void row_axpy(int dst, int src, const Integer& q) {
        for (const auto& [c, v] : row[src]) {
            Integer nv = (row[dst].count(c) ? row[dst][c] : Integer(0)) + q * v;
            if (nv == 0)
                drop(dst, c);
            else {
                row[dst][c] = nv;
                col_rows[c].insert(dst);
            }
        }
    }
    // col[dst] += q * col[src]
    void col_axpy(int dst, int src, const Integer& q) {
        auto rows_touching = col_rows[src];
        for (int r : rows_touching) {
            const Integer& v = row[r][src];
            Integer nv = (row[r].count(dst) ? row[r][dst] : Integer(0)) + q * v;
            if (nv == 0)
                drop(r, dst);
            else {
                row[r][dst] = nv;
                col_rows[dst].insert(r);
            }
        }
    }
};

Integer rounded_quotient(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && 2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

// Diagonalizes by row/column operations; returns |diagonal| entries.
std::vector<Integer> diagonalize(SparseInt& m, const std::vector<int>& active_rows_init) {
    std::vector<Integer> diag;
    std::set<int> active_rows(active_rows_init.begin(), active_rows_init.end());
    for (;;) {
        // Pivot choice: smallest |value|, ties broken by least fill-in.
        int pr = -1, pc = -1;
        Integer pv = 0;
        long best_fill = 0;
        for (int r : active_rows) {
            for (const auto& [c, v] : m.row[r]) {
                long fill = static_cast<long>(m.row[r].size() - 1) *
                            static_cast<long>(m.col_rows[c].size() - 1);
                Integer a = abs(v);
                if (pr < 0 || a < pv || (a == pv && fill < best_fill)) {
                    pr = r;
                    pc = c;
                    pv = a;
                    best_fill = fill;
                    if (pv == 1 && fill == 0) goto have_pivot;
                }
            }
        }
        if (pr < 0) break;
    have_pivot:
        for (;;) {
            // Clear the pivot column with row operations; a non-zero
            // remainder becomes the new (smaller) pivot.
            bool moved = false;
            while (m.col_rows[pc].size() > 1) {
                int r2 = -1;
                for (int r : m.col_rows[pc])
                    if (r != pr) {
                        r2 = r;
                        break;
                    }
                Integer q = rounded_quotient(m.row[r2][pc], m.row[pr][pc]);
                if (q != 0) m.row_axpy(r2, pr, -q);
                if (m.row[r2].count(pc)) {
                    pr = r2;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // Clear the pivot row with column operations; these only touch
            // the pivot row since its column is already clear.
            bool row_clear = true;
            while (m.row[pr].size() > 1) {
                auto it = m.row[pr].begin();
                if (it->first == pc) ++it;
                int c2 = it->first;
                Integer q = rounded_quotient(it->second, m.row[pr][pc]);
                if (q != 0) m.col_axpy(c2, pc, -q);
                if (m.row[pr].count(c2)) {
                    pc = c2;
                    row_clear = false;
                    break;
                }
            }
            if (row_clear) break;
        }
        diag.push_back(abs(m.row[pr][pc]));
        m.drop(pr, pc);
        active_rows.erase(pr);
    }
    return diag;
}

// Normalizes a diagonal into the invariant-factor chain d1 | d2 | ...
std::vector<Integer> invariant_factors(std::vector<Integer> diag) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                Integer g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
                changed = true;
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

struct SnfResult {
    int rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
};

SnfResult snf(int rows, int cols, const std::vector<std::vector<std::pair<int, int>>>& columns) {
    SparseInt m;
    m.row.resize(rows);
    m.col_rows.resize(cols);
    std::set<int> used_rows;
    for (int j = 0; j < cols; ++j)
        for (auto [r, s] : columns[j]) {
            m.add_entry(r, j, s);
            used_rows.insert(r);
        }
    auto diag = diagonalize(m, {used_rows.begin(), used_rows.end()});
    auto invf = invariant_factors(std::move(diag));
    SnfResult out;
    out.rank = static_cast<int>(invf.size());
    for (auto& d : invf)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

}  // namespace

std::vector<int> betti_gf2(const Z2Complex& k) {
    const int top = k.num_dims();
    auto ranks = gf2_boundary_ranks(k);
    std::vector<int> betti(top, 0);
    for (int d = 0; d < top; ++d)
        betti[d] = static_cast<int>(k.simplices(d).size()) - ranks[d] - ranks[d + 1];
    return betti;
}

std::vector<int> unreduced_betti_gf2(const Z2Complex& k) {
    auto betti = betti_gf2(k);
    if (betti.empty()) return betti;  // empty complex: no cells at all
    betti[0] += 1;
    return betti;
}

HomologySummary homology_z(const Z2Complex& k) {
    const int top = k.num_dims();
    HomologySummary s;
    s.ring = Ring::Z;
    s.reduced_betti.assign(top, 0);
    s.torsion.assign(top, {});
    auto chains = chain_complex(k, Ring::Z);
    std::vector<int> ranks(top + 1, 0);
    for (int d = 0; d < top; ++d) {
        const int rows = d == 0 ? 1 : chains.sizes[d - 1];
        auto res = snf(rows, chains.sizes[d], chains.boundary[d]);
        ranks[d] = res.rank;
        if (d >= 1) s.torsion[d - 1] = std::move(res.torsion);
    }
    for (int d = 0; d < top; ++d)
        s.reduced_betti[d] = chains.sizes[d] - ranks[d] - ranks[d + 1];
    return s;
}

HomologySummary homology(const Z2Complex& k, Ring ring) {
    if (ring == Ring::Z) return homology_z(k);
    HomologySummary s;
    s.ring = Ring::GF2;
    s.reduced_betti = betti_gf2(k);
    s.torsion.assign(s.reduced_betti.size(), {});
    return s;
}

int homological_connectivity(const Z2Complex& k, Ring ring) {
    if (k.empty()) return -2;
    auto s = homology(k, ring);
    for (int d = 0; d < static_cast<int>(s.reduced_betti.size()); ++d)
        if (s.reduced_betti[d] != 0 || !s.torsion[d].empty()) return d - 1;
    return k.dim() + 1;
}

std::vector<int> kunneth_product_betti(const std::vector<int>& bx, const std::vector<int>& by) {
    if (bx.empty() || by.empty()) return {};
    std::vector<int> out(bx.size() + by.size() - 1, 0);
    for (std::size_t i = 0; i < bx.size(); ++i)
        for (std::size_t j = 0; j < by.size(); ++j) out[i + j] += bx[i] * by[j];
    return out;
}

std::string homology_summary_json(const HomologySummary& s) {
    std::size_t len = s.reduced_betti.size();
    while (len > 0 && s.reduced_betti[len - 1] == 0 &&
           (s.ring == Ring::GF2 || s.torsion[len - 1].empty()))
        --len;
    std::ostringstream out;
    out << "{\"ring\":\"" << (s.ring == Ring::GF2 ? "gf2" : "z") << "\",\"reduced_betti\":[";
    for (std::size_t i = 0; i < len; ++i) {
        if (i) out << ',';
        out << s.reduced_betti[i];
    }
    out << ']';
    if (s.ring == Ring::Z) {
        out << ",\"torsion\":[";
        for (std::size_t i = 0; i < len; ++i) {
            if (i) out << ',';
            out << '[';
            for (std::size_t j = 0; j < s.torsion[i].size(); ++j) {
                if (j) out << ',';
                out << s.torsion[i][j];
            }
            out << ']';
        }
        out << ']';
    }
    out << '}';
    return out.str();
}

}  // namespace chromatopo
