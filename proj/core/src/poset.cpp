#include "chromatopo/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace chromatopo {

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<char>> leq,
             std::vector<int> involution)
    : labels_(std::move(labels)), leq_(std::move(leq)), involution_(std::move(involution)) {
    validate();
}

void Poset::validate() const {
    const int n = size();
    if (static_cast<int>(leq_.size()) != n) throw std::invalid_argument("relation size mismatch");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(leq_[a].size()) != n)
            throw std::invalid_argument("relation size mismatch");
        if (!leq_[a][a]) throw std::invalid_argument("relation not reflexive");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && leq_[a][b] && leq_[b][a])
                throw std::invalid_argument("relation not antisymmetric");
            if (!leq_[a][b]) continue;
            for (int c = 0; c < n; ++c)
                if (leq_[b][c] && !leq_[a][c]) throw std::invalid_argument("relation not transitive");
        }
    if (involution_.empty()) return;
    if (static_cast<int>(involution_.size()) != n)
        throw std::invalid_argument("involution size mismatch");
    for (int a = 0; a < n; ++a) {
        int b = involution_[a];
        if (b < 0 || b >= n || b == a || involution_[b] != a)
            throw std::invalid_argument("involution is not a free order-2 permutation");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq_[a][b] != leq_[involution_[a]][involution_[b]])
                throw std::invalid_argument("involution is not order-preserving");
}

std::vector<int> Poset::chain_heights() const {
    const int n = size();
    // Process in a linear extension: repeatedly take elements whose strict
    // lower set is already done.
    std::vector<int> h(n, 0);
    std::vector<int> below(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (less(b, a)) ++below[a];
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    for (int a : order) {
        h[a] = 1;
        for (int b = 0; b < n; ++b)
            if (less(b, a)) h[a] = std::max(h[a], h[b] + 1);
    }
    return h;
}

int Poset::height() const {
    auto h = chain_heights();
    return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

std::vector<std::pair<int, int>> Poset::covers() const {
    const int n = size();
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (less(a, c) && less(c, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

namespace {

// Elements of Hom(K2, G) as (A', A'') pairs of sorted vertex lists. The
// enumeration walks non-empty A' with CN(A') != 0 (monotone pruning) and all
// non-empty subsets of CN(A').
void enumerate_hom(const Graph& g,
                   const std::function<void(const std::vector<int>&, const std::vector<int>&)>& emit) {
    const int n = g.vertex_count();
    std::vector<int> aprime;
    auto rec = [&](auto&& self, int next, BitVec cn) -> void {
        if (!aprime.empty()) {
            auto candidates = cn.to_indices();
            const int m = static_cast<int>(candidates.size());
            if (m > 25) throw SizeCapError("common-neighbor set too large for Hom enumeration");
            std::vector<int> asecond;
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                asecond.clear();
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) asecond.push_back(candidates[i]);
                emit(aprime, asecond);
            }
        }
        for (int v = next; v < n; ++v) {
            BitVec cn2 = cn;
            cn2.and_with(g.neighbors(v));
            if (!cn2.any()) continue;
            aprime.push_back(v);
            self(self, v + 1, cn2);
            aprime.pop_back();
        }
    };
    BitVec full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    rec(rec, 0, full);
}

std::string hom_label(const Graph& g, const std::vector<int>& ap, const std::vector<int>& as) {
    std::string out;
    for (int v : ap) {
        if (!out.empty()) out += '|';
        out += "+" + g.label(v);
    }
    for (int v : as) {
        if (!out.empty()) out += '|';
        out += "-" + g.label(v);
    }
    return out;
}

}  // namespace

std::size_t hom_poset_size(const Graph& g) {
    std::size_t count = 0;
    enumerate_hom(g, [&](const std::vector<int>&, const std::vector<int>&) { ++count; });
    return count;
}

Poset hom_poset(const Graph& g) {
    // Elements keyed by the signed vertex set (+v -> 2v, -v -> 2v+1).
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels;
    enumerate_hom(g, [&](const std::vector<int>& ap, const std::vector<int>& as) {
        std::vector<int> key;
        key.reserve(ap.size() + as.size());
        for (int v : ap) key.push_back(2 * v);
        for (int v : as) key.push_back(2 * v + 1);
        std::sort(key.begin(), key.end());
        index[key] = static_cast<int>(elems.size());
        elems.push_back(key);
        labels.push_back(hom_label(g, ap, as));
    });
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[a][b] = std::includes(elems[b].begin(), elems[b].end(), elems[a].begin(),
                                      elems[a].end());
    std::vector<int> inv(n);
    for (int a = 0; a < n; ++a) {
        std::vector<int> swapped;
        swapped.reserve(elems[a].size());
        for (int code : elems[a]) swapped.push_back(code ^ 1);
        std::sort(swapped.begin(), swapped.end());
        inv[a] = index.at(swapped);
    }
    return Poset(std::move(labels), std::move(leq), std::move(inv));
}

Poset face_poset(const Z2Complex& k) {
    std::vector<std::vector<int>> elems;
    std::vector<std::string> labels;
    std::map<std::vector<int>, int> index;
    for (int d = 0; d < k.num_dims(); ++d)
        for (const auto& s : k.simplices(d)) {
            index[s] = static_cast<int>(elems.size());
            elems.push_back(s);
            std::string lbl = "(";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) lbl += '|';
                lbl += k.label(s[i]);
            }
            lbl += ')';
            labels.push_back(lbl);
        }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[a][b] = std::includes(elems[b].begin(), elems[b].end(), elems[a].begin(),
                                      elems[a].end());
    std::vector<int> inv;
    if (k.has_involution()) {
        inv.resize(n);
        for (int a = 0; a < n; ++a) inv[a] = index.at(k.involution_image(elems[a]));
    }
    return Poset(std::move(labels), std::move(leq), std::move(inv));
}

Z2Complex order_complex(const Poset& p) {
    const int n = p.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(p.label(i));
    // Facets are the maximal chains: walk the cover digraph from minimal
    // elements down to maximal ones.
    std::vector<std::vector<int>> above(n);
    for (auto [a, b] : p.covers()) above[a].push_back(b);
    std::vector<char> is_minimal(n, 1), is_maximal(n, 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b)) {
                is_minimal[b] = 0;
                is_maximal[a] = 0;
            }
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    auto rec = [&](auto&& self, int at) -> void {
        chain.push_back(at);
        if (is_maximal[at])
            facets.push_back(chain);
        else
            for (int b : above[at]) self(self, b);
        chain.pop_back();
    };
    for (int a = 0; a < n; ++a)
        if (is_minimal[a]) rec(rec, a);
    std::vector<int> inv;
    if (p.has_involution()) {
        inv.resize(n);
        for (int a = 0; a < n; ++a) inv[a] = p.involution(a);
    }
    return Z2Complex(std::move(labels), std::move(facets), std::move(inv));
}

}  // namespace chromatopo
