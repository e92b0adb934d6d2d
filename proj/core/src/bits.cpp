#include "chromatopo/bits.hpp"

namespace chromatopo {

namespace {

// Reduce `row` against the pivot basis; insert it as a new pivot if it
// survives. `pivot_of[c]` holds the basis row with leading column c.
bool absorb(std::vector<BitVec>& basis, std::vector<int>& pivot_of, BitVec row) {
    for (;;) {
        int lead = row.first_set();
        if (lead < 0) return false;
        if (pivot_of[lead] < 0) {
            pivot_of[lead] = static_cast<int>(basis.size());
            basis.push_back(std::move(row));
            return true;
        }
        row.xor_with(basis[pivot_of[lead]]);
    }
}

}  // namespace

int gf2_rank(std::vector<BitVec> rows) {
    if (rows.empty()) return 0;
    std::vector<BitVec> basis;
    std::vector<int> pivot_of(rows[0].size(), -1);
    int rank = 0;
    for (auto& r : rows)
        if (absorb(basis, pivot_of, std::move(r))) ++rank;
    return rank;
}

bool gf2_in_span(std::vector<BitVec> rows, BitVec target) {
    if (target.none()) return true;
    if (rows.empty()) return false;
    std::vector<BitVec> basis;
    std::vector<int> pivot_of(rows[0].size(), -1);
    for (auto& r : rows) absorb(basis, pivot_of, std::move(r));
    for (;;) {
        int lead = target.first_set();
        if (lead < 0) return true;
        if (pivot_of[lead] < 0) return false;
        target.xor_with(basis[pivot_of[lead]]);
    }
}

}  // namespace chromatopo
