#pragma once

#include "leibhom/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace leibhom {

using Index = int64_t;

// Sparse vector over Q: sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<Index, Rat>>;

inline void canonicalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    std::erase_if(out, [](auto& e) { return is_zero(e.second); });
    v = std::move(out);
}

inline SparseVec from_map(const std::map<Index, Rat>& m) {
    SparseVec v;
    v.reserve(m.size());
    for (auto& [i, c] : m)
        if (!is_zero(c)) v.emplace_back(i, c);
    return v;
}

inline void axpy(std::map<Index, Rat>& acc, const Rat& a, const SparseVec& x) {
    if (is_zero(a)) return;
    for (auto& [i, c] : x) {
        Rat& slot = acc[i];
        slot += a * c;
        if (is_zero(slot)) acc.erase(i);
    }
}

inline bool sv_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

// a == s*b for the given scalar s
inline bool sv_equal_scaled(const SparseVec& a, const SparseVec& b, const Rat& s) {
    if (a.size() != b.size()) return false;
    for (size_t t = 0; t < a.size(); ++t)
        if (a[t].first != b[t].first || a[t].second != s * b[t].second) return false;
    return true;
}

// If a and b span the same line, returns true and sets s with a == s*b.
inline bool sv_proportional(const SparseVec& a, const SparseVec& b, Rat& s) {
    if (a.empty() && b.empty()) { s = 1; return true; }
    if (a.empty() || b.empty() || a.size() != b.size()) return false;
    if (a.front().first != b.front().first) return false;
    s = a.front().second / b.front().second;
    return sv_equal_scaled(a, b, s);
}

enum class FieldTag { Rationals, PrimeField };

struct Triplet {
    Index r, c;
    Rat v;
};

// Coordinate-format sparse matrix over Q (the prime-field side reduces on the fly).
struct SparseMatrix {
    Index rows = 0, cols = 0;
    std::vector<Triplet> entries; // unique (r,c), no zeros
    FieldTag field = FieldTag::Rationals;
    uint32_t prime = 0; // set when field == PrimeField

    void add(Index r, Index c, Rat v) {
        if (is_zero(v)) return;
        entries.push_back({r, c, std::move(v)});
    }
    void finalize() {
        std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
            return a.r != b.r ? a.r < b.r : a.c < b.c;
        });
        std::vector<Triplet> out;
        out.reserve(entries.size());
        for (auto& t : entries) {
            if (!out.empty() && out.back().r == t.r && out.back().c == t.c)
                out.back().v += t.v;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Triplet& t) { return is_zero(t.v); });
        entries = std::move(out);
    }
    std::vector<SparseVec> row_list() const {
        std::vector<SparseVec> rl(rows);
        for (auto& t : entries) rl[t.r].emplace_back(t.c, t.v);
        return rl;
    }
    // y = A*x
    SparseVec apply(const SparseVec& x) const {
        std::map<Index, Rat> col;
        for (auto& [i, c] : x) col[i] = c;
        std::map<Index, Rat> acc;
        for (auto& t : entries) {
            auto it = col.find(t.c);
            if (it == col.end()) continue;
            Rat& slot = acc[t.r];
            slot += t.v * it->second;
            if (is_zero(slot)) acc.erase(t.r);
        }
        return from_map(acc);
    }
};

void write_matrix_market(const SparseMatrix& m, std::ostream& os);
SparseMatrix read_matrix_market(std::istream& is);

} // namespace leibhom
