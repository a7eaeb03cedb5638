#include "leibhom/vf.hpp"

namespace leibhom {

void LinearVectorField::add_linear(int i, int j, const Rat& c) {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfBlock("axis out of range");
    auto key = std::make_pair(i, j);
    Rat& slot = linear[key];
    slot += c;
    if (is_zero(slot)) linear.erase(key);
}

void LinearVectorField::add_constant(int i, const Rat& c) {
    if (i < 1 || i > n) throw IndexOutOfBlock("axis out of range");
    Rat& slot = constant[i];
    slot += c;
    if (is_zero(slot)) constant.erase(i);
}

LinearVectorField make_alpha(int p, int q, int i, int j) {
    int n = p + q;
    bool p_block = 1 <= i && i < j && j <= p;
    bool q_block = p + 1 <= i && i < j && j <= n;
    if (!p_block && !q_block) throw IndexOutOfBlock("alpha indices must satisfy i<j within one block");
    LinearVectorField f;
    f.n = n;
    f.add_linear(j, i, 1);  // x_i d_j
    f.add_linear(i, j, -1); // -x_j d_i
    return f;
}

LinearVectorField make_beta(int p, int q, int i, int j) {
    int n = p + q;
    if (!(1 <= i && i <= p && p + 1 <= j && j <= n))
        throw IndexOutOfBlock("beta indices must straddle the blocks");
    LinearVectorField f;
    f.n = n;
    f.add_linear(j, i, 1);
    f.add_linear(i, j, 1);
    return f;
}

LinearVectorField make_partial(int n, int i) {
    if (i < 1 || i > n) throw IndexOutOfBlock("partial index out of range");
    LinearVectorField f;
    f.n = n;
    f.add_constant(i, 1);
    return f;
}

LinearVectorField add(const LinearVectorField& a, const LinearVectorField& b) {
    if (a.n != b.n) throw DimensionMismatch();
    LinearVectorField f = a;
    for (auto& [k, v] : b.linear) f.add_linear(k.first, k.second, v);
    for (auto& [k, v] : b.constant) f.add_constant(k, v);
    return f;
}

LinearVectorField scale(const LinearVectorField& a, const Rat& c) {
    LinearVectorField f;
    f.n = a.n;
    if (is_zero(c)) return f;
    for (auto& [k, v] : a.linear) f.linear[k] = c * v;
    for (auto& [k, v] : a.constant) f.constant[k] = c * v;
    return f;
}

// With a = (A, c) and b = (B, d) acting as first-order operators,
// [a,b] has linear part BA - AB and constant part Bc - Ad.
LinearVectorField commutator(const LinearVectorField& a, const LinearVectorField& b) {
    if (a.n != b.n) throw DimensionMismatch();
    LinearVectorField f;
    f.n = a.n;
    for (auto& [kb, vb] : b.linear) {     // B[k][l] * A[l][j]
        for (auto& [ka, va] : a.linear) {
            if (kb.second == ka.first) f.add_linear(kb.first, ka.second, vb * va);
        }
    }
    for (auto& [ka, va] : a.linear) {     // -A[k][l] * B[l][j]
        for (auto& [kb, vb] : b.linear) {
            if (ka.second == kb.first) f.add_linear(ka.first, kb.second, -va * vb);
        }
    }
    for (auto& [kb, vb] : b.linear) {     // B c
        auto it = a.constant.find(kb.second);
        if (it != a.constant.end()) f.add_constant(kb.first, vb * it->second);
    }
    for (auto& [ka, va] : a.linear) {     // -A d
        auto it = b.constant.find(ka.second);
        if (it != b.constant.end()) f.add_constant(ka.first, -va * it->second);
    }
    return f;
}

} // namespace leibhom
