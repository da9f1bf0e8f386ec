#include "seglab/ops.hpp"

#include <algorithm>

namespace seglab {

bool is_monotone(const Monotone& f, int target_top) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] > target_top) return false;
        if (i > 0 && f[i - 1] > f[i]) return false;
    }
    return !f.empty();
}

Monotone compose(const Monotone& g, const Monotone& f) {
    Monotone out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= g.size())
            throw error("compose: map values out of range");
        out[i] = g[static_cast<std::size_t>(f[i])];
    }
    return out;
}

Monotone identity_map(int n) {
    Monotone f(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) f[static_cast<std::size_t>(i)] = i;
    return f;
}

Monotone coface(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw error("coface: index out of range");
    Monotone f;
    f.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v <= n; ++v)
        if (v != i) f.push_back(v);
    return f;
}

Monotone codegeneracy(int n, int i) {
    if (i < 0 || i > n) throw error("codegeneracy: index out of range");
    Monotone f;
    f.reserve(static_cast<std::size_t>(n) + 2);
    for (int v = 0; v <= n; ++v) {
        f.push_back(v);
        if (v == i) f.push_back(v);
    }
    return f;
}

std::vector<Monotone> all_monotone(int a, int b) {
    std::vector<Monotone> out;
    Monotone cur(static_cast<std::size_t>(a) + 1, 0);
    while (true) {
        out.push_back(cur);
        int pos = a;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == b) --pos;
        if (pos < 0) break;
        int v = cur[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i <= a; ++i) cur[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

bool is_injective(const Monotone& f) {
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i - 1] == f[i]) return false;
    return true;
}

bool is_surjective(const Monotone& f, int target_top) {
    int expect = 0;
    for (int v : f) {
        if (v == expect) ++expect;
        else if (v > expect) return false;
    }
    return expect == target_top + 1;
}

std::vector<int> epi_repeats(const Monotone& f) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == f[i + 1]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> mono_missing(const Monotone& f, int target_top) {
    std::vector<bool> hit(static_cast<std::size_t>(target_top) + 1, false);
    for (int v : f) hit[static_cast<std::size_t>(v)] = true;
    std::vector<int> out;
    for (int v = target_top; v >= 0; --v)
        if (!hit[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

} // namespace seglab
