#pragma once

#include "seglab/common.hpp"

namespace seglab {

// A monotone map [a] -> [b] stored as its value list (length a+1, weakly
// increasing, values in 0..b).
using Monotone = std::vector<int>;

bool is_monotone(const Monotone& f, int target_top);

// g after f: (g . f)(i) = g(f(i)); f: [a]->[b], g: [b]->[c].
Monotone compose(const Monotone& g, const Monotone& f);

Monotone identity_map(int n);
Monotone coface(int n, int i);       // [n-1] -> [n], skips i
Monotone codegeneracy(int n, int i); // [n+1] -> [n], repeats i

// All monotone maps [a] -> [b] in lexicographic order.
std::vector<Monotone> all_monotone(int a, int b);

bool is_injective(const Monotone& f);
bool is_surjective(const Monotone& f, int target_top);

// Positions the epi part repeats (i with f(i) = f(i+1)), ascending.
std::vector<int> epi_repeats(const Monotone& f);
// Values in 0..b missing from the image, descending.
std::vector<int> mono_missing(const Monotone& f, int target_top);

} // namespace seglab
