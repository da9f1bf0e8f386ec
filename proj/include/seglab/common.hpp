#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seglab {

using Idx = std::uint32_t;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

enum class Ternary { True, False, Unknown };

inline const char* to_string(Ternary t) {
    switch (t) {
        case Ternary::True: return "true";
        case Ternary::False: return "false";
        default: return "unknown";
    }
}

// Three-valued check result. True/False always carry a witness string,
// Unknown carries the reason the check could not decide.
struct Verdict {
    Ternary status = Ternary::Unknown;
    std::string witness;

    static Verdict yes(std::string w) { return {Ternary::True, std::move(w)}; }
    static Verdict no(std::string w) { return {Ternary::False, std::move(w)}; }
    static Verdict unknown(std::string reason) { return {Ternary::Unknown, std::move(reason)}; }

    bool is_true() const { return status == Ternary::True; }
    bool is_false() const { return status == Ternary::False; }
    bool is_unknown() const { return status == Ternary::Unknown; }
};

// Conjunction with Unknown propagation: False dominates, then Unknown.
inline Verdict verdict_all(const std::vector<Verdict>& vs, const std::string& ok_witness) {
    for (const auto& v : vs)
        if (v.is_false()) return v;
    for (const auto& v : vs)
        if (v.is_unknown()) return v;
    return Verdict::yes(ok_witness);
}

// Shared node-budget counter for backtracking searches.
struct Budget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;
    bool spend(std::uint64_t n = 1) {
        used += n;
        return used <= limit;
    }
    bool exhausted() const { return used > limit; }
};

struct IdxVecHash {
    std::size_t operator()(const std::vector<Idx>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Idx x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct RunConfig {
    int cat_trunc = 3;
    int space_trunc = 3;
    std::uint64_t lifting_nodes = 1'000'000;
    std::uint64_t mapping_nodes = 1'000'000;
    std::uint64_t congruence_pairs = 100'000;
    int factorization_stages = 4;
    int max_m = 3;
    int max_n = 3;
    bool machine_output = false;
};

} // namespace seglab
