#pragma once

#include <map>
#include <string>

#include "gsod/rational.hpp"

namespace gsod {

// One per-weight dimension entry: an exact count, or the "infinite /
// A0-module" marker with a short structural descriptor.
struct CharEntry {
    bool finite = true;
    int64_t dim = 0;
    std::string descriptor; // e.g. "f.g. A0-module on 2 generators"

    static CharEntry exact(int64_t d) { return CharEntry{true, d, {}}; }
    static CharEntry infinite(std::string desc) { return CharEntry{false, 0, std::move(desc)}; }

    bool operator==(const CharEntry& o) const {
        if (finite != o.finite) return false;
        return !finite || dim == o.dim;
    }
};

// Character of a single object over a weight window.
struct WeightCharacter {
    int64_t lo = 0, hi = -1;
    std::map<int64_t, CharEntry> entries;
};

// Cohomology dimensions per (cohomological degree p, weight i).
struct CohomTable {
    int64_t lo = 0, hi = -1;           // weight window
    int p_lo = 0, p_hi = -1;           // degree range covered
    std::map<std::pair<int, int64_t>, CharEntry> entries;
    std::string engine;                // "torus", "koszul", "direct"
    int stabilization_level = 0;       // koszul engine only

    CharEntry get(int p, int64_t i) const {
        auto it = entries.find({p, i});
        return it == entries.end() ? CharEntry::exact(0) : it->second;
    }
    void set(int p, int64_t i, CharEntry e) {
        if (e.finite && e.dim == 0) return;
        entries[{p, i}] = std::move(e);
        p_lo = std::min(p_lo, p);
        p_hi = std::max(p_hi, p);
    }
    bool all_finite() const {
        for (const auto& [k, v] : entries)
            if (!v.finite) return false;
        return true;
    }
};

// Per-multidegree dimension data over a box (torus engine).
struct BoxTable {
    std::vector<int> box_lo, box_hi;
    std::map<std::pair<int, std::vector<int>>, int64_t> entries; // (p, multidegree) -> dim
};

} // namespace gsod
