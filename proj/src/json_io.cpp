#include "wreath/json_io.hpp"

#include <algorithm>

#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"

namespace wreath {

using nlohmann::json;

json wreath_to_json(const Wreath& w) {
    json blocks = json::array();
    for (SubsetMask m : w.blocks) blocks.push_back(elements_from_mask(m));
    return blocks;
}

Wreath wreath_from_json(const WreathParams& params, const json& j,
                        const Caps& caps) {
    if (!j.is_array() || j.empty())
        throw Error("a wreath must be a non-empty array of blocks");
    std::vector<SubsetMask> blocks;
    for (const json& b : j) {
        if (!b.is_array()) throw Error("a block must be an array of elements");
        std::vector<int> elems;
        for (const json& e : b) {
            if (!e.is_number_integer())
                throw Error("block elements must be integers");
            const int v = e.get<int>();
            if (v < 1 || v > params.n)
                throw Error("block element out of ground-set range");
            elems.push_back(v);
        }
        const SubsetMask m = mask_from_elements(elems);
        if (__builtin_popcount(m) != params.k ||
            static_cast<int>(elems.size()) != params.k)
            throw Error("block is not a k-element set");
        blocks.push_back(m);
    }
    if (static_cast<int>(blocks.size()) != params.wreath_len)
        throw Error("wreath must have exactly n/gcd(n,k) blocks");
    Wreath w = canonicalize(std::move(blocks));
    for (std::size_t i = 1; i < w.blocks.size(); ++i)
        if (w.blocks[i] == w.blocks[i - 1])
            throw Error("wreath has a repeated block");
    // Genuine-wreath check: it must arise from some circular arrangement,
    // i.e. appear among the wreaths through its first block.
    const auto through = wreaths_containing(params, w.blocks.front(), caps);
    if (wreath_index(through, w) < 0)
        throw Error("block set is not an (n,k)-wreath");
    return w;
}

json decomposition_to_json(const Decomposition& d) {
    json arr = json::array();
    for (const Wreath& w : d.wreaths) arr.push_back(wreath_to_json(w));
    return arr;
}

Decomposition decomposition_from_json(const WreathParams& params,
                                      const json& j, const Caps& caps) {
    if (!j.is_array()) throw Error("a decomposition must be an array");
    Decomposition d;
    for (const json& wj : j)
        d.wreaths.push_back(wreath_from_json(params, wj, caps));
    std::sort(d.wreaths.begin(), d.wreaths.end());
    return d;
}

json kernel_vector_to_json(const SparseKernelVector& v) {
    json arr = json::array();
    for (const auto& [w, c] : v.terms)
        arr.push_back({{"wreath", wreath_to_json(w)}, {"coeff", rat_str(c)}});
    return arr;
}

json scan_report_to_json(const ScanReport& r) {
    json entries = json::array();
    for (const ScanEntry& e : r.entries) {
        json values = json::array();
        for (const Int& v : e.values) values.push_back(int_str(v));
        json collisions = json::array();
        for (auto [a, b] : e.collisions) collisions.push_back({a, b});
        entries.push_back({{"n", e.n},
                           {"k", e.k},
                           {"values", values},
                           {"all_distinct", e.all_distinct},
                           {"collisions", collisions}});
    }
    return json{{"entries", entries}};
}

ScanReport scan_report_from_json(const json& j) {
    ScanReport r;
    for (const json& ej : j.at("entries")) {
        ScanEntry e;
        e.n = ej.at("n").get<int>();
        e.k = ej.at("k").get<int>();
        for (const json& v : ej.at("values"))
            e.values.emplace_back(v.get<std::string>());
        e.all_distinct = ej.at("all_distinct").get<bool>();
        for (const json& c : ej.at("collisions"))
            e.collisions.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
        r.entries.push_back(std::move(e));
    }
    return r;
}

json spectrum_to_json(const Spectrum& s) {
    json levels = json::array();
    for (const LevelEig& le : s.levels)
        levels.push_back({{"l", le.l},
                          {"value", int_str(le.value)},
                          {"mult", le.mult.get_si()}});
    return json{{"n", s.n},
                {"k", s.k},
                {"g", s.g},
                {"lambda1", int_str(s.lambda1)},
                {"levels", levels},
                {"zero_mult", int_str(s.zero_multiplicity)},
                {"wreath_count", int_str(s.wreath_count)}};
}

}  // namespace wreath
