#pragma once

#include <json.hpp>

#include "ekr/brute.hpp"
#include "ekr/certify.hpp"
#include "ekr/schemes.hpp"
#include "ekr/weights.hpp"

namespace ekr {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson partition_json(const Partition& p) {
    return OrderedJson(p.parts());
}

inline OrderedJson scheme_json(const WeightScheme& s) {
    OrderedJson weights = OrderedJson::array();
    for (const auto& e : s.entries)
        weights.push_back({{"class", e.cycle_type.parts()}, {"omega", rat_to_string(e.omega)}});
    return weights;
}

inline OrderedJson spectrum_json(const Spectrum& sp) {
    OrderedJson j;
    j["n"] = sp.scheme.n;
    j["k"] = sp.scheme.k;
    j["weights"] = scheme_json(sp.scheme);
    OrderedJson eig = OrderedJson::array();
    for (std::size_t i = 0; i < sp.shapes.size(); ++i)
        eig.push_back({{"shape", sp.shapes[i].parts()}, {"value", rat_to_string(sp.values[i])}});
    j["eigenvalues"] = eig;
    return j;
}

inline OrderedJson certificate_json(const Certificate& c) {
    OrderedJson j;
    j["schema"] = kSchemaVersion;
    j["n"] = c.n;
    j["k"] = c.k;
    j["provenance"] = c.provenance;
    j["weights"] = scheme_json(c.scheme);
    j["max_eig"] = rat_to_string(c.max_eig);
    OrderedJson maxat = OrderedJson::array();
    for (const auto& p : c.max_attained_at) maxat.push_back(p.parts());
    j["max_attained_at"] = maxat;
    j["multiplicity"] = c.multiplicity;
    j["min_eig"] = rat_to_string(c.min_eig);
    OrderedJson minat = OrderedJson::array();
    for (const auto& p : c.min_attained_at) minat.push_back(p.parts());
    j["min_attained_at"] = minat;
    if (c.certified) {
        j["sym_bound"] = c.sym_bound.str();
        j["alt_bound"] = c.alt_bound ? OrderedJson(c.alt_bound->str()) : OrderedJson(nullptr);
    } else {
        j["sym_bound"] = nullptr;
        j["alt_bound"] = nullptr;
    }
    j["conclusions"] = {{"sym_density_one", c.sym_density_one},
                        {"alt_density_one", c.alt_density_one}};
    j["tail"] = {{"dim_threshold", c.tail_threshold.str()},
                 {"max_abs", rat_to_string(c.tail_max_abs)},
                 {"within_unit", c.tail_within_unit}};
    j["certified"] = c.certified;
    j["violations"] = c.violations;
    OrderedJson low = OrderedJson::array();
    for (const auto& [shape, value] : c.low_eigenvalues)
        low.push_back({{"shape", shape.parts()}, {"value", rat_to_string(value)}});
    j["low_eigenvalues"] = low;
    j["lp_iterations"] = c.lp_iterations;
    return j;
}

inline OrderedJson witness_json(const CocliqueWitness& w) {
    OrderedJson j;
    j["size"] = w.size;
    j["is_canonical"] = w.is_canonical;
    OrderedJson members = OrderedJson::array();
    for (const auto& m : w.members) {
        std::vector<int> one_line;
        one_line.reserve(m.size());
        for (auto x : m) one_line.push_back(static_cast<int>(x) + 1);
        members.push_back(one_line);
    }
    j["members"] = members;
    return j;
}

}  // namespace ekr
