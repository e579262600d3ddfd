#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "chtri/siegel.hpp"

// Flat JSON record for certificates; every margin, index and class is
// serialized.  NaN margins (fields that do not apply to the model) become
// null.

namespace chtri {

inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["verdict"] = to_string(c.verdict);
    auto put = [&j](const char* key, double v) {
        if (std::isnan(v))
            j[key] = nullptr;
        else
            j[key] = v;
    };
    put("separation_margin", c.separation_margin);
    put("disjointness_margin", c.disjointness_margin);
    j["indices_checked"] = c.indices_checked;

    nlohmann::json classes = nlohmann::json::object();
    nlohmann::json margins = nlohmann::json::object();
    nlohmann::json traces = nlohmann::json::object();
    for (const WordCheck& w : c.words) {
        std::string key = std::to_string(w.n);
        classes[key] = to_string(w.cls.type);
        margins[key] = w.margin;
        traces[key] = w.trace;
    }
    j["word_classes"] = classes;
    j["word_margins"] = margins;
    j["word_traces"] = traces;

    if (!c.region_indices.empty()) {
        j["region_indices"] = c.region_indices;
        j["region_margins"] = c.region_margins;
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline nlohmann::json certificate_json_ultra(const TriangleParams& p, const Certificate& c) {
    nlohmann::json j = to_json(c);
    j["model"] = "ultra";
    j["r1"] = p.r1;
    j["r2"] = p.r2;
    j["r3"] = p.r3;
    j["alpha"] = p.alpha;
    j["cos_alpha"] = p.cos_alpha();
    return j;
}

inline nlohmann::json certificate_json_zero(const ZeroParams& z, const Certificate& c) {
    nlohmann::json j = to_json(c);
    j["model"] = "zero";
    j["r1"] = z.r1;
    j["r2"] = z.r2;
    j["alpha"] = z.alpha;
    j["cos_alpha"] = z.cos_alpha();
    j["theta"] = z.theta;
    return j;
}

}  // namespace chtri
