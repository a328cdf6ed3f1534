#include "growthlab/scenario_io.hpp"

#include <cmath>
#include <json.hpp>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

using json = nlohmann::ordered_json;

std::string join_path(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         std::initializer_list<const char*> known) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) { ok = true; break; }
        if (!ok) throw ParseError(join_path(prefix, item.key()), "unknown key");
    }
}

double get_number(const json& obj, const std::string& path) {
    if (!obj.is_number()) throw ParseError(path, "expected a number");
    return obj.get<double>();
}

bool get_bool(const json& obj, const std::string& path) {
    if (!obj.is_boolean()) throw ParseError(path, "expected true or false");
    return obj.get<bool>();
}

std::string get_string(const json& obj, const std::string& path) {
    if (!obj.is_string()) throw ParseError(path, "expected a string");
    return obj.get<std::string>();
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

void apply_growth(const json& obj, GrowthParams& growth, std::optional<double>& gamma) {
    if (!obj.is_object()) throw ParseError("growth", "expected an object");
    reject_unknown_keys(obj, "growth", {"alpha", "lambda", "beta", "gamma"});
    if (const json* v = find(obj, "alpha")) growth.alpha = get_number(*v, "growth.alpha");
    if (const json* v = find(obj, "lambda")) growth.lambda = get_number(*v, "growth.lambda");
    if (const json* v = find(obj, "beta")) growth.beta = get_number(*v, "growth.beta");
    if (const json* v = find(obj, "gamma")) {
        double g = get_number(*v, "growth.gamma");
        if (!(std::isfinite(g) && g > 0.0 && g <= 1.0))
            throw ParseError("growth.gamma", "must be in (0, 1]");
        gamma = g;
    }
}

void apply_drivers(const json& obj, DriverRates& rates) {
    if (!obj.is_object()) throw ParseError("drivers", "expected an object");
    reject_unknown_keys(obj, "drivers",
                        {"training", "algorithmic", "post_training", "inference_compute",
                         "inference_efficiency"});
    if (const json* v = find(obj, "training"))
        rates.training_compute = get_number(*v, "drivers.training");
    if (const json* v = find(obj, "algorithmic"))
        rates.algorithmic_efficiency = get_number(*v, "drivers.algorithmic");
    if (const json* v = find(obj, "post_training"))
        rates.post_training = get_number(*v, "drivers.post_training");
    if (const json* v = find(obj, "inference_compute"))
        rates.inference_compute = get_number(*v, "drivers.inference_compute");
    if (const json* v = find(obj, "inference_efficiency"))
        rates.inference_efficiency = get_number(*v, "drivers.inference_efficiency");
}

bool apply_caps(const json& obj, HeadroomCaps& caps) {
    if (!obj.is_object()) throw ParseError("caps", "expected an object");
    reject_unknown_keys(obj, "caps",
                        {"training_total", "algorithmic_total", "inference_total"});
    bool algorithmic_explicit = false;
    if (const json* v = find(obj, "training_total"))
        caps.training_total = get_number(*v, "caps.training_total");
    if (const json* v = find(obj, "algorithmic_total")) {
        caps.algorithmic_total = get_number(*v, "caps.algorithmic_total");
        algorithmic_explicit = true;
    }
    if (const json* v = find(obj, "inference_total"))
        caps.inference_total = get_number(*v, "caps.inference_total");
    return algorithmic_explicit;
}

void check_multiplier_range(double value, const char* path) {
    if (!(std::isfinite(value) && value >= 1.0)) throw ParseError(path, "must be >= 1");
}

void validate_document(const ScenarioDocument& doc) {
    doc.growth.validate();
    check_multiplier_range(doc.spec.rates.training_compute, "drivers.training");
    check_multiplier_range(doc.spec.rates.algorithmic_efficiency, "drivers.algorithmic");
    check_multiplier_range(doc.spec.rates.post_training, "drivers.post_training");
    check_multiplier_range(doc.spec.rates.inference_compute, "drivers.inference_compute");
    check_multiplier_range(doc.spec.rates.inference_efficiency,
                           "drivers.inference_efficiency");
    if (!(doc.spec.caps.training_total >= 1.0 && !std::isnan(doc.spec.caps.training_total)))
        throw ParseError("caps.training_total", "must be >= 1");
    if (!(doc.spec.caps.algorithmic_total >= 1.0 &&
          !std::isnan(doc.spec.caps.algorithmic_total)))
        throw ParseError("caps.algorithmic_total", "must be >= 1");
    if (!(doc.spec.caps.inference_total >= 1.0 && !std::isnan(doc.spec.caps.inference_total)))
        throw ParseError("caps.inference_total", "must be >= 1");
    if (!(std::isfinite(doc.spec.horizon_years) && doc.spec.horizon_years > 0.0))
        throw ParseError("horizon_years", "must be positive");
    if (!(std::isfinite(doc.spec.human_growth) && doc.spec.human_growth >= 0.0))
        throw ParseError("human_growth", "must be nonnegative");
}

} // namespace

bool ScenarioDocument::operator==(const ScenarioDocument& other) const {
    return spec.name == other.spec.name &&
           spec.horizon_years == other.spec.horizon_years &&
           spec.rates.training_compute == other.spec.rates.training_compute &&
           spec.rates.algorithmic_efficiency == other.spec.rates.algorithmic_efficiency &&
           spec.rates.post_training == other.spec.rates.post_training &&
           spec.rates.inference_compute == other.spec.rates.inference_compute &&
           spec.rates.inference_efficiency == other.spec.rates.inference_efficiency &&
           spec.caps.training_total == other.spec.caps.training_total &&
           spec.caps.algorithmic_total == other.spec.caps.algorithmic_total &&
           spec.caps.inference_total == other.spec.caps.inference_total &&
           spec.human_growth == other.spec.human_growth &&
           spec.feedback_mode == other.spec.feedback_mode &&
           spec.parity_at_start == other.spec.parity_at_start &&
           growth.alpha == other.growth.alpha && growth.lambda == other.growth.lambda &&
           growth.beta == other.growth.beta && gamma == other.gamma;
}

ScenarioDocument parse_scenario(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("", "scenario file must be a JSON object");
    reject_unknown_keys(root, "",
                        {"name", "horizon_years", "growth", "drivers", "caps",
                         "human_growth", "feedback_mode", "parity_at_start"});

    ScenarioDocument doc;
    if (const json* v = find(root, "name")) {
        doc.spec.name = get_string(*v, "name");
        if (auto preset = find_preset(doc.spec.name)) doc.spec = *preset;
    }

    bool feedback_explicit = false;
    bool algorithmic_cap_explicit = false;
    if (const json* v = find(root, "feedback_mode")) {
        const std::string mode = get_string(*v, "feedback_mode");
        if (mode == "none")
            doc.spec.feedback_mode = FeedbackMode::none;
        else if (mode == "software")
            doc.spec.feedback_mode = FeedbackMode::software;
        else
            throw ParseError("feedback_mode", "must be \"none\" or \"software\"");
        feedback_explicit = true;
    }
    if (const json* v = find(root, "horizon_years"))
        doc.spec.horizon_years = get_number(*v, "horizon_years");
    if (const json* v = find(root, "growth")) apply_growth(*v, doc.growth, doc.gamma);
    if (const json* v = find(root, "drivers")) apply_drivers(*v, doc.spec.rates);
    if (const json* v = find(root, "caps"))
        algorithmic_cap_explicit = apply_caps(*v, doc.spec.caps);
    if (const json* v = find(root, "human_growth"))
        doc.spec.human_growth = get_number(*v, "human_growth");
    if (const json* v = find(root, "parity_at_start"))
        doc.spec.parity_at_start = get_bool(*v, "parity_at_start");

    // An explicit feedback mode moves the algorithmic cap unless the file
    // pins that cap itself.
    if (feedback_explicit && !algorithmic_cap_explicit)
        doc.spec.caps.algorithmic_total = doc.spec.feedback_mode == FeedbackMode::software
                                              ? kSoftwareFeedbackAlgorithmicCap
                                              : HeadroomCaps{}.algorithmic_total;

    validate_document(doc);
    return doc;
}

std::string serialize_scenario(const ScenarioDocument& doc) {
    json root;
    root["name"] = doc.spec.name;
    root["horizon_years"] = doc.spec.horizon_years;
    json growth;
    growth["alpha"] = doc.growth.alpha;
    growth["lambda"] = doc.growth.lambda;
    growth["beta"] = doc.growth.beta;
    if (doc.gamma) growth["gamma"] = *doc.gamma;
    root["growth"] = growth;
    json drivers;
    drivers["training"] = doc.spec.rates.training_compute;
    drivers["algorithmic"] = doc.spec.rates.algorithmic_efficiency;
    drivers["post_training"] = doc.spec.rates.post_training;
    drivers["inference_compute"] = doc.spec.rates.inference_compute;
    drivers["inference_efficiency"] = doc.spec.rates.inference_efficiency;
    root["drivers"] = drivers;
    json caps;
    caps["training_total"] = doc.spec.caps.training_total;
    caps["algorithmic_total"] = doc.spec.caps.algorithmic_total;
    caps["inference_total"] = doc.spec.caps.inference_total;
    root["caps"] = caps;
    root["human_growth"] = doc.spec.human_growth;
    root["feedback_mode"] =
        doc.spec.feedback_mode == FeedbackMode::software ? "software" : "none";
    root["parity_at_start"] = doc.spec.parity_at_start;
    return root.dump(2) + "\n";
}

void set_by_path(ScenarioDocument& doc, const std::string& path, double value) {
    if (!std::isfinite(value)) throw ParseError(path, "value must be finite");
    double* field = nullptr;
    if (path == "growth.alpha") field = &doc.growth.alpha;
    else if (path == "growth.lambda") field = &doc.growth.lambda;
    else if (path == "growth.beta") field = &doc.growth.beta;
    else if (path == "growth.gamma") { doc.gamma = value; return; }
    else if (path == "drivers.training") field = &doc.spec.rates.training_compute;
    else if (path == "drivers.algorithmic") field = &doc.spec.rates.algorithmic_efficiency;
    else if (path == "drivers.post_training") field = &doc.spec.rates.post_training;
    else if (path == "drivers.inference_compute") field = &doc.spec.rates.inference_compute;
    else if (path == "drivers.inference_efficiency")
        field = &doc.spec.rates.inference_efficiency;
    else if (path == "caps.training_total") field = &doc.spec.caps.training_total;
    else if (path == "caps.algorithmic_total") field = &doc.spec.caps.algorithmic_total;
    else if (path == "caps.inference_total") field = &doc.spec.caps.inference_total;
    else if (path == "horizon_years") field = &doc.spec.horizon_years;
    else if (path == "human_growth") field = &doc.spec.human_growth;
    else throw ParseError(path, "unknown parameter path");
    *field = value;
}

std::size_t SweepGrid::combinations() const {
    std::size_t n = 1;
    for (const auto& axis : axes) n *= axis.values.size();
    return n;
}

void SweepGrid::validate() const {
    if (axes.empty()) throw ParseError("grid", "must name at least one parameter");
    if (axes.size() > 3) throw ParseError("grid", "at most 3 parameters may be swept");
    for (const auto& axis : axes) {
        if (axis.values.empty())
            throw ParseError("grid." + axis.path, "must list at least one value");
    }
    if (combinations() > kMaxSweepCombinations)
        throw ParseError("grid", "combination count exceeds the sweep limit");
}

SweepFile parse_sweep(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("", "sweep file must be a JSON object");
    reject_unknown_keys(root, "", {"scenario", "grid"});

    SweepFile out;
    if (const json* v = find(root, "scenario"))
        out.base = parse_scenario(v->dump());
    else
        throw ParseError("scenario", "missing scenario object");

    const json* grid = find(root, "grid");
    if (!grid || !grid->is_array()) throw ParseError("grid", "expected an array of axes");
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const json& axis_json = (*grid)[i];
        const std::string prefix = "grid[" + std::to_string(i) + "]";
        if (!axis_json.is_object()) throw ParseError(prefix, "expected an object");
        reject_unknown_keys(axis_json, prefix, {"path", "values", "min", "max", "count"});
        SweepAxis axis;
        const json* p = find(axis_json, "path");
        if (!p) throw ParseError(prefix + ".path", "missing parameter path");
        axis.path = get_string(*p, prefix + ".path");
        if (const json* vals = find(axis_json, "values")) {
            if (!vals->is_array()) throw ParseError(prefix + ".values", "expected an array");
            for (const auto& v : *vals)
                axis.values.push_back(get_number(v, prefix + ".values"));
        } else {
            const json* mn = find(axis_json, "min");
            const json* mx = find(axis_json, "max");
            const json* ct = find(axis_json, "count");
            if (!mn || !mx || !ct)
                throw ParseError(prefix, "expected \"values\" or \"min\"/\"max\"/\"count\"");
            const double lo = get_number(*mn, prefix + ".min");
            const double hi = get_number(*mx, prefix + ".max");
            const double count_raw = get_number(*ct, prefix + ".count");
            const auto count = static_cast<std::size_t>(count_raw);
            if (count_raw != static_cast<double>(count) || count < 2)
                throw ParseError(prefix + ".count", "must be an integer >= 2");
            if (!(hi >= lo)) throw ParseError(prefix + ".max", "must be >= min");
            for (std::size_t k = 0; k < count; ++k)
                axis.values.push_back(lo + (hi - lo) * static_cast<double>(k) /
                                               static_cast<double>(count - 1));
        }
        // Unknown paths fail before any run starts.
        ScenarioDocument probe = out.base;
        set_by_path(probe, axis.path, axis.values.front());
        out.grid.axes.push_back(std::move(axis));
    }
    out.grid.validate();
    return out;
}

} // namespace growthlab
