#include "domivar/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "domivar/scalarization.hpp"

namespace domivar {

InstanceError::InstanceError(std::vector<std::string> issues)
    : std::runtime_error([&issues] {
          std::ostringstream os;
          os << "instance error:";
          for (const auto& s : issues) os << "\n  - " << s;
          return os.str();
      }()),
      issues_(std::move(issues)) {}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json ext_real(double v) {
    if (std::isfinite(v)) return v;
    if (v > 0) return "inf";
    if (v < 0) return "-inf";
    return "nan";
}

namespace {

using json = ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InstanceError({where + ": " + what});
}

double need_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

Vec need_vec(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of numbers");
    Vec v;
    for (const auto& e : j) v.push_back(need_number(e, where));
    return v;
}

std::string expr_text(const json& j, const std::string& where) {
    if (j.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return os.str();
    }
    if (j.is_string()) return j.get<std::string>();
    fail(where, "expected a number or an expression string");
}

GroundSet parse_ground(const json& j) {
    if (!j.is_object() || !j.contains("type")) fail("ground", "expected {type: finite|grid, ...}");
    std::string type = j.at("type").get<std::string>();
    if (type == "finite") {
        std::vector<std::string> labels;
        std::vector<Vec> coords;
        for (const auto& p : j.at("points")) {
            labels.push_back(p.at("label").get<std::string>());
            coords.push_back(need_vec(p.at("coords"), "ground.points.coords"));
        }
        return GroundSet::finite(std::move(labels), std::move(coords));
    }
    if (type == "grid") {
        return GroundSet::grid(need_vec(j.at("lower"), "ground.lower"),
                               need_vec(j.at("upper"), "ground.upper"),
                               need_vec(j.at("step"), "ground.step"));
    }
    fail("ground.type", "must be \"finite\" or \"grid\"");
}

Objective parse_objective(const json& j, const GroundSet& ground) {
    if (!j.is_object()) fail("objective", "expected an object");
    if (j.contains("values")) {
        std::map<std::string, Vec> values;
        for (const auto& [label, payoff] : j.at("values").items()) {
            (void)ground.index_of(label);  // reject unknown labels early
            values.emplace(label, need_vec(payoff, "objective.values." + label));
        }
        return Objective::table(std::move(values));
    }
    auto parse_value = [](const json& arr, const std::string& where) {
        std::vector<Expr> value;
        if (!arr.is_array() || arr.empty()) fail(where, "expected an array of expressions");
        for (const auto& e : arr) value.push_back(Expr::parse(expr_text(e, where), "x"));
        return value;
    };
    std::vector<Objective::Rule> rules;
    if (j.contains("rules")) {
        std::size_t i = 0;
        for (const auto& r : j.at("rules")) {
            std::string where = "objective.rules[" + std::to_string(i++) + "]";
            rules.push_back({Predicate::parse(r.at("when").get<std::string>(), "x"),
                             parse_value(r.at("value"), where + ".value")});
        }
    }
    if (!j.contains("default")) fail("objective", "piecewise objective needs a \"default\"");
    return Objective::piecewise(std::move(rules), parse_value(j.at("default"), "objective.default"));
}

SetTemplate parse_set_template(const json& j, std::size_t dim, const std::string& where) {
    SetTemplate t;
    if (j.contains("generators")) {
        for (const auto& g : j.at("generators")) {
            if (!g.is_array() || g.size() != dim) fail(where, "generator arity != dimension");
            std::vector<Expr> coords;
            for (const auto& c : g) coords.push_back(Expr::parse(expr_text(c, where), "y"));
            t.generator_exprs.push_back(std::move(coords));
        }
        return t;
    }
    if (j.contains("halfspaces")) {
        for (const auto& h : j.at("halfspaces")) {
            Halfspace hs;
            hs.normal = need_vec(h.at("normal"), where + ".normal");
            hs.offset = h.contains("offset") ? need_number(h.at("offset"), where + ".offset") : 0.0;
            t.halfspaces.push_back(std::move(hs));
        }
        return t;
    }
    fail(where, "template needs \"generators\" or \"halfspaces\"");
}

DominationStructure parse_structure(const json& j, std::size_t dim) {
    if (!j.is_object() || !j.contains("default")) {
        throw InstanceError({"structure: expected {rules: [...], default: {...}}"});
    }
    std::vector<DominationRule> rules;
    if (j.contains("rules")) {
        std::size_t i = 0;
        for (const auto& r : j.at("rules")) {
            std::string where = "structure.rules[" + std::to_string(i++) + "]";
            rules.push_back({Predicate::parse(r.at("when").get<std::string>(), "y"),
                             parse_set_template(r, dim, where)});
        }
    }
    return DominationStructure(std::move(rules), parse_set_template(j.at("default"), dim,
                                                                    "structure.default"),
                               dim);
}

QuasimetricSpec parse_quasimetric(const json& j) {
    if (!j.is_object() || !j.contains("type")) fail("quasimetric", "expected {type: ..., ...}");
    std::string type = j.at("type").get<std::string>();
    if (type == "weighted_asymmetric") {
        return {WeightedAsymmetric{need_vec(j.at("alpha"), "quasimetric.alpha"),
                                   need_vec(j.at("beta"), "quasimetric.beta")}};
    }
    if (type == "scaled_metric") {
        double p;
        if (j.at("p").is_string() && j.at("p").get<std::string>() == "inf") {
            p = kPlusInf;
        } else {
            p = need_number(j.at("p"), "quasimetric.p");
        }
        return {ScaledMetric{need_number(j.at("c"), "quasimetric.c"), p}};
    }
    if (type == "table") {
        TableQuasimetric t;
        for (const auto& l : j.at("labels")) t.labels.push_back(l.get<std::string>());
        for (const auto& row : j.at("matrix")) t.matrix.push_back(need_vec(row, "quasimetric.matrix"));
        for (const auto& row : t.matrix) {
            if (row.size() != t.labels.size()) fail("quasimetric.matrix", "not square");
        }
        if (t.matrix.size() != t.labels.size()) fail("quasimetric.matrix", "not square");
        return {std::move(t)};
    }
    fail("quasimetric.type", "must be weighted_asymmetric, scaled_metric or table");
}

json canonical_ground(const json& src, const GroundSet&) {
    json g;
    g["type"] = src.at("type");
    if (src.at("type") == "finite") {
        json pts = json::array();
        for (const auto& p : src.at("points")) {
            pts.push_back({{"label", p.at("label")}, {"coords", p.at("coords")}});
        }
        g["points"] = pts;
    } else {
        g["lower"] = src.at("lower");
        g["upper"] = src.at("upper");
        g["step"] = src.at("step");
    }
    return g;
}

json canonical_document(const json& src) {
    json c;
    c["schema"] = 1;
    c["name"] = src.value("name", "");
    c["dimension"] = src.at("dimension");
    c["ground"] = canonical_ground(src.at("ground"), GroundSet());
    c["objective"] = src.at("objective");
    c["structure"] = src.at("structure");
    c["quasimetric"] = src.at("quasimetric");
    c["k"] = src.at("k");
    c["epsilon"] = src.at("epsilon");
    c["x0"] = src.at("x0");
    c["notes"] = src.value("notes", "");
    json cfg;
    const json src_cfg = src.value("config", json::object());
    cfg["tol_geo"] = src_cfg.value("tol_geo", kTolGeo);
    cfg["tol_lp"] = src_cfg.value("tol_lp", kTolLp);
    cfg["tol_eq"] = src_cfg.value("tol_eq", kTolEq);
    cfg["max_iter"] = src_cfg.value("max_iter", std::size_t{10000});
    c["config"] = cfg;
    return c;
}

}  // namespace

LoadedInstance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InstanceError({std::string("JSON parse error: ") + e.what()});
    }
    try {
        if (!doc.is_object()) fail("document", "expected a JSON object");
        if (doc.value("schema", 1) != 1) fail("schema", "unsupported schema version");
        LoadedInstance out;
        ProblemInstance& inst = out.instance;
        inst.name = doc.value("name", "");
        if (!doc.contains("dimension")) fail("dimension", "missing");
        inst.dimension = doc.at("dimension").get<std::size_t>();
        inst.ground = parse_ground(doc.at("ground"));
        inst.objective = parse_objective(doc.at("objective"), inst.ground);
        inst.structure = parse_structure(doc.at("structure"), inst.dimension);
        inst.quasimetric = parse_quasimetric(doc.at("quasimetric"));
        inst.k = need_vec(doc.at("k"), "k");
        inst.epsilon = need_number(doc.at("epsilon"), "epsilon");
        inst.x0 = inst.ground.index_of(doc.at("x0").get<std::string>());
        inst.notes = doc.value("notes", "");
        if (doc.contains("config")) {
            const json& cfg = doc.at("config");
            inst.tol.tol_geo = cfg.value("tol_geo", kTolGeo);
            inst.tol.tol_lp = cfg.value("tol_lp", kTolLp);
            inst.tol.tol_eq = cfg.value("tol_eq", kTolEq);
            inst.tol.max_iter = cfg.value("max_iter", std::size_t{10000});
        }
        inst.finalize();
        out.canonical = canonical_document(doc);
        out.digest = fnv1a_hex(out.canonical.dump());
        return out;
    } catch (const InstanceError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw InstanceError({std::string("document structure: ") + e.what()});
    } catch (const std::exception& e) {
        throw InstanceError({e.what()});
    }
}

LoadedInstance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InstanceError({"cannot open instance file: " + path});
    std::ostringstream os;
    os << in.rdbuf();
    return parse_instance(os.str());
}

std::string serialize_instance(const LoadedInstance& loaded) { return loaded.canonical.dump(2) + "\n"; }

}  // namespace domivar
