#include "domivar/report.hpp"

#include <sstream>

#include "domivar/scalarization.hpp"

namespace domivar {

namespace {

ordered_json vec_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (double x : v) a.push_back(x);
    return a;
}

ordered_json strings_json(const std::vector<std::string>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

}  // namespace

ordered_json report_header(const LoadedInstance& loaded, const std::string& command) {
    ordered_json r;
    r["schema"] = 1;
    r["command"] = command;
    r["instance"] = loaded.instance.name;
    r["instance_digest"] = loaded.digest;
    ordered_json cfg;
    cfg["tol_geo"] = loaded.instance.tol.tol_geo;
    cfg["tol_lp"] = loaded.instance.tol.tol_lp;
    cfg["tol_eq"] = loaded.instance.tol.tol_eq;
    cfg["max_iter"] = loaded.instance.tol.max_iter;
    r["config"] = cfg;
    ordered_json g;
    g["points"] = loaded.instance.ground.size();
    g["discretized"] = loaded.instance.ground.is_grid();
    r["ground"] = g;
    return r;
}

ordered_json assumption_report_json(const AssumptionReport& rep) {
    ordered_json a;
    a["e1_pass"] = rep.e1_pass;
    a["inf_psi"] = ext_real(rep.inf_psi);
    a["e1_note"] = rep.e1_note;
    ordered_json sc;
    sc["zero_in_theta"] = rep.scalarization.zero_in_theta;
    sc["theta_plus_theta"] = rep.scalarization.theta_plus_theta;
    sc["theta_plus_cone_k"] = rep.scalarization.theta_plus_cone_k;
    sc["pointed_along_k"] = rep.scalarization.pointed_along_k;
    sc["k_vectorially_closed"] = rep.scalarization.k_vectorially_closed;
    sc["all"] = rep.scalarization.all();
    sc["notes"] = strings_json(rep.scalarization.notes);
    a["scalarization"] = sc;
    if (rep.f3) {
        ordered_json f3;
        f3["a_pass"] = rep.f3->a_pass;
        f3["b_pass"] = rep.f3->b_pass;
        f3["b_tested"] = rep.f3->b_tested;
        f3["b_witnesses"] = strings_json(rep.f3->b_witnesses);
        f3["c_pass"] = rep.f3->c_pass;
        f3["c_tested"] = rep.f3->c_tested;
        f3["c_witnesses"] = strings_json(rep.f3->c_witnesses);
        f3["d_pass"] = rep.f3->d_pass;
        f3["d_tested"] = rep.f3->d_tested;
        f3["d_witnesses"] = strings_json(rep.f3->d_witnesses);
        a["f3"] = f3;
    }
    ordered_json h;
    h["forward_hausdorff"] = rep.hausdorff.hausdorff;
    h["witness"] = strings_json(rep.hausdorff.witness);
    a["hausdorff"] = h;
    ordered_json qb;
    qb["applicable"] = rep.quasibounded.applicable;
    qb["quasibounded"] = rep.quasibounded.quasibounded;
    qb["details"] = strings_json(rep.quasibounded.details);
    a["quasibounded_probe"] = qb;
    a["e2_note"] = rep.e2_note;
    return a;
}

ordered_json validate_report(const LoadedInstance& loaded) {
    const ProblemInstance& inst = loaded.instance;
    ordered_json r = report_header(loaded, "validate");

    AxiomReport ax = validate_axioms(inst.quasimetric, inst.ground);
    ordered_json axj;
    axj["pass"] = ax.pass;
    axj["exhaustive"] = ax.exhaustive;
    axj["triples_checked"] = ax.triples_checked;
    axj["violations"] = strings_json(ax.violations);
    axj["warnings"] = strings_json(ax.warnings);
    r["quasimetric_axioms"] = axj;

    // 0 must belong to every domination set for the solution notions to nest.
    std::vector<DomSet> dom = all_dom_sets(inst);
    ordered_json zeros = ordered_json::array();
    Vec zero(inst.dimension, 0.0);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (!dom[i].contains(zero, inst.tol.tol_geo)) zeros.push_back(inst.ground.label(i));
    }
    r["points_missing_zero_in_D"] = zeros;

    r["assumptions"] = ordered_json();
    r["assumptions"]["efficient"] =
        assumption_report_json(validate_assumptions(inst, Variant::EfficientFixedTheta));
    r["assumptions"]["nondominated"] =
        assumption_report_json(validate_assumptions(inst, Variant::NondominatedVariable));
    return r;
}

ordered_json classify_report(const LoadedInstance& loaded) {
    ordered_json r = report_header(loaded, "classify");
    ordered_json rows = ordered_json::array();
    for (const ClassificationRow& row : classify(loaded.instance)) {
        ordered_json j;
        j["label"] = row.label;
        j["conventional_nondominated"] = row.conventional_nondominated;
        j["nondominated"] = row.nondominated;
        j["conventional_efficient"] = row.conventional_efficient;
        j["efficient"] = row.efficient;
        j["theta_i_minimal"] = row.theta_i_minimal;
        j["theta_u_minimal"] = row.theta_u_minimal;
        rows.push_back(j);
    }
    r["rows"] = rows;
    return r;
}

ordered_json solver_result_json(const ProblemInstance& inst, const SolverResult& res) {
    ordered_json j;
    j["variant"] = variant_name(res.variant);
    j["x_star"] = res.x_star_label;
    j["status"] = res.status;
    j["iterations"] = res.trace.size() - 1;
    ordered_json trace = ordered_json::array();
    for (std::size_t n = 0; n < res.trace.size(); ++n) {
        ordered_json step;
        step["label"] = inst.ground.label(res.trace[n]);
        step["psi"] = ext_real(res.psi_trace[n]);
        if (n + 1 < res.trace.size()) {
            step["q_step"] = res.step_qdist[n];
            step["slack"] = res.step_slack[n];
        }
        trace.push_back(step);
    }
    j["trace"] = trace;

    const CertificateReport& c = res.certificates;
    ordered_json ci;
    ci["holds"] = c.cert_i.holds;
    ci["vector"] = vec_json(c.cert_i.vector);
    ci["set"] = c.cert_i.set_name;
    j["cert_i"] = ci;
    ordered_json cii;
    cii["holds"] = c.cert_ii.holds;
    cii["witnesses"] = strings_json(c.cert_ii.witnesses);
    j["cert_ii"] = cii;
    ordered_json ciii;
    ciii["value"] = c.cert_iii.value;
    ciii["bound"] = c.cert_iii.bound;
    ciii["holds"] = c.cert_iii.holds;
    ciii["premise_holds"] = c.cert_iii.premise_holds;
    ciii["status"] = c.cert_iii.status;
    j["cert_iii"] = ciii;
    if (c.cert_e5.applicable) {
        ordered_json e5;
        e5["inclusion_holds"] = c.cert_e5.inclusion_holds;
        if (c.cert_e5.inclusion_witness) e5["witness"] = vec_json(*c.cert_e5.inclusion_witness);
        e5["strengthened_holds"] = c.cert_e5.strengthened_holds;
        e5["witnesses"] = strings_json(c.cert_e5.witnesses);
        j["cert_e5"] = e5;
    }
    j["e2_expost"] = c.e2_expost;
    j["e2_witnesses"] = strings_json(c.e2_witnesses);
    return j;
}

ordered_json solve_report(const LoadedInstance& loaded, const SolverResult& result) {
    ordered_json r = report_header(loaded, "solve");
    r["result"] = solver_result_json(loaded.instance, result);
    r["assumptions"] = assumption_report_json(result.assumptions);
    return r;
}

ordered_json trap_report(const LoadedInstance& loaded, const TrapCertificate& cert) {
    ordered_json r = report_header(loaded, "find-trap");
    ordered_json c;
    c["kind"] = trap_kind_name(cert.kind);
    c["x0"] = cert.x0;
    c["x_star"] = cert.x_star;
    c["condition_i"] = cert.condition_i;
    c["condition_ii"] = cert.condition_ii;
    c["condition_ii_witnesses"] = strings_json(cert.condition_ii_witnesses);
    c["valid"] = cert.valid();
    r["certificate"] = c;
    r["result"] = solver_result_json(loaded.instance, cert.solver);
    r["assumptions"] = assumption_report_json(cert.solver.assumptions);
    return r;
}

ordered_json scalarize_report(const LoadedInstance& loaded, const Vec& point) {
    const ProblemInstance& inst = loaded.instance;
    ordered_json r = report_header(loaded, "scalarize");
    DomSet theta = inst.dom_at(inst.x0);
    ScalarizationSpec spec{theta.halfspaces(), inst.k};
    double closed = gerstewitz(spec, point, inst.tol.tol_geo);
    OracleValue oracle = gerstewitz_oracle(spec, point, 1e-7);
    r["point"] = vec_json(point);
    r["theta"] = "D(f(x0))";
    r["phi"] = ext_real(closed);
    r["oracle"] = ext_real(oracle.value);
    r["oracle_bracket_exhausted"] = oracle.bracket_exhausted;
    bool agree;
    if (std::isfinite(closed) && std::isfinite(oracle.value)) {
        agree = std::fabs(closed - oracle.value) <= 1e-6;
        r["abs_difference"] = std::fabs(closed - oracle.value);
    } else {
        agree = (closed > 0) == (oracle.value > 0) && !std::isfinite(closed) &&
                !std::isfinite(oracle.value);
        r["abs_difference"] = ext_real(std::numeric_limits<double>::quiet_NaN());
    }
    r["oracle_agrees"] = agree;
    return r;
}

std::string report_to_csv(const ordered_json& report) {
    std::ostringstream os;
    if (report.contains("rows")) {
        os << "label,conventional_nondominated,nondominated,conventional_efficient,efficient,"
              "theta_i_minimal,theta_u_minimal\n";
        for (const auto& row : report.at("rows")) {
            os << row.at("label").get<std::string>() << ','
               << int(row.at("conventional_nondominated").get<bool>()) << ','
               << int(row.at("nondominated").get<bool>()) << ','
               << int(row.at("conventional_efficient").get<bool>()) << ','
               << int(row.at("efficient").get<bool>()) << ','
               << int(row.at("theta_i_minimal").get<bool>()) << ','
               << int(row.at("theta_u_minimal").get<bool>()) << '\n';
        }
        return os.str();
    }
    if (report.contains("result") && report.at("result").contains("trace")) {
        os << "step,label,psi,q_step\n";
        const auto& trace = report.at("result").at("trace");
        for (std::size_t n = 0; n < trace.size(); ++n) {
            const auto& step = trace.at(n);
            os << n << ',' << step.at("label").get<std::string>() << ','
               << step.at("psi").dump() << ','
               << (step.contains("q_step") ? step.at("q_step").dump() : "") << '\n';
        }
        return os.str();
    }
    throw std::invalid_argument("csv conversion: report has neither rows nor a solver trace");
}

std::string dump_report(const ordered_json& report) { return report.dump(2) + "\n"; }

}  // namespace domivar
