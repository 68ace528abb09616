#include "spcalab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spcalab {

json matrix_to_json(const SymmetricMatrix& s) {
    return json{{"n", s.size()}, {"rows", s.rows()}};
}

SymmetricMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON: expected {\"n\", \"rows\"}");
    const int n = j.at("n").get<int>();
    const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix JSON: row count does not match n");
    return SymmetricMatrix::from_rows(rows);  // validates squareness and symmetry
}

json instance_to_json(const SpcaInstance& inst) {
    json j{{"matrix", matrix_to_json(inst.s)}, {"r", inst.r}};
    if (inst.m) j["M"] = *inst.m;
    return j;
}

SpcaInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j.contains("r"))
        throw std::invalid_argument("instance JSON: expected {\"matrix\", \"r\"[, \"M\"]}");
    std::optional<double> m;
    if (j.contains("M") && !j.at("M").is_null()) m = j.at("M").get<double>();
    return SpcaInstance(matrix_from_json(j.at("matrix")), j.at("r").get<int>(), m);
}

json solution_to_json(const SpcaSolution& sol) {
    return json{{"support", sol.support.indices}, {"values", sol.values}, {"value", sol.value}};
}

SpcaSolution solution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("support") || !j.contains("values") || !j.contains("value"))
        throw std::invalid_argument("solution JSON: expected {\"support\", \"values\", \"value\"}");
    SpcaSolution sol;
    sol.support = Support(j.at("support").get<std::vector<int>>());
    sol.values = j.at("values").get<std::vector<double>>();
    sol.value = j.at("value").get<double>();
    if (sol.values.size() != sol.support.indices.size())
        throw std::invalid_argument("solution JSON: support/values size mismatch");
    return sol;
}

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json config_echo(const ExperimentConfig& cfg) {
    json j{{"family", cfg.family},
           {"solver", solver_name(cfg.solver)},
           {"seed", cfg.seed},
           {"tolerances",
            {{"decision", cfg.decision_tol}, {"eig", cfg.eig_tol}, {"guard", cfg.guard}}}};
    if (cfg.family == "gap-sweep") {
        j["l_min"] = cfg.l_min;
        j["l_max"] = cfg.l_max;
    } else if (cfg.family == "distinguisher") {
        j["n"] = cfg.n;
        j["l"] = cfg.l;
        j["delta"] = cfg.delta;
        j["alpha"] = cfg.alpha;
        j["trials"] = cfg.trials;
    } else if (cfg.family == "ratio") {
        j["count"] = cfg.count;
        j["n"] = cfg.ratio_n;
        j["r"] = cfg.ratio_r;
        j["p"] = cfg.ratio_p;
    }
    return j;
}

}  // namespace

std::string report_to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "# config " << config_echo(report.config).dump() << "\n";
    out << "instance_id,family,n,K_or_ell,solver,achieved,threshold,decision,ground_truth,"
           "correct\n";
    for (const auto& row : report.rows) {
        out << row.instance_id << ',' << row.family << ',' << row.n << ',' << row.k_or_ell << ','
            << row.solver << ',' << format_double(row.achieved) << ','
            << format_double(row.threshold) << ',' << row.decision << ',' << row.ground_truth
            << ',' << (row.correct ? "true" : "false") << '\n';
    }
    out << "# aggregate total=" << report.rows.size() << " correct=" << report.correct_count()
        << " accuracy=" << format_double(report.accuracy()) << "\n";
    return out.str();
}

json report_to_json(const ExperimentReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"instance_id", row.instance_id},
                            {"family", row.family},
                            {"n", row.n},
                            {"K_or_ell", row.k_or_ell},
                            {"solver", row.solver},
                            {"achieved", row.achieved},
                            {"threshold", row.threshold},
                            {"decision", row.decision},
                            {"ground_truth", row.ground_truth},
                            {"correct", row.correct}});
    return json{{"config", config_echo(report.config)},
                {"rows", std::move(rows)},
                {"aggregate",
                 {{"total", report.rows.size()},
                  {"correct", report.correct_count()},
                  {"accuracy", report.accuracy()}}}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace spcalab
