#include "qent/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qent {

std::string format_double17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string matrix_to_json_text(const ComplexMatrix& m) {
    std::ostringstream out;
    out << "{\"dim\": " << m.dim() << ", \"entries\": [";
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != 0 || j != 0) out << ", ";
            const cplx& v = m(i, j);
            out << '[' << format_double17(v.real()) << ", " << format_double17(v.imag()) << ']';
        }
    out << "]}";
    return out.str();
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix JSON: expected object with \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer())
        throw ParseError("matrix JSON: \"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw ParseError("matrix JSON: \"dim\" must be >= 1");
    const nlohmann::json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * dim)
        throw ParseError("matrix JSON: \"entries\" must hold dim^2 pairs");
    std::vector<cplx> e;
    e.reserve(entries.size());
    for (const nlohmann::json& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("matrix JSON: each entry must be [re, im]");
        e.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    try {
        return ComplexMatrix(dim, std::move(e));
    } catch (const Error& err) {
        throw ParseError(std::string("matrix JSON: ") + err.what());
    }
}

ComplexMatrix matrix_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("matrix JSON: malformed document");
    return matrix_from_json(j);
}

std::string probability_vector_to_json_text(const ProbabilityVector& p) {
    std::ostringstream out;
    out << "{\"probs\": [";
    for (int i = 0; i < p.size(); ++i) {
        if (i != 0) out << ", ";
        out << format_double17(p[i]);
    }
    out << "]}";
    return out.str();
}

ProbabilityVector probability_vector_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("probs") || !j["probs"].is_array())
        throw ParseError("probability JSON: expected {\"probs\": [...]}");
    std::vector<double> probs;
    for (const nlohmann::json& x : j["probs"]) {
        if (!x.is_number()) throw ParseError("probability JSON: entries must be numbers");
        probs.push_back(x.get<double>());
    }
    try {
        return ProbabilityVector(std::move(probs));
    } catch (const Error& err) {
        throw ParseError(std::string("probability JSON: ") + err.what());
    }
}

nlohmann::ordered_json report_to_json(const InequalityReport& r) {
    nlohmann::ordered_json j;
    j["name"] = to_string(r.name);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["q"] = r.q;
    j["shape"] = {r.shape.n, r.shape.m};
    j["satisfied"] = r.satisfied;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    j["unitary_label"] =
        r.unitary_label ? nlohmann::ordered_json(*r.unitary_label) : nlohmann::ordered_json(nullptr);
    return j;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
    std::ostringstream out;
    out << "name,lhs,rhs,margin,q,shape_n,shape_m,satisfied,seed,unitary_label\n";
    for (const InequalityReport& r : reports) {
        out << to_string(r.name) << ',' << format_double17(r.lhs) << ',' << format_double17(r.rhs)
            << ',' << format_double17(r.margin) << ',' << format_double17(r.q) << ',' << r.shape.n
            << ',' << r.shape.m << ',' << (r.satisfied ? "true" : "false") << ',';
        if (r.seed) out << *r.seed;
        out << ',';
        if (r.unitary_label) out << *r.unitary_label;
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json optimization_result_to_json(const OptimizationResult& r) {
    nlohmann::ordered_json j;
    j["sigma"] = r.sigma;
    j["information"] = r.information;
    j["iterations"] = r.iterations;
    j["restarts_used"] = r.restarts_used;
    j["converged"] = r.converged;
    j["theta"] = r.params.theta;
    return j;
}

nlohmann::ordered_json tomogram_to_json(const Tomogram& t, const nlohmann::ordered_json& unitary) {
    nlohmann::ordered_json j;
    j["labels"] = t.labels;
    j["probs"] = t.probs.probs();
    j["unitary"] = unitary;
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace qent
