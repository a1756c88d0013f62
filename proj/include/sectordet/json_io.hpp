#ifndef SECTORDET_JSON_IO_HPP
#define SECTORDET_JSON_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "sectordet/generators.hpp"
#include "sectordet/inequalities.hpp"
#include "sectordet/matrix.hpp"

namespace sectordet {

using Json = nlohmann::json;

// Matrix wire format: {"n": int, "re": [[...]], "im": [[...]]}, row-major.
inline Json to_json(const ComplexMatrix& a) {
    Json j;
    const Eigen::Index n = a.order();
    j["n"] = n;
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
        Json rrow = Json::array(), irow = Json::array();
        for (Eigen::Index jj = 0; jj < n; ++jj) {
            rrow.push_back(a(i, jj).real());
            irow.push_back(a(i, jj).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

inline ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
        throw ParseError("matrix: expected object with n, re, im");
    const Eigen::Index n = j.at("n").get<Eigen::Index>();
    if (n < 0) throw ParseError("matrix: negative order");
    const Json& re = j.at("re");
    const Json& im = j.at("im");
    if (!re.is_array() || !im.is_array() ||
        re.size() != static_cast<std::size_t>(n) || im.size() != static_cast<std::size_t>(n))
        throw ParseError("matrix: re/im must be n arrays of n numbers");
    Cmat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& rrow = re.at(i);
        const Json& irow = im.at(i);
        if (rrow.size() != static_cast<std::size_t>(n) ||
            irow.size() != static_cast<std::size_t>(n))
            throw ParseError("matrix: ragged row at index " + std::to_string(i));
        for (Eigen::Index jj = 0; jj < n; ++jj)
            m(i, jj) = Complex(rrow.at(jj).get<double>(), irow.at(jj).get<double>());
    }
    try {
        return ComplexMatrix(std::move(m));
    } catch (const Error& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

inline Json to_json(const InequalityInstance& inst) {
    Json j;
    Json ms = Json::array();
    for (const auto& m : inst.matrices) ms.push_back(to_json(m));
    j["matrices"] = std::move(ms);
    j["floors"] = inst.floors;
    j["k"] = inst.k;
    j["alpha"] = inst.alpha;
    if (inst.weights) j["weights"] = *inst.weights;
    return j;
}

inline InequalityInstance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrices"))
        throw ParseError("instance: expected object with a matrices array");
    InequalityInstance inst;
    for (const auto& mj : j.at("matrices")) inst.matrices.push_back(matrix_from_json(mj));
    if (j.contains("floors"))
        inst.floors = j.at("floors").get<std::vector<double>>();
    else
        inst.floors.assign(inst.matrices.size(), 0.0);
    inst.k = j.value("k", 0);
    inst.alpha = j.value("alpha", 0.0);
    if (j.contains("weights")) inst.weights = j.at("weights").get<std::vector<double>>();
    return inst;
}

inline Json to_json(const ScalarGrid& g) {
    Json j;
    j["p"] = g.p;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < g.x.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index jj = 0; jj < g.x.cols(); ++jj) row.push_back(g.x(i, jj));
        rows.push_back(std::move(row));
    }
    j["x"] = std::move(rows);
    return j;
}

inline ScalarGrid grid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x"))
        throw ParseError("grid: expected object with x rows");
    ScalarGrid g;
    g.p = j.value("p", 2.0);
    const Json& rows = j.at("x");
    if (!rows.is_array() || rows.empty()) throw ParseError("grid: x must be a nonempty array");
    const std::size_t cols = rows.at(0).size();
    g.x.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows.at(i).size() != cols) throw ParseError("grid: ragged row");
        for (std::size_t jj = 0; jj < cols; ++jj)
            g.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(jj)) =
                rows.at(i).at(jj).get<double>();
    }
    return g;
}

inline Json to_json(const InequalityReport& r) {
    return Json{{"id", r.id},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"gap", r.gap},
                {"rel_gap", r.rel_gap},
                {"holds", r.holds},
                {"clamped_terms", r.clamped_terms},
                {"notes", r.notes}};
}

inline Json to_json(const GeneratorSpec& s) {
    return Json{{"n", s.n},
                {"m", s.m},
                {"kind", to_string(s.kind)},
                {"alpha_target", s.alpha_target},
                {"floor_policy", to_string(s.floor_policy)},
                {"seed", s.seed},
                {"condition_cap", s.condition_cap}};
}

inline GeneratorSpec generator_spec_from_json(const Json& j) {
    GeneratorSpec s;
    s.n = j.value("n", s.n);
    s.m = j.value("m", s.m);
    if (j.contains("kind")) s.kind = generator_kind_from_string(j.at("kind").get<std::string>());
    s.alpha_target = j.value("alpha_target", s.alpha_target);
    if (j.contains("floor_policy"))
        s.floor_policy = floor_policy_from_string(j.at("floor_policy").get<std::string>());
    s.seed = j.value("seed", s.seed);
    s.condition_cap = j.value("condition_cap", s.condition_cap);
    s.validate();
    return s;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace sectordet

#endif
