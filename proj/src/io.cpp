#include "qbps/io.hpp"

#include <fstream>
#include <sstream>

namespace qbps {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& content,
                             std::size_t byte, const std::string& what) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < content.size(); ++i) {
        if (content[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw input_error(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                      what);
}

const nlohmann::json& require(const nlohmann::json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) {
        throw input_error("missing field '" + key + "' in " + j.dump());
    }
    return j.at(key);
}

Rational rational_field(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error("expected a rational (integer or string), got " + j.dump());
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    try {
        return nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(path, content, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

Quiver quiver_from_json(const nlohmann::json& j) {
    std::vector<std::string> labels;
    for (const auto& v : require(j, "vertices")) {
        labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::vector<Edge> edges;
    for (const auto& e : require(j, "edges")) {
        edges.push_back(Edge{require(e, "src").get<int>(), require(e, "dst").get<int>()});
    }
    return Quiver(std::move(labels), std::move(edges));
}

nlohmann::json quiver_to_json(const Quiver& q) {
    nlohmann::json j;
    j["vertices"] = q.labels();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : q.edges()) {
        j["edges"].push_back({{"src", e.src}, {"dst", e.dst}});
    }
    return j;
}

ExtMatrix ext_matrix_from_json(const nlohmann::json& j) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : require(j, "ext")) {
        rows.push_back(row.get<std::vector<int>>());
    }
    return ExtMatrix(std::move(rows));
}

StabilityXi stability_from_json(const nlohmann::json& j) {
    std::vector<ExactComplex> xi;
    for (const auto& entry : require(j, "xi")) {
        xi.emplace_back(rational_field(require(entry, "re")), rational_field(require(entry, "im")));
    }
    return StabilityXi(std::move(xi));
}

nlohmann::json stability_to_json(const StabilityXi& xi) {
    nlohmann::json entries = nlohmann::json::array();
    for (const ExactComplex& z : xi.entries()) {
        entries.push_back({{"re", to_string(z.re)}, {"im", to_string(z.im)}});
    }
    return nlohmann::json{{"xi", entries}};
}

SuperPotential potential_from_json(const nlohmann::json& j, const Quiver& q) {
    std::vector<std::pair<CyclicWord, Rational>> terms;
    for (const auto& term : require(j, "terms")) {
        std::vector<int> word = require(term, "word").get<std::vector<int>>();
        terms.emplace_back(CyclicWord(q, std::move(word)), rational_field(require(term, "coeff")));
    }
    std::optional<Rational> growth;
    if (j.contains("growth")) growth = rational_field(j.at("growth"));
    return SuperPotential(std::move(terms), std::move(growth));
}

nlohmann::json bps_table_to_json(const BpsTable& table) {
    nlohmann::json j;
    j["trunc"] = table.trunc;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [m, poly] : table.omega) {
        entries.push_back({{"dim", m.entries()}, {"omega", poly.to_string("v")}});
    }
    j["entries"] = entries;
    if (table.xi) {
        j["stability"] = stability_to_json(*table.xi);
    } else {
        j["stability"] = "trivial";
    }
    return j;
}

GammaClass gamma_from_json(const nlohmann::json& j) {
    const int rank = require(j, "rank").get<int>();
    std::vector<int> beta = require(j, "beta").get<std::vector<int>>();
    if (static_cast<int>(beta.size()) != rank) {
        throw input_error("beta length does not match declared rank");
    }
    GammaClass v;
    v.beta = Eigen::Map<const Eigen::VectorXi>(beta.data(), static_cast<Eigen::Index>(beta.size()));
    v.m = require(j, "m").get<long>();
    return v;
}

KahlerParam kahler_from_json(const nlohmann::json& j) {
    const auto& jb = require(j, "B");
    const auto& jw = require(j, "omega");
    KahlerParam k;
    k.B = VectorQ(jb.size());
    k.omega = VectorQ(jw.size());
    for (std::size_t i = 0; i < jb.size(); ++i) k.B[static_cast<Eigen::Index>(i)] = rational_field(jb.at(i));
    for (std::size_t i = 0; i < jw.size(); ++i) k.omega[static_cast<Eigen::Index>(i)] = rational_field(jw.at(i));
    if (k.B.size() != k.omega.size()) throw input_error("B and omega rank mismatch");
    return k;
}

EffectiveCone cone_from_json(const nlohmann::json& j) {
    EffectiveCone cone;
    for (const auto& gen : require(j, "generators")) {
        std::vector<int> g = gen.get<std::vector<int>>();
        cone.generators.push_back(
            Eigen::Map<const Eigen::VectorXi>(g.data(), static_cast<Eigen::Index>(g.size())));
    }
    if (cone.generators.empty()) throw input_error("effective cone has no generators");
    return cone;
}

CycleData cycle_from_json(const nlohmann::json& j) {
    CycleData gamma;
    for (const auto& comp : require(j, "components")) {
        CycleComponent c;
        c.mult = require(comp, "mult").get<long>();
        std::vector<int> cls = require(comp, "class").get<std::vector<int>>();
        c.cls = Eigen::Map<const Eigen::VectorXi>(cls.data(), static_cast<Eigen::Index>(cls.size()));
        gamma.push_back(std::move(c));
    }
    return gamma;
}

DimVector parse_dim_vector(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            entries.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw input_error("cannot parse dimension vector: '" + text + "'");
        }
    }
    if (entries.empty()) throw input_error("empty dimension vector");
    return DimVector(std::move(entries));
}

VectorQ parse_rational_vector(const std::string& text) {
    std::vector<Rational> entries;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) entries.push_back(parse_rational(piece));
    if (entries.empty()) throw input_error("empty vector");
    VectorQ v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Eigen::Index>(i)] = entries[i];
    return v;
}

Eigen::MatrixXi int_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw input_error("expected a nonempty matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    Eigen::MatrixXi m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (j.at(r).size() != cols) throw input_error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j.at(r).at(c).get<int>();
        }
    }
    return m;
}

}  // namespace qbps
