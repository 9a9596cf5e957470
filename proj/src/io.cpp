#include "abct/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace abct {

namespace {

OrderedJson partition_json(const Partition& p) {
    OrderedJson a = OrderedJson::array();
    if (p[0] == 0) {
        a.push_back(0);
        return a;
    }
    for (int i = 0; i < 3 && p[i] > 0; ++i) a.push_back(p[i]);
    return a;
}

}  // namespace

std::string render_schur_text(const SchurExpansion& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.get_str() + "*s[" + it->first.label() + "]";
    }
    return out;
}

OrderedJson schur_terms_json(const SchurExpansion& e) {
    OrderedJson arr = OrderedJson::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        arr.push_back({{"partition", partition_json(it->first)}, {"coeff", it->second.get_str()}});
    return arr;
}

OrderedJson class_result_json(const ClassResult& r, const Int* degree) {
    OrderedJson j;
    j["n"] = r.n;
    j["codim"] = r.codim;
    j["terms"] = schur_terms_json(r.expansion);
    if (degree != nullptr) j["degree"] = degree->get_str();
    return j;
}

std::string subset_label(const IndexSet& I) {
    std::string s;
    for (size_t i = 0; i < I.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(I[i] + 1);
    }
    return s;
}

OrderedJson pluecker_json(const PlueckerVector& P) {
    OrderedJson j = OrderedJson::object();
    for (const auto& [I, v] : P.coords) j[subset_label(I)] = format_rational(v);
    return j;
}

std::string matrix_to_csv(const ExactMatrix& M) {
    std::string out;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (j > 0) out += ",";
            out += format_rational(M.at(i, j));
        }
        out += "\n";
    }
    return out;
}

ExactMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rat> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t\r");
            const auto e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw std::invalid_argument("empty matrix cell");
            row.push_back(parse_rational(cell.substr(b, e - b + 1)));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw std::invalid_argument("ragged matrix rows");
    ExactMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) M.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return M;
}

OrderedJson matrix_json(const ExactMatrix& M) {
    OrderedJson j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    OrderedJson entries = OrderedJson::array();
    for (int i = 0; i < M.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int c = 0; c < M.cols(); ++c) row.push_back(format_rational(M.at(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

ExactMatrix matrix_from_json(const OrderedJson& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw std::invalid_argument("matrix rows mismatch");
    ExactMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != cols)
            throw std::invalid_argument("matrix cols mismatch");
        for (int c = 0; c < cols; ++c)
            M.at(i, c) = parse_rational(entries[static_cast<size_t>(i)][static_cast<size_t>(c)].get<std::string>());
    }
    return M;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

ExactMatrix matrix_from_file(const std::string& path) {
    const std::string text = slurp(path);
    const auto b = text.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && text[b] == '{')
        return matrix_from_json(OrderedJson::parse(text));
    return matrix_from_csv(text);
}

OrderedJson rank2_matroid_json(const Rank2Matroid& M) {
    OrderedJson j;
    j["n"] = M.n;
    OrderedJson bases = OrderedJson::array();
    for (const auto& [a, b] : M.bases) bases.push_back({a + 1, b + 1});
    j["bases"] = std::move(bases);
    return j;
}

Rank2Matroid rank2_matroid_from_json(const OrderedJson& j) {
    const int n = j.at("n").get<int>();
    std::set<std::pair<int, int>> bases;
    for (const auto& pair : j.at("bases")) {
        if (pair.size() != 2) throw std::invalid_argument("matroid basis must be a pair");
        int a = pair[0].get<int>() - 1;
        int b = pair[1].get<int>() - 1;
        if (a > b) std::swap(a, b);
        bases.emplace(a, b);
    }
    return Rank2Matroid::from_bases(n, std::move(bases));
}

Rank2Matroid rank2_matroid_from_file(const std::string& path) {
    return rank2_matroid_from_json(OrderedJson::parse(slurp(path)));
}

OrderedJson matroid_k_json(const MatroidK& M) {
    OrderedJson j;
    j["n"] = M.n;
    j["k"] = M.k;
    OrderedJson bases = OrderedJson::array();
    for (const auto& I : M.bases) {
        OrderedJson b = OrderedJson::array();
        for (int x : I) b.push_back(x + 1);
        bases.push_back(std::move(b));
    }
    j["bases"] = std::move(bases);
    return j;
}

}  // namespace abct
