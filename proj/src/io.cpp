#include "redn/io.hpp"

#include <fstream>

namespace redn {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const LieSubspace& a) {
    Json b = Json::array();
    for (auto& x : a.basis()) b.push_back(to_json(x));
    return Json{{"n", a.n()}, {"basis", b}};
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InputError(where, "scalar must be a string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(where, e.what());
    }
}

Mat mat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw InputError(where, "matrix must be a non-empty array of rows");
    int r = int(j.size()), c = -1;
    Mat m;
    for (int i = 0; i < r; ++i) {
        std::string wi = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) throw InputError(wi, "row must be an array");
        if (c < 0) {
            c = int(j[i].size());
            if (c == 0) throw InputError(wi, "empty row");
            m = Mat(r, c);
        }
        if (int(j[i].size()) != c)
            throw InputError(wi, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(c));
        for (int k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k], wi + "[" + std::to_string(k) + "]");
    }
    return m;
}

namespace {
int read_n(const Json& j, const std::string& where) {
    if (!j.contains("n")) throw InputError(where, "missing key \"n\"");
    if (!j["n"].is_number_integer()) throw InputError(where + ".n", "n must be an integer");
    int n = j["n"].get<int>();
    if (n < 2 || n > 12) throw InputError(where + ".n", "n out of range");
    return n;
}
void check_square(const Mat& m, int n, const std::string& where) {
    if (m.rows() != n || m.cols() != n)
        throw InputError(where, "dimension mismatch: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    ", expected " + std::to_string(n) + "x" + std::to_string(n));
}
}  // namespace

Mat element_from_json(const Json& j, int n, const std::string& where) {
    Mat m;
    if (j.is_object()) {
        int jn = read_n(j, where);
        if (n && jn != n) throw InputError(where + ".n", "dimension mismatch with the subspace");
        n = jn;
        if (!j.contains("matrix")) throw InputError(where, "missing key \"matrix\"");
        m = mat_from_json(j["matrix"], where + ".matrix");
        check_square(m, n, where + ".matrix");
    } else {
        m = mat_from_json(j, where);
        if (n) check_square(m, n, where);
        else if (m.rows() != m.cols()) throw InputError(where, "matrix is not square");
    }
    return m;
}

LieSubspace subspace_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where, "subspace must be an object {\"n\", \"basis\"}");
    int n = read_n(j, where);
    if (!j.contains("basis") || !j["basis"].is_array()) throw InputError(where, "missing array \"basis\"");
    std::vector<Mat> b;
    for (std::size_t k = 0; k < j["basis"].size(); ++k) {
        std::string wk = where + ".basis[" + std::to_string(k) + "]";
        Mat m = mat_from_json(j["basis"][k], wk);
        check_square(m, n, wk);
        b.push_back(m);
    }
    if (b.empty()) throw InputError(where + ".basis", "empty basis");
    if (LieSubspace::span(n, b).dim() != int(b.size())) throw InputError(where + ".basis", "basis is linearly dependent");
    return LieSubspace(n, b);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path, std::string("JSON parse error: ") + e.what());
    }
}

}  // namespace redn
