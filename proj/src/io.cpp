#include "eqca/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <openssl/sha.h>

namespace eqca::io {

json rat_to_json(const Rat& r) { return format_rat(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(long(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected a rational (\"p/q\" string or integer)");
}

namespace {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(std::int64_t(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(long(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed integer literal: " + j.dump());
        }
    }
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

}  // namespace

json coord_to_json(const CellCoord& c) {
    json out = json::array();
    for (const auto& x : c.c) out.push_back(int_to_json(x));
    return out;
}

CellCoord coord_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("coordinate must be a nonempty array");
    std::vector<Int> comps;
    comps.reserve(j.size());
    for (const auto& x : j) comps.push_back(int_from_json(x));
    return CellCoord(std::move(comps));
}

json neighborhood_to_json(const Neighborhood& nb) {
    json out = json::array();
    for (const auto& o : nb.offsets()) out.push_back(coord_to_json(o));
    return out;
}

Neighborhood neighborhood_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("neighborhood must be an array");
    std::vector<CellCoord> offsets;
    for (const auto& o : j) offsets.push_back(coord_from_json(o));
    return Neighborhood(std::move(offsets));
}

json config_to_json(const Config& c) {
    json out = json::array();
    for (const auto& [cell, sym] : c.cells())
        out.push_back(json::array({coord_to_json(cell), sym}));
    return out;
}

Config config_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("configuration must be an array");
    Config out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("configuration entries are [coord, symbol] pairs");
        out.set(coord_from_json(e[0]), e[1].get<int>());
    }
    return out;
}

json scalar_to_json(const Scalar& a) {
    json out = json::array();
    for (const auto& r : a.c) out.push_back(rat_to_json(r));
    return out;
}

Scalar scalar_from_json(const json& j, const FieldSpec* spec) {
    if (!j.is_array()) throw std::invalid_argument("scalar must be a coefficient array");
    std::vector<Rat> coeffs;
    for (const auto& x : j) coeffs.push_back(rat_from_json(x));
    return spec->from_coeffs(std::move(coeffs));
}

json statevector_to_json(const StateVector& v) {
    json out = json::array();
    for (const auto& [cfg, a] : v.terms())
        out.push_back(json{{"config", config_to_json(cfg)}, {"coeff", scalar_to_json(a)}});
    return out;
}

StateVector statevector_from_json(const json& j, const FieldSpec* spec) {
    if (!j.is_array()) throw std::invalid_argument("state vector must be an array of terms");
    StateVector v(spec);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("config") || !t.contains("coeff"))
            throw std::invalid_argument("state vector terms need config and coeff");
        v.add_term(config_from_json(t["config"]), scalar_from_json(t["coeff"], spec));
    }
    return v;
}

json matrix_to_json(const ScalarMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(scalar_to_json(m.at(r, c)));
    return out;
}

ScalarMatrix matrix_from_json(const json& j, const FieldSpec* spec, std::size_t rows,
                              std::size_t cols) {
    if (!j.is_array() || j.size() != rows * cols)
        throw std::invalid_argument("matrix must be a flat row-major array of scalars");
    ScalarMatrix m(spec, rows, cols);
    std::size_t i = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(j[i++], spec);
    return m;
}

json localmap_to_json(const LocalMap& op) {
    json cells = json::array();
    for (const auto& c : op.cells) cells.push_back(coord_to_json(c));
    return json{{"n", op.n}, {"cells", cells}, {"matrix", matrix_to_json(op.matrix)}};
}

LocalMap localmap_from_json(const json& j, const FieldSpec* spec) {
    if (!j.is_object() || !j.contains("cells") || !j.contains("matrix"))
        throw std::invalid_argument("local map needs cells and matrix");
    std::vector<CellCoord> cells;
    for (const auto& c : j["cells"]) cells.push_back(coord_from_json(c));
    const std::size_t len = j["matrix"].size();
    const auto dim = std::size_t(std::llround(std::sqrt(double(len))));
    if (dim * dim != len)
        throw std::invalid_argument("local map matrix is not square");
    int n;
    if (j.contains("n")) {
        n = j["n"].get<int>();
    } else {
        // dim = n^p
        n = int(std::llround(std::pow(double(dim), 1.0 / double(cells.size()))));
        while (n > 1 && std::pow(double(n), double(cells.size())) > double(dim)) --n;
        while (std::pow(double(n + 1), double(cells.size())) <= double(dim)) ++n;
    }
    return LocalMap(n, std::move(cells), matrix_from_json(j["matrix"], spec, dim, dim));
}

json field_to_json(const FieldSpec& spec) {
    json min_poly = json::array();
    for (const auto& r : spec.min_poly()) min_poly.push_back(rat_to_json(r));
    json conj_image = json::array();
    for (const auto& r : spec.conj_image()) conj_image.push_back(rat_to_json(r));
    const Box& b = spec.root_box();
    return json{{"min_poly", min_poly},
                {"conj_image", conj_image},
                {"root_box",
                 {{"re", {rat_to_json(b.re.lo), rat_to_json(b.re.hi)}},
                  {"im", {rat_to_json(b.im.lo), rat_to_json(b.im.hi)}}}}};
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_poly") || !j.contains("conj_image") ||
        !j.contains("root_box"))
        throw std::invalid_argument("field needs min_poly, conj_image and root_box");
    std::vector<Rat> min_poly, conj_image;
    for (const auto& r : j["min_poly"]) min_poly.push_back(rat_from_json(r));
    for (const auto& r : j["conj_image"]) conj_image.push_back(rat_from_json(r));
    const auto& rb = j["root_box"];
    if (!rb.contains("re") || !rb.contains("im") || rb["re"].size() != 2 || rb["im"].size() != 2)
        throw std::invalid_argument("root_box needs re: [lo,hi] and im: [lo,hi]");
    Box box{RatInterval{rat_from_json(rb["re"][0]), rat_from_json(rb["re"][1])},
            RatInterval{rat_from_json(rb["im"][0]), rat_from_json(rb["im"][1])}};
    return FieldSpec(std::move(min_poly), std::move(conj_image), std::move(box));
}

json classical_rule_to_json(const ClassicalRule& rule) {
    return json{{"n", rule.n()},
                {"offsets", neighborhood_to_json(rule.neighborhood())},
                {"chi", rule.chi()}};
}

ClassicalRule classical_rule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("offsets") || !j.contains("chi"))
        throw std::invalid_argument("classical rule needs n, offsets and chi");
    return ClassicalRule(j["n"].get<int>(), neighborhood_from_json(j["offsets"]),
                         j["chi"].get<std::vector<int>>());
}

json qca_rule_to_json(const QcaRule& rule) {
    return json{{"n", rule.n()},
                {"offsets", neighborhood_to_json(rule.neighborhood())},
                {"K", matrix_to_json(rule.k_matrix())}};
}

QcaRule qca_rule_from_json(const json& j, const FieldSpec* spec) {
    if (!j.is_object() || !j.contains("offsets") || !j.contains("K"))
        throw std::invalid_argument("quantum rule needs offsets and K");
    Neighborhood nb = neighborhood_from_json(j["offsets"]);
    const std::size_t len = j["K"].size();
    const auto dim = std::size_t(std::llround(std::sqrt(double(len))));
    if (dim * dim != len) throw std::invalid_argument("K is not square");
    int n;
    if (j.contains("n")) {
        n = j["n"].get<int>();
    } else {
        const double root = std::pow(double(dim), 1.0 / double(nb.r() + 1));
        n = std::max(1, int(std::llround(root)));
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < nb.r() + 1; ++i) expect *= std::size_t(n);
    if (expect != dim)
        throw std::invalid_argument("K dimension is not n^(r+1) for any integer n");
    return QcaRule(n, std::move(nb), matrix_from_json(j["K"], spec, dim, dim));
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& data) {
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * SHA256_DIGEST_LENGTH);
    for (unsigned char b : digest) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 0xf]);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << content;
}

}  // namespace eqca::io
