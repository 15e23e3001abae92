#include "lrcmr/io.hpp"

#include <fstream>

namespace lrcmr {

ojson field_to_json(const Field& f) {
    ojson j;
    j["p"] = f.p();
    j["e"] = f.e();
    j["modulus"] = f.modulus();
    j["alpha"] = f.alpha();
    return j;
}

FieldPtr field_from_json(const ojson& j) {
    if (!j.contains("p") || !j.contains("e") || !j.contains("modulus") || !j.contains("alpha"))
        fail("SchemaError", "field object needs p, e, modulus, alpha");
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    std::uint32_t e = j.at("e").get<std::uint32_t>();
    auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    gf_t alpha = j.at("alpha").get<gf_t>();
    try {
        return Field::make(p, e, modulus, alpha);
    } catch (const Error& err) {
        fail("FieldReconstructionMismatch", err.what());
    }
}

ojson matrix_to_json(const Matrix& m) {
    ojson j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = m.data();
    return j;
}

Matrix matrix_from_json(const ojson& j, const FieldPtr& field) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    auto data = j.at("data").get<std::vector<gf_t>>();
    if (data.size() != rows * cols) fail("SchemaError", "matrix data size mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            gf_t v = data[r * cols + c];
            if (v >= field->q()) fail("SchemaError", "matrix entry outside field");
            m.set(r, c, v);
        }
    return m;
}

ojson code_to_json(const LinearCode& c, const ojson& meta) {
    ojson j;
    j["field"] = field_to_json(*c.field);
    j["n"] = c.n;
    j["k"] = c.k;
    j["H"] = matrix_to_json(c.H);
    if (c.roots)
        j["roots"] = *c.roots;
    else
        j["roots"] = nullptr;
    j["meta"] = meta;
    return j;
}

LinearCode code_from_json(const ojson& j, ojson* meta_out) {
    FieldPtr f = field_from_json(j.at("field"));
    std::size_t n = j.at("n").get<std::size_t>();
    std::size_t k = j.at("k").get<std::size_t>();
    Matrix h = matrix_from_json(j.at("H"), f);
    if (h.cols() != n) fail("SchemaError", "H column count differs from n");
    LinearCode c = code_from_parity(h);
    if (c.k != k) fail("SchemaError", "stored k inconsistent with rank of H");
    if (h.rank() == h.rows()) c.H = std::move(h);  // keep the stored row form
    if (j.contains("roots") && !j.at("roots").is_null())
        c.roots = j.at("roots").get<std::vector<std::size_t>>();
    if (meta_out) *meta_out = j.value("meta", ojson::object());
    return c;
}

void save_code(const LinearCode& c, const std::string& path, const ojson& meta) {
    std::ofstream out(path);
    if (!out) fail("SchemaError", "cannot open " + path + " for writing");
    out << code_to_json(c, meta).dump(2) << "\n";
}

LinearCode load_code(const std::string& path, ojson* meta_out) {
    std::ifstream in(path);
    if (!in) fail("SchemaError", "cannot open " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("SchemaError", e.what());
    }
    return code_from_json(j, meta_out);
}

ojson perm_to_json(const PermSpec& p) {
    ojson j;
    if (p.kind == PermSpec::Kind::Multiplier) {
        j["kind"] = "multiplier";
        j["t"] = p.t;
    } else {
        j["kind"] = "psi";
        j["a"] = p.a;
        j["t"] = p.t_vec;
        j["z"] = p.z_vec;
    }
    return j;
}

PermSpec perm_from_json(const ojson& j, std::size_t n) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "multiplier") return make_multiplier(n, j.at("t").get<std::size_t>());
    if (kind == "psi")
        return make_psi(n, j.at("a").get<std::size_t>(), j.at("t").get<std::vector<std::size_t>>(),
                        j.at("z").get<std::vector<std::size_t>>());
    fail("SchemaError", "unknown permutation kind " + kind);
}

ojson structure_report_to_json(const StructureReport& rep) {
    ojson j;
    j["hypothesis_met"] = rep.hypothesis_met;
    j["u"] = rep.u;
    j["v"] = rep.v;
    j["all_dichotomy"] = rep.all_dichotomy;
    j["all_cosets"] = rep.all_cosets;
    j["gamma_size"] = rep.gamma_size;
    j["maximal_count"] = rep.maximal_count;
    ojson cex = ojson::array();
    for (const auto& c : rep.counterexamples) {
        ojson e;
        e["set"] = c.set;
        e["shift"] = c.shift;
        e["what"] = c.what;
        cex.push_back(e);
    }
    j["counterexamples"] = cex;
    return j;
}

}  // namespace lrcmr
