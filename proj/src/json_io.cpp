#include "sharp/json_io.hpp"

namespace sharp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::size_t count_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("field '") + name + "' must be a count");
    return v.get<std::size_t>();
}

double real_from_json(const Json& j) {
    if (!j.is_number()) bad("float entries must be JSON numbers");
    return j.get<double>();
}

std::vector<RutmCoeffs> row_from_json(const Json& j) {
    if (!j.is_array()) bad("block grid rows must be arrays");
    std::vector<RutmCoeffs> row;
    for (const auto& core : j) {
        if (!core.is_array()) bad("RUTM cores must be arrays");
        RutmCoeffs c;
        for (const auto& x : core) c.push_back(gaussian_from_json(x));
        row.push_back(std::move(c));
    }
    return row;
}

}  // namespace

Json to_json(const Gaussian& g) { return Json::array({g.re.str(), g.im.str()}); }

Json to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m.mode() == Mode::exact) {
                entries.push_back(to_json(m.exact_at(i, k)));
            } else {
                const Complex z = m.float_at(i, k);
                entries.push_back(Json::array({z.real(), z.imag()}));
            }
        }
    return Json{{"mode", std::string(to_string(m.mode()))}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const HSDecomposition& d) {
    return Json{{"U", to_json(d.U)}, {"sigma", d.sigma}, {"K", to_json(d.K)}, {"L", to_json(d.L)}, {"r", d.r}};
}

Json to_json(const JordanSpec& spec) {
    Json eig = Json::array();
    for (const auto& e : spec.eigenvalues) eig.push_back(Json{{"lambda", to_json(e.lambda)}, {"sizes", e.sizes}});
    return Json{{"eigenvalues", eig}, {"P", spec.P ? to_json(*spec.P) : Json(nullptr)}};
}

Json to_json(const CommutantElement& e) {
    Json blocks = Json::array();
    for (const auto& grid : e.blocks) {
        Json g = Json::array();
        for (const auto& row : grid) {
            Json r = Json::array();
            for (const auto& core : row) {
                Json c = Json::array();
                for (const auto& x : core) c.push_back(to_json(x));
                r.push_back(c);
            }
            g.push_back(r);
        }
        blocks.push_back(g);
    }
    return Json{{"spec", to_json(e.spec)}, {"blocks", blocks}};
}

Json to_json(const DownsetDescriptor& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors) {
        Json item{{"kind", std::string(to_string(f.kind))}, {"lambda", to_json(f.lambda)}, {"sizes", f.sizes}};
        if (f.kind == FactorKind::BoundedInfiniteAntichain) item["ranks"] = f.ranks;
        factors.push_back(item);
    }
    return Json{{"s", d.s},
                {"factors", factors},
                {"is_lattice", d.is_lattice},
                {"is_distributive", d.is_distributive},
                {"is_boolean", d.is_boolean},
                {"boolean_center_size", d.boolean_center_size},
                {"max_chain_length", d.max_chain_length},
                {"count", d.count ? Json(*d.count) : Json(nullptr)}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return Rational::from_double(j.get<double>());
    bad("expected a rational as \"p/q\" or a number");
}

Gaussian gaussian_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("complex values are [re, im] pairs");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Matrix matrix_from_json(const Json& j) {
    const Json& mode = field(j, "mode");
    if (!mode.is_string()) bad("mode must be a string");
    const std::size_t rows = count_field(j, "rows"), cols = count_field(j, "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols) bad("entries must hold rows × cols pairs");
    const std::string m = mode.get<std::string>();
    if (m == "exact") {
        Matrix::ExactData data;
        for (const auto& e : entries) data.push_back(gaussian_from_json(e));
        return Matrix::exact(rows, cols, std::move(data));
    }
    if (m == "float") {
        Matrix::FloatData data;
        for (const auto& e : entries) {
            if (!e.is_array() || e.size() != 2) bad("complex values are [re, im] pairs");
            data.emplace_back(real_from_json(e[0]), real_from_json(e[1]));
        }
        return Matrix::floating(rows, cols, std::move(data));
    }
    bad("mode must be \"exact\" or \"float\"");
}

HSDecomposition hs_from_json(const Json& j) {
    HSDecomposition d;
    d.U = matrix_from_json(field(j, "U")).to_float();
    const Json& sigma = field(j, "sigma");
    if (!sigma.is_array()) bad("sigma must be an array");
    for (const auto& s : sigma) d.sigma.push_back(real_from_json(s));
    d.K = matrix_from_json(field(j, "K")).to_float();
    d.L = matrix_from_json(field(j, "L")).to_float();
    d.r = count_field(j, "r");
    return d;
}

JordanSpec spec_from_json(const Json& j) {
    JordanSpec spec;
    const Json& eig = field(j, "eigenvalues");
    if (!eig.is_array()) bad("eigenvalues must be an array");
    for (const auto& e : eig) {
        EigenBlocks b{gaussian_from_json(field(e, "lambda")), {}};
        const Json& sizes = field(e, "sizes");
        if (!sizes.is_array()) bad("sizes must be an array");
        for (const auto& s : sizes) {
            if (!s.is_number_integer() || s.get<long long>() < 0) bad("block sizes must be counts");
            b.sizes.push_back(s.get<std::size_t>());
        }
        spec.eigenvalues.push_back(std::move(b));
    }
    if (j.contains("P") && !j.at("P").is_null()) spec.P = matrix_from_json(j.at("P"));
    spec.validate();
    return spec;
}

CommutantElement commutant_from_json(const Json& j) {
    CommutantElement e{spec_from_json(field(j, "spec")), {}};
    const Json& blocks = field(j, "blocks");
    if (!blocks.is_array()) bad("blocks must be an array");
    for (const auto& grid : blocks) {
        if (!grid.is_array()) bad("block grids must be arrays");
        std::vector<std::vector<RutmCoeffs>> g;
        for (const auto& row : grid) g.push_back(row_from_json(row));
        e.blocks.push_back(std::move(g));
    }
    e.check_shape();
    return e;
}

}  // namespace sharp
