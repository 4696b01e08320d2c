#include "stackyaut/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace stackyaut {

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected an integer");
}

Json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return Json(x.convert_to<long long>());
    return Json(x.str());  // too large for a JSON number; keep it exact
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

FiniteGroup group_from_json(const Json& j) {
    if (j.contains("table")) {
        std::vector<std::vector<Elt>> table;
        for (const auto& row : require(j, "table")) {
            std::vector<Elt> r;
            for (const auto& e : row) {
                long long v = e.get<long long>();
                if (v < 0 || v > 255) throw InputError("table entry out of range");
                r.push_back(static_cast<Elt>(v));
            }
            table.push_back(std::move(r));
        }
        return FiniteGroup(std::move(table));
    }
    if (j.contains("cyclic"))
        return FiniteGroup::cyclic(j.at("cyclic").get<std::size_t>());
    if (j.contains("torsion")) {
        // abelian shortcut: product of cyclic groups
        FiniteGroup g = FiniteGroup::trivial();
        for (const auto& t : j.at("torsion"))
            g = FiniteGroup::direct_product(g, FiniteGroup::cyclic(t.get<std::size_t>()));
        return g;
    }
    throw InputError("group must give 'table', 'cyclic' or 'torsion'");
}

std::vector<Elt> elt_vector_from_json(const Json& j, std::size_t bound) {
    std::vector<Elt> out;
    for (const auto& e : j) {
        long long v = e.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= bound)
            throw InputError("element index out of range");
        out.push_back(static_cast<Elt>(v));
    }
    return out;
}

}  // namespace

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j.at(i).at(c));
    }
    return m;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an integer array");
    IntVector v;
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

Json vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

Json group_invariants_json(const FgAbelianGroup& g) {
    Json out;
    out["free_rank"] = g.free_rank();
    out["torsion"] = vector_to_json(g.torsion_coefficients());
    out["name"] = g.to_string();
    return out;
}

Json stacky_fan_to_json(const StackyFan& sf) {
    Json out;
    out["group"]["generators"] = sf.n_group.generators();
    out["group"]["relations"] = matrix_to_json(sf.n_group.relations());
    out["fan"]["dim"] = sf.fan.dim;
    Json rays = Json::array();
    for (const auto& r : sf.fan.rays) rays.push_back(vector_to_json(r));
    out["fan"]["rays"] = std::move(rays);
    Json cones = Json::array();
    for (const auto& c : sf.fan.max_cones) cones.push_back(Json(c));
    out["fan"]["max_cones"] = std::move(cones);
    out["beta"] = matrix_to_json(sf.beta_columns);
    return out;
}

namespace {

InputDocument parse_document_impl(const Json& j) {
    InputDocument doc;
    doc.schema_version = require(j, "schema_version").get<std::string>();
    if (doc.schema_version != "1")
        throw InputError("unsupported schema_version '" + doc.schema_version + "'");
    std::string kind = require(j, "kind").get<std::string>();
    const Json& p = require(j, "payload");

    if (kind == "stacky_fan") {
        doc.kind = DocumentKind::StackyFan;
        StackyFan sf;
        const Json& group = require(p, "group");
        std::size_t gens = require(group, "generators").get<std::size_t>();
        IntMatrix rel = matrix_from_json(require(group, "relations"));
        if (rel.rows() == 0 && gens > 0) rel = IntMatrix(gens, 0);
        sf.n_group = FgAbelianGroup(gens, std::move(rel));
        const Json& fan = require(p, "fan");
        sf.fan.dim = require(fan, "dim").get<std::size_t>();
        for (const auto& r : require(fan, "rays")) sf.fan.rays.push_back(vector_from_json(r));
        for (const auto& c : require(fan, "max_cones")) {
            RaySet s;
            for (const auto& i : c) s.insert(i.get<std::size_t>());
            sf.fan.max_cones.push_back(std::move(s));
        }
        sf.beta_columns = matrix_from_json(require(p, "beta"));
        doc.stacky_fan = std::move(sf);
    } else if (kind == "weights") {
        doc.kind = DocumentKind::Weights;
        doc.weights = vector_from_json(require(p, "weights"));
    } else if (kind == "matrix") {
        doc.kind = DocumentKind::Matrix;
        doc.matrix = matrix_from_json(require(p, "matrix"));
    } else if (kind == "crossed_module") {
        doc.kind = DocumentKind::CrossedModule;
        FiniteGroup g1 = group_from_json(require(p, "g1"));
        FiniteGroup g2 = group_from_json(require(p, "g2"));
        std::vector<Elt> phi = elt_vector_from_json(require(p, "phi"), g1.order());
        if (phi.size() != g2.order()) throw InputError("phi must list one value per G2 element");
        if (p.value("trivial_action", false)) {
            doc.crossed_module = FiniteCrossedModule::with_trivial_action(
                std::move(g2), std::move(g1), std::move(phi));
        } else {
            std::vector<std::vector<Elt>> action;
            for (const auto& row : require(p, "action"))
                action.push_back(elt_vector_from_json(row, g2.order()));
            if (action.size() != g2.order())
                throw InputError("action must have one row per G2 element");
            for (const auto& row : action)
                if (row.size() != g1.order())
                    throw InputError("action rows must have one entry per G1 element");
            doc.crossed_module = FiniteCrossedModule{std::move(g2), std::move(g1),
                                                     std::move(phi), std::move(action)};
        }
    } else {
        throw InputError("unknown kind '" + kind + "'");
    }
    return doc;
}

}  // namespace

InputDocument parse_document(const Json& j) {
    try {
        return parse_document_impl(j);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        // constructor-level schema violations (bad table, bad relations, ...)
        throw InputError(e.what());
    }
}

InputDocument parse_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

namespace {

bool is_matrix_like(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& row : j) {
        if (!row.is_array()) return false;
        for (const auto& e : row)
            if (!e.is_number() && !e.is_string()) return false;
    }
    return true;
}

bool is_flat_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

void render(const Json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << pad << it.key() << ":";
            const Json& v = it.value();
            if (v.is_object() || (v.is_array() && !is_flat_array(v) && !is_matrix_like(v))) {
                os << "\n";
                render(v, os, indent + 1);
            } else if (is_matrix_like(v)) {
                os << " " << v.dump() << "\n";
            } else {
                os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() || e.is_array()) {
                os << pad << "-\n";
                render(e, os, indent + 1);
            } else {
                os << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, os, 0);
    return os.str();
}

}  // namespace stackyaut
