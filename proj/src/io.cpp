#include <algorithm>
#include <sstream>

#include "regchoice/errors.hpp"
#include "regchoice/io.hpp"

namespace regchoice::io {

namespace {

// Region j's index under canonical (smallest dart) numbering.
std::vector<std::size_t> canonical_order(const FlatDiagram& d) {
    std::vector<std::size_t> first;
    for (const auto& r : d.regions()) first.push_back(dart_index(r.corners.front().crossing, r.corners.front().slot));
    std::vector<std::size_t> sorted = first;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> order;
    for (std::size_t f : first)
        order.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin()));
    return order;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
}

} // namespace

FlatDiagram parse_flat_pd(std::string_view text) {
    return guarded([&] {
        const json doc = json::parse(text);
        if (!doc.is_object() || !doc.contains("crossings"))
            throw ValidationError("flat-PD document needs a \"crossings\" list");
        std::vector<FlatDiagram::Crossing> crossings;
        for (const auto& c : doc.at("crossings")) {
            if (!c.is_array() || c.size() != 4)
                throw ValidationError("each crossing must list exactly four arc labels");
            crossings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(), c[3].get<int>()});
        }
        FlatDiagram d = FlatDiagram::from_crossings(std::move(crossings), doc.value("name", std::string{}));
        if (doc.contains("region_order"))
            d = d.with_region_order(doc.at("region_order").get<std::vector<std::size_t>>());
        return d;
    });
}

json flat_pd_to_json(const FlatDiagram& d) {
    json doc = json::object();
    if (!d.name().empty()) doc["name"] = d.name();
    doc["crossings"] = d.crossings();
    const auto order = canonical_order(d);
    bool identity = true;
    for (std::size_t j = 0; j < order.size(); ++j) identity = identity && order[j] == j;
    if (!identity) doc["region_order"] = order;
    return doc;
}

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("not an integer: " + j.dump());
        return v;
    }
    throw ValidationError("expected an integer, got " + j.dump());
}

json vector_to_json(std::span<const Integer> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(integer_to_json(x));
    return out;
}

IntVector vector_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected an integer list, got " + j.dump());
    IntVector out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

json matrix_to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a list of rows");
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("matrix rows have different lengths");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
    }
    return m;
}

json matrix_document(const RegionChoiceMatrix& m) {
    return {{"rule", rule_name(m.rule)},
            {"row_labels", m.row_labels},
            {"col_labels", m.col_labels},
            {"entries", matrix_to_json(m.entries)}};
}

RegionChoiceMatrix parse_matrix_document(const json& j) {
    return guarded([&] {
        RegionChoiceMatrix m;
        const auto rule = parse_rule(j.at("rule").get<std::string>());
        if (!rule) throw ValidationError("unknown counting rule " + j.at("rule").dump());
        m.rule = *rule;
        m.row_labels = j.at("row_labels").get<std::vector<std::string>>();
        m.col_labels = j.at("col_labels").get<std::vector<std::string>>();
        m.entries = matrix_from_json(j.at("entries"));
        if (m.row_labels.size() != m.entries.rows() ||
            (m.entries.rows() > 0 && m.col_labels.size() != m.entries.cols()))
            throw ValidationError("labels do not match the matrix shape");
        return m;
    });
}

std::string render_matrix_text(const RegionChoiceMatrix& m) {
    std::size_t width = 1;
    for (const auto& l : m.col_labels) width = std::max(width, l.size());
    for (std::size_t i = 0; i < m.entries.rows(); ++i)
        for (const auto& x : m.entries.row(i)) width = std::max(width, x.get_str().size());
    std::size_t label_width = 0;
    for (const auto& l : m.row_labels) label_width = std::max(label_width, l.size());

    std::ostringstream os;
    auto pad = [&os](const std::string& s, std::size_t w) { os << std::string(w - s.size(), ' ') << s; };
    pad("", label_width);
    for (const auto& l : m.col_labels) {
        os << ' ';
        pad(l, width);
    }
    os << '\n';
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        pad(m.row_labels[i], label_width);
        for (const auto& x : m.entries.row(i)) {
            os << ' ';
            pad(x.get_str(), width);
        }
        os << '\n';
    }
    return os.str();
}

json decomposition_to_json(const E00Decomposition& dec) {
    json log = json::array();
    for (const auto& op : dec.log)
        log.push_back({{"kind", op_kind_name(op.kind)},
                       {"target", op.target},
                       {"source", op.source},
                       {"multiplier", integer_to_json(op.multiplier)}});
    return {{"P", matrix_to_json(dec.P)}, {"Q", matrix_to_json(dec.Q)}, {"S", matrix_to_json(dec.S)},
            {"is_e00", dec.is_e00},       {"rank", dec.rank},          {"log", log}};
}

E00Decomposition decomposition_from_json(const json& j) {
    return guarded([&] {
        E00Decomposition dec;
        dec.P = matrix_from_json(j.at("P"));
        dec.Q = matrix_from_json(j.at("Q"));
        dec.S = matrix_from_json(j.at("S"));
        dec.is_e00 = j.at("is_e00").get<bool>();
        dec.rank = j.at("rank").get<std::size_t>();
        for (const auto& op : j.at("log")) {
            const auto kind = parse_op_kind(op.at("kind").get<std::string>());
            if (!kind) throw ValidationError("unknown operation " + op.at("kind").dump());
            dec.log.push_back({*kind, op.at("target").get<std::size_t>(), op.at("source").get<std::size_t>(),
                               integer_from_json(op.at("multiplier"))});
        }
        return dec;
    });
}

std::string fingerprint_hex(const FlatDiagram& d) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << d.fingerprint();
    return os.str();
}

json certificate_to_json(const FlatDiagram& d, const Add1Certificate& cert) {
    IntVector res = cert.image;
    if (cert.crossing < res.size()) res[cert.crossing] -= 1;
    return {{"diagram", flat_pd_to_json(d)},
            {"fingerprint", fingerprint_hex(d)},
            {"rule", rule_name(cert.rule)},
            {"crossing", "v" + std::to_string(cert.crossing + 1)},
            {"assignment", vector_to_json(cert.assignment)},
            {"residual", vector_to_json(res)},
            {"path", path_name(cert.path)}};
}

Add1Certificate certificate_from_json(const json& j) {
    return guarded([&] {
        Add1Certificate cert;
        const auto rule = parse_rule(j.at("rule").get<std::string>());
        if (!rule) throw ValidationError("unknown counting rule " + j.at("rule").dump());
        cert.rule = *rule;
        const auto crossing = j.at("crossing").get<std::string>();
        if (crossing.size() < 2 || crossing[0] != 'v') throw ValidationError("bad crossing label " + crossing);
        cert.crossing = std::stoul(crossing.substr(1)) - 1;
        cert.assignment = vector_from_json(j.at("assignment"));
        const auto path = j.at("path").get<std::string>();
        if (path == "algebraic") cert.path = Add1Path::algebraic;
        else if (path == "geometric") cert.path = Add1Path::geometric;
        else throw ValidationError("unknown add-1 path " + path);
        cert.image = vector_from_json(j.at("residual"));
        if (cert.crossing >= cert.image.size()) throw ValidationError("crossing outside the residual");
        cert.verified = is_zero(cert.image);
        cert.image[cert.crossing] += 1;
        return cert;
    });
}

std::string to_dot(const FlatDiagram& d) {
    std::ostringstream os;
    os << "graph \"" << (d.name().empty() ? "diagram" : d.name()) << "\" {\n";
    for (std::size_t c = 0; c < d.crossing_count(); ++c) os << "  v" << c + 1 << ";\n";
    for (const auto& a : d.arcs())
        os << "  v" << a.ends[0] / 4 + 1 << " -- v" << a.ends[1] / 4 + 1 << " [label=\"" << a.label
           << " (r" << a.sides[0] + 1 << "|r" << a.sides[1] + 1 << ")\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace regchoice::io
