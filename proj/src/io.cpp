#include "thetadiv/io.hpp"

#include <sstream>
#include <stdexcept>

namespace thetadiv::io {

namespace {

Json mark_set_json(MarkSet P) {
    Json arr = Json::array();
    for (int i : P.elements()) arr.push_back(i);
    return arr;
}

MarkSet mark_set_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("P must be an array of marking indices");
    std::vector<int> points;
    for (const auto& v : j) points.push_back(v.get<int>());
    return MarkSet::of(points);
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational values must be strings");
    return Rational::parse(j.get<std::string>());
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

}  // namespace

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

Json to_json(const DivisorClass& cls) {
    Json coeffs;
    coeffs["lambda1"] = cls.lambda1().str();
    if (!cls.compact_type()) coeffs["delta_irr"] = cls.delta_irr().str();
    Json ks = Json::array();
    for (int i = 1; i <= cls.markings(); ++i) ks.push_back(cls.k(i).str());
    coeffs[cls.frame() == DivisorClass::Frame::K ? "K" : "psi"] = std::move(ks);
    Json boundary = Json::array();
    for (const auto& b : cls.basis().boundary()) {
        Json entry;
        entry["h"] = b.h;
        entry["P"] = mark_set_json(b.P);
        entry["c"] = cls.delta(b).str();
        boundary.push_back(std::move(entry));
    }
    coeffs["boundary"] = std::move(boundary);
    Json j;
    j["g"] = cls.genus();
    j["n"] = cls.markings();
    j["coeffs"] = std::move(coeffs);
    return j;
}

DivisorClass divisor_class_from_json(const Json& j) {
    try {
        const int g = require(j, "g").get<int>();
        const int n = require(j, "n").get<int>();
        const Json& coeffs = require(j, "coeffs");
        const bool psi = coeffs.contains("psi");
        DivisorClass out(Basis::make(g, n), psi ? DivisorClass::Frame::Psi : DivisorClass::Frame::K);
        if (!coeffs.contains("delta_irr")) out = out.restricted_to_compact_type();
        out.set(DivGenerator::lambda1(), rational_from_json(require(coeffs, "lambda1")));
        if (coeffs.contains("delta_irr")) out.set(DivGenerator::delta_irr(), rational_from_json(coeffs.at("delta_irr")));
        const Json& ks = require(coeffs, psi ? "psi" : "K");
        if (!ks.is_array() || static_cast<int>(ks.size()) != n)
            throw std::invalid_argument("K list must have n entries");
        for (int i = 1; i <= n; ++i) out.set(DivGenerator::k(i), rational_from_json(ks[static_cast<std::size_t>(i - 1)]));
        for (const auto& entry : require(coeffs, "boundary")) {
            const BoundaryIndex b{require(entry, "h").get<int>(), mark_set_from_json(require(entry, "P"))};
            out.add(DivGenerator::delta(b), rational_from_json(require(entry, "c")));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed divisor class JSON: ") + e.what());
    }
}

std::string to_csv(const DivisorClass& cls) {
    std::string out = csv_row({"generator", "coefficient"});
    const auto& basis = cls.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (cls.compact_type() && i == Basis::delta_irr_index()) continue;
        std::string label = basis[i].label();
        if (cls.frame() == DivisorClass::Frame::Psi && basis[i].kind() == DivGenerator::Kind::K)
            label = "psi" + std::to_string(basis[i].index());
        out += csv_row({label, cls.coeff_at(i).str()});
    }
    return out;
}

Json basis_json(int g, int n) {
    Json gens = Json::array();
    const auto basis = Basis::make(g, n);
    for (const auto& gen : basis->generators()) gens.push_back(gen.label());
    Json j;
    j["g"] = g;
    j["n"] = n;
    j["generators"] = std::move(gens);
    return j;
}

std::string basis_csv(int g, int n) {
    std::string out = csv_row({"index", "generator"});
    std::size_t i = 0;
    const auto basis = Basis::make(g, n);
    for (const auto& gen : basis->generators()) out += csv_row({std::to_string(i++), gen.label()});
    return out;
}

Json curves_json(int g, int n, const std::vector<TestCurve>& curves) {
    Json labels = Json::array();
    for (const auto& c : curves) labels.push_back(c.label());
    Json j;
    j["g"] = g;
    j["n"] = n;
    j["curves"] = std::move(labels);
    return j;
}

std::string curves_csv(const std::vector<TestCurve>& curves) {
    std::string out = csv_row({"index", "curve"});
    std::size_t i = 0;
    for (const auto& c : curves) out += csv_row({std::to_string(i++), c.label()});
    return out;
}

Json to_json(const IntersectionMatrix& m) {
    Json rows = Json::array();
    for (const auto& c : m.rows) rows.push_back(c.label());
    Json cols = Json::array();
    for (const auto& gen : m.cols) cols.push_back(gen.label());
    Json entries = Json::array();
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        entries.push_back(std::move(r));
    }
    Json j;
    j["g"] = m.g;
    j["n"] = m.n;
    j["rows"] = std::move(rows);
    j["cols"] = std::move(cols);
    j["entries"] = std::move(entries);
    return j;
}

std::string to_csv(const IntersectionMatrix& m) {
    std::vector<std::string> header{"curve"};
    for (const auto& gen : m.cols) header.push_back(gen.label());
    std::string out = csv_row(header);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        std::vector<std::string> fields{m.rows[r].label()};
        for (const auto& x : m.entries[r]) fields.push_back(x.str());
        out += csv_row(fields);
    }
    return out;
}

std::string plus_convention_name(PlusConvention convention) {
    return convention == PlusConvention::NonNegative ? "nonneg" : "strict";
}

Json to_json(const CorrectionLedger& ledger, int g, int n, const WeightVector& d, PlusConvention convention) {
    Json weights = Json::array();
    for (auto v : d.values()) weights.push_back(v);
    Json terms = Json::array();
    for (const auto& t : ledger.terms) {
        Json entry;
        entry["h"] = t.representative.h;
        entry["P"] = mark_set_json(t.representative.P);
        entry["mult"] = t.multiplicity.str();
        entry["class"] = DivGenerator::delta(canonicalize_boundary(t.representative, g, n)).label();
        terms.push_back(std::move(entry));
    }
    Json j;
    j["g"] = g;
    j["n"] = n;
    j["d"] = std::move(weights);
    j["plus"] = plus_convention_name(convention);
    j["terms"] = std::move(terms);
    j["delta_irr_order"] = ledger.delta_irr_order.str();
    return j;
}

std::string to_csv(const CorrectionLedger& ledger, int g, int n) {
    std::string out = csv_row({"h", "P", "mult", "class"});
    for (const auto& t : ledger.terms) {
        out += csv_row({std::to_string(t.representative.h), t.representative.P.str(), t.multiplicity.str(),
                        DivGenerator::delta(canonicalize_boundary(t.representative, g, n)).label()});
    }
    out += csv_row({"irr", "", ledger.delta_irr_order.str(), "delta_irr"});
    return out;
}

std::string monomial_label(const FormalCycle& cycle, const FormalMonomial& m) {
    if (m.factors().empty()) return "1";
    std::string out;
    for (const auto& [idx, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += cycle.basis()[idx].label();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Json to_json(const FormalCycle& cycle) {
    Json terms = Json::array();
    for (const auto& [m, c] : cycle.terms()) {
        Json mono = Json::array();
        for (const auto& [idx, e] : m.factors()) {
            Json f;
            f["gen"] = cycle.basis()[idx].label();
            f["exp"] = e;
            mono.push_back(std::move(f));
        }
        Json t;
        t["monomial"] = std::move(mono);
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    Json j;
    j["g"] = cycle.genus();
    j["n"] = cycle.markings();
    j["terms"] = std::move(terms);
    return j;
}

FormalCycle formal_cycle_from_json(const Json& j) {
    try {
        const int g = require(j, "g").get<int>();
        const int n = require(j, "n").get<int>();
        const auto basis = Basis::make(g, n);
        FormalCycle out(basis, g);
        for (const auto& t : require(j, "terms")) {
            std::vector<std::pair<std::size_t, int>> factors;
            for (const auto& f : require(t, "monomial")) {
                factors.emplace_back(basis->index_of(DivGenerator::parse(require(f, "gen").get<std::string>())),
                                     require(f, "exp").get<int>());
            }
            out.add(FormalMonomial(std::move(factors)), rational_from_json(require(t, "c")));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed formal cycle JSON: ") + e.what());
    }
}

std::string to_csv(const FormalCycle& cycle) {
    std::string out = csv_row({"monomial", "c"});
    for (const auto& [m, c] : cycle.terms()) out += csv_row({monomial_label(cycle, m), c.str()});
    return out;
}

Json to_json(const RankReport& report) {
    Json failed = Json::array();
    for (const auto& r : report.failed_rows) failed.push_back(r);
    Json j;
    j["g"] = report.g;
    j["n"] = report.n;
    j["rank"] = report.rank;
    j["expected"] = report.expected;
    j["det_nonzero"] = report.det_nonzero;
    j["failed_rows"] = std::move(failed);
    return j;
}

}  // namespace thetadiv::io
