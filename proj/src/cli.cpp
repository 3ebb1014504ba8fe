#include "thetadiv/cli.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "thetadiv/dr_cycle.hpp"
#include "thetadiv/io.hpp"
#include "thetadiv/solver.hpp"
#include "thetadiv/test_curves.hpp"
#include "thetadiv/verify.hpp"

namespace thetadiv::cli {

namespace {

using io::Json;

std::string weights_str(const WeightVector& d) {
    std::string s = "(";
    for (int i = 1; i <= d.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(d[i]);
    }
    return s + ")";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_class_pretty(std::ostream& out, const DivisorClass& cls) {
    const auto& basis = cls.basis();
    std::size_t width = 0;
    for (const auto& gen : basis.generators()) width = std::max(width, gen.label().size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (cls.compact_type() && i == Basis::delta_irr_index()) continue;
        out << "  " << std::left << std::setw(static_cast<int>(width)) << basis[i].label() << "  "
            << cls.coeff_at(i).str() << "\n";
    }
}

WeightVector weights_for(const RunConfig& cfg) {
    if (!cfg.d_given) throw std::invalid_argument("--d is required for this command");
    return WeightVector(cfg.d);
}

void warn_low_genus(const RunConfig& cfg, std::ostream& err) {
    if (cfg.g < 3)
        err << "warning: g=" << cfg.g << " < 3; the generators are not known to form a basis, formulas are evaluated as written\n";
}

int emit_class(const RunConfig& cfg, const DivisorClass& cls, const std::string& title, std::ostream& out) {
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, io::to_json(cls)); break;
        case OutputFormat::Csv: out << io::to_csv(cls); break;
        case OutputFormat::Pretty:
            out << title << "\n";
            print_class_pretty(out, cls);
            break;
    }
    return kExitOk;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    warn_low_genus(cfg, err);
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, io::basis_json(cfg.g, cfg.n)); break;
        case OutputFormat::Csv: out << io::basis_csv(cfg.g, cfg.n); break;
        case OutputFormat::Pretty: {
            const auto basis = Basis::make(cfg.g, cfg.n);
            out << "basis of Pic_Q(M_" << cfg.g << "," << cfg.n << "): " << basis->size() << " generators\n";
            for (std::size_t i = 0; i < basis->size(); ++i) out << "  " << i << "  " << (*basis)[i].label() << "\n";
            break;
        }
    }
    return kExitOk;
}

int cmd_curves(const RunConfig& cfg, std::ostream& out) {
    const auto curves = enumerate_test_curves(cfg.g, cfg.n);
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, io::curves_json(cfg.g, cfg.n, curves)); break;
        case OutputFormat::Csv: out << io::curves_csv(curves); break;
        case OutputFormat::Pretty:
            out << "test curves for g=" << cfg.g << " n=" << cfg.n << ": " << curves.size() << "\n";
            for (std::size_t i = 0; i < curves.size(); ++i) out << "  " << i << "  " << curves[i].label() << "\n";
            break;
    }
    return kExitOk;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
    const auto m = build_matrix(cfg.g, cfg.n);
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, io::to_json(m)); break;
        case OutputFormat::Csv: out << io::to_csv(m); break;
        case OutputFormat::Pretty: {
            std::size_t width = 1;
            for (const auto& row : m.entries) {
                for (const auto& x : row) width = std::max(width, x.str().size());
            }
            for (const auto& gen : m.cols) width = std::max(width, gen.label().size());
            std::size_t label_width = 0;
            for (const auto& c : m.rows) label_width = std::max(label_width, c.label().size());
            out << std::setw(static_cast<int>(label_width)) << "";
            for (const auto& gen : m.cols) out << " " << std::setw(static_cast<int>(width)) << gen.label();
            out << "\n";
            for (std::size_t r = 0; r < m.rows.size(); ++r) {
                out << std::left << std::setw(static_cast<int>(label_width)) << m.rows[r].label() << std::right;
                for (const auto& x : m.entries[r]) out << " " << std::setw(static_cast<int>(width)) << x.str();
                out << "\n";
            }
            break;
        }
    }
    return kExitOk;
}

int cmd_class(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    warn_low_genus(cfg, err);
    const WeightVector d = weights_for(cfg);
    const std::string w = weights_str(d);
    if (cfg.target == "T") return emit_class(cfg, class_T(cfg.g, cfg.n, d), "[s_d^* T] for d=" + w, out);
    if (cfg.target == "theta") return emit_class(cfg, class_Theta(cfg.g, cfg.n, d), "[s_d^* Theta] for d=" + w, out);
    if (cfg.target == "mueller")
        return emit_class(cfg, class_D_direct(cfg.g, cfg.n, d, cfg.plus),
                          "[D_d] for d=" + w + " (P_+ " + io::plus_convention_name(cfg.plus) + ")", out);
    throw std::invalid_argument("unknown class kind: " + cfg.target + " (expected T, theta or mueller)");
}

int cmd_ledger(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    warn_low_genus(cfg, err);
    const WeightVector d = weights_for(cfg);
    const auto ledger = correction_ledger(cfg.g, cfg.n, d, cfg.plus);
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, io::to_json(ledger, cfg.g, cfg.n, d, cfg.plus)); break;
        case OutputFormat::Csv: out << io::to_csv(ledger, cfg.g, cfg.n); break;
        case OutputFormat::Pretty:
            out << "vanishing orders for d=" << weights_str(d) << " (P_+ " << io::plus_convention_name(cfg.plus) << ")\n";
            for (const auto& t : ledger.terms) {
                out << "  (h=" << t.representative.h << ", P=" << t.representative.P.str() << ")  "
                    << t.multiplicity.str() << "  "
                    << DivGenerator::delta(canonicalize_boundary(t.representative, cfg.g, cfg.n)).label() << "\n";
            }
            out << "  delta_irr  " << ledger.delta_irr_order.str() << "\n";
            break;
    }
    return kExitOk;
}

int cmd_dr(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    warn_low_genus(cfg, err);
    const WeightVector d = weights_for(cfg);
    const auto cycle = dr_expansion(cfg.g, cfg.n, d);
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, io::to_json(cycle)); break;
        case OutputFormat::Csv: out << io::to_csv(cycle); break;
        case OutputFormat::Pretty:
            out << "formal DR cycle (1/" << cfg.g << "!)[s_d^* T]^" << cfg.g << " for d=" << weights_str(d) << ": "
                << cycle.terms().size() << " terms\n";
            for (const auto& [m, c] : cycle.terms()) out << "  " << c.str() << "  " << io::monomial_label(cycle, m) << "\n";
            break;
    }
    return kExitOk;
}

Json verify_json(const VerifyReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json entry;
        Json weights = Json::array();
        for (auto v : f.d.values()) weights.push_back(v);
        entry["d"] = std::move(weights);
        entry["detail"] = f.detail;
        failures.push_back(std::move(entry));
    }
    Json j;
    j["check"] = verify_kind_name(r.kind);
    j["g"] = r.g;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    if (r.kind == VerifyKind::Mueller) j["plus"] = io::plus_convention_name(r.convention);
    j["passed"] = r.passed;
    j["ok"] = r.ok();
    j["failures"] = std::move(failures);
    if (r.kind == VerifyKind::Rank) j["rank_report"] = io::to_json(r.rank);
    return j;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto report = run_verification(parse_verify_kind(cfg.target), cfg.g, cfg.n, cfg.trials, cfg.seed, cfg.plus);
    switch (cfg.format) {
        case OutputFormat::Json: print_json(out, verify_json(report)); break;
        case OutputFormat::Csv:
            out << io::csv_row({"check", "g", "n", "trials", "seed", "passed", "ok"});
            out << io::csv_row({verify_kind_name(report.kind), std::to_string(report.g), std::to_string(report.n),
                                std::to_string(report.trials), std::to_string(report.seed),
                                std::to_string(report.passed), report.ok() ? "true" : "false"});
            break;
        case OutputFormat::Pretty:
            out << "verify " << verify_kind_name(report.kind) << " (g=" << report.g << ", n=" << report.n
                << ", seed=" << report.seed << "): " << (report.ok() ? "pass" : "FAIL") << ", " << report.passed << "/"
                << report.trials << " identities hold\n";
            if (report.kind == VerifyKind::Rank) {
                out << "  rank " << report.rank.rank << " of " << report.rank.expected
                    << ", det = " << report.rank.determinant.str() << "\n";
            }
            if (!report.ok()) print_json(out, verify_json(report));
            break;
    }
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::vector<std::int64_t> parse_weights(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::int64_t v = 0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        if (!item.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (item.empty() || ec != std::errc() || ptr != last)
            throw std::invalid_argument("bad weight list '" + text + "': expected comma-separated integers");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.d_given && static_cast<int>(cfg.d.size()) != cfg.n)
            throw std::invalid_argument("--d has " + std::to_string(cfg.d.size()) + " entries but --n is " +
                                        std::to_string(cfg.n));
        if (cfg.command == "basis") return cmd_basis(cfg, out, err);
        if (cfg.command == "curves") return cmd_curves(cfg, out);
        if (cfg.command == "matrix") return cmd_matrix(cfg, out);
        if (cfg.command == "class") return cmd_class(cfg, out, err);
        if (cfg.command == "ledger") return cmd_ledger(cfg, out, err);
        if (cfg.command == "dr") return cmd_dr(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        throw std::invalid_argument("unknown command: " + cfg.command);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string d_text;
    std::string format = "pretty";
    std::string plus = "nonneg";

    CLI::App app{"Exact divisor classes of theta pullbacks on moduli of pointed curves"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> formats{
        {"pretty", OutputFormat::Pretty}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

    auto add_common = [&](CLI::App* sub, bool needs_d) {
        sub->add_option("--g", cfg.g, "genus")->required()->check(CLI::Range(1, 64));
        sub->add_option("--n", cfg.n, "number of marked points")->required()->check(CLI::Range(1, kMaxMarkings));
        if (needs_d) sub->add_option("--d", d_text, "comma-separated integer weights, e.g. 3,-1")->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
    };

    auto* basis = app.add_subcommand("basis", "ordered divisor basis");
    add_common(basis, false);
    auto* curves = app.add_subcommand("curves", "test-curve list");
    add_common(curves, false);
    auto* matrix = app.add_subcommand("matrix", "test curve / divisor intersection matrix");
    add_common(matrix, false);

    auto* cls = app.add_subcommand("class", "divisor class of a theta pullback");
    cls->add_option("kind", cfg.target, "T, theta or mueller")->required()->check(CLI::IsMember({"T", "theta", "mueller"}));
    add_common(cls, true);
    cls->add_option("--plus", plus, "P_+ convention")->check(CLI::IsMember({"nonneg", "strict"}));

    auto* ledger = app.add_subcommand("ledger", "boundary vanishing orders of the theta pullback");
    add_common(ledger, true);
    ledger->add_option("--plus", plus, "P_+ convention")->check(CLI::IsMember({"nonneg", "strict"}));

    auto* dr = app.add_subcommand("dr", "formal double ramification cycle");
    add_common(dr, true);

    auto* verify = app.add_subcommand("verify", "randomized identity sweep");
    verify->add_option("kind", cfg.target, "rank, T, theta or mueller")
        ->required()
        ->check(CLI::IsMember({"rank", "T", "theta", "mueller"}));
    add_common(verify, false);
    verify->add_option("--trials", cfg.trials, "number of random weight vectors")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "64-bit seed");
    verify->add_option("--plus", plus, "P_+ convention")->check(CLI::IsMember({"nonneg", "strict"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = formats.at(format);
    cfg.plus = plus == "strict" ? PlusConvention::Strict : PlusConvention::NonNegative;
    if (!d_text.empty()) {
        try {
            cfg.d = parse_weights(d_text);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        cfg.d_given = true;
    }
    return run(cfg, out, err);
}

}  // namespace thetadiv::cli
