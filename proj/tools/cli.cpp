#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "regchoice/catalog.hpp"
#include "regchoice/errors.hpp"
#include "regchoice/incidence.hpp"
#include "regchoice/io.hpp"
#include "regchoice/moves.hpp"
#include "regchoice/regionchoice.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice::cli {

namespace {

using io::json;

struct Source {
    std::string name;
    std::string file;
};

void add_source(CLI::App* cmd, Source& src) {
    auto* by_name = cmd->add_option("--diagram", src.name, "Catalog diagram name");
    auto* by_file = cmd->add_option("--file", src.file, "Flat-PD document");
    by_name->excludes(by_file);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FlatDiagram load(const Source& src) {
    if (!src.name.empty()) return catalog(src.name);
    if (!src.file.empty()) return io::parse_flat_pd(read_file(src.file));
    throw ValidationError("give a diagram with --diagram NAME or --file PATH");
}

CountingRule rule_of(const std::string& text) {
    const auto rule = parse_rule(text);
    if (!rule) throw ValidationError("unknown counting rule '" + text + "' (single or double)");
    return *rule;
}

// "-1,0,0", "(-1, 0, 0)" or "-1 0 0".
IntVector parse_vector(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || c == '(' || c == ')'; }, ' ');
    std::istringstream in(text);
    IntVector out;
    for (std::string token; in >> token;) {
        Integer v;
        if (v.set_str(token, 10) != 0) throw ValidationError("not an integer: '" + token + "'");
        out.push_back(v);
    }
    return out;
}

IntVector vector_or_zero(const std::string& text, std::size_t n) {
    if (text.empty()) return IntVector(n);
    IntVector v = parse_vector(text);
    if (v.size() != n)
        throw ValidationError("expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    return v;
}

std::size_t parse_crossing(std::string text) {
    if (!text.empty() && (text[0] == 'v' || text[0] == 'V')) text.erase(0, 1);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ValidationError("crossing must look like v3 or 3");
    const unsigned long k = std::stoul(text);
    if (k == 0) throw ValidationError("crossings are numbered from v1");
    return k - 1;
}

std::string region_list(std::span<const std::size_t> regions) {
    std::string s = "{";
    for (std::size_t i = 0; i < regions.size(); ++i) s += (i ? ", r" : "r") + std::to_string(regions[i] + 1);
    return s + "}";
}

std::string counted(std::size_t n, const char* noun) {
    return std::to_string(n) + ' ' + noun + (n == 1 ? "" : "s");
}

std::string summary(const FlatDiagram& d) {
    return (d.name().empty() ? std::string("diagram") : d.name()) + " (" + counted(d.crossing_count(), "crossing") +
           ", " + counted(d.region_count(), "region") + ")";
}

bool unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

// Property checks for one diagram; empty string means everything held.
std::string sweep_checks(const FlatDiagram& d) {
    const auto a2 = build_matrix(d, CountingRule::twice).entries;
    for (auto rule : {CountingRule::single, CountingRule::twice}) {
        const auto dec = reduce_to_e00(build_matrix(d, rule).entries);
        if (!dec.is_e00) return std::string(rule_name(rule)) + " matrix not E00";
        if (!unimodular(dec.P) || !unimodular(dec.Q)) return "P or Q not unimodular";
        for (const auto& arc : arc_unimodularity_report(d, rule))
            if (arc.det != 1) return "arc " + std::to_string(arc.arc) + " determinant " + arc.det.get_str();
    }
    for (std::size_t v = 0; v < d.crossing_count(); ++v) {
        const auto geo = add1_geometric(d, v);
        const auto alg = add1_algebraic(d, CountingRule::twice, v);
        if (!is_zero(multiply(a2, subtract(geo.assignment, alg.assignment))))
            return "add-1 paths disagree at v" + std::to_string(v + 1);
    }
    IntVector colour;
    for (int s : checkerboard(d).sign) colour.push_back(s);
    if (!is_zero(multiply(a2, colour))) return "checkerboard vector not in the double-rule kernel";
    return {};
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(std::span<const std::string> args) {
        CLI::App app{"Region choice problems on knot projections", "regchoice"};
        app.require_subcommand(1);
        app.set_version_flag("--version", "regchoice 1.0");
        declare(app);

        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? exit_ok : exit_invalid;
        }

        try {
            return (this->*command_)();
        } catch (const ValidationError& e) {
            err_ << "error: " << e.what() << '\n';
            return exit_invalid;
        } catch (const DimensionMismatch& e) {
            err_ << "error: " << e.what() << '\n';
            return exit_invalid;
        } catch (const InvariantViolation& e) {
            err_ << "invariant violation: " << e.what() << '\n';
            return exit_invariant;
        } catch (const NotE00Error& e) {
            err_ << "invariant violation: " << e.what() << '\n';
            return exit_invariant;
        }
    }

private:
    using Command = int (Runner::*)();

    void on(CLI::App* cmd, Command c) {
        cmd->callback([this, c] { command_ = c; });
    }

    void declare(CLI::App& app) {
        auto* matrix = app.add_subcommand("matrix", "Print a region choice matrix");
        add_source(matrix, src_);
        matrix->add_option("--rule", rule_, "single or double (default single)");
        matrix->add_option("--format", format_, "text or json")->check(CLI::IsMember({"text", "json"}));
        on(matrix, &Runner::cmd_matrix);

        auto* regions = app.add_subcommand("regions", "List regions with their corners");
        add_source(regions, src_);
        regions->add_option("--format", format_, "text or json")->check(CLI::IsMember({"text", "json"}));
        on(regions, &Runner::cmd_regions);

        auto* validate = app.add_subcommand("validate", "Check a flat-PD document");
        add_source(validate, src_);
        on(validate, &Runner::cmd_validate);

        auto* solve = app.add_subcommand("solve", "Solve A u + b = 0");
        add_source(solve, src_);
        solve->add_option("--rule", rule_, "single or double (default single)");
        solve->add_option("--b", b_, "Points at the crossings, e.g. -1,0,0")->allow_extra_args(false);
        solve->add_option("--minimize", minimize_, "linf or l2")->check(CLI::IsMember({"linf", "l2"}));
        solve->add_flag("--mod2", mod2_, "Solve the single rule modulo 2 (b is a bit vector)");
        solve->add_option("--format", format_, "text or json")->check(CLI::IsMember({"text", "json"}));
        on(solve, &Runner::cmd_solve);

        auto* add1 = app.add_subcommand("add1", "Assignment adding 1 at one crossing only");
        add_source(add1, src_);
        add1->add_option("--crossing", crossing_, "v1, v2, ...")->required();
        add1->add_option("--rule", rule_, "single or double (default double)");
        add1->add_option("--path", path_, "algebraic or geometric")
            ->check(CLI::IsMember({"algebraic", "geometric"}))
            ->capture_default_str();
        add1->add_option("--format", format_, "text or json")->check(CLI::IsMember({"text", "json"}));
        on(add1, &Runner::cmd_add1);

        auto* verify = app.add_subcommand("verify", "Recompute A u + b, or check a certificate");
        add_source(verify, src_);
        verify->add_option("--rule", rule_, "single or double (default single)");
        verify->add_option("--u", u_, "Region values");
        verify->add_option("--b", b_, "Points at the crossings (default zero)");
        verify->add_option("--certificate", certificate_, "add1 certificate document");
        on(verify, &Runner::cmd_verify);

        auto* random = app.add_subcommand("random", "Seeded random knot projection");
        random->add_option("--seed", seed_)->required();
        random->add_option("--moves", moves_)->capture_default_str();
        on(random, &Runner::cmd_random);

        auto* cat = app.add_subcommand("catalog", "List the built-in diagrams");
        on(cat, &Runner::cmd_catalog);

        auto* rref = app.add_subcommand("rref", "Symbolic echelon form over the rationals");
        add_source(rref, src_);
        rref->add_option("--rule", rule_, "single or double (default single)");
        rref->add_option("--b", b_, "Evaluate the echelon at this right-hand side");
        on(rref, &Runner::cmd_rref);

        auto* dot = app.add_subcommand("dot", "Graphviz rendering of the 4-valent graph");
        add_source(dot, src_);
        on(dot, &Runner::cmd_dot);

        auto* decompose = app.add_subcommand("decompose", "Export P, Q, S and the operation log");
        add_source(decompose, src_);
        decompose->add_option("--rule", rule_, "single or double (default single)");
        on(decompose, &Runner::cmd_decompose);

        auto* sweep = app.add_subcommand("sweep", "Property checks over a range of random diagrams");
        sweep->add_option("--from", from_)->capture_default_str();
        sweep->add_option("--to", to_)->capture_default_str();
        sweep->add_option("--moves", moves_)->capture_default_str();
        sweep->add_option("--threads", threads_, "Worker threads; output does not depend on it")
            ->check(CLI::Range(1U, 256U))
            ->capture_default_str();
        on(sweep, &Runner::cmd_sweep);
    }

    int cmd_matrix() {
        const auto d = load(src_);
        const auto m = build_matrix(d, rule_or("single"));
        if (format_ == "json") out_ << io::matrix_document(m).dump() << '\n';
        else out_ << io::render_matrix_text(m);
        return exit_ok;
    }

    int cmd_regions() {
        const auto d = load(src_);
        json doc = json::array();
        for (const auto& r : d.regions()) {
            json corners = json::array();
            std::string text;
            for (const auto& c : r.corners) {
                corners.push_back({{"crossing", "v" + std::to_string(c.crossing + 1)}, {"slot", c.slot}});
                text += " v" + std::to_string(c.crossing + 1) + "." + std::to_string(c.slot);
            }
            if (format_ == "json") doc.push_back({{"region", "r" + std::to_string(r.id + 1)}, {"corners", corners}});
            else out_ << 'r' << r.id + 1 << ":" << text << '\n';
        }
        if (format_ == "json") out_ << doc.dump() << '\n';
        return exit_ok;
    }

    int cmd_validate() {
        const auto d = load(src_);
        out_ << "valid: " << summary(d) << ", " << d.component_count()
             << (d.is_knot() ? " component" : " components") << '\n';
        return exit_ok;
    }

    int cmd_solve() {
        const auto d = load(src_);
        if (b_.empty()) throw ValidationError("solve needs --b");
        if (mod2_) return solve_mod2_command(d);

        const CountingRule rule = rule_or("single");
        const IntVector b = vector_or_zero(b_, d.crossing_count());
        const auto family = solve(d, rule, b);
        IntVector u = family.particular;
        if (!minimize_.empty()) u = minimize_in_family(family, minimize_ == "linf" ? Norm::linf : Norm::l2);
        const auto report = verify(d, rule, u, b);
        if (!report.pass) throw InvariantViolation("solver output failed verification");

        if (format_ == "json") {
            out_ << json{{"diagram", d.name()},
                         {"rule", rule_name(rule)},
                         {"b", io::vector_to_json(b)},
                         {"u", io::vector_to_json(u)},
                         {"kernel", {io::vector_to_json(family.k1), io::vector_to_json(family.k2)}},
                         {"residual", io::vector_to_json(report.residual)},
                         {"pass", true}}
                        .dump()
                 << '\n';
            return exit_ok;
        }
        out_ << summary(d) << ", " << rule_name(rule) << " rule\n"
             << "b  = " << to_string(b) << '\n'
             << "u  = " << to_string(u) << '\n'
             << "k1 = " << to_string(family.k1) << '\n'
             << "k2 = " << to_string(family.k2) << '\n'
             << "PASS residual " << to_string(report.residual) << '\n';
        return exit_ok;
    }

    int solve_mod2_command(const FlatDiagram& d) {
        const IntVector raw = vector_or_zero(b_, d.crossing_count());
        BitVector bits;
        for (const auto& x : raw) {
            if (x != 0 && x != 1) throw ValidationError("--mod2 expects a 0/1 vector");
            bits.push_back(static_cast<std::uint8_t>(x.get_si()));
        }
        const auto a = mod2(build_matrix(d, CountingRule::single));
        const auto x = solve_gf2(a, bits);
        if (!x) {
            out_ << "UNSOLVABLE\n";
            return exit_unsolvable;
        }
        std::vector<std::size_t> chosen;
        for (std::size_t j = 0; j < x->size(); ++j)
            if ((*x)[j]) chosen.push_back(j);
        const bool pass = a.apply(*x) == bits;
        if (!pass) throw InvariantViolation("mod 2 solution failed verification");
        out_ << summary(d) << ", single rule mod 2\n"
             << "regions " << region_list(chosen) << '\n'
             << "PASS parity matches b\n";
        return exit_ok;
    }

    int cmd_add1() {
        const auto d = load(src_);
        const std::size_t v = parse_crossing(crossing_);
        const CountingRule rule = rule_or("double");
        Add1Certificate cert;
        if (path_ == "geometric") {
            if (rule != CountingRule::twice)
                throw ValidationError("the geometric add-1 construction is defined for the double rule only");
            cert = add1_geometric(d, v);
        } else {
            cert = add1_algebraic(d, rule, v);
        }
        if (format_ == "json") {
            out_ << io::certificate_to_json(d, cert).dump() << '\n';
            return exit_ok;
        }
        out_ << summary(d) << ", " << rule_name(rule) << " rule, " << path_name(cert.path) << " path\n"
             << "crossing v" << v + 1 << '\n'
             << "u   = " << to_string(cert.assignment) << '\n'
             << "A u = " << to_string(cert.image) << '\n'
             << "PASS A u = e_v" << v + 1 << '\n';
        return exit_ok;
    }

    int cmd_verify() {
        if (!certificate_.empty()) return verify_certificate();
        const auto d = load(src_);
        const CountingRule rule = rule_or("single");
        if (u_.empty()) throw ValidationError("verify needs --u or --certificate");
        const IntVector u = parse_vector(u_);
        const IntVector b = vector_or_zero(b_, d.crossing_count());
        const auto report = verify(d, rule, u, b);
        out_ << summary(d) << ", " << rule_name(rule) << " rule\n";
        for (const auto& c : report.crossings)
            out_ << 'v' << c.crossing + 1 << ": " << c.initial.get_str() << " + " << c.added.get_str() << " = "
                 << c.result.get_str() << '\n';
        out_ << (report.pass ? "PASS" : "FAIL") << " residual " << to_string(report.residual) << '\n';
        return report.pass ? exit_ok : exit_check_failed;
    }

    int verify_certificate() {
        const json doc = [&] {
            try {
                return json::parse(read_file(certificate_));
            } catch (const json::exception& e) {
                throw ValidationError(std::string("malformed certificate: ") + e.what());
            }
        }();
        if (!doc.contains("diagram")) throw ValidationError("certificate has no diagram");
        const auto d = io::parse_flat_pd(doc.at("diagram").dump());
        const auto cert = io::certificate_from_json(doc);
        if (doc.value("fingerprint", std::string{}) != io::fingerprint_hex(d))
            throw ValidationError("certificate fingerprint does not match its diagram");
        if (cert.crossing >= d.crossing_count()) throw ValidationError("certificate crossing out of range");
        IntVector target(d.crossing_count());
        target[cert.crossing] = 1;
        const auto image = multiply(build_matrix(d, cert.rule).entries, cert.assignment);
        const bool pass = image == target;
        out_ << summary(d) << ", " << rule_name(cert.rule) << " rule, crossing v" << cert.crossing + 1 << '\n'
             << (pass ? "PASS" : "FAIL") << " A u = " << to_string(image) << '\n';
        return pass ? exit_ok : exit_check_failed;
    }

    int cmd_random() {
        out_ << io::flat_pd_to_json(random_diagram(seed_, moves_)).dump() << '\n';
        return exit_ok;
    }

    int cmd_catalog() {
        for (auto name : catalog_names()) {
            const auto d = catalog(name);
            out_ << name << "  " << counted(d.crossing_count(), "crossing") << ", " << counted(d.region_count(), "region")
                 << '\n';
        }
        return exit_ok;
    }

    int cmd_rref() {
        const auto d = load(src_);
        const auto echelon = rref_rational(build_matrix(d, rule_or("single")).entries);
        out_ << echelon.render();
        if (!b_.empty()) {
            const auto x = echelon.evaluate(vector_or_zero(b_, d.crossing_count()));
            if (!x) {
                out_ << "inconsistent\n";
                return exit_unsolvable;
            }
            out_ << "u =";
            for (const auto& q : *x) out_ << ' ' << q.get_str();
            out_ << '\n';
        }
        return exit_ok;
    }

    int cmd_dot() {
        out_ << io::to_dot(load(src_));
        return exit_ok;
    }

    int cmd_decompose() {
        const auto d = load(src_);
        out_ << io::decomposition_to_json(reduce_to_e00(build_matrix(d, rule_or("single")).entries)).dump() << '\n';
        return exit_ok;
    }

    int cmd_sweep() {
        if (to_ < from_) throw ValidationError("--to is smaller than --from");
        const std::size_t count = to_ - from_ + 1;
        std::vector<std::string> lines(count);
        std::vector<char> ok(count, 0);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                const std::uint64_t seed = from_ + i;
                std::string problem;
                std::size_t n = 0;
                try {
                    const auto d = random_diagram(seed, moves_);
                    n = d.crossing_count();
                    problem = sweep_checks(d);
                } catch (const std::exception& e) {
                    problem = e.what();
                }
                ok[i] = problem.empty();
                lines[i] = "seed " + std::to_string(seed) + ": " + counted(n, "crossing") + ", " +
                           (problem.empty() ? std::string("PASS") : "FAIL " + problem);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads_; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        for (const auto& l : lines) out_ << l << '\n';
        const auto passed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
        out_ << "sweep: " << passed << '/' << count << " PASS\n";
        return passed == count ? exit_ok : exit_invariant;
    }

    CountingRule rule_or(const char* fallback) const { return rule_of(rule_.empty() ? fallback : rule_); }

    std::ostream& out_;
    std::ostream& err_;
    Command command_ = nullptr;

    Source src_;
    std::string rule_;
    std::string format_ = "text";
    std::string b_, u_, minimize_, crossing_, certificate_;
    std::string path_ = "algebraic";
    bool mod2_ = false;
    std::uint64_t seed_ = 0;
    std::size_t moves_ = 8;
    std::uint64_t from_ = 1, to_ = 50;
    unsigned threads_ = 1;
};

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(args);
}

} // namespace regchoice::cli
