#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "kudla/arith.hpp"
#include "kudla/eisenstein.hpp"
#include "kudla/errors.hpp"
#include "kudla/green_integrals.hpp"
#include "kudla/lattice.hpp"
#include "kudla/siegel.hpp"
#include "kudla/verification.hpp"

namespace kudla::cli {
namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, std::string, double, long, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

constexpr long kMaxRows = 20000;

double parse_real(const std::string& s, const char* what) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(x))
        throw std::invalid_argument(std::string("cannot parse ") + what + " '" + s + "'");
    return x;
}

std::string cell_text(const Cell& c) {
    struct V {
        std::string operator()(std::monostate) const { return "NA"; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(long x) const { return std::to_string(x); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(V{}, c);
}

json cell_json(const Cell& c) {
    struct V {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(const std::string& s) const { return s; }
        // Round through the 15-digit text so JSON and CSV carry the same number.
        json operator()(double x) const { return std::strtod(format_double(x).c_str(), nullptr); }
        json operator()(long x) const { return x; }
        json operator()(bool b) const { return b; }
    };
    return std::visit(V{}, c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

void write_table(std::ostream& os, const std::string& format, const std::string& command, const json& inputs,
                 const std::string& key, const Table& t) {
    if (format == "json") {
        json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        json rows = json::array();
        for (const auto& r : t.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(r[i]);
            rows.push_back(std::move(obj));
        }
        doc[key] = std::move(rows);
        os << doc.dump(2) << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
        os << "\r\n";
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(r[i]));
            os << "\r\n";
        }
    } else {
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cell_text(r[i]).size());
        const auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << cells[i];
                if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
            }
            os << '\n';
        };
        line(t.columns);
        for (const auto& r : t.rows) {
            std::vector<std::string> cells;
            for (const Cell& c : r) cells.push_back(cell_text(c));
            line(cells);
        }
    }
}

struct Options {
    std::string format = "text";
    std::string output;
    // coeff
    int gamma = 0;
    std::string m_from, m_to;
    // green
    std::string z1, z2, z3, m;
    std::optional<int> green_gamma;
    double v = 1.0;
    double radius = 20.0;
    double tol = 1e-12;
    // verify
    std::string only;
    double verify_tol = 1e-6;
};

int cmd_coeff(const Options& o, std::ostream& os) {
    const ExactRational from = ExactRational::parse(o.m_from);
    const ExactRational to = ExactRational::parse(o.m_to);
    if (to < from) throw DomainError("--m-to must not be smaller than --m-from");

    // Walk 4m over the residue class of gamma inside [4 from, 4 to].
    const ExactRational lo4 = from * ExactRational(4), hi4 = to * ExactRational(4);
    const mpz_class lo_ceil = [&] {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), lo4.numerator().get_mpz_t(), lo4.denominator().get_mpz_t());
        return q;
    }();
    const mpz_class hi_floor = [&] {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), hi4.numerator().get_mpz_t(), hi4.denominator().get_mpz_t());
        return q;
    }();
    if (!lo_ceil.fits_slong_p() || !hi_floor.fits_slong_p()) throw DomainError("m range out of bounds");
    const long a = lo_ceil.get_si(), b = hi_floor.get_si();
    if (b - a > 4 * kMaxRows) throw DomainError("m range too large");

    Table t{{"gamma", "m", "D0", "f", "H", "C", "deg"}, {}};
    for (long m4 = a; m4 <= b; ++m4) {
        if (m4 == 0 || ((m4 % 4) + 4) % 4 != o.gamma) continue;
        const CaseIndex c = case_from_m4(m4);
        std::vector<Cell> row{static_cast<long>(c.gamma), c.m().str(), c.D0, c.f};
        if (m4 > 0) {
            row.emplace_back(cohen_H(c).value.str());
            row.emplace_back(coefficient_C(c));
            row.emplace_back(heegner_degree(c).exact.str());
        } else {
            row.emplace_back(std::monostate{});
            row.emplace_back(coefficient_C(c));
            row.emplace_back(std::monostate{});
        }
        t.rows.push_back(std::move(row));
    }
    json inputs{{"gamma", o.gamma}, {"m_from", from.str()}, {"m_to", to.str()}};
    write_table(os, o.format, "coeff", inputs, "rows", t);
    return kOk;
}

int cmd_green(const Options& o, std::ostream& os) {
    const SiegelPoint z(parse_complex(o.z1), parse_complex(o.z2), parse_complex(o.z3));
    const ExactRational m = ExactRational::parse(o.m);
    const ExactRational m4 = m * ExactRational(4);
    if (!m4.is_integer()) throw DomainError("m must lie in Z/4");
    const long r = ((m4.to_long() % 4) + 4) % 4;
    const int gamma = o.green_gamma ? *o.green_gamma : (r == 1 ? 1 : 0);
    const CaseIndex c = split_discriminant(gamma, m);
    if (!(o.tol > 0.0)) throw DomainError("--tol must be positive");
    Precision prec;
    prec.abs_tol = o.tol;
    const GreenEvaluation g = green_function(c, o.v, z, o.radius, prec);

    Table t{{"value", "half_sum", "terms_used", "tail_bound", "radius", "empty"}, {}};
    t.rows.push_back({g.value, g.half_sum(), g.terms_used, g.tail_bound, g.radius, g.empty});
    json inputs{{"z1", o.z1}, {"z2", o.z2}, {"z3", o.z3}, {"m", m.str()},      {"gamma", gamma},
                {"v", cell_json(o.v)}, {"radius", cell_json(o.radius)}, {"tol", cell_json(o.tol)}};
    write_table(os, o.format, "green", inputs, "rows", t);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
    if (!(o.verify_tol > 0.0)) throw DomainError("--tol must be positive");
    const std::optional<std::string> only = o.only.empty() ? std::nullopt : std::optional<std::string>(o.only);
    const std::vector<CheckResult> checks = run_verification(o.verify_tol, only);
    bool all = true;
    for (const CheckResult& c : checks) all = all && c.pass;

    if (o.format == "text") {
        for (const CheckResult& c : checks) {
            os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  lhs=" << format_double(c.lhs)
               << "  rhs=" << format_double(c.rhs) << "  diff=" << format_double(c.diff)
               << (c.exact ? " (exact)" : (c.absolute ? " (abs)" : " (rel)")) << "  " << c.description << '\n';
        }
    } else {
        Table t{{"name", "status", "lhs", "rhs", "diff", "kind", "description"}, {}};
        for (const CheckResult& c : checks)
            t.rows.push_back({c.name, std::string(c.pass ? "PASS" : "FAIL"), c.lhs, c.rhs, c.diff,
                              std::string(c.exact ? "exact" : (c.absolute ? "abs" : "rel")), c.description});
        json inputs{{"tol", cell_json(o.verify_tol)}, {"only", o.only.empty() ? json(nullptr) : json(o.only)}};
        write_table(os, o.format, "verify", inputs, "checks", t);
    }
    return all ? kOk : kVerificationFailed;
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ') s += ch;
    if (s.empty()) throw std::invalid_argument("empty complex number");
    if (s.back() != 'i') return {parse_real(s, "complex number"), 0.0};
    s.pop_back();
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : parse_real(re, "real part"), parse_real(im, "imaginary part")};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Eisenstein coefficients, Green functions and identity checks for the (3,2) lattice", "kudla"};
    app.require_subcommand(1);
    app.add_option("--output", o.output, "Write the report to PATH instead of stdout");

    auto* coeff = app.add_subcommand("coeff", "Table of H(2,4m), C(gamma,m,0) and Heegner degrees");
    coeff->add_option("--gamma", o.gamma, "Component (0: m integer, 1: m in Z + 1/4)")
        ->required()
        ->check(CLI::IsMember({0, 1}));
    coeff->add_option("--m-from", o.m_from, "First m (rational, e.g. 1, 5/4, 1.25)")->required();
    coeff->add_option("--m-to", o.m_to, "Last m")->required();
    coeff->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* green = app.add_subcommand("green", "Evaluate the Green function at z");
    green->add_option("--z1", o.z1, "z1 as re+imi")->required();
    green->add_option("--z2", o.z2, "z2 as re+imi")->required();
    green->add_option("--z3", o.z3, "z3 as re+imi")->required();
    green->add_option("--m", o.m, "Index m (rational)")->required();
    green->add_option("--gamma", o.green_gamma, "Component; derived from m when omitted")
        ->check(CLI::IsMember({0, 1}));
    green->add_option("--v", o.v, "v > 0");
    green->add_option("--radius", o.radius, "Cutoff on R(u, z)");
    green->add_option("--tol", o.tol, "Absolute quadrature tolerance");
    green->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* verify = app.add_subcommand("verify", "Run the identity checks");
    verify->add_option("--only", o.only, "Run a single check")->check(CLI::IsMember(verification_names()));
    verify->add_option("--tol", o.verify_tol, "Pass threshold for diff");
    verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::ostringstream buf;
    int code = kOk;
    try {
        if (*coeff)
            code = cmd_coeff(o, buf);
        else if (*green)
            code = cmd_green(o, buf);
        else
            code = cmd_verify(o, buf);
    } catch (const OutsideHalfSpaceError& e) {
        err << "error: " << e.what() << '\n';
        return kOutsideHalfSpace;
    } catch (const SingularPointError& e) {
        err << "error: " << e.what() << '\n';
        return kSingularPoint;
    } catch (const ToleranceError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {  // DomainError and parse failures
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (o.output.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << o.output << '\n';
            return kUsage;
        }
        f << buf.str();
    }
    return code;
}

}  // namespace kudla::cli
