#pragma once

// Command-line front end. Exit statuses: 0 success, 1 verification failure,
// 2 usage error, 3 numerical singularity.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sucoset/sucoset.hpp"

namespace sucoset::cli {

enum ExitStatus : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2, kSingularity = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr const char* kSeedEnv = "SUCOSET_SEED";

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<double> parse_coordinate_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        double v = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(v)) {
            throw UsageError("malformed coordinate '" + std::string(token) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

/// One number per line; blank lines and lines starting with '#' are ignored.
inline std::vector<double> read_coordinate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open coordinate file '" + path + "'");
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto parsed = parse_coordinate_list(line);
        if (parsed.size() != 1) throw UsageError("coordinate file lines must hold exactly one number");
        out.push_back(parsed.front());
    }
    return out;
}

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string format_complex(Complex z) {
    std::ostringstream os;
    os << std::showpos << std::setprecision(10) << z.real() << z.imag() << 'i';
    return os.str();
}

inline void print_matrix(std::ostream& out, const ComplexMatrix& m, const std::vector<std::string>& row_labels = {}) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << "  ";
        if (!row_labels.empty()) out << std::left << std::setw(14) << row_labels[static_cast<std::size_t>(r)] << std::right;
        for (Eigen::Index c = 0; c < m.cols(); ++c) out << ' ' << std::setw(36) << format_complex(m(r, c));
        out << '\n';
    }
}

inline json version_info() {
    return json{{"sucoset", kVersion},
                {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                              "." + std::to_string(EIGEN_MINOR_VERSION)}};
}

struct CommonArgs {
    int n = 2;
    std::string coords_text;
    std::string coords_file;
    std::string format = "human";
    std::string side = "left";
};

inline CosetCoordinates load_coords(const CommonArgs& a) {
    if (a.n < 2) throw UsageError("--n must be >= 2");
    std::vector<double> v;
    if (!a.coords_text.empty() && !a.coords_file.empty()) throw UsageError("give either --coords or --coords-file, not both");
    if (!a.coords_file.empty()) {
        v = read_coordinate_file(a.coords_file);
    } else if (!a.coords_text.empty()) {
        v = parse_coordinate_list(a.coords_text);
    } else {
        throw UsageError("coordinates required (--coords or --coords-file)");
    }
    const auto expected = static_cast<std::size_t>(algebra_dimension(a.n));
    if (v.size() != expected) {
        throw UsageError("expected " + std::to_string(expected) + " coordinates for n = " + std::to_string(a.n) +
                         ", got " + std::to_string(v.size()));
    }
    return CosetCoordinates(a.n, std::move(v));
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnv); env && *env) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || end != s.data() + s.size()) {
            throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
        }
        return v;
    }
    return kDefaultSeed;
}

inline Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw UsageError("--side must be left or right");
}

inline json coords_json(const CosetCoordinates& c) {
    json j = json::object();
    j["n"] = c.n();
    j["coords"] = c.values();
    return j;
}

inline json report_json(const VerificationReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows()) {
        json row{{"name", r.name}, {"n", r.n}, {"point", r.point}};
        row["metric"] = std::isfinite(r.metric) ? json(r.metric) : json(nullptr);
        row["tolerance"] = r.tolerance;
        row["status"] = to_string(r.status);
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline GroupFunction integrand(const std::string& name) {
    if (name == "const") return [](const ComplexMatrix&) { return 1.0; };
    if (name == "retrace") return [](const ComplexMatrix& u) { return u.trace().real() / 2.0; };
    if (name == "abstrace2") return [](const ComplexMatrix& u) { return std::norm(u.trace()); };
    throw UsageError("--f must be one of const, retrace, abstrace2");
}

/// Runs one invocation; argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coset parametrization of SU(N): frames, invariant fields, one-forms and Haar measure", "sucoset"};
    app.require_subcommand(1);

    CommonArgs args;
    std::uint64_t seed = 0;
    std::int64_t samples = 1000000;
    std::string function = "const";
    unsigned workers = 0;
    std::optional<int> verify_n;
    std::optional<double> verify_tol;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    };
    auto add_coords = [&](CLI::App* sub) {
        sub->add_option("--n", args.n, "Group rank parameter N (>= 2)")->required();
        sub->add_option("--coords", args.coords_text, "Comma-separated coordinates in canonical order");
        sub->add_option("--coords-file", args.coords_file, "File with one coordinate per line");
        add_format(sub);
    };

    auto* basis = app.add_subcommand("basis", "Print the generalized Gell-Mann basis");
    basis->add_option("--n", args.n, "Group rank parameter N (>= 2)")->required();
    add_format(basis);

    auto* element = app.add_subcommand("element", "Evaluate the group element U at coordinates");
    add_coords(element);

    auto* frame = app.add_subcommand("frame", "Frame matrix A (left) or Ã (right)");
    auto* fields = app.add_subcommand("fields", "Invariant vector fields (rows of the inverse frame)");
    auto* oneforms = app.add_subcommand("oneforms", "Invariant one-forms (rows of the transposed frame)");
    for (auto* sub : {frame, fields, oneforms}) {
        add_coords(sub);
        sub->add_option("--side", args.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    }

    auto* dens = app.add_subcommand("density", "Haar density |det A| and |det Ã|");
    add_coords(dens);

    auto* integrate = app.add_subcommand("integrate", "Monte Carlo integral over SU(2) against the Haar measure");
    integrate->add_option("--f", function, "Integrand: const, retrace (Re Tr U / 2), abstrace2 (|Tr U|^2)")
        ->check(CLI::IsMember({"const", "retrace", "abstrace2"}));
    integrate->add_option("--samples", samples, "Number of samples");
    integrate->add_option("--seed", seed, "Random seed");
    integrate->add_option("--workers", workers, "Worker threads (0 = all cores); does not change results");
    add_format(integrate);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--n", verify_n, "Restrict the suite to one rank N");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--tol", verify_tol, "Override every check tolerance");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    const bool as_json = args.format == "json";
    json doc;
    int status = kSuccess;

    try {
        if ((integrate->parsed() || verify->parsed()) && verify->count("--seed") + integrate->count("--seed") == 0) {
            seed = default_seed();
        }

        if (basis->parsed()) {
            if (args.n < 2) throw UsageError("--n must be >= 2");
            const AlgebraBasis b(args.n);
            doc = json{{"command", "basis"}, {"inputs", {{"n", args.n}}}};
            json gens = json::array();
            for (int k = 0; k < b.dimension(); ++k) {
                gens.push_back({{"index", k}, {"label", b.label(k)}, {"matrix", to_json(b[k])}});
                if (!as_json) {
                    out << '[' << k << "] " << b.label(k) << '\n';
                    print_matrix(out, b[k]);
                }
            }
            doc["results"] = {{"generators", gens}};
            double worst = 0.0;
            for (int i = 0; i < b.dimension(); ++i)
                for (int j = 0; j < b.dimension(); ++j)
                    worst = std::max(worst, std::abs((b[i] * b[j]).trace() - Complex(i == j ? 0.5 : 0.0)));
            doc["residuals"] = {{"trace_normalization", worst}};
            if (!as_json) out << "trace normalization residual: " << worst << '\n';
        } else if (element->parsed()) {
            const auto c = load_coords(args);
            const auto u = group_element(c);
            doc = json{{"command", "element"}, {"inputs", coords_json(c)}};
            doc["results"] = {{"U", to_json(u.matrix())}};
            doc["residuals"] = {{"unitarity", u.unitarity_residual()}, {"determinant", u.determinant_residual()}};
            if (!as_json) {
                out << "U =\n";
                print_matrix(out, u.matrix());
                out << "unitarity residual ||U^dagger U - I||_F: " << u.unitarity_residual() << '\n'
                    << "determinant residual |det U - 1|: " << u.determinant_residual() << '\n';
            }
        } else if (frame->parsed() || fields->parsed() || oneforms->parsed()) {
            const auto c = load_coords(args);
            const Side side = parse_side(args.side);
            const auto fr = frame_result(side, c);
            const AlgebraBasis b(c.n());
            std::vector<std::string> coord_labels, gen_labels;
            for (int k = 0; k < c.size(); ++k) {
                coord_labels.push_back(c.coordinate_label(k));
                gen_labels.push_back(b.label(k));
            }
            const std::string cmd = frame->parsed() ? "frame" : fields->parsed() ? "fields" : "oneforms";
            doc = json{{"command", cmd}, {"inputs", coords_json(c)}};
            doc["inputs"]["side"] = to_string(side);
            json results;
            if (frame->parsed()) {
                results = {{"rows", coord_labels}, {"columns", gen_labels}, {"frame", to_json(fr.frame.entries())}};
                if (!as_json) {
                    out << to_string(side) << " frame (rows: coordinates, columns: generators)\n";
                    print_matrix(out, fr.frame.entries(), coord_labels);
                }
            } else if (fields->parsed()) {
                results = {{"rows", gen_labels}, {"columns", coord_labels}, {"fields", to_json(fr.inverse)}};
                if (!as_json) {
                    out << to_string(side) << " invariant vector fields (rows: generators, columns: d/d coordinate)\n";
                    print_matrix(out, fr.inverse, gen_labels);
                }
            } else {
                results = {{"rows", gen_labels}, {"columns", coord_labels}, {"oneforms", to_json(fr.transpose)}};
                if (!as_json) {
                    out << to_string(side) << " invariant one-forms (rows: generators, columns: d coordinate)\n";
                    print_matrix(out, fr.transpose, gen_labels);
                }
            }
            results["condition_estimate"] = fr.condition;
            doc["results"] = results;
            const double dual = (fr.inverse * fr.frame.entries() - identity(c.size())).norm();
            doc["residuals"] = {{"duality", dual}, {"max_abs_real", max_abs_real(fr.frame.entries())}};
            if (!as_json) out << "condition estimate: " << fr.condition << "\nduality residual: " << dual << '\n';
        } else if (dens->parsed()) {
            const auto c = load_coords(args);
            const auto d = density(c);
            doc = json{{"command", "density"}, {"inputs", coords_json(c)}};
            doc["results"] = {{"left", d.value}, {"right", d.right_value}};
            doc["residuals"] = {{"relative_difference", d.relative_difference()}};
            if (!as_json) {
                out << std::setprecision(17) << "|det A| = " << d.value << "\n|det A~| = " << d.right_value
                    << "\nrelative difference: " << d.relative_difference() << '\n';
            }
        } else if (integrate->parsed()) {
            if (samples <= 0) throw UsageError("--samples must be positive");
            const auto domain = default_su2_domain(samples, seed);
            const auto est = integrate_su2(integrand(function), domain, workers);
            doc = json{{"command", "integrate"},
                       {"inputs", {{"n", 2}, {"f", function}, {"samples", samples}, {"seed", seed}}}};
            doc["results"] = {{"estimate", est.value}, {"standard_error", est.standard_error}, {"volume", domain.volume()}};
            doc["residuals"] = json::object();
            if (!as_json) {
                out << std::setprecision(17) << "estimate: " << est.value << "\nstandard error: " << est.standard_error
                    << "\nsamples: " << est.samples << "\nseed: " << seed << '\n';
            }
        } else if (verify->parsed()) {
            SuiteOptions opt;
            opt.seed = seed;
            opt.tolerance = verify_tol;
            if (verify_n) {
                if (*verify_n < 2) throw UsageError("--n must be >= 2");
                opt.ranks = {*verify_n};
            }
            const auto report = run_suite(opt);
            doc = json{{"command", "verify"}, {"inputs", {{"ranks", opt.ranks}, {"seed", seed}}}};
            if (verify_tol) doc["inputs"]["tolerance"] = *verify_tol;
            doc["results"] = {{"passed", report.passed()},
                              {"pass", report.count(CheckStatus::pass)},
                              {"fail", report.count(CheckStatus::fail)},
                              {"skip", report.count(CheckStatus::skip)},
                              {"checks", report_json(report)}};
            doc["residuals"] = json::object();
            if (!as_json) out << report.to_text();
            status = report.passed() ? kSuccess : kVerificationFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const SingularFrameError& e) {
        err << "error: " << e.what() << '\n';
        return kSingularity;
    } catch (const SingularMatrixError& e) {
        err << "error: " << e.what() << '\n';
        return kSingularity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }

    if (as_json) {
        doc["version"] = version_info();
        out << doc.dump(2) << '\n';
    }
    return status;
}

} // namespace sucoset::cli
