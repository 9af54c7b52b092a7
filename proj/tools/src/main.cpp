#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fourstate/dataset.hpp"
#include "fourstate/json_io.hpp"
#include "fourstate/laminate.hpp"
#include "fourstate/verify.hpp"

namespace {

using namespace fourstate;

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string preset = "paper";
    std::string input;
    std::string output;
};

LargeT4Data resolve_dataset(const CommonOpts& opts) {
    if (!opts.input.empty()) return load_dataset(opts.input);
    if (opts.preset == "paper") return reference_dataset();
    throw ParseError("unknown preset: " + opts.preset);
}

std::vector<Rational> parse_rational_list(const std::string& s, std::size_t expected) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != expected) throw ParseError("expected " + std::to_string(expected) + " components");
    return out;
}

void write_document(const std::string& path, const Json& j) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

int run_verify(const CommonOpts& opts) {
    LargeT4Data data;
    try {
        data = resolve_dataset(opts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    Report rep = run_full_verification(data);
    write_document(opts.output, report_to_json(rep));
    if (rep.overall_pass()) return kExitPass;
    for (const auto& e : rep.entries())
        if (e.status == CheckStatus::Fail) std::cerr << "FAIL: " << e.name << "\n";
    return kExitMathFail;
}

int run_wavecone(const CommonOpts& opts, const std::string& vector_arg) {
    LargeT4Data data;
    QVec3 v;
    try {
        data = resolve_dataset(opts);
        auto comps = parse_rational_list(vector_arg, 3);
        v = {comps[0], comps[1], comps[2]};
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    CertifiedFamily CF = CertifiedFamily::certify(solve_coefficients(data));
    WaveConeVerdict verdict = wave_cone_member(CF, v);
    std::cout << (verdict.member ? "member" : "non-member") << " | " << verdict.certificate;
    if (verdict.witness_direction)
        std::cout << " | witness " << vec2_to_string(*verdict.witness_direction);
    std::cout << "\n";
    return kExitPass;
}

struct LaminateOpts {
    std::string lambda = "1/2";
    std::string eps = "1/10";
    std::string xi0 = "-14,5";
    std::string alpha = "1/10";
    int levels = 1;
    int grid = 8;
};

std::string state_label(std::map<std::string, std::string>& labels, const QVec3& v) {
    std::string key = vec3_to_string(v);
    auto it = labels.find(key);
    if (it != labels.end()) return it->second;
    std::string label = "v" + std::to_string(labels.size() + 1);
    labels.emplace(key, label);
    return label;
}

int run_laminate(const CommonOpts& opts, const LaminateOpts& lopts, bool eps_given) {
    LargeT4Data data;
    Rational lambda, eps, alpha;
    QVec2 xi0;
    try {
        data = resolve_dataset(opts);
        lambda = parse_rational(lopts.lambda);
        // Refinement cost grows quickly as the first-level slabs thin out, so
        // the two-level default starts from a coarser scale.
        eps = (!eps_given && lopts.levels == 2) ? Rational(1, 2) : parse_rational(lopts.eps);
        alpha = parse_rational(lopts.alpha);
        auto x = parse_rational_list(lopts.xi0, 2);
        xi0 = {x[0], x[1]};
        if (!(lambda > 0 && lambda < 1)) throw ParseError("lambda must lie in (0,1)");
        if (!(eps > 0)) throw ParseError("eps must be positive");
        if (!(alpha > 0 && alpha < 1)) throw ParseError("alpha must lie in (0,1)");
        if (lopts.grid < 1) throw ParseError("grid resolution must be >= 1");
        if (lopts.levels < 1 || lopts.levels > 2) throw ParseError("levels must be 1 or 2");
        if (xi0[0] == 0 && xi0[1] == 0) throw ParseError("xi0 must be nonzero");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    OperatorFamily F = solve_coefficients(data);
    CertifiedFamily CF = CertifiedFamily::certify(F);
    std::array<QVec2, 3> basis{data.nodes[0], data.nodes[1], data.nodes[2]};
    Rect omega(Rational(0), Rational(0), Rational(1), Rational(1));
    QVec3 a{Rational(0), Rational(0), Rational(0)};
    // The field oscillates along the first reference leg; xi0 must be a
    // witness direction for it (the default (-14,5) is).
    QVec3 b = data.configs[0].c[0];

    PiecewisePolyField field{omega, xi0, eps, lambda, a, b, {}};
    Rational defect(0);
    try {
        field = simple_laminate_field(F, a, b, lambda, xi0, eps, omega, basis);
        if (lopts.levels == 2) {
            // Split the b-slabs through b along the second reference leg.
            const QVec3& leg = data.configs[0].c[1];
            QVec3 bp = vec3_add(b, leg);
            QVec3 bm = vec3_sub(b, leg);
            QVec2 xi0p = data.nodes[1];
            RefineResult r = refine_field(field, b, bp, bm, Rational(1, 2), alpha, CF, xi0p,
                                          Rational(eps / 5), basis);
            field = std::move(r.field);
            defect = r.defect_area;
        }
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }

    Json fractions_doc;
    fractions_doc["lambda"] = to_string(lambda);
    fractions_doc["eps"] = to_string(eps);
    fractions_doc["xi0"] = Json::array({to_string(xi0[0]), to_string(xi0[1])});
    fractions_doc["levels"] = lopts.levels;
    if (lopts.levels == 2) fractions_doc["defect_area"] = to_string(defect);
    Json fr = Json::object();
    for (const auto& [value, area] : volume_fractions(field)) fr[value] = to_string(area);
    fractions_doc["fractions"] = std::move(fr);

    std::map<std::string, std::string> labels;
    labels.emplace(vec3_to_string(a), "a");
    labels.emplace(vec3_to_string(b), "b");

    std::string grid_path = opts.output.empty() ? "" : opts.output + ".grid.tsv";
    std::ostringstream grid;
    grid << "x\ty\tstate\tv1\tv2\tv3\tv1_exact\tv2_exact\tv3_exact\n";
    const int n = lopts.grid;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational x = Rational(2 * i + 1) / (2 * n);
            Rational y = Rational(2 * j + 1) / (2 * n);
            QVec3 v = field_value(field, x, y);
            grid << to_decimal_string(x, 6) << '\t' << to_decimal_string(y, 6) << '\t'
                 << state_label(labels, v);
            for (int cidx = 0; cidx < 3; ++cidx) grid << '\t' << to_decimal_string(v[static_cast<std::size_t>(cidx)], 6);
            for (int cidx = 0; cidx < 3; ++cidx) grid << '\t' << to_string(v[static_cast<std::size_t>(cidx)]);
            grid << '\n';
        }

    try {
        if (opts.output.empty()) {
            std::cout << fractions_doc.dump(2) << "\n";
        } else {
            write_document(opts.output + ".fractions.json", fractions_doc);
            std::ofstream out(grid_path);
            if (!out) throw ParseError("cannot open output file: " + grid_path);
            out << grid.str();
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and laminate construction for the four-state operator"};
    app.require_subcommand(1);

    CommonOpts verify_opts, cone_opts, lam_opts;
    std::string vector_arg;
    LaminateOpts lopts;

    auto add_common = [](CLI::App* cmd, CommonOpts& o) {
        cmd->add_option("--preset", o.preset, "Built-in dataset name (default: paper)");
        cmd->add_option("--input", o.input, "Dataset document path (overrides --preset)");
        cmd->add_option("--output", o.output, "Output path (default: stdout)");
    };

    CLI::App* verify = app.add_subcommand("verify", "Run the full certificate pipeline");
    add_common(verify, verify_opts);

    CLI::App* cone = app.add_subcommand("wavecone", "Decide wave-cone membership of a vector");
    add_common(cone, cone_opts);
    cone->add_option("-v,--vector", vector_arg, "Comma-separated rational 3-vector")->required();

    CLI::App* lam = app.add_subcommand("laminate", "Construct a laminate field and export it");
    add_common(lam, lam_opts);
    lam->add_option("--lambda", lopts.lambda, "Volume fraction in (0,1)");
    lam->add_option("--eps", lopts.eps, "Oscillation scale");
    lam->add_option("--xi0", lopts.xi0, "Lamination direction, comma-separated");
    lam->add_option("--levels", lopts.levels, "1 = simple laminate, 2 = refined");
    lam->add_option("--alpha", lopts.alpha, "Coverage defect budget for level 2");
    lam->add_option("--grid", lopts.grid, "Grid export resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opts);
        if (cone->parsed()) return run_wavecone(cone_opts, vector_arg);
        if (lam->parsed()) return run_laminate(lam_opts, lopts, lam->count("--eps") > 0);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitUsage;
}
