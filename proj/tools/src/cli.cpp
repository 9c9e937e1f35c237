#include "cmif_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cmif/eccurve.hpp"
#include "cmif/frobenius.hpp"
#include "cmif/stats.hpp"
#include "cmif/verify.hpp"
#include "cmif_cli/report.hpp"

namespace cmif::cli {
namespace {

constexpr std::size_t kMaxMismatchRows = 20;

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const char* flag) {
    std::vector<std::int64_t> v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::int64_t x = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, x);
        if (ec != std::errc{} || ptr != last || first == last) {
            throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(count) +
                                        " comma-separated integers, got '" + text + "'");
        }
        v.push_back(x);
        pos = comma + 1;
    }
    if (v.size() != count) {
        throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(count) +
                                    " comma-separated integers, got '" + text + "'");
    }
    return v;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("CMIF_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::uint64_t s = 0;
    const std::string text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("CMIF_SEED is not a nonnegative integer: '" + text + "'");
    }
    return s;
}

struct CurveChoice {
    std::string label;
    std::string custom;
};

class CurveSource {
public:
    explicit CurveSource(std::string table_path) : path_(std::move(table_path)) {}

    const std::vector<CmCurve>& table() {
        if (path_.empty()) return builtin_curves();
        if (loaded_.empty()) loaded_ = load_curve_table(path_);
        return loaded_;
    }

    /// Custom models pass the self-validation gate unless `gate` is false.
    CmCurve resolve(const CurveChoice& c, bool gate) {
        if (!c.custom.empty()) {
            const auto v = parse_ints(c.custom, 4, "--custom");
            CmCurve curve = make_custom_curve(v[0], v[1], v[2], v[3]);
            if (gate) self_validate(curve);
            return curve;
        }
        if (c.label.empty()) throw std::invalid_argument("one of --curve or --custom is required");
        return find_curve(table(), c.label);
    }

private:
    std::string path_;
    std::vector<CmCurve> loaded_;
};

void add_curve_options(CLI::App* cmd, CurveChoice& c) {
    auto* label = cmd->add_option("--curve", c.label, "Curve label from the table");
    auto* custom = cmd->add_option("--custom", c.custom, "Custom model A,B,g,f");
    label->excludes(custom);
}

std::string fixed(long double v, int digits) {
    std::ostringstream s;
    s << std::setprecision(digits) << std::fixed << v;
    return s.str();
}

std::string general(long double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

struct ScanArgs {
    CurveChoice curve;
    std::uint64_t xmax = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> checkpoints;
    std::string out;
    unsigned workers = 1;
};

int cmd_scan(const ScanArgs& a, CurveSource& src, std::ostream& out) {
    if (a.xmax < 2) throw std::invalid_argument("--xmax must be at least 2");
    const CmCurve curve = src.resolve(a.curve, true);
    ScanOptions opts;
    opts.x_max = a.xmax;
    opts.seed = a.seed;
    opts.workers = a.workers;
    opts.checkpoints = a.checkpoints;
    opts.checkpoints.push_back(a.xmax);

    std::ofstream csv;
    RecordSink sink;
    if (!a.out.empty()) {
        csv.open(a.out + ".csv", std::ios::binary);
        if (!csv) throw std::invalid_argument("cannot write " + a.out + ".csv");
        write_csv_header(csv);
        sink = [&csv](const PrimeRecord& r) { write_csv_row(csv, r); };
    }
    const SumAccumulator acc = scan(curve, opts, sink);
    const std::string summary = summary_json(curve.label, a.seed, a.xmax, acc);
    if (!a.out.empty()) {
        std::ofstream js(a.out + ".json", std::ios::binary);
        if (!js) throw std::invalid_argument("cannot write " + a.out + ".json");
        js << summary << '\n';
    }
    out << summary << '\n';
    return kExitOk;
}

int cmd_verify(const CurveChoice& c, std::uint64_t pmax, std::uint64_t seed, CurveSource& src, std::ostream& out) {
    if (pmax > kOracleMaxPrime) throw std::invalid_argument("--pmax must not exceed 100000");
    std::vector<CmCurve> curves;
    if (c.label.empty() && c.custom.empty()) {
        curves = src.table();
    } else {
        curves.push_back(src.resolve(c, false));
    }
    std::uint64_t total = 0;
    for (const CmCurve& curve : curves) {
        const VerifyReport r = verify_against_oracle(curve, pmax, seed);
        total += r.mismatches.size();
        out << std::left << std::setw(28) << r.label << " pmax=" << pmax << " checked=" << r.checked
            << " mismatches=" << r.mismatches.size() << " ambiguous=" << r.ambiguous << '\n';
        if (r.ok()) continue;
        out << "  p kind N/oracle a_p/oracle d_p/oracle e_p/oracle reason\n";
        for (std::size_t i = 0; i < r.mismatches.size() && i < kMaxMismatchRows; ++i) {
            const auto& m = r.mismatches[i];
            const auto want_ap =
                static_cast<std::int64_t>(m.pipeline.p + 1) - static_cast<std::int64_t>(m.oracle.n);
            out << "  " << m.pipeline.p << ' ' << to_string(m.pipeline.kind) << ' ' << m.pipeline.n << '/'
                << m.oracle.n << ' ' << m.pipeline.a_p << '/' << want_ap << ' ' << m.pipeline.d << '/' << m.oracle.d
                << ' ' << m.pipeline.e << '/' << m.oracle.e << ' ' << m.reason << '\n';
        }
        if (r.mismatches.size() > kMaxMismatchRows) {
            out << "  ... " << r.mismatches.size() - kMaxMismatchRows << " more\n";
        }
    }
    out << "total mismatches: " << total << '\n';
    return total == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_identity(const CurveChoice& c, std::uint64_t x, std::uint64_t seed, CurveSource& src, std::ostream& out) {
    if (x < 2) throw std::invalid_argument("--x must be at least 2");
    const CmCurve curve = src.resolve(c, true);
    const DecompositionResult r = decomposition_check(curve, x, seed);
    out << curve.label << " x=" << x << " lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs) << ' '
        << (r.equal() ? "equal" : "DIFFERENT") << '\n';
    return r.equal() ? kExitOk : kExitCheckFailed;
}

int cmd_schur(std::uint64_t t, std::ostream& out) {
    const SchurResult r = schur_sum(t);
    out << "schur(" << t << ") = " << (r.exact ? r.exact->str() : general(r.value)) << '\n';
    out << "schur(" << t << ")/t = " << fixed(r.per_t(), 9) << '\n';
    return kExitOk;
}

int cmd_wintner(std::uint64_t z, std::ostream& out) {
    const WintnerResult r = wintner_slope(z);
    out << "sum(" << z << ") = " << (r.exact ? r.exact->str() : general(r.sum)) << '\n';
    out << "sum/log(Z) = " << fixed(r.slope, 9) << '\n';
    return kExitOk;
}

int cmd_bt(std::uint64_t x, const std::string& mu_text, const std::string& alpha_text, std::int64_t g,
           std::ostream& out) {
    const OrderDesc& order = order_for(g, 1);
    const auto m = parse_ints(mu_text, 2, "--mu");
    const auto a = parse_ints(alpha_text, 2, "--alpha");
    const QuadInt mu(m[0], m[1], order);
    const QuadInt alpha(a[0], a[1], order);
    const BtResult r = bt_counter(x, mu, alpha);
    out << "count=" << r.count << " Phi(mu)=" << r.phi_mu << " Nm(mu)=" << r.norm_mu
        << " ratio=" << fixed(r.ratio, 9) << '\n';
    return kExitOk;
}

int cmd_trivlem(std::uint64_t trials, std::uint64_t seed, std::ostream& out) {
    const TrivlemSuiteResult r = trivlem_random_suite(trials, seed);
    out << r.held << '/' << r.trials << " hold\n";
    return r.held == r.trials ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::uint64_t seed_default = 0;
    try {
        seed_default = default_seed();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }

    CLI::App app{"Invariant factors of CM elliptic curves over prime fields", "cmif"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string table_path;
    app.add_option("--table", table_path, "Curve table file replacing the built-in table")->check(CLI::ExistingFile);

    ScanArgs sa;
    sa.seed = seed_default;
    sa.workers = std::max(1U, std::thread::hardware_concurrency());
    auto* scan_cmd = app.add_subcommand("scan", "Per-prime records and partial sums up to xmax");
    add_curve_options(scan_cmd, sa.curve);
    scan_cmd->add_option("--xmax", sa.xmax, "Upper bound on p")->required();
    scan_cmd->add_option("--seed", sa.seed, "Random seed (default: $CMIF_SEED or 0)");
    scan_cmd->add_option("--checkpoints", sa.checkpoints, "Extra checkpoint x values")->delimiter(',');
    scan_cmd->add_option("--out", sa.out, "Write PREFIX.csv and PREFIX.json");
    scan_cmd->add_option("--workers", sa.workers, "Worker threads")->check(CLI::PositiveNumber);

    CurveChoice verify_curve;
    std::uint64_t pmax = 0;
    std::uint64_t verify_seed = seed_default;
    auto* verify_cmd = app.add_subcommand("verify", "Compare the pipeline with the point-count oracle");
    add_curve_options(verify_cmd, verify_curve);
    verify_cmd->add_option("--pmax", pmax, "Upper bound on p (at most 100000)")->required();
    verify_cmd->add_option("--seed", verify_seed, "Random seed");

    CurveChoice identity_curve;
    std::uint64_t identity_x = 0;
    std::uint64_t identity_seed = seed_default;
    auto* identity_cmd = app.add_subcommand("identity", "Divisor-sum decomposition of sum d_p");
    add_curve_options(identity_cmd, identity_curve);
    identity_cmd->add_option("--x", identity_x, "Upper bound on p")->required();
    identity_cmd->add_option("--seed", identity_seed, "Random seed");

    auto* aux_cmd = app.add_subcommand("aux", "Auxiliary sums and counters");
    aux_cmd->require_subcommand(1);

    std::uint64_t schur_t = 0;
    auto* schur_cmd = aux_cmd->add_subcommand("schur", "sum over m <= t of (m/phi(m))^4");
    schur_cmd->add_option("--t", schur_t)->required()->check(CLI::PositiveNumber);

    std::uint64_t wintner_z = 0;
    auto* wintner_cmd = aux_cmd->add_subcommand("wintner", "sum over squarefree d <= Z of phi(d)/d^2");
    wintner_cmd->add_option("--z", wintner_z)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));

    std::uint64_t bt_x = 0;
    std::string bt_mu;
    std::string bt_alpha;
    std::int64_t bt_g = -1;
    auto* bt_cmd = aux_cmd->add_subcommand("bt", "Prime elements in a residue class mod mu");
    bt_cmd->add_option("--x", bt_x)->required();
    bt_cmd->add_option("--mu", bt_mu, "a,b in the basis {1, omega}")->required();
    bt_cmd->add_option("--alpha", bt_alpha, "a,b in the basis {1, omega}")->required();
    bt_cmd->add_option("--g", bt_g, "Field parameter of the maximal order");

    std::uint64_t trivlem_trials = 1000;
    std::uint64_t trivlem_seed = seed_default;
    auto* trivlem_cmd = aux_cmd->add_subcommand("trivlem", "Randomized coprime-restriction inequality");
    trivlem_cmd->add_option("--trials", trivlem_trials);
    trivlem_cmd->add_option("--seed", trivlem_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadArguments;
    }

    try {
        CurveSource src(table_path);
        if (*scan_cmd) return cmd_scan(sa, src, out);
        if (*verify_cmd) return cmd_verify(verify_curve, pmax, verify_seed, src, out);
        if (*identity_cmd) return cmd_identity(identity_curve, identity_x, identity_seed, src, out);
        if (*schur_cmd) return cmd_schur(schur_t, out);
        if (*wintner_cmd) return cmd_wintner(wintner_z, out);
        if (*bt_cmd) return cmd_bt(bt_x, bt_mu, bt_alpha, bt_g, out);
        if (*trivlem_cmd) return cmd_trivlem(trivlem_trials, trivlem_seed, out);
    } catch (const AmbiguousFrobenius& e) {
        err << "error: " << e.what() << " (p=" << e.prime() << ")\n";
        return kExitAmbiguous;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }
    return kExitBadArguments;
}

}  // namespace cmif::cli
