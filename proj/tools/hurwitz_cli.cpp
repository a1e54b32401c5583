// Command-line front end.  Every subcommand prints one JSON document (2-space
// indent, trailing newline) to stdout or --out, built exclusively from
// ordered containers so identical inputs give byte-identical output.
//
// Exit codes: 0 success, 2 usage / bad input, 3 capacity bound exceeded,
// 4 verification failure.
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz/constellation.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/matrix_integral.hpp"
#include "hurwitz/tau.hpp"

namespace {

using namespace hurwitz;

struct CommonOpts {
    long long workBound = 0; // 0: not set on the command line
    std::string outputPath;  // empty: stdout
};

long long effective_work_bound(const CommonOpts& c) {
    if (c.workBound > 0) return c.workBound;
    if (const char* env = std::getenv("HURWITZ_WORK_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        throw ValidationError("HURWITZ_WORK_BOUND must be a positive integer");
    }
    return kDefaultWorkBound;
}

void emit(const Json& doc, const CommonOpts& c) {
    const std::string text = doc.dump(2) + "\n";
    if (c.outputPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.outputPath, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + c.outputPath);
    out << text;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--work-bound", c.workBound,
                    "enumeration cost bound (overrides HURWITZ_WORK_BOUND)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.outputPath, "write JSON here instead of stdout");
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string trimmed;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) throw ValidationError("empty entry in rational list");
        out.push_back(rat_from_string(trimmed));
    }
    if (out.empty()) throw ValidationError("empty rational list");
    return out;
}

std::vector<int> parse_spectrum(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string trimmed;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) throw ValidationError("empty entry in spectrum");
        size_t used = 0;
        int v = std::stoi(trimmed, &used);
        if (used != trimmed.size() || v < 0)
            throw ValidationError("spectrum entries must be integers >= 0");
        out.push_back(v);
    }
    return out;
}

// Deterministic distinct eigenvalues in [-1,1] for the numeric checks.
SpectralPair default_spectral_pair(int n) {
    SpectralPair p;
    p.n = n;
    for (int i = 1; i <= n; ++i) {
        p.a.push_back(std::sin(static_cast<double>(i)));
        p.b.push_back(std::cos(static_cast<double>(i)));
    }
    return p;
}

// ---------------------------------------------------------------- pure ----

int cmd_pure(const std::string& profilesText, bool connected, bool brute,
             const CommonOpts& common) {
    const auto profiles = parse_profiles(profilesText);
    const long long bound = effective_work_bound(common);
    Json doc;
    if (brute) {
        doc["H"] = rat_json(pure_hurwitz_bruteforce(profiles, false, bound));
        doc["method"] = "bruteforce";
    } else {
        doc["H"] = rat_json(pure_hurwitz_char(profiles));
        doc["method"] = "character";
    }
    if (connected)
        doc["H_connected"] = rat_json(pure_hurwitz_bruteforce(profiles, true, bound));
    else
        doc["H_connected"] = nullptr;
    // Fixed key order regardless of branch.
    Json out;
    out["H"] = doc["H"];
    out["H_connected"] = doc["H_connected"];
    out["method"] = doc["method"];
    emit(out, common);
    return 0;
}

// ------------------------------------------------------------ weighted ----

int cmd_weighted(int L, int M, int dMax, const std::string& profilesText,
                 const std::string& cText, const std::string& dText,
                 const std::string& betaText, const CommonOpts& common) {
    const auto profiles = parse_profiles(profilesText);
    if (profiles.size() != 2)
        throw ValidationError("weighted expects exactly two profiles \"mu;nu\"");
    WeightGenSpec g{L, M, std::nullopt, std::nullopt};
    require_valid(g);
    BetaSeries series(L, M, dMax);
    for (int d = 0; d <= dMax; ++d)
        series.set_coeff(d, weighted_hurwitz(g, d, profiles[0], profiles[1]));
    Json doc;
    doc["L"] = L;
    doc["M"] = M;
    doc["mu"] = partition_json(profiles[0]);
    doc["nu"] = partition_json(profiles[1]);
    doc["d_max"] = dMax;
    doc["series"] = series_json(series);
    if (!cText.empty() || !dText.empty() || !betaText.empty()) {
        std::vector<Rat> cVals = cText.empty() ? std::vector<Rat>{} : parse_rat_list(cText);
        std::vector<Rat> dVals = dText.empty() ? std::vector<Rat>{} : parse_rat_list(dText);
        Rat beta = betaText.empty() ? Rat(1) : rat_from_string(betaText);
        doc["value"] = rat_json(series.eval(cVals, dVals, beta));
    }
    emit(doc, common);
    return 0;
}

// --------------------------------------------------------------- table ----

int cmd_table(int L, int M, int NMax, int dMax, const CommonOpts& common) {
    WeightGenSpec g{L, M, std::nullopt, std::nullopt};
    require_valid(g);
    const PQSeries tau = tau_table(g, NMax, dMax);
    Json doc;
    doc["L"] = L;
    doc["M"] = M;
    doc["N_max"] = NMax;
    doc["d_max"] = dMax;
    doc["entries"] = table_json(tau);
    emit(doc, common);
    return 0;
}

// ------------------------------------------------------- constellations ----

int cmd_constellations(int N, int L, const std::string& spectrumText, int dMaxFilter,
                       const CommonOpts& common) {
    Spectrum sp{L, parse_spectrum(spectrumText)};
    const Census census =
        constellation_census(N, sp, dMaxFilter, effective_work_bound(common));
    Json doc;
    doc["N"] = N;
    doc["L"] = L;
    doc["J"] = sp.J;
    doc["d_max"] = dMaxFilter < 0 ? Json(nullptr) : Json(dMaxFilter);
    doc["census"] = census_json(census);
    emit(doc, common);
    return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyResult {
    Json doc;
    int failures = 0;
    std::optional<std::string> capacity; // set when a bound was hit mid-run
};

VerifyResult verify_tau(int L, int M, int NMax, int dMax) {
    WeightGenSpec g{L, M, std::nullopt, std::nullopt};
    require_valid(g);
    const PQSeries tau = tau_table(g, NMax, dMax);
    Json rows = Json::array();
    int checked = 0, failures = 0;
    for (int N = 1; N <= NMax; ++N)
        for (const auto& mu : partitions_of(N))
            for (const auto& nu : partitions_of(N))
                for (int d = 0; d <= dMax; ++d) {
                    const Rat zero;
                    const ParamPoly lhs = tau.entry({N, mu, nu}).coeff(d);
                    const ParamPoly rhs = weighted_hurwitz(g, d, mu, nu);
                    const bool equal = lhs == rhs;
                    Json row;
                    row["N"] = N;
                    row["mu"] = partition_json(mu);
                    row["nu"] = partition_json(nu);
                    row["d"] = d;
                    row["equal"] = equal;
                    if (!equal) {
                        row["tau"] = poly_json(lhs);
                        row["weighted"] = poly_json(rhs);
                        ++failures;
                    }
                    rows.push_back(std::move(row));
                    ++checked;
                }
    Json doc;
    doc["check"] = "tau-vs-weighted";
    doc["L"] = L;
    doc["M"] = M;
    doc["N_max"] = NMax;
    doc["d_max"] = dMax;
    doc["rows"] = std::move(rows);
    doc["checked"] = checked;
    doc["failures"] = failures;
    return {std::move(doc), failures, std::nullopt};
}

VerifyResult verify_constellations(int L, int M, int NMax, int dMax, long long bound) {
    WeightGenSpec g{L, M, std::nullopt, std::nullopt};
    require_valid(g);
    const PQSeries tau = tau_table(g, NMax, dMax);
    Json rows = Json::array();
    int checked = 0, failures = 0;
    std::optional<std::string> capacity;
    for (int N = 1; N <= NMax && !capacity; ++N) {
        try {
            const PQSeries sums = sum_constellation_weights(N, L, M, dMax, bound);
            for (const auto& mu : partitions_of(N))
                for (const auto& nu : partitions_of(N)) {
                    const BetaSeries lhs = sums.entry({N, mu, nu});
                    const BetaSeries rhs = tau.entry({N, mu, nu});
                    const bool equal = lhs == rhs;
                    Json row;
                    row["N"] = N;
                    row["mu"] = partition_json(mu);
                    row["nu"] = partition_json(nu);
                    row["equal"] = equal;
                    if (!equal) {
                        row["constellations"] = series_json(lhs);
                        row["tau"] = series_json(rhs);
                        ++failures;
                    }
                    rows.push_back(std::move(row));
                    ++checked;
                }
        } catch (const CapacityError& e) {
            capacity = e.what();
        }
    }
    Json doc;
    doc["check"] = "constellations-vs-tau";
    doc["L"] = L;
    doc["M"] = M;
    doc["N_max"] = NMax;
    doc["d_max"] = dMax;
    doc["rows"] = std::move(rows);
    doc["checked"] = checked;
    doc["failures"] = failures;
    if (capacity) doc["capacity_error"] = *capacity;
    return {std::move(doc), failures, capacity};
}

VerifyResult verify_connected(int L, int M, int NMax, long long bound) {
    WeightGenSpec g{L, M, std::nullopt, std::nullopt};
    require_valid(g);
    const PQSeries conn = connected_table(tau_table(g, NMax, 0));
    Json rows = Json::array();
    int checked = 0, failures = 0;
    std::optional<std::string> capacity;
    for (int N = 1; N <= NMax && !capacity; ++N)
        for (const auto& mu : partitions_of(N)) {
            if (capacity) break;
            for (const auto& nu : partitions_of(N)) {
                try {
                    const Rat lhs = conn.entry({N, mu, nu}).coeff(0).coeff(
                        std::vector<int>(L + M, 0));
                    const Rat rhs = pure_hurwitz_bruteforce({mu, nu}, true, bound);
                    const bool equal = lhs == rhs;
                    Json row;
                    row["N"] = N;
                    row["mu"] = partition_json(mu);
                    row["nu"] = partition_json(nu);
                    row["connected"] = rat_json(lhs);
                    row["bruteforce"] = rat_json(rhs);
                    row["equal"] = equal;
                    if (!equal) ++failures;
                    rows.push_back(std::move(row));
                    ++checked;
                } catch (const CapacityError& e) {
                    capacity = e.what();
                    break;
                }
            }
        }
    Json doc;
    doc["check"] = "connected-vs-transitive-bruteforce";
    doc["L"] = L;
    doc["M"] = M;
    doc["N_max"] = NMax;
    doc["rows"] = std::move(rows);
    doc["checked"] = checked;
    doc["failures"] = failures;
    if (capacity) doc["capacity_error"] = *capacity;
    return {std::move(doc), failures, capacity};
}

VerifyResult verify_hciz(int n, double gamma, int NMax, double c1, double d1) {
    const SpectralPair p = default_spectral_pair(n);
    const double tolHciz = n == 1 ? 1e-12 : 1e-8;
    const double tolHo = n == 1 ? 1e-12 : 1e-6;
    const HcizReport rHciz = hciz_vs_series(p, gamma, NMax);
    const HcizReport rHo = ho_vs_series(p, c1, d1, gamma, std::min(NMax, 10));
    int failures = 0;
    Json rows = Json::array();
    auto push = [&](const char* family, const HcizReport& r, double tol) {
        Json row;
        row["family"] = family;
        row["report"] = report_json(r);
        row["tol"] = tol;
        const bool pass = r.rel_err < tol;
        row["pass"] = pass;
        if (!pass) ++failures;
        rows.push_back(std::move(row));
    };
    push("hciz", rHciz, tolHciz);
    push("ho", rHo, tolHo);
    Json doc;
    doc["check"] = "determinant-vs-series";
    doc["n"] = n;
    doc["gamma"] = gamma;
    doc["eigenvalues_a"] = p.a;
    doc["eigenvalues_b"] = p.b;
    doc["c1"] = c1;
    doc["d1"] = d1;
    doc["rows"] = std::move(rows);
    doc["failures"] = failures;
    return {std::move(doc), failures, std::nullopt};
}

// ---------------------------------------------------------------- hciz ----

int cmd_hciz(int n, double gamma, int NMax, const std::string& cText,
             const std::string& dText, const CommonOpts& common) {
    const SpectralPair p = default_spectral_pair(n);
    HcizReport report;
    Json doc;
    if (cText.empty() && dText.empty()) {
        report = hciz_vs_series(p, gamma, NMax);
        doc["family"] = "hciz";
    } else {
        if (cText.empty() || dText.empty())
            throw ValidationError("the linear-weight integral needs both --c and --d");
        const double c1 = std::stod(cText);
        const double d1 = std::stod(dText);
        report = ho_vs_series(p, c1, d1, gamma, NMax);
        doc["family"] = "ho";
        doc["c1"] = c1;
        doc["d1"] = d1;
    }
    doc["eigenvalues_a"] = p.a;
    doc["eigenvalues_b"] = p.b;
    doc["report"] = report_json(report);
    emit(doc, common);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rationally weighted double Hurwitz numbers: character sums, "
                 "tau-function coefficients, constellation enumeration, and the "
                 "matrix-integral cross-checks"};
    app.require_subcommand(1);

    // --- pure ---
    std::string pureProfiles;
    bool pureConnected = false, pureBrute = false;
    CommonOpts pureCommon;
    auto* pure = app.add_subcommand("pure", "pure double Hurwitz number of a profile tuple");
    pure->add_option("--profiles", pureProfiles,
                     "semicolon-separated partitions, e.g. \"(2,1);(2,1);(3)\"")
        ->required();
    pure->add_flag("--connected", pureConnected,
                   "also report the connected (transitive) count");
    pure->add_flag("--bruteforce", pureBrute, "use enumeration instead of characters");
    add_common(pure, pureCommon);

    // --- weighted ---
    int wL = 0, wM = 0, wDMax = 0;
    std::string wProfiles, wC, wD, wBeta;
    CommonOpts wCommon;
    auto* weighted =
        app.add_subcommand("weighted", "weighted Hurwitz numbers H^d(mu,nu), d <= dmax");
    weighted->add_option("--L", wL, "number of c parameters")->check(CLI::NonNegativeNumber);
    weighted->add_option("--M", wM, "number of d parameters")->check(CLI::NonNegativeNumber);
    weighted->add_option("--dmax", wDMax, "largest colength d")->check(CLI::NonNegativeNumber);
    weighted->add_option("--profiles", wProfiles, "two partitions \"mu;nu\"")->required();
    weighted->add_option("--c", wC, "rational values c_1..c_L for evaluation, e.g. \"1,1/2\"");
    weighted->add_option("--d", wD, "rational values d_1..d_M for evaluation");
    weighted->add_option("--beta", wBeta, "rational beta for evaluation (default 1)");
    add_common(weighted, wCommon);

    // --- table ---
    int tL = 0, tM = 0, tNMax = 0, tDMax = 0;
    CommonOpts tCommon;
    auto* table = app.add_subcommand("table", "full tau coefficient table");
    table->add_option("--L", tL, "number of c parameters")->check(CLI::NonNegativeNumber);
    table->add_option("--M", tM, "number of d parameters")->check(CLI::NonNegativeNumber);
    table->add_option("--Nmax", tNMax, "largest sheet count N")->check(CLI::NonNegativeNumber);
    table->add_option("--dmax", tDMax, "beta-series truncation order")
        ->check(CLI::NonNegativeNumber);
    add_common(table, tCommon);

    // --- constellations ---
    int cN = 1, cL = 0, cDMax = -1;
    std::string cSpectrum;
    CommonOpts cCommon;
    auto* consts =
        app.add_subcommand("constellations", "census of constellations of one spectrum");
    consts->add_option("--Nmax", cN, "sheet count N of the census")->check(CLI::PositiveNumber);
    consts->add_option("--L", cL, "number of round middle colours")
        ->check(CLI::NonNegativeNumber);
    consts->add_option("--spectrum", cSpectrum,
                       "square counts J_1..J_M, e.g. \"1,2\" (empty for none)");
    consts->add_option("--dmax", cDMax, "keep only classes of middle colength <= dmax");
    add_common(consts, cCommon);

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "cross-route verification suites");
    verify->require_subcommand(1);
    int vL = 0, vM = 1, vNMax = 3, vDMax = 2, vN = 2;
    double vGamma = 0.05, vC1 = 2.0, vD1 = 1.0;
    int vSeriesNMax = 12;
    CommonOpts vCommon;
    auto* vTau = verify->add_subcommand("tau", "tau coefficients vs weighted Hurwitz numbers");
    auto* vConst =
        verify->add_subcommand("constellations", "constellation weight sums vs tau table");
    auto* vConn =
        verify->add_subcommand("connected", "log-table beta^0 vs transitive enumeration");
    auto* vHciz = verify->add_subcommand("hciz", "determinant formulas vs truncated series");
    for (CLI::App* sub : {vTau, vConst, vConn}) {
        sub->add_option("--L", vL, "number of c parameters")->check(CLI::NonNegativeNumber);
        sub->add_option("--M", vM, "number of d parameters")->check(CLI::NonNegativeNumber);
        sub->add_option("--Nmax", vNMax, "largest sheet count N")->check(CLI::PositiveNumber);
        add_common(sub, vCommon);
    }
    for (CLI::App* sub : {vTau, vConst})
        sub->add_option("--dmax", vDMax, "beta-series truncation order")
            ->check(CLI::NonNegativeNumber);
    vHciz->add_option("--n", vN, "matrix size")->check(CLI::PositiveNumber);
    vHciz->add_option("--gamma", vGamma, "coupling");
    vHciz->add_option("--Nmax", vSeriesNMax, "series truncation order")
        ->check(CLI::PositiveNumber);
    vHciz->add_option("--c", vC1, "c_1 for the linear-weight family");
    vHciz->add_option("--d", vD1, "d_1 for the linear-weight family");
    add_common(vHciz, vCommon);

    // --- hciz ---
    int hN = 2, hNMax = 12;
    double hGamma = 0.05;
    std::string hC, hD;
    CommonOpts hCommon;
    auto* hciz = app.add_subcommand(
        "hciz", "matrix-integral determinant vs truncated series, one report");
    hciz->add_option("--n", hN, "matrix size")->check(CLI::PositiveNumber);
    hciz->add_option("--gamma", hGamma, "coupling");
    hciz->add_option("--Nmax", hNMax, "series truncation order")->check(CLI::PositiveNumber);
    hciz->add_option("--c", hC, "c_1: switches to the linear-weight family");
    hciz->add_option("--d", hD, "d_1 for the linear-weight family");
    add_common(hciz, hCommon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (pure->parsed())
            return cmd_pure(pureProfiles, pureConnected, pureBrute, pureCommon);
        if (weighted->parsed())
            return cmd_weighted(wL, wM, wDMax, wProfiles, wC, wD, wBeta, wCommon);
        if (table->parsed()) return cmd_table(tL, tM, tNMax, tDMax, tCommon);
        if (consts->parsed())
            return cmd_constellations(cN, cL, cSpectrum, cDMax, cCommon);
        if (verify->parsed()) {
            VerifyResult r;
            if (vTau->parsed()) r = verify_tau(vL, vM, vNMax, vDMax);
            else if (vConst->parsed())
                r = verify_constellations(vL, vM, vNMax, vDMax,
                                          effective_work_bound(vCommon));
            else if (vConn->parsed())
                r = verify_connected(vL, vM, vNMax, effective_work_bound(vCommon));
            else r = verify_hciz(vN, vGamma, vSeriesNMax, vC1, vD1);
            emit(r.doc, vCommon);
            if (r.capacity) return 3;
            return r.failures == 0 ? 0 : 4;
        }
        if (hciz->parsed()) return cmd_hciz(hN, hGamma, hNMax, hC, hD, hCommon);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const SingularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
