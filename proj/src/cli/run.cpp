#include "cli/json_util.hpp"
#include "detail/parallel.hpp"
#include "sr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace sr::cli {

using namespace detail;

namespace {

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Outcome of(const BoundCheck& c) {
    if (!c.assertions_ok() || c.verdict == Verdict::growing) return Outcome::failure;
    if (c.verdict == Verdict::inconclusive) return Outcome::inconclusive;
    return Outcome::pass;
}

struct Artifact {
    std::string check;
    Outcome outcome = Outcome::pass;
    std::vector<std::string> files;
    std::string summary;
    double seconds = 0;
};

// Writes files under out_dir and records them in the artifact.
struct Sink {
    const std::filesystem::path& dir;
    Artifact& a;
    void put(const std::string& name, const std::string& content) {
        write_atomic(dir / name, content);
        a.files.push_back(name);
    }
};

void run_bound_check(const BoundCheck& c, const std::string& name, Sink& s) {
    s.put(name + ".csv", bound_check_csv(c));
    s.put(name + ".json", bound_check_json(c, name + ".csv"));
    s.a.outcome = combine(s.a.outcome, of(c));
    std::ostringstream os;
    os << "verdict " << to_string(c.verdict) << ", ratio sup " << shortest(c.ratio_sup);
    if (!c.assertions_ok()) os << ", assertion failed";
    s.a.summary += (s.a.summary.empty() ? "" : "; ") + os.str();
}

void run_decay(const DecayProblem& p, Sink& s) {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = "decay_fit";
    j["name"] = p.name;
    j["phase"] = {{"kind", to_string(p.spec.phase.kind)}, {"coefficients", params(p.spec.phase.coefficients)},
                  {"poly", p.spec.phase.poly}};
    j["route"] = to_string(p.cfg.route);
    j["expected_slope"] = p.expected_slope;
    j["slope_tol"] = p.slope_tol;
    try {
        DecayFit f = decay_fit(p.spec, p.cfg);
        bool ok = std::abs(f.slope - p.expected_slope) <= p.slope_tol;
        j["lambda_range"] = {f.lambda_range.first, f.lambda_range.second};
        j["slope"] = f.slope;
        j["intercept"] = f.intercept;
        j["max_residual"] = f.max_residual;
        j["within_tol"] = ok;
        if (p.name == "d4_counterexample") {
            // the D4 bound would force slope <= -2/3
            bool above = f.slope > -2.0 / 3 + 0.02;
            j["above_lemma_slope"] = above;
            ok = ok && above;
        }
        s.put(p.name + ".csv", decay_table_csv(f));
        s.a.outcome = combine(s.a.outcome, ok ? Outcome::pass : Outcome::failure);
        s.a.summary = "slope " + shortest(f.slope) + ", expected " + shortest(p.expected_slope);
    } catch (const QuadratureFailure& e) {
        j["error"] = e.what();
        s.a.outcome = combine(s.a.outcome, Outcome::inconclusive);
        s.a.summary = std::string("quadrature failure: ") + e.what();
    }
    s.put(p.name + ".json", dump(j));
}

void run_family(const RunConfig& c, Sink& s) {
    std::string csv = family_csv(c.m);
    s.put("family.csv", csv);
    // admissible rows (n > A + mB) must match the closed form
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    std::size_t rows = 0, admissible = 0, mismatched = 0;
    while (std::getline(is, line)) {
        ++rows;
        bool adm = line.find(",admissible,") != std::string::npos;
        bool agree = line.substr(line.rfind(',') + 1) == "1";
        admissible += adm;
        mismatched += adm && !agree;
    }
    json j{{"schema_version", schema_version},
           {"kind", "family_grid"},
           {"rows", rows},
           {"admissible", admissible},
           {"admissible_mismatches", mismatched},
           {"csv", "family.csv"}};
    s.put("family.json", dump(j));
    s.a.outcome = combine(s.a.outcome, mismatched == 0 ? Outcome::pass : Outcome::failure);
    s.a.summary = std::to_string(admissible) + "/" + std::to_string(rows) + " admissible, " +
                  std::to_string(mismatched) + " mismatches";
}

void run_identities(Sink& s) {
    json a = json::array();
    std::size_t bad = 0;
    for (const auto& c : exponent_identities()) {
        a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        bad += !c.ok;
    }
    s.put("identities.json", dump(json{{"schema_version", schema_version}, {"kind", "identities"}, {"checks", a}}));
    s.a.outcome = combine(s.a.outcome, bad == 0 ? Outcome::pass : Outcome::failure);
    s.a.summary = std::to_string(a.size() - bad) + "/" + std::to_string(a.size()) + " hold";
}

void run_check(const std::string& name, const RunConfig& c, Sink& s) {
    CommonOptions common;
    common.tol = c.tol;
    common.threads = c.threads;
    if (name == "family") return run_family(c, s);
    if (name == "identities") return run_identities(s);
    for (const auto& p : decay_problems(c))
        if (p.name == name) return run_decay(p, s);
    if (name == "as1") {
        As1Options o;
        o.common = common;
        return run_bound_check(check_as1(o), name, s);
    }
    if (name == "as2") {
        As2Options o;
        o.common = common;
        return run_bound_check(check_as2(o), name, s);
    }
    if (name == "simple_int") {
        SimpleIntOptions o;
        o.common = common;
        return run_bound_check(check_simple_int(o), name, s);
    }
    if (name == "duistermaat_B4" || name == "duistermaat_B3") {
        DuistermaatOptions o;
        o.common = common;
        o.B = name.back() - '0';
        return run_bound_check(check_duistermaat_uniform(o), name, s);
    }
    if (name == "osc_sum") {
        for (const auto& p : osc_sum_default_problems()) run_bound_check(check_osc_sum(p), name + "_" + p.name, s);
        return;
    }
    if (name == "dyadic_sum") {
        DyadicSumOptions o;
        o.seed = c.seed;
        return run_bound_check(check_dyadic_sum_lemma(o), name, s);
    }
    throw std::invalid_argument("unknown check " + name);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_run_files(const RunConfig& c, const std::string& command, const std::vector<Artifact>& arts,
                     Outcome total, const std::string& started) {
    json a = json::array(), times = json::object();
    for (const auto& x : arts) {
        a.push_back({{"check", x.check}, {"outcome", to_string(x.outcome)}, {"summary", x.summary}, {"files", x.files}});
        times[x.check] = x.seconds;
    }
    json cfg{{"suite", c.suite},
             {"lambda_min_exp", c.lambda_min_exp ? json(*c.lambda_min_exp) : json(nullptr)},
             {"lambda_max_exp", c.lambda_max_exp ? json(*c.lambda_max_exp) : json(nullptr)},
             {"tol", c.tol},
             {"seed", c.seed},
             {"m", rational(c.m)}};
    if (command == "classify") cfg = {{"inputs", c.inputs}, {"m", rational(c.m)}, {"family", c.family}};
    write_atomic(c.out_dir / "manifest.json", dump(json{{"schema_version", schema_version},
                                                        {"command", command},
                                                        {"config", cfg},
                                                        {"artifacts", a},
                                                        {"outcome", to_string(total)},
                                                        {"exit_code", exit_code(total)}}));
    write_atomic(c.out_dir / "metadata.json", dump(json{{"schema_version", schema_version},
                                                        {"command", command},
                                                        {"started_utc", started},
                                                        {"finished_utc", utc_now()},
                                                        {"seconds", times}}));
}

}  // namespace

std::vector<DecayProblem> decay_problems(const RunConfig& c) {
    auto grid = [&](int lo, int hi) { return dyadic_grid(c.lambda_min_exp.value_or(lo), c.lambda_max_exp.value_or(hi)); };
    CutoffSpec bump = CutoffSpec::bump(0, 1);
    std::vector<DecayProblem> out;
    auto add = [&](std::string name, PhaseDescriptor d, double slope) {
        DecayProblem p;
        p.name = std::move(name);
        p.spec = {std::move(d), bump, bump, grid(8, 16)};
        p.expected_slope = slope;
        p.cfg.base.rel_tol = c.tol;
        out.push_back(std::move(p));
    };
    add("quadratic", {PhaseKind::monomial, {{"B", 2}}, ""}, -0.5);
    add("airy", {PhaseKind::airy, {{"B1_cone", 1}}, ""}, -1.0 / 3);
    for (int B = 3; B <= 5; ++B) add("vdc_B" + std::to_string(B), {PhaseKind::monomial, {{"B", B}}, ""}, -1.0 / B);
    for (int B = 3; B <= 5; ++B)
        add("product_B" + std::to_string(B), {PhaseKind::custom_poly, {}, "x1^3 + x2^" + std::to_string(B)},
            -(1.0 / 3 + 1.0 / B));
    CounterexampleOptions ce;
    DecayProblem p;
    p.name = "d4_counterexample";
    p.spec = {{PhaseKind::d4_counterexample, {{"delta", ce.deltas[0]}}, ""}, CutoffSpec::gaussian(0, ce.sigma),
              CutoffSpec::gaussian(0, ce.sigma), grid(ce.lambda_min_exp, ce.lambda_max_exp)};
    p.expected_slope = ce.target_slope;
    p.slope_tol = ce.slope_tol;
    p.cfg.base.rel_tol = c.tol;
    p.cfg.route = Route2d::deformed;
    out.push_back(std::move(p));
    return out;
}

std::vector<std::string> suite_members(const std::string& suite) {
    std::vector<std::string> classify{"family", "identities"};
    std::vector<std::string> decay;
    for (const auto& p : decay_problems({})) decay.push_back(p.name);
    std::vector<std::string> lemmas{"as1", "as2", "simple_int", "duistermaat_B4", "duistermaat_B3", "osc_sum",
                                    "dyadic_sum"};
    if (suite == "classify") return classify;
    if (suite == "decay") return decay;
    if (suite == "lemmas") return lemmas;
    std::vector<std::string> all = classify;
    all.insert(all.end(), decay.begin(), decay.end());
    all.insert(all.end(), lemmas.begin(), lemmas.end());
    if (suite == "all") return all;
    if (std::find(all.begin(), all.end(), suite) != all.end()) return {suite};
    return {};
}

std::string read_poly_file(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw std::invalid_argument("cannot read " + p.string());
    std::string line, text;
    while (std::getline(is, line)) {
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        text += (text.empty() ? "" : " ") + line;
    }
    if (text.empty()) throw std::invalid_argument(p.string() + ": empty input");
    return text;
}

std::string family_csv(const Rational& m) {
    std::ostringstream os;
    os << "A,B,n,hr,p_c_prime,closed_form_hr,admissible,agree\n";
    for (long long B = 3; B <= 5; ++B)
        for (long long A = 0; A <= B - 3; ++A)
            for (long long n = 2 * B + 1; n <= 2 * B + 8; ++n) {
                std::string poly = "x1^" + std::to_string(A) + "*x2^" + std::to_string(B) + " + x1^" + std::to_string(n);
                ClassifyOptions opt;
                opt.m = m;
                RestrictionReport r = classify(poly, opt);
                Rational closed = family_hr_plus_one(A, B, n) - 1;
                bool adm = Rational(n) > Rational(A) + m * Rational(B);
                os << A << ',' << B << ',' << n << ',' << (r.hr ? r.hr->str() : "") << ','
                   << (r.p_c_prime ? r.p_c_prime->str() : "") << ',' << closed.str() << ','
                   << (adm ? "admissible" : "outside") << ',' << (r.hr && *r.hr == closed ? 1 : 0) << '\n';
            }
    return os.str();
}

int run_classify(const RunConfig& c, std::ostream& log) {
    std::string started = utc_now();
    if (c.inputs.empty() && !c.family) {
        log << "classify: no input files\n";
        return input_error;
    }
    // output names from the file stems, made unique
    std::vector<std::string> names;
    std::map<std::string, int> seen;
    for (const auto& in : c.inputs) {
        std::string stem = std::filesystem::path(in).stem().string();
        int k = ++seen[stem];
        names.push_back(stem + (k > 1 ? "_" + std::to_string(k) : "") + ".report.json");
    }
    struct Result {
        Outcome outcome = Outcome::pass;
        std::string message;
        double seconds = 0;
    };
    auto results = sr::detail::parallel_map<Result>(
        c.inputs.size(),
        [&](std::size_t i) {
            Result r;
            auto t0 = std::chrono::steady_clock::now();
            try {
                ClassifyOptions opt;
                opt.m = c.m;
                RestrictionReport rep = classify(read_poly_file(c.inputs[i]), opt);
                write_atomic(c.out_dir / names[i], report_json(rep));
                bool ok = rep.invariant_violations().empty();
                if (rep.complete())
                    for (const auto& x : exponent_lemmas(rep)) ok = ok && x.ok;
                r.outcome = ok ? Outcome::pass : Outcome::failure;
                r.message = rep.p_c_prime ? "p_c_prime = " + rep.p_c_prime->str() : "partial report";
                if (!rep.complete()) r.message += " (" + std::to_string(rep.gaps.size()) + " gaps)";
            } catch (const std::exception& e) {
                r.outcome = Outcome::input_error;
                r.message = e.what();
            }
            r.seconds = seconds_since(t0);
            return r;
        },
        c.threads);
    std::vector<Artifact> arts;
    Outcome total = Outcome::pass;
    for (std::size_t i = 0; i < results.size(); ++i) {
        Artifact a;
        a.check = c.inputs[i];
        a.outcome = results[i].outcome;
        a.summary = results[i].message;
        a.seconds = results[i].seconds;
        if (a.outcome != Outcome::input_error) a.files.push_back(names[i]);
        log << c.inputs[i] << ": " << to_string(a.outcome) << ", " << a.summary << '\n';
        total = combine(total, a.outcome);
        arts.push_back(std::move(a));
    }
    if (c.family) {
        Artifact a;
        a.check = "family";
        auto t0 = std::chrono::steady_clock::now();
        Sink s{c.out_dir, a};
        run_family(c, s);
        a.seconds = seconds_since(t0);
        log << "family: " << to_string(a.outcome) << ", " << a.summary << '\n';
        total = combine(total, a.outcome);
        arts.push_back(std::move(a));
    }
    write_run_files(c, "classify", arts, total, started);
    return exit_code(total);
}

int run_verify(const RunConfig& c, std::ostream& log) {
    std::string started = utc_now();
    if (c.lambda_min_exp && c.lambda_max_exp && *c.lambda_min_exp >= *c.lambda_max_exp) {
        log << "verify: lambda-min-exp must be below lambda-max-exp\n";
        return input_error;
    }
    if (!(c.tol > 0 && c.tol < 1)) {
        log << "verify: tol in (0, 1)\n";
        return input_error;
    }
    std::vector<std::string> checks = suite_members(c.suite);
    if (checks.empty()) {
        log << "verify: unknown suite " << c.suite << '\n';
        return input_error;
    }
    std::vector<Artifact> arts;
    Outcome total = Outcome::pass;
    for (const auto& name : checks) {
        Artifact a;
        a.check = name;
        auto t0 = std::chrono::steady_clock::now();
        Sink s{c.out_dir, a};
        try {
            run_check(name, c, s);
        } catch (const std::invalid_argument& e) {
            a.outcome = Outcome::input_error;
            a.summary = e.what();
        } catch (const std::exception& e) {
            a.outcome = Outcome::inconclusive;
            a.summary = e.what();
        }
        a.seconds = seconds_since(t0);
        log << name << ": " << to_string(a.outcome) << ", " << a.summary << '\n';
        total = combine(total, a.outcome);
        arts.push_back(std::move(a));
    }
    write_run_files(c, "verify", arts, total, started);
    return exit_code(total);
}

}  // namespace sr::cli
