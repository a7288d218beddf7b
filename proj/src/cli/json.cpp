#include "cli/json_util.hpp"
#include "sr/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace sr::cli {

Outcome combine(Outcome a, Outcome b) {
    auto rank = [](Outcome o) {
        switch (o) {
            case Outcome::input_error: return 3;
            case Outcome::failure: return 2;
            case Outcome::inconclusive: return 1;
            case Outcome::pass: return 0;
        }
        return 0;
    };
    return rank(a) >= rank(b) ? a : b;
}

int exit_code(Outcome o) {
    switch (o) {
        case Outcome::pass: return pass;
        case Outcome::failure: return assertion_failure;
        case Outcome::inconclusive: return inconclusive;
        case Outcome::input_error: return input_error;
    }
    return input_error;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::failure: return "fail";
        case Outcome::inconclusive: return "inconclusive";
        case Outcome::input_error: return "input_error";
    }
    return "?";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    static thread_local std::mt19937_64 salt(std::random_device{}());
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(salt() % 1000000007ULL);
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << content;
        os.flush();
        if (!os) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

namespace detail {

std::string shortest(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json rational(const Rational& r) {
    json j;
    auto put = [](const BigInt& v) -> json {
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
            return static_cast<long long>(v);
        return v.str();
    };
    j["num"] = put(r.num());
    j["den"] = put(r.den());
    j["decimal"] = shortest(r.to_double());
    return j;
}

json weight(const Weight& w) { return json{{"k1", rational(w.k1)}, {"k2", rational(w.k2)}}; }

json number(double x) {
    if (std::isfinite(x)) return x;
    return shortest(x);  // json has no inf/nan
}

json params(const Params& p) {
    json j = json::object();
    for (const auto& [k, v] : p) j[k] = number(v);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

using namespace detail;

std::string rational_json(const Rational& r) { return dump(rational(r)); }

std::string report_json(const RestrictionReport& r) {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = "restriction_report";
    j["input"] = r.input;
    j["d"] = rational(r.d);
    j["h_lin"] = rational(r.h_lin);
    j["h_lin_lower_bound_only"] = r.h_lin_lower_bound_only;
    j["m"] = rational(r.m);
    j["case"] = r.case_ab ? json(to_string(*r.case_ab)) : json(nullptr);
    j["shear"] = {{"c", rational(r.shear_c)}, {"a", rational(r.shear_a)}};
    j["phi_tilde"] = r.phi_tilde;
    j["kappa_tilde"] = r.kappa_tilde ? weight(*r.kappa_tilde) : json(nullptr);
    j["kappa_L"] = r.kappa_L ? weight(*r.kappa_L) : json(nullptr);
    j["B"] = r.B ? json(*r.B) : json(nullptr);
    j["A"] = r.A ? json(*r.A) : json(nullptr);
    auto opt = [](const std::optional<Rational>& x) { return x ? rational(*x) : json(nullptr); };
    j["H"] = opt(r.H);
    j["n"] = opt(r.n);
    j["hr"] = opt(r.hr);
    j["p_c_prime"] = opt(r.p_c_prime);
    j["theta_c"] = opt(r.theta_c);
    j["branch"] = to_string(r.nd_or_d);
    j["gaps"] = r.gaps;
    j["invariant_violations"] = r.invariant_violations();
    json checks = json::array();
    if (r.complete())
        for (const auto& c : exponent_lemmas(r)) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["exponent_lemmas"] = checks;
    return dump(j);
}

std::string bound_check_json(const BoundCheck& c, const std::string& csv_file) {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = "bound_check";
    j["lemma_id"] = c.lemma_id;
    j["verdict"] = to_string(c.verdict);
    j["verdict_rule"] = c.verdict_rule;
    j["block_levels"] = c.block_levels;
    j["stability_factor"] = c.stability_factor;
    j["ratio_sup"] = number(c.ratio_sup);
    j["ratio_argmax"] = params(c.ratio_argmax);
    j["top_block_sup"] = number(c.top_block_sup);
    j["previous_block_sup"] = number(c.previous_block_sup);
    j["points"] = {{"ok", c.count(PointStatus::ok)},
                   {"skipped", c.count(PointStatus::skipped)},
                   {"failed", c.count(PointStatus::failed)}};
    json a = json::array();
    for (const auto& x : c.assertions) a.push_back({{"name", x.name}, {"ok", x.ok}, {"detail", x.detail}});
    j["assertions"] = a;
    j["notes"] = c.notes;
    j["grid_csv"] = csv_file;
    return dump(j);
}

std::string decay_table_csv(const DecayFit& f) {
    std::ostringstream os;
    os << "lambda,re,im,abs,log2_abs,fitted_slope\n";
    os.precision(17);
    for (const auto& p : f.points)
        os << p.lambda << ',' << p.value.real() << ',' << p.value.imag() << ',' << std::abs(p.value) << ','
           << std::log2(std::abs(p.value)) << ',' << f.slope << '\n';
    return os.str();
}

}  // namespace sr::cli
