#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace lifshitz::cli {
namespace {

const std::vector<std::string> kNumericKeys = {"N",  "q", "m",      "H",  "beta", "k", "L",     "Lambda", "xi", "Q",
                                               "V0", "z", "r_plus", "r0", "G",    "R", "gamma", "lambda", "r_inf"};

const std::vector<std::string> kParameterKeys = {
    "N",     "q",      "m",     "H",         "beta",  "k",   "L",    "Lambda",
    "xi",    "Q",      "V0",    "z",         "r_plus", "r0", "G",    "R",
    "gamma", "lambda", "r_inf", "panels",    "scheme", "endpoint_exponent",
    "levels", "tol",   "axis",  "from",      "to",    "points", "spacing"};

const std::vector<std::string> kRunKeys = {"out", "format", "workers", "inject-fault", "only"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
        throw ValidationError("invalid value for '" + key + "': '" + text + "' is not a finite number");
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ValidationError("invalid value for '" + key + "': '" + text + "' is not an integer");
    return v;
}

template <typename Params>
void check(const Params& p, const std::string& context) {
    try {
        p.validate("config");
    } catch (const NumericalError& e) {
        throw ValidationError(context + e.what());
    }
}

}  // namespace

const char* to_string(Subcommand s) {
    switch (s) {
        case Subcommand::boundary: return "boundary";
        case Subcommand::bulk: return "bulk";
        case Subcommand::match: return "match";
        case Subcommand::sweep: return "sweep";
        case Subcommand::verify: return "verify";
    }
    return "?";
}

Subcommand parse_subcommand(const std::string& name) {
    for (auto s : {Subcommand::boundary, Subcommand::bulk, Subcommand::match, Subcommand::sweep, Subcommand::verify})
        if (name == to_string(s)) return s;
    throw ValidationError("unknown subcommand '" + name + "'");
}

std::vector<double> SweepAxis::values() const {
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        v[i] = spacing == Spacing::log ? std::exp(std::log(from) + t * (std::log(to) - std::log(from)))
                                       : from + t * (to - from);
    }
    v.front() = from;
    v.back() = to;
    return v;
}

void RunConfig::set(const std::string& key, double value) {
    if (key == "N") {
        if (value != std::floor(value) || std::abs(value) > 1e9)
            throw ValidationError("N must be an integer, got " + format_number(value));
        boundary.N = static_cast<int>(value);
    } else if (key == "q") boundary.q = value;
    else if (key == "m") boundary.m = value;
    else if (key == "H") boundary.H = value;
    else if (key == "beta") boundary.beta = value;
    else if (key == "k") boundary.k = value;
    else if (key == "L") {
        bulk.L = value;
        if (lambda_auto) bulk.Lambda = -3.0 / (value * value);
        if (radius_auto) bulk.R = value;
    } else if (key == "Lambda") {
        bulk.Lambda = value;
        lambda_auto = false;
    } else if (key == "xi") bulk.xi = value;
    else if (key == "Q") bulk.Q = value;
    else if (key == "V0") bulk.V0 = value;
    else if (key == "z") bulk.z = value;
    else if (key == "r_plus") bulk.r_plus = value;
    else if (key == "r0") bulk.r0 = value;
    else if (key == "G") bulk.G = value;
    else if (key == "R") {
        bulk.R = value;
        radius_auto = false;
    } else if (key == "gamma") bulk.gamma = value;
    else if (key == "lambda") bulk.lambda = value;
    else if (key == "r_inf") r_inf = value;
    else throw ValidationError("'" + key + "' is not a numeric parameter");
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    const auto num = [](double v) { return format_number(v); };
    return {
        {"N", std::to_string(boundary.N)},
        {"q", num(boundary.q)},
        {"m", num(boundary.m)},
        {"H", num(boundary.H)},
        {"beta", num(boundary.beta)},
        {"k", num(boundary.k)},
        {"L", num(bulk.L)},
        {"Lambda", lambda_auto ? "auto" : num(bulk.Lambda)},
        {"xi", num(bulk.xi)},
        {"Q", num(bulk.Q)},
        {"V0", num(bulk.V0)},
        {"z", num(bulk.z)},
        {"r_plus", num(bulk.r_plus)},
        {"r0", num(bulk.r0)},
        {"G", num(bulk.G)},
        {"R", radius_auto ? "auto" : num(bulk.R)},
        {"gamma", num(bulk.gamma)},
        {"lambda", num(bulk.lambda)},
        {"r_inf", num(r_inf)},
        {"panels", std::to_string(quadrature.panels)},
        {"scheme", lifshitz::to_string(quadrature.scheme)},
        {"endpoint_exponent", num(quadrature.endpoint_exponent)},
        {"levels", std::to_string(quadrature.refinement_levels)},
        {"tol", num(quadrature.tolerance)},
        {"axis", sweep.key},
        {"from", num(sweep.from)},
        {"to", num(sweep.to)},
        {"points", std::to_string(sweep.points)},
        {"spacing", sweep.spacing == Spacing::log ? "log" : "linear"},
    };
}

const std::vector<std::string>& parameter_keys() { return kParameterKeys; }

bool is_sweepable(const std::string& key) {
    return key != "Lambda" && std::find(kNumericKeys.begin(), kNumericKeys.end(), key) != kNumericKeys.end();
}

std::string canonical_axis(const std::string& name) {
    if (name == "Qt" || name == "Q~" || name == "Qtilde" || name == "Q̃") return "Q";
    return name;
}

RawValues parse_config_text(const std::string& text, const std::string& source) {
    RawValues out;
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        const std::string where = source + ":" + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) throw ValidationError(where + "expected key=value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (std::find(kParameterKeys.begin(), kParameterKeys.end(), key) == kParameterKeys.end())
            throw ValidationError(where + "unknown key '" + key + "'");
        if (value.empty()) throw ValidationError(where + "empty value for '" + key + "'");
        out[key] = value;
    }
    return out;
}

RawValues read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

RunConfig resolve(Subcommand sub, const RawValues& file, const RawValues& flags) {
    RawValues merged = file;
    for (const auto& [k, v] : flags) {
        const bool known = std::find(kParameterKeys.begin(), kParameterKeys.end(), k) != kParameterKeys.end() ||
                           std::find(kRunKeys.begin(), kRunKeys.end(), k) != kRunKeys.end();
        if (!known) throw ValidationError("unknown option '--" + k + "'");
        merged[k] = v;
    }

    RunConfig c;
    c.subcommand = sub;
    const auto get = [&](const std::string& key) -> const std::string* {
        const auto it = merged.find(key);
        return it == merged.end() ? nullptr : &it->second;
    };

    // L before Lambda and R so that explicit values of the latter stick.
    for (const auto& key : kNumericKeys) {
        const std::string* v = get(key);
        if (!v) continue;
        if ((key == "Lambda" || key == "R") && *v == "auto") continue;
        c.set(key, parse_double(key, *v));
    }
    if (c.lambda_auto) c.bulk.Lambda = -3.0 / (c.bulk.L * c.bulk.L);
    if (c.radius_auto) c.bulk.R = c.bulk.L;

    if (auto v = get("panels")) c.quadrature.panels = parse_int("panels", *v);
    if (auto v = get("levels")) c.quadrature.refinement_levels = parse_int("levels", *v);
    if (auto v = get("endpoint_exponent")) c.quadrature.endpoint_exponent = parse_double("endpoint_exponent", *v);
    if (auto v = get("tol")) c.quadrature.tolerance = parse_double("tol", *v);
    if (auto v = get("scheme")) {
        if (*v == "simpson") c.quadrature.scheme = QuadratureScheme::simpson;
        else if (*v == "gauss-legendre" || *v == "gauss_legendre") c.quadrature.scheme = QuadratureScheme::gauss_legendre;
        else throw ValidationError("scheme must be simpson or gauss-legendre, got '" + *v + "'");
    }

    if (auto v = get("axis")) c.sweep.key = canonical_axis(*v);
    if (auto v = get("from")) c.sweep.from = parse_double("from", *v);
    if (auto v = get("to")) c.sweep.to = parse_double("to", *v);
    if (auto v = get("points")) c.sweep.points = parse_int("points", *v);
    if (auto v = get("spacing")) {
        if (*v == "log") c.sweep.spacing = Spacing::log;
        else if (*v == "linear") c.sweep.spacing = Spacing::linear;
        else throw ValidationError("spacing must be linear or log, got '" + *v + "'");
    }

    if (auto v = get("out")) c.out = std::filesystem::path(*v);
    if (auto v = get("format")) {
        if (*v == "csv") c.format = OutputFormat::csv;
        else if (*v == "json") c.format = OutputFormat::json;
        else throw ValidationError("format must be csv or json, got '" + *v + "'");
    }
    if (auto v = get("workers")) {
        const int w = parse_int("workers", *v);
        if (w < 1) throw ValidationError("workers must be >= 1");
        c.workers = static_cast<unsigned>(w);
    } else {
        c.workers = default_workers();
    }
    if (auto v = get("inject-fault")) c.inject_fault = *v;
    if (auto v = get("only")) c.only = *v;

    try {
        c.quadrature.validate("config");
    } catch (const NumericalError& e) {
        throw ValidationError(e.what());
    }
    if (!(c.r_inf > c.bulk.r_plus)) throw ValidationError("r_inf must exceed r_plus");

    switch (sub) {
        case Subcommand::boundary: check(c.boundary, ""); break;
        case Subcommand::bulk:
        case Subcommand::match: check(c.bulk, ""); break;
        case Subcommand::sweep: {
            const auto& s = c.sweep;
            if (!is_sweepable(s.key)) throw ValidationError("sweep axis '" + s.key + "' is not a sweepable parameter");
            if (s.points < 2) throw ValidationError("sweep needs at least 2 points");
            if (!(s.from != s.to)) throw ValidationError("sweep range is degenerate (from == to)");
            if (s.spacing == Spacing::log && !(s.from > 0 && s.to > 0))
                throw ValidationError("log spacing requires a positive range");
            const auto values = s.values();
            for (std::size_t i = 0; i < values.size(); ++i) {
                RunConfig point = c;
                point.set(s.key, values[i]);
                const std::string where = "sweep point " + std::to_string(i) + ": ";
                check(point.boundary, where);
                check(point.bulk, where);
                if (!(point.r_inf > point.bulk.r_plus)) throw ValidationError(where + "r_inf must exceed r_plus");
            }
            break;
        }
        case Subcommand::verify: break;
    }
    return c;
}

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

unsigned default_workers() {
    if (const char* env = std::getenv("LF_WORKERS")) {
        const std::string text = env;
        unsigned w = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
        if (ec != std::errc() || ptr != text.data() + text.size() || w == 0)
            throw ValidationError("LF_WORKERS must be a positive integer, got '" + text + "'");
        return w;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace lifshitz::cli
