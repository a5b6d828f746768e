#include "specpot/model_io.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specpot::io {

namespace {

constexpr const char* kGrammar =
    "model grammar:\n"
    "  free\n"
    "  periodic:a=<list>;b=<list>     (e.g. periodic:a=1,1;b=1,-1)\n"
    "  table:a=<list>;b=<list>        (free coefficients past the table)\n"
    "  qp:lambda=<x>[,alpha=golden|<x>][,theta=<x>]\n"
    "  random:[seed=<n>][,a_lo=<x>][,a_hi=<x>][,b_lo=<x>][,b_hi=<x>]";

[[noreturn]] void bad_model(const std::string& why) {
    throw std::invalid_argument("cannot parse model (" + why + ")\n" + kGrammar);
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(strip(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

double parse_num(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) bad_model("trailing characters in " + what + ": '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        bad_model("expected a number for " + what + ", got '" + s + "'");
    } catch (const std::out_of_range&) {
        bad_model("number out of range for " + what + ": '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
    if (s.empty()) bad_model(what + " list is empty");
    std::vector<double> out;
    for (const std::string& tok : split(s, ','))
        out.push_back(parse_num(tok, what));
    return out;
}

// "key=value,key=value" (or ';'-separated) into ordered pairs.
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& s, char sep) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& item : split(s, sep)) {
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) bad_model("expected key=value, got '" + item + "'");
        out.emplace_back(strip(item.substr(0, eq)), strip(item.substr(eq + 1)));
    }
    return out;
}

// Entry validation lives in coeffs(); trigger it so malformed parameter sets
// surface as usage errors rather than failures deep inside a computation.
CoeffModel validated(CoeffModel m) {
    try {
        coeffs(m, 1);
    } catch (const std::exception& e) {
        bad_model(e.what());
    }
    return m;
}

} // namespace

CoeffModel parse_model(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) bad_model("empty descriptor");
    std::size_t colon = s.find(':');
    std::string head = strip(s.substr(0, colon));
    std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);

    if (head == "free") {
        if (!rest.empty()) bad_model("free takes no parameters");
        return FreeModel{};
    }
    if (head == "periodic" || head == "table") {
        std::vector<double> a, b;
        for (auto& [k, v] : parse_kv(rest, ';')) {
            if (k == "a") a = parse_list(v, "a");
            else if (k == "b") b = parse_list(v, "b");
            else bad_model("unknown key '" + k + "' for " + head);
        }
        if (a.empty() || b.empty()) bad_model(head + " needs both a= and b=");
        if (head == "periodic") return validated(PeriodicModel{std::move(a), std::move(b)});
        return validated(TableModel{std::move(a), std::move(b)});
    }
    if (head == "qp") {
        QuasiPeriodicModel m;
        bool have_lambda = false;
        for (auto& [k, v] : parse_kv(rest, ',')) {
            if (k == "lambda") { m.lambda = parse_num(v, "lambda"); have_lambda = true; }
            else if (k == "theta") m.theta = parse_num(v, "theta");
            else if (k == "alpha") {
                if (v == "golden") m.golden_alpha = true;
                else { m.golden_alpha = false; m.alpha = parse_num(v, "alpha"); }
            } else bad_model("unknown key '" + k + "' for qp");
        }
        if (!have_lambda) bad_model("qp needs lambda=");
        return validated(m);
    }
    if (head == "random") {
        RandomModel m;
        for (auto& [k, v] : parse_kv(rest, ',')) {
            if (k == "seed") m.seed = static_cast<std::uint64_t>(parse_num(v, "seed"));
            else if (k == "a_lo") m.a_lo = parse_num(v, "a_lo");
            else if (k == "a_hi") m.a_hi = parse_num(v, "a_hi");
            else if (k == "b_lo") m.b_lo = parse_num(v, "b_lo");
            else if (k == "b_hi") m.b_hi = parse_num(v, "b_hi");
            else bad_model("unknown key '" + k + "' for random");
        }
        return validated(m);
    }
    bad_model("unknown model kind '" + head + "'");
}

SetUnion parse_set(const std::string& text) {
    std::string s = strip(text);
    std::vector<Interval> parts;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("cannot parse set '" + s + "' (" + why +
                                    "); expected \"[lo,hi],[lo,hi],...\"");
    };
    while (i < s.size()) {
        if (s[i] != '[') fail("expected '['");
        std::size_t close = s.find(']', i);
        if (close == std::string::npos) fail("missing ']'");
        std::vector<std::string> nums = split(s.substr(i + 1, close - i - 1), ',');
        if (nums.size() != 2) fail("each interval needs exactly two endpoints");
        double lo = 0.0, hi = 0.0;
        try {
            lo = std::stod(nums[0]);
            hi = std::stod(nums[1]);
        } catch (const std::exception&) {
            fail("bad number");
            return SetUnion(parts);  // unreachable
        }
        try {
            parts.push_back({lo, hi});
        } catch (const std::exception& e) {
            fail(e.what());
        }
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != ',') fail("expected ',' between intervals");
            ++i;
        }
    }
    if (parts.empty()) fail("no intervals");
    return SetUnion(std::move(parts));
}

ordered_json model_to_json(const CoeffModel& m) {
    ordered_json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FreeModel>) {
                j["kind"] = "free";
            } else if constexpr (std::is_same_v<T, PeriodicModel>) {
                j["kind"] = "periodic";
                j["a"] = v.a;
                j["b"] = v.b;
            } else if constexpr (std::is_same_v<T, TableModel>) {
                j["kind"] = "table";
                j["a"] = v.a;
                j["b"] = v.b;
            } else if constexpr (std::is_same_v<T, QuasiPeriodicModel>) {
                j["kind"] = "qp";
                j["lambda"] = v.lambda;
                j["theta"] = v.theta;
                if (v.golden_alpha) j["alpha"] = "golden";
                else j["alpha"] = v.alpha;
            } else {
                j["kind"] = "random";
                j["seed"] = v.seed;
                j["a_lo"] = v.a_lo;
                j["a_hi"] = v.a_hi;
                j["b_lo"] = v.b_lo;
                j["b_hi"] = v.b_hi;
            }
        },
        m);
    return j;
}

CoeffModel model_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("model JSON needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    auto lists = [&](const char* name) {
        if (!j.contains(name)) bad_model(kind + " JSON needs \"" + name + "\"");
        return j.at(name).get<std::vector<double>>();
    };
    if (kind == "free") return FreeModel{};
    if (kind == "periodic") return validated(PeriodicModel{lists("a"), lists("b")});
    if (kind == "table") return validated(TableModel{lists("a"), lists("b")});
    if (kind == "qp") {
        QuasiPeriodicModel m;
        if (!j.contains("lambda")) bad_model("qp JSON needs lambda");
        m.lambda = j.at("lambda").get<double>();
        if (j.contains("theta")) m.theta = j.at("theta").get<double>();
        if (j.contains("alpha")) {
            if (j.at("alpha").is_string()) {
                if (j.at("alpha").get<std::string>() != "golden")
                    bad_model("qp alpha must be \"golden\" or a number");
                m.golden_alpha = true;
            } else {
                m.golden_alpha = false;
                m.alpha = j.at("alpha").get<double>();
            }
        }
        return validated(m);
    }
    if (kind == "random") {
        RandomModel m;
        if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("a_lo")) m.a_lo = j.at("a_lo").get<double>();
        if (j.contains("a_hi")) m.a_hi = j.at("a_hi").get<double>();
        if (j.contains("b_lo")) m.b_lo = j.at("b_lo").get<double>();
        if (j.contains("b_hi")) m.b_hi = j.at("b_hi").get<double>();
        return validated(m);
    }
    bad_model("unknown model kind '" + kind + "'");
}

ordered_json set_to_json(const SetUnion& E) {
    ordered_json parts = ordered_json::array();
    for (const Interval& iv : E.parts()) parts.push_back({iv.lo, iv.hi});
    return ordered_json{{"intervals", parts}};
}

SetUnion set_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("intervals"))
        throw std::invalid_argument("set JSON needs an \"intervals\" array");
    std::vector<Interval> parts;
    for (const auto& p : j.at("intervals")) {
        auto pair = p.get<std::vector<double>>();
        if (pair.size() != 2)
            throw std::invalid_argument("each interval is a [lo, hi] pair");
        parts.push_back({pair[0], pair[1]});
    }
    return SetUnion(std::move(parts));
}

ordered_json measure_to_json(const Measure& mu) {
    ordered_json atoms = ordered_json::array();
    for (auto& [pos, w] : mu.atoms()) atoms.push_back({pos, w});
    ordered_json pieces = ordered_json::array();
    for (const auto& p : mu.pieces()) {
        pieces.push_back(ordered_json{{"lo", p.iv.lo},
                                      {"hi", p.iv.hi},
                                      {"edge_singular", p.edge_singular},
                                      {"values", p.values}});
    }
    return ordered_json{{"atoms", atoms}, {"pieces", pieces}};
}

Measure measure_from_json(const ordered_json& j) {
    Measure mu;
    if (j.contains("atoms"))
        for (const auto& a : j.at("atoms")) {
            auto pair = a.get<std::vector<double>>();
            if (pair.size() != 2) throw std::invalid_argument("each atom is a [pos, weight] pair");
            mu.add_atom(pair[0], pair[1]);
        }
    if (j.contains("pieces"))
        for (const auto& p : j.at("pieces")) {
            Interval iv{p.at("lo").get<double>(), p.at("hi").get<double>()};
            mu.add_piece_values(iv, p.at("values").get<std::vector<double>>(),
                                p.value("edge_singular", false));
        }
    return mu;
}

ordered_json krein_to_json(const KreinFn& xi) {
    return ordered_json{{"breaks", xi.breaks()}, {"values", xi.values()}};
}

KreinFn krein_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("breaks") || !j.contains("values"))
        throw std::invalid_argument("phase function JSON needs \"breaks\" and \"values\"");
    try {
        return KreinFn(j.at("breaks").get<std::vector<double>>(),
                       j.at("values").get<std::vector<double>>());
    } catch (const ordered_json::exception&) {
        throw std::invalid_argument(
            "phase function JSON: \"breaks\" and \"values\" must be arrays of numbers");
    }
}

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace specpot::io
