#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "vgc/fusion.hpp"
#include "vgc/ifun.hpp"
#include "vgc/kgrass.hpp"
#include "vgc/quotloc.hpp"
#include "vgc/wallcross.hpp"

using json = nlohmann::ordered_json;
using namespace vgc;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (s.empty() || pos != s.size()) throw PreconditionError("parse", "not an integer: '" + s + "'");
    return v;
}

Partition parse_partition(const std::string& s, char sep) {
    Partition p;
    if (s.empty() || s == "-" || s == "0") return s == "0" ? Partition{0} : Partition{};
    for (const auto& x : split(s, sep)) p.push_back(to_int(x));
    if (!is_partition(p)) throw DomainError("not a partition: " + s);
    return p;
}

// "2,2,1" → (2),(2),(1);  "1.1,1.0" → (1,1),(1,0)
std::vector<Partition> parse_partition_list(const std::string& s) {
    std::vector<Partition> out;
    if (s.empty()) return out;
    for (const auto& x : split(s, ',')) out.push_back(parse_partition(x, '.'));
    return out;
}

Rational parse_rational(const std::string& s) {
    auto parts = split(s, '/');
    if (parts.size() == 1) return to_int(parts[0]);
    if (parts.size() == 2 && to_int(parts[1]) != 0) return rat(to_int(parts[0]), to_int(parts[1]));
    throw PreconditionError("parse", "not a rational: '" + s + "'");
}

json jpart(const Partition& p) { return json(std::vector<int>(p.begin(), p.end())); }
json jrat(const Rational& r) { return is_integer(r) ? json(r.get_num().get_str()) : json(r.get_str()); }
json jint(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json fixed_point_values(const FixedPointClass<RationalFunction>& c, const VarRegistry& reg) {
    json arr = json::array();
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        std::vector<int> S;
        for (int i : c.points[k]) S.push_back(i + 1);
        arr.push_back({{"fixed_point", S}, {"value", c.values[k].to_string(reg)}});
    }
    return arr;
}

// ---------------------------------------------------------------------------
// Table rendering

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_table(const json& env, std::ostream& out) {
    out << "command: " << env["command"].get<std::string>() << "\n";
    out << "seed: " << env["seed"].dump() << "\n";
    for (const auto& [k, v] : env["input"].items()) out << "input." << k << ": " << cell(v) << "\n";
    for (const auto& [k, v] : env["result"].items()) {
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << k << ":\n";
            std::vector<std::string> cols;
            for (const auto& [c, _] : v.front().items()) cols.push_back(c);
            std::vector<std::size_t> width(cols.size());
            for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
            for (const auto& row : v)
                for (std::size_t i = 0; i < cols.size(); ++i) width[i] = std::max(width[i], cell(row[cols[i]]).size());
            auto line = [&](auto&& get) {
                out << " ";
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    std::string s = get(i);
                    out << " " << s << std::string(width[i] - s.size(), ' ');
                }
                out << "\n";
            };
            line([&](std::size_t i) { return cols[i]; });
            for (const auto& row : v) line([&](std::size_t i) { return cell(row[cols[i]]); });
        } else {
            out << k << ": " << cell(v) << "\n";
        }
    }
    for (const auto& w : env["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
    if (env.contains("timing_ms")) out << "timing_ms: " << env["timing_ms"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-theoretic Verlinde/GLSM computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    if (const char* s = std::getenv("VGC_SEED")) {
        try {
            seed = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "VGC_SEED must be a nonnegative integer\n";
            return 2;
        }
    }
    std::string format = "json";
    bool timing = false;
    app.add_option("--seed", seed, "seed for generic-parameter draws (default: $VGC_SEED or 1)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--timing", timing, "include wall-clock time (breaks byte-identical output)");

    int n = 1, N = 2, l = 0, d = 0, dprime = 1, dmax = 1, g = 0, k = -1;
    std::string lambda, partitions, variant = "corrected", mode = "fixed", q0s = "1/2", x0 = "0", where = "0", weights,
                vec, e_str = "0", kind = "gl";
    std::vector<std::string> inserts;
    bool symbolic = false, dualize = false, no_insertion = false;

    auto* c_mu = app.add_subcommand("mu", "wall-crossing coefficient μ at every fixed point");
    c_mu->add_option("--n", n)->required();
    c_mu->add_option("--N", N)->required();
    c_mu->add_option("--l", l)->required();
    c_mu->add_option("--dprime", dprime)->required();
    c_mu->add_option("--lambda", lambda, "insertion partition, parts separated by ','");
    c_mu->add_option("--variant", variant)->check(CLI::IsMember({"corrected", "printed"}));
    c_mu->add_option("--mode", mode, "fixed: per fixed point; paired: twisted Mukai pairings at q0")
        ->check(CLI::IsMember({"fixed", "paired"}));
    c_mu->add_option("--q0", q0s, "rational value of q for --mode paired");
    c_mu->add_flag("--symbolic", symbolic, "keep t_i symbolic");

    auto* c_if = app.add_subcommand("ifunction", "I-function coefficients Q^0..Q^dmax");
    c_if->add_option("--n", n)->required();
    c_if->add_option("--N", N)->required();
    c_if->add_option("--l", l)->required();
    c_if->add_option("--dmax", dmax)->required();
    c_if->add_flag("--symbolic", symbolic);

    auto* c_ver = app.add_subcommand("verlinde", "genus-0 Verlinde numbers from the fusion ring");
    c_ver->add_option("--n", n)->required();
    c_ver->add_option("--l", l)->required();
    c_ver->add_option("--d", d)->required();
    c_ver->add_option("--partitions", partitions, "insertions: ',' between partitions, '.' between parts");
    c_ver->add_option("--kind", kind, "gl: GL Verlinde number in bundle degree d; top: top-class coefficient")
        ->check(CLI::IsMember({"gl", "top"}));

    auto* c_q = app.add_subcommand("quot-chi", "GLSM invariant by localization on the Quot scheme");
    c_q->add_option("--n", n)->required();
    c_q->add_option("--N", N)->required();
    c_q->add_option("--d", d)->required();
    c_q->add_option("--l", l);
    c_q->add_option("--e", e_str, "exponent of det E at x0 (rational; non-integral gives 0)");
    c_q->add_option("--x0", x0)->check(CLI::IsMember({"0", "inf"}));
    c_q->add_option("--insert", inserts, "pos:partition, e.g. 0:1.1 or inf:2")->take_all();
    c_q->add_flag("--dualize", dualize, "insert 𝕊_λ(E^∨) instead of 𝕊_λ(E)");

    auto* c_c = app.add_subcommand("correspondence", "Verlinde side vs GLSM side");
    c_c->add_option("--n", n)->required();
    c_c->add_option("--l", l)->required();
    c_c->add_option("--N", N)->required();
    c_c->add_option("--k", k);
    c_c->add_option("--partitions", partitions)->required();
    c_c->add_option("--d", d)->required();
    c_c->add_option("--where", where, "marked-point position")->check(CLI::IsMember({"0", "inf"}));

    auto* c_w = app.add_subcommand("walls", "rank-2 δ-walls, flip ranks and restriction weights");
    c_w->add_option("--d", d)->required();
    c_w->add_option("--l", l);
    c_w->add_option("--weights", weights, "per marked point 'a.b', points separated by ','");
    c_w->add_option("--partitions", partitions, "marked-point insertions from P_l′ (alternative to --weights)");
    c_w->add_option("--N", N);
    c_w->add_option("--g", g);

    auto* c_l = app.add_subcommand("laurent-check", "regularity at q=0 and vanishing at q=∞ of μ");
    c_l->add_option("--n", n)->required();
    c_l->add_option("--N", N)->required();
    c_l->add_option("--l", l)->required();
    c_l->add_option("--dprime", dprime)->required();
    c_l->add_option("--lambda", lambda);

    auto* c_b = app.add_subcommand("degree-bounds", "numerator/denominator q-degree bounds of a vertex term");
    c_b->add_option("--n", n)->required();
    c_b->add_option("--l", l)->required();
    c_b->add_option("--N", N)->required();
    c_b->add_option("--v", vec, "degree vector, entries separated by ','")->required();
    c_b->add_flag("--no-insertion", no_insertion);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto* sub = app.get_subcommands().front();
    json env;
    env["command"] = sub->get_name();
    env["input"] = json::object();
    env["seed"] = seed;
    env["result"] = json::object();
    env["warnings"] = json::array();
    auto& in = env["input"];
    auto& res = env["result"];
    auto& warn = env["warnings"];
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;

    try {
        const std::string cmd = sub->get_name();
        // exercises the exit-3 path end to end
        if (const char* f = std::getenv("VGC_INJECT_FAULT"); f && std::string(f) == "consistency")
            throw ConsistencyError("fault-injection", "VGC_INJECT_FAULT=consistency");
        if (cmd == "mu" || cmd == "laurent-check") {
            Partition lam = padded(parse_partition(lambda, ','), n);
            in = {{"n", n}, {"N", N}, {"l", l}, {"dprime", dprime}, {"lambda", jpart(lam)}};
            MuOptions opt;
            opt.variant = variant == "printed" ? MuVariant::AsPrinted : MuVariant::FiberCorrected;
            opt.symbolic = symbolic;
            opt.seed = seed;
            if (cmd == "mu") {
                in["variant"] = variant_name(opt.variant);
                in["mode"] = mode;
                if (mode == "paired") {
                    Rational q0 = parse_rational(q0s);
                    in["q0"] = jrat(q0);
                    json rows = json::array();
                    for (const auto& [nu, v] : mu_paired(n, N, l, dprime, lam, opt.variant, q0, seed))
                        rows.push_back({{"nu", jpart(nu)}, {"pairing", jrat(v)}});
                    res["pairings"] = rows;
                } else {
                    in["symbolic"] = symbolic;
                    auto m = mu(n, N, l, dprime, lam, opt);
                    if (!symbolic) {
                        json tv = json::array();
                        for (const auto& t : m.t_values) tv.push_back(jrat(t));
                        res["t_values"] = tv;
                    }
                    res["entries"] = fixed_point_values(m.entries, m.registry);
                }
                warn.push_back("roots specialize as L^∨ = t_i (characters of S at the fixed point)");
                if (opt.variant == MuVariant::AsPrinted) warn.push_back("as-printed variant omits the flag-fibre Euler factor");
            } else {
                auto m = mu(n, N, l, dprime, lam, opt);
                auto r = laurent_property_check(m);
                res = {{"regular_at_zero", r.regular_at_zero},
                       {"vanishes_at_infinity", r.vanishes_at_infinity},
                       {"lemma_applies", r.lemma_applies}};
                if (!r.lemma_applies) warn.push_back("N − n < 2l: report is informational");
                else if (!(r.regular_at_zero && r.vanishes_at_infinity))
                    throw ConsistencyError("laurent-property", "μ fails regularity or vanishing although N − n ≥ 2l");
            }
        } else if (cmd == "ifunction") {
            in = {{"n", n}, {"N", N}, {"l", l}, {"dmax", dmax}, {"symbolic", symbolic}};
            MuOptions opt;
            opt.symbolic = symbolic;
            opt.seed = seed;
            json arr = json::array();
            for (const auto& m : i_function(n, N, l, dmax, opt))
                arr.push_back({{"d", m.dprime}, {"entries", fixed_point_values(m.entries, m.registry)}});
            res["coefficients"] = arr;
        } else if (cmd == "verlinde") {
            auto ps = parse_partition_list(partitions);
            json jp = json::array();
            for (auto& p : ps) {
                p = padded(p, n);
                jp.push_back(jpart(p));
            }
            in = {{"n", n}, {"l", l}, {"d", d}, {"partitions", jp}, {"kind", kind}};
            auto e = theta_exponent(n, l, 0, d, ps);
            res["e"] = jrat(e.value);
            res["e_integral"] = e.integral;
            if (!e.integral) warn.push_back("theta exponent e is not integral; the invariant is 0");
            res["value"] = jint(kind == "gl" ? gl_verlinde(ps, n, l, d) : genus0_verlinde(ps, n, l, d));
        } else if (cmd == "quot-chi") {
            InsertionSpec spec;
            spec.l = l;
            spec.e = parse_rational(e_str);
            spec.x0 = x0 == "inf" ? Pos::Infinity : Pos::Zero;
            spec.dualize = dualize;
            json ji = json::array();
            for (const auto& s : inserts) {
                auto colon = s.find(':');
                if (colon == std::string::npos) throw PreconditionError("parse", "insertion must be pos:partition");
                std::string pos = s.substr(0, colon);
                if (pos != "0" && pos != "inf") throw PreconditionError("parse", "position must be 0 or inf");
                Insertion ins{pos == "inf" ? Pos::Infinity : Pos::Zero, padded(parse_partition(s.substr(colon + 1), '.'), n)};
                spec.insertions.push_back(ins);
                ji.push_back({{"pos", pos}, {"lambda", jpart(ins.lambda)}});
            }
            in = {{"n", n}, {"N", N}, {"d", d}, {"l", l}, {"e", jrat(spec.e)}, {"x0", x0}, {"insertions", ji}, {"dualize", dualize}};
            if (!is_integer(spec.e)) warn.push_back("e is not integral; the invariant is 0");
            auto run = glsm_invariant_checked(n, N, d, spec, seed);
            res["value"] = jint(run.value);
            res["draws_compared"] = run.draws.size();
        } else if (cmd == "correspondence") {
            auto ps = parse_partition_list(partitions);
            if (k >= 0 && k != static_cast<int>(ps.size()))
                throw PreconditionError("k-matches-partitions", "--k differs from the number of partitions");
            auto rec = correspondence_check(n, l, N, ps, d, seed, where == "inf" ? Pos::Infinity : Pos::Zero);
            json jp = json::array();
            for (const auto& p : rec.partitions) jp.push_back(jpart(p));
            in = {{"n", n}, {"l", l}, {"N", N}, {"k", ps.size()}, {"partitions", jp}, {"d", d}, {"where", where}};
            res = {{"e", jrat(rec.e.value)}, {"e_integral", rec.e.integral}, {"verlinde", jint(rec.verlinde)},
                   {"glsm", jint(rec.glsm)}, {"equal", rec.equal}};
            if (!rec.e.integral) warn.push_back("theta exponent e is not integral; both sides are 0");
            if (!rec.equal) code = 3;
        } else if (cmd == "walls") {
            if (l < 1) l = 1;
            std::vector<WeightPair> ws;
            if (!weights.empty() && !partitions.empty())
                throw PreconditionError("parse", "give either --weights or --partitions");
            for (const auto& s : weights.empty() ? std::vector<std::string>{} : split(weights, ',')) {
                auto ab = split(s, '.');
                if (ab.size() != 2) throw PreconditionError("parse", "weights must be 'a.b'");
                int a = to_int(ab[0]), b = to_int(ab[1]);
                ws.push_back({std::max(a, b), std::min(a, b)});
            }
            for (const auto& p : parse_partition_list(partitions)) ws.push_back(weights_from_partition(p, l));
            bool with_rank = c_w->count("--N") > 0;
            json jw = json::array();
            for (auto [a, b] : ws) jw.push_back({a, b});
            in = {{"d", d}, {"l", l}, {"weights", jw}, {"g", g}};
            if (with_rank) in["N"] = N;
            auto walls = walls_rank2(d, l, ws);
            json rows = json::array();
            for (const auto& w : walls) {
                json r = {{"delta", jrat(w.delta)}, {"d1", w.d1}, {"d2", w.d2}, {"a1", w.a1}, {"a2", w.a2}, {"m", w.m}};
                if (ws.empty()) {
                    Rational i = w.delta / 2;
                    r["i"] = jrat(i);
                    r["restriction_minus"] = jrat(restriction_weight(i, d, l, g, Side::Minus).value);
                    if (with_rank) {
                        auto f = flip_rank(i, d, g, N, l);
                        r["n_plus"] = f.n_plus;
                        r["inequality"] = f.inequality_holds;
                    }
                } else {
                    r["restriction_minus"] = jrat(restriction_weight(w, d, l, g, Side::Minus).value);
                    if (with_rank) {
                        auto f = flip_rank(w, g, N, l);
                        r["n_plus"] = f.n_plus;
                        r["inequality"] = f.inequality_holds;
                    }
                }
                rows.push_back(r);
            }
            json cv = json::array();
            for (const auto& c : critical_values(walls)) cv.push_back(jrat(c));
            json ch = json::array();
            for (const auto& [lo, hi] : chambers(walls)) ch.push_back({jrat(lo), hi ? jrat(*hi) : json("inf")});
            res["critical_values"] = cv;
            res["chambers"] = ch;
            res["walls"] = rows;
            if (!ws.empty())
                warn.push_back("walls enumerate every choice of one weight per marked point for the destabilizing line bundle");
        } else if (cmd == "degree-bounds") {
            std::vector<int> v;
            for (const auto& x : split(vec, ',')) v.push_back(to_int(x));
            in = {{"n", n}, {"l", l}, {"N", N}, {"v", v}, {"insertion", !no_insertion}};
            auto b = degree_bounds(make_degree_vector(v), n, l, N, !no_insertion);
            res = {{"numerator", b.numerator}, {"denominator", b.denominator}};
        }
    } catch (const PreconditionError& e) {
        res = json::object();
        env["error"] = {{"kind", "precondition"}, {"hypothesis", e.hypothesis}, {"message", e.what()}};
        code = 2;
    } catch (const ConsistencyError& e) {
        res = json::object();
        env["error"] = {{"kind", "consistency"}, {"invariant", e.invariant}, {"message", e.what()}};
        code = 3;
    } catch (const PoleError& e) {
        res = json::object();
        env["error"] = {{"kind", "precondition"}, {"hypothesis", "no-pole"}, {"message", e.what()}};
        code = 2;
    }
    if (timing) {
        auto dt = std::chrono::steady_clock::now() - t0;
        env["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
    if (format == "table") {
        render_table(env, std::cout);
        if (env.contains("error")) std::cout << "error: " << env["error"].dump() << "\n";
    } else {
        std::cout << env.dump(2) << "\n";
    }
    return code;
}
