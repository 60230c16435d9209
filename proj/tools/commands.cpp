#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "afflie/branching.hpp"
#include "afflie/crystal.hpp"
#include "afflie/sharp.hpp"

namespace afflie::cli {

namespace {

using nlohmann::json;

struct Shard {
    long long index = 0;
    long long count = 1;
};

Shard parse_shard(const std::string& s) {
    auto slash = s.find('/');
    Shard sh;
    try {
        require(slash != std::string::npos, ErrorKind::Parse, "");
        size_t used = 0;
        sh.index = std::stoll(s.substr(0, slash), &used);
        require(used == slash, ErrorKind::Parse, "");
        sh.count = std::stoll(s.substr(slash + 1), &used);
        require(used == s.size() - slash - 1, ErrorKind::Parse, "");
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "shard must look like i/c, got '" + s + "'");
    }
    require(sh.count >= 1 && sh.index >= 0 && sh.index < sh.count, ErrorKind::Parse,
            "shard index must satisfy 0 <= i < c");
    return sh;
}

std::vector<long long> parse_profile(const std::string& s) {
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(tok, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::Parse, "bad profile entry '" + tok + "' in '" + s + "'");
        }
        require(used == tok.size(), ErrorKind::Parse, "bad profile entry '" + tok + "' in '" + s + "'");
        v.push_back(x);
    }
    require(!v.empty(), ErrorKind::Parse, "empty profile");
    return v;
}

// "@file" reads the file, anything else is taken literally
std::string read_arg(const std::string& s) {
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    require(static_cast<bool>(in), ErrorKind::Parse, "cannot open " + s.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// What a command produced, before format and shard selection.
struct Report {
    json meta = json::object();
    std::vector<std::string> lines;
    std::vector<json> items;
    std::optional<std::string> whole_text; // printed instead of lines when unsharded
    std::optional<std::string> whole_json; // replaces the generic JSON when unsharded
    std::optional<std::string> dot;
};

struct Common {
    std::string format = "text";
    std::optional<std::string> shard; // any --shard, even 0/1, switches to record output
};

void emit(const Report& r, const Common& c, std::ostream& out) {
    const bool sharded = c.shard.has_value();
    Shard sh = sharded ? parse_shard(*c.shard) : Shard{};
    const long long total = static_cast<long long>(r.lines.size());
    const long long lo = sh.index * total / sh.count, hi = (sh.index + 1) * total / sh.count;
    if (c.format == "dot") {
        require(r.dot.has_value(), ErrorKind::Parse, "dot output is only available for crystal");
        require(!sharded, ErrorKind::Parse, "dot output cannot be sharded");
        out << *r.dot;
        return;
    }
    if (c.format == "json") {
        if (!sharded && r.whole_json) {
            out << *r.whole_json << "\n";
            return;
        }
        json j = r.meta;
        j["items"] = json::array();
        for (long long k = lo; k < hi; ++k) j["items"].push_back(r.items[k]);
        if (sharded) j["shard"] = *c.shard;
        out << j.dump() << "\n";
        return;
    }
    if (!sharded && r.whole_text) {
        out << *r.whole_text << "\n";
        return;
    }
    for (long long k = lo; k < hi; ++k) out << r.lines[k] << "\n";
}

long long truncation(const std::optional<long long>& given) {
    if (given) {
        require(*given >= 0, ErrorKind::Parse, "truncation must be nonnegative");
        return *given;
    }
    if (const char* env = std::getenv("AFFLIE_TRUNCATION")) {
        size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(env, &used);
        } catch (const std::exception&) {
        }
        require(v >= 0 && used == std::string(env).size(), ErrorKind::Parse,
                std::string("AFFLIE_TRUNCATION must be a nonnegative integer, got '") + env + "'");
        return v;
    }
    return 5;
}

void series_report(Report& r, const ShiftedSeries& s) {
    r.whole_text = to_string(s);
    r.meta["series"] = json::parse(to_json(s));
    for (long long k = 0; k <= s.order(); ++k) {
        r.lines.push_back(std::to_string(k) + " " + std::to_string(s.coeff(k)));
        r.items.push_back({{"k", k}, {"coeff", s.coeff(k)}});
    }
}

int exit_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::CrossCheck:
    case ErrorKind::Inconsistency: return CrossCheckFailed;
    case ErrorKind::ResourceLimit: return Resource;
    default: return Usage;
    }
}

// --- commands ---------------------------------------------------------------

Report cmd_character(int n, const std::string& lam_s, long long N) {
    AffineWeight lam = parse_weight(n, lam_s);
    require(is_dominant(lam) && level(lam) > 0, ErrorKind::Precondition, "weight must be dominant of positive level");
    Character a = character(lam, N), b = character_from_paths(lam, N);
    if (a != b) {
        std::string msg = "crystal and path characters differ";
        for (auto& [w, m] : a)
            if (!b.count(w) || b.at(w) != m) msg += "\n  " + to_string(w) + " : " + std::to_string(m) + " (crystal)";
        for (auto& [w, m] : b)
            if (!a.count(w) || a.at(w) != m) msg += "\n  " + to_string(w) + " : " + std::to_string(m) + " (paths)";
        fail(ErrorKind::CrossCheck, msg);
    }
    std::vector<std::tuple<long long, std::string, long long>> rows;
    for (auto& [w, m] : a) rows.emplace_back(*principal_degree(lam, w), to_string(w), m);
    std::sort(rows.begin(), rows.end());
    Report r;
    r.meta = {{"n", n}, {"weight", to_string(lam)}, {"truncation", N}};
    for (auto& [d, w, m] : rows) {
        r.lines.push_back(w + " : " + std::to_string(m));
        r.items.push_back({{"weight", w}, {"degree", d}, {"multiplicity", m}});
    }
    return r;
}

Report cmd_branching(int n, const std::string& a_s, const std::string& b_s, const std::string& l_s, long long N,
                     const std::string& method, std::ostream& out) {
    AffineWeight a = parse_weight(n, a_s), b = parse_weight(n, b_s), lam = parse_weight(n, l_s);
    std::vector<std::pair<std::string, ShiftedSeries>> got;
    if (method == "paths" || method == "all") got.emplace_back("paths", branching_series_paths(a, b, lam, N));
    if (method == "multipartitions" || method == "all")
        got.emplace_back("multipartitions", branching_series_multipartitions(a, b, lam, N));
    bool fundamental2 = is_dominant(b) && level(b) == 1;
    if (method == "theta" || (method == "all" && fundamental2))
        got.emplace_back("theta", theta_branching(a, b, lam, N));
    bool agree = std::all_of(got.begin(), got.end(), [&](auto& p) { return p.second == got.front().second; });
    if (!agree) {
        for (auto& [m, s] : got) out << m << ": " << to_string(s) << "\n";
        fail(ErrorKind::CrossCheck, "branching methods disagree");
    }
    Report r;
    r.meta = {{"n", n}, {"lambda1", to_string(a)}, {"lambda2", to_string(b)}, {"lambda", to_string(lam)},
              {"truncation", N}, {"methods", json::array()}};
    for (auto& [m, s] : got) r.meta["methods"].push_back(m);
    series_report(r, got.front().second);
    return r;
}

Report cmd_js(int n, const std::string& i_s, const std::optional<std::string>& j_s, std::optional<int> m,
              std::optional<long long> N, bool relabel_too, bool irreducible) {
    auto i = parse_profile(i_s);
    require(static_cast<int>(i.size()) == n, ErrorKind::Parse, "charge profile needs n entries");
    std::optional<std::vector<long long>> j;
    if (j_s) {
        j = parse_profile(*j_s);
        require(static_cast<int>(j->size()) == n, ErrorKind::Parse, "JS condition needs n entries");
    }
    Report r;
    r.meta = {{"n", n}, {"i", i}};
    if (j) r.meta["j"] = *j;
    if (m) {
        require(*m >= 0, ErrorKind::Parse, "module size must be nonnegative");
        r.meta["m"] = *m;
        require(!(j && irreducible), ErrorKind::Parse, "-j and --irreducible exclude each other");
        std::vector<Multipartition> labels;
        if (j) labels = js_modules(i, *j, *m);
        else if (irreducible) labels = irreducible_restriction(i, *m);
        else labels = js_modules(i, std::vector<long long>(n, *m), *m);
        std::optional<CrystalGraph> y;
        if (relabel_too) y = build_Y_crystal(profile_weight(n, i), *m);
        for (auto& mp : labels) {
            json item = {{"label", json::parse(to_json(mp))}};
            std::string line = parts_string(mp);
            if (y) {
                auto ml = relabel(*y, mp);
                item["m_label"] = json::parse(to_json(ml));
                line += " -> " + parts_string(ml);
            }
            r.lines.push_back(line);
            r.items.push_back(item);
        }
        return r;
    }
    require(j.has_value(), ErrorKind::Parse, "the generating function needs -j");
    long long order = truncation(N);
    r.meta["truncation"] = order;
    auto a = js_series_crystal(i, *j, order);
    auto b = js_series_branching(i, *j, order);
    require(a == b, ErrorKind::CrossCheck,
            "crystal filter gives " + to_string(a) + " but the branching sum gives " + to_string(b));
    series_report(r, a);
    return r;
}

Report cmd_sharp(int n, const std::string& a_s, const std::optional<std::string>& mp_s,
                 const std::optional<std::string>& path_s) {
    AffineWeight a = parse_weight(n, a_s);
    require(mp_s.has_value() != path_s.has_value(), ErrorKind::Parse, "give exactly one of --mp and --path");
    Report r;
    r.meta = {{"n", n}, {"lambda1", to_string(a)}};
    if (mp_s) {
        Multipartition mp = parse_multipartition(n, read_arg(*mp_s));
        Multipartition s = sharp_multipartition(mp, a);
        r.lines.push_back(to_compact(s));
        r.items.push_back(json::parse(to_json(s)));
        r.meta["lambda2"] = to_string(highest_weight(mp));
    } else {
        Path q = parse_path(n, *path_s);
        Path s = sharp_path(q, a);
        r.lines.push_back(to_string(s));
        r.items.push_back(to_string(s));
        r.meta["lambda2"] = to_string(q.lambda());
    }
    return r;
}

Report cmd_crystal(int n, const std::string& lam_s, long long N, const std::string& labels) {
    AffineWeight lam = parse_weight(n, lam_s);
    CrystalGraph g = build_crystal(lam, N, labels == "M" ? Labels::M : Labels::Y);
    Report r;
    r.meta = {{"n", n}, {"weight", to_string(lam)}, {"labels", labels}, {"cutoff", N}};
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        r.lines.push_back("v" + std::to_string(v) + " " + parts_string(g.vertices[v]));
        r.items.push_back({{"vertex", v}, {"label", g.vertices[v].parts()}});
    }
    for (auto& e : g.edges) {
        r.lines.push_back("v" + std::to_string(e.src) + " -" + std::to_string(e.colour) + "-> v" +
                          std::to_string(e.dst));
        r.items.push_back({{"edge", {e.src, e.colour, e.dst}}});
    }
    r.whole_json = export_json(g);
    r.dot = export_dot(g);
    return r;
}

Report cmd_highest_lift(int n, const std::string& path_s) {
    Path p = parse_path(n, path_s);
    Multipartition mp = highest_lift(p);
    Report r;
    r.meta = {{"n", n}, {"path", to_string(p)}};
    r.lines.push_back(to_compact(mp));
    json item = json::parse(to_json(mp));
    item["weight"] = to_string(weight(mp));
    item["energy"] = energy(p);
    r.items.push_back(item);
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crystal, path and branching-function computations for affine sl_n"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> formats{"text", "json", "dot"};
    int n = 0;
    std::string lam, lam1, lam2, method = "all", labels = "Y", profile_i;
    std::optional<std::string> profile_j, mp_s, path_s;
    std::optional<long long> N;
    std::optional<int> m;
    bool relabel_too = false, irreducible = false;
    Common common;

    auto common_opts = [&](CLI::App* c) {
        c->add_option("-n", n, "modulus")->required();
        c->add_option("--format", common.format, "text, json or dot")->check(CLI::IsMember(formats));
        c->add_option("--shard", common.shard, "emit only block i of c, as i/c");
    };

    auto* ch = app.add_subcommand("character", "weight multiplicities up to a principal degree");
    common_opts(ch);
    ch->add_option("-L", lam, "highest weight")->required();
    ch->add_option("-N", N, "principal degree cutoff");

    auto* br = app.add_subcommand("branching", "branching function of V(L) in V(L') x V(L'')");
    common_opts(br);
    br->add_option("--lambda1,-a", lam1, "L'")->required();
    br->add_option("--lambda2,-b", lam2, "L''")->required();
    br->add_option("-L", lam, "L")->required();
    br->add_option("-N", N, "truncation order");
    br->add_option("--method", method, "paths, multipartitions, theta or all")
        ->check(CLI::IsMember({"paths", "multipartitions", "theta", "all"}));

    auto* js = app.add_subcommand("js", "Jantzen-Seitz restriction data");
    common_opts(js);
    js->add_option("-i", profile_i, "charge profile, e.g. 2,0")->required();
    js->add_option("-j", profile_j, "JS condition, e.g. 1,0");
    js->add_option("-m", m, "module size: list labels");
    js->add_option("-N", N, "truncation order of the generating function");
    js->add_flag("--relabel", relabel_too, "also print the tensor-product labels");
    js->add_flag("--irreducible", irreducible, "labels whose restriction to size m-1 is irreducible");

    auto* sh = app.add_subcommand("sharp", "the sharp involution on restricted multipartitions or paths");
    common_opts(sh);
    sh->add_option("--lambda1,-a", lam1, "L'")->required();
    sh->add_option("--mp", mp_s, "multipartition, compact form or JSON (@file reads a file)");
    sh->add_option("--path", path_s, "L''-path, e.g. 01,11|2*L0");

    auto* cr = app.add_subcommand("crystal", "crystal graph up to a node count");
    common_opts(cr);
    cr->add_option("-L", lam, "highest weight")->required();
    cr->add_option("-N", N, "node count cutoff");
    cr->add_option("--labels", labels, "Y or M")->check(CLI::IsMember({"Y", "M"}));

    auto* hl = app.add_subcommand("highest-lift", "highest-lift multipartition of a path");
    common_opts(hl);
    hl->add_option("--path", path_s, "path, e.g. 01,11|2*L0")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << "\n";
        return Usage;
    }

    try {
        check_modulus(n);
        Report r;
        if (*ch) r = cmd_character(n, lam, truncation(N));
        else if (*br) r = cmd_branching(n, lam1, lam2, lam, truncation(N), method, out);
        else if (*js) r = cmd_js(n, profile_i, profile_j, m, N, relabel_too, irreducible);
        else if (*sh) r = cmd_sharp(n, lam1, mp_s, path_s);
        else if (*cr) r = cmd_crystal(n, lam, truncation(N), labels);
        else r = cmd_highest_lift(n, *path_s);
        std::ostringstream buf;
        emit(r, common, buf);
        out << buf.str();
        return Ok;
    } catch (const Error& e) {
        err << "error[" << error_code(e.kind()) << "]: " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::bad_alloc&) {
        err << "error[resource-limit]: out of memory\n";
        return Resource;
    }
}

} // namespace afflie::cli
