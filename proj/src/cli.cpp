#include "ruled/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruled/classify.hpp"

namespace ruled {

namespace {

using json = nlohmann::ordered_json;

Rat parse_rat(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + text);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError(e.what());
    } catch (const std::exception&) {
        throw ParseError("invalid rational: " + text);
    }
}

std::pair<Rat, Rat> parse_rat_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected 'a,b': " + text);
    return {parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
}

NumClass parse_c1(const std::string& text) {
    if (text == "c0") return {1, 0};
    if (text == "c0f") return {1, 1};
    if (text == "f") return {0, 1};
    auto [x, y] = parse_rat_pair(text);
    if (rat_den(x) != 1 || rat_den(y) != 1)
        throw ParseError("c1 coefficients must be integers: " + text);
    return {rat_num(x), rat_num(y)};
}

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw ParseError("invalid integer: " + text);
    }
}

json wall_json(const Wall& w) {
    return json{{"zeta", {w.zeta.x.str(), w.zeta.y.str()}},
                {"zsq", w.zsq.str()},
                {"slope", rat_str(w.slope)},
                {"zlen", w.zlen.str()}};
}

json extension_json(const ExtensionData& d) {
    return json{{"D", {d.sub.x.str(), d.sub.y.str()}},
                {"c1_minus_D", {d.quot_twist.x.str(), d.quot_twist.y.str()}},
                {"zlen", d.zlen.str()},
                {"h0_sub_lower", d.h0_sub_lower.str()}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string wall_line(const Wall& w) {
    return "zeta=" + w.zeta.str() + " zeta^2=" + w.zsq.str() + " slope=" +
           rat_str(w.slope) + " |Z|=" + w.zlen.str();
}

// Shared flag bundle; every subcommand draws from these.
struct Options {
    int g = 0;
    int e = 0;
    std::string c1_text = "c0";
    std::string c2_text;
    std::string h_text;
    std::string k_text = "0";
    std::string a_text;
    std::string b_text;
    std::string zeta_text;
    std::string r_text = "2";
    int m = 0;
    bool as_json = false;
    bool assume_large_c2 = false;
    std::string svg_path;
};

json query_echo(const Options& o, std::initializer_list<const char*> fields) {
    json q;
    for (const char* f : fields) {
        std::string name(f);
        if (name == "g") q["g"] = o.g;
        else if (name == "e") q["e"] = o.e;
        else if (name == "c1") q["c1"] = o.c1_text;
        else if (name == "c2") q["c2"] = o.c2_text;
        else if (name == "H") q["H"] = o.h_text;
        else if (name == "k") q["k"] = o.k_text;
        else if (name == "a") q["a"] = o.a_text;
        else if (name == "b") q["b"] = o.b_text;
        else if (name == "zeta") q["zeta"] = o.zeta_text;
        else if (name == "m") q["m"] = o.m;
    }
    return q;
}

Polarization parse_polarization(const Options& o, const RuledSurface& s) {
    auto [a, b] = parse_rat_pair(o.h_text);
    return Polarization(a, b, s);
}

BNQuery build_query(const Options& o, const RuledSurface& s) {
    NumClass c1 = parse_c1(o.c1_text);
    C1Case cc;
    int m = 0;
    if (c1 == fiber_class()) {
        cc = C1Case::Fiber;
    } else if (c1 == NumClass{1, 0} || c1 == NumClass{1, 1}) {
        cc = C1Case::C0mf;
        m = (c1.y == 1) ? 1 : 0;
    } else {
        throw PreconditionError(
            "classification covers c1 in {C0, C0+f, f} only");
    }
    return BNQuery{s, cc, m, parse_int(o.c2_text), parse_polarization(o, s),
                   parse_int(o.k_text), o.assume_large_c2};
}

void write_svg(const Options& o, const std::vector<Wall>& walls,
               const Polarization* h, const RuledSurface& s,
               std::ostream& out) {
    if (o.svg_path.empty()) return;
    std::ofstream f(o.svg_path, std::ios::binary);
    if (!f) throw ParseError("cannot open svg output: " + o.svg_path);
    f << render_walls_svg(walls, h, s);
    out << "svg written to " << o.svg_path << "\n";
}

void cmd_surface(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    NumClass k = canonical_class(s);
    std::optional<std::pair<Rat, Rat>> h;
    if (!o.h_text.empty()) h = parse_rat_pair(o.h_text);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e"});
        j["K_X"] = {k.x.str(), k.y.str()};
        j["chi_O"] = Int(1 - s.g).str();
        j["ample_criterion"] = "alpha > 0 and beta > alpha*" + std::to_string(s.e);
        if (h) {
            j["H"] = {{"alpha", rat_str(h->first)},
                      {"beta", rat_str(h->second)},
                      {"ample", is_ample(h->first, h->second, s)}};
        }
        emit(out, j);
        return;
    }
    out << "ruled surface: g=" << s.g << " e=" << s.e << "\n"
        << "K_X = " << k.str() << "\n"
        << "chi(O_X) = " << (1 - s.g) << "\n"
        << "ample iff alpha > 0 and beta > alpha*" << s.e << "\n";
    if (h)
        out << "H = (" << rat_str(h->first) << "," << rat_str(h->second)
            << ") ample: " << (is_ample(h->first, h->second, s) ? "yes" : "no")
            << "\n";
}

void cmd_chi(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    ChernData c{parse_int(o.r_text), parse_c1(o.c1_text), parse_int(o.c2_text)};
    Int chi = chi_rank2(c, s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2"});
        j["r"] = o.r_text;
        j["chi"] = chi.str();
        emit(out, j);
        return;
    }
    out << chi.str() << "\n";
}

void cmd_rho(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    ChernData c{parse_int(o.r_text), parse_c1(o.c1_text), parse_int(o.c2_text)};
    Int k = parse_int(o.k_text);
    Int r = rho(c, k, s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2", "k"});
        j["rho"] = r.str();
        j["moduli_dim"] = moduli_dim(c, s).str();
        j["chi"] = chi_rank2(c, s).str();
        j["asymptotic"] = true;  // moduli dimension is the c2 >> 0 value
        emit(out, j);
        return;
    }
    out << r.str() << "\n";
}

void cmd_h0bounds(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    H0Bounds b = h0_bounds(parse_int(o.a_text), parse_int(o.b_text), s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "a", "b"});
        j["lo"] = b.lo.str();
        j["hi"] = b.hi.str();
        j["exact"] = b.exact ? json(b.exact->str()) : json(nullptr);
        emit(out, j);
        return;
    }
    out << "lo=" << b.lo.str() << " hi=" << b.hi.str();
    if (b.exact) out << " exact=" << b.exact->str();
    out << "\n";
}

void cmd_walls(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    NumClass c1 = parse_c1(o.c1_text);
    Int c2 = parse_int(o.c2_text);
    auto walls = enumerate_walls(c1, c2, s);
    std::optional<Polarization> h;
    if (!o.h_text.empty()) h = parse_polarization(o, s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2"});
        j["walls"] = json::array();
        for (const Wall& w : walls) j["walls"].push_back(wall_json(w));
        emit(out, j);
    } else {
        for (const Wall& w : walls) out << wall_line(w) << "\n";
        if (walls.empty()) out << "no walls\n";
    }
    write_svg(o, walls, h ? &*h : nullptr, s, out);
}

void cmd_chamber(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    NumClass c1 = parse_c1(o.c1_text);
    Int c2 = parse_int(o.c2_text);
    auto walls = enumerate_walls(c1, c2, s);
    Polarization h = parse_polarization(o, s);
    auto loc = chamber_of(h, walls, s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2", "H"});
        if (const auto* c = std::get_if<Chamber>(&loc)) {
            j["chamber"] = {{"lo", rat_str(c->lo)},
                            {"hi", c->hi ? json(rat_str(*c->hi)) : json(nullptr)}};
        } else {
            j["on_wall"] = json::array();
            for (const Wall& w : std::get<OnWall>(loc).walls)
                j["on_wall"].push_back(wall_json(w));
        }
        emit(out, j);
        return;
    }
    if (const auto* c = std::get_if<Chamber>(&loc)) {
        out << "chamber: slope in (" << rat_str(c->lo) << ", "
            << (c->hi ? rat_str(*c->hi) : std::string("inf")) << ")\n";
    } else {
        out << "on wall:\n";
        for (const Wall& w : std::get<OnWall>(loc).walls)
            out << "  " << wall_line(w) << "\n";
    }
}

void cmd_cross(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    NumClass c1 = parse_c1(o.c1_text);
    Int c2 = parse_int(o.c2_text);
    NumClass zeta = parse_c1(o.zeta_text);  // same "x,y" syntax
    auto walls = enumerate_walls(c1, c2, s);
    const Wall* hitp = nullptr;
    for (const Wall& w : walls)
        if (w.zeta == zeta || w.zeta == -zeta) hitp = &w;
    if (!hitp)
        throw PreconditionError("zeta is not a wall class of type (c1,c2)");
    CrossingReport r = crossing_report(*hitp, c1, c2, s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2", "zeta"});
        j["wall"] = wall_json(r.wall);
        j["identity"] = r.identity;
        j["added"] = extension_json(r.below);
        j["removed"] = extension_json(r.above);
        j["notes"] = r.notes;
        emit(out, j);
        return;
    }
    out << wall_line(r.wall) << "\n" << r.identity << "\n";
    for (const auto& n : r.notes) out << n << "\n";
}

void cmd_zetab(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    ZetaB z = zeta_b(o.m, parse_int(o.k_text), parse_int(o.c2_text), s);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "m", "k", "c2"});
        j["b"] = z.b.str();
        j["wall"] = wall_json(z.wall);
        j["zeta_raw"] = {z.zeta_raw.x.str(), z.zeta_raw.y.str()};
        j["H_wall"] = {z.h_wall.alpha().str(), z.h_wall.beta().str()};
        emit(out, j);
        return;
    }
    out << "b=" << z.b.str() << "\n"
        << wall_line(z.wall) << "\n"
        << "zeta_raw=" << z.zeta_raw.str() << "\n"
        << "H_wall=" << z.h_wall.str() << "\n";
}

json verdict_json(const BNVerdict& v) {
    json j;
    j["status"] = status_name(v.status);
    j["certificate"] = v.certificate;
    j["assumptions"] = v.assumptions;
    j["rho"] = v.rho.str();
    j["B"] = v.B ? json(rat_str(*v.B)) : json(nullptr);
    j["note"] = v.note;
    return j;
}

void cmd_classify(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    BNQuery q = build_query(o, s);
    BNVerdict v = classify(q);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2", "H", "k"});
        j["query"]["assume_large_c2"] = o.assume_large_c2;
        json vj = verdict_json(v);
        for (auto& [key, val] : vj.items()) j[key] = val;
        emit(out, j);
        return;
    }
    out << "status: " << status_name(v.status) << "\n"
        << "certificate: " << v.certificate << "\n";
    if (v.B) out << "B = " << rat_str(*v.B) << "\n";
    out << "rho = " << v.rho.str() << "\n";
    if (!v.assumptions.empty()) {
        out << "assumptions:";
        for (const auto& a : v.assumptions) out << " " << a;
        out << "\n";
    }
    if (!v.note.empty()) out << "note: " << v.note << "\n";
}

void cmd_scan(const Options& o, std::ostream& out) {
    RuledSurface s(o.g, o.e);
    BNQuery q = build_query(o, s);
    auto rows = dichotomy_scan(q);
    if (o.as_json) {
        json j;
        j["query"] = query_echo(o, {"g", "e", "c1", "c2", "H"});
        j["B"] = rat_str(threshold_B(q));
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json row;
            row["k"] = r.k.str();
            row["status"] = status_name(r.verdict.status);
            row["certificate"] = r.verdict.certificate;
            j["rows"].push_back(row);
        }
        emit(out, j);
        return;
    }
    out << "B = " << rat_str(threshold_B(q)) << "\n";
    for (const auto& r : rows)
        out << "k=" << r.k.str() << " " << status_name(r.verdict.status)
            << " (" << r.verdict.certificate << ")\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Exact invariants, walls and Brill-Noether verdicts for "
                 "rank-2 bundles on ruled surfaces"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--g", o.g, "genus of the base curve");
        sub->add_option("--e", o.e, "normalization invariant e >= 0");
        sub->add_flag("--json", o.as_json, "emit JSON");
        return sub;
    };
    auto* surface = add_common(app.add_subcommand("surface", "surface data"));
    surface->add_option("--H", o.h_text);

    auto* chi = add_common(app.add_subcommand("chi", "Euler characteristic"));
    chi->add_option("--c1", o.c1_text);
    chi->add_option("--c2", o.c2_text)->required();
    chi->add_option("--r", o.r_text);

    auto* rho_cmd = add_common(app.add_subcommand("rho", "expected dimension"));
    rho_cmd->add_option("--c1", o.c1_text);
    rho_cmd->add_option("--c2", o.c2_text)->required();
    rho_cmd->add_option("--k", o.k_text)->required();
    rho_cmd->add_option("--r", o.r_text);

    auto* h0b = add_common(app.add_subcommand("h0bounds", "h^0 sandwich"));
    h0b->add_option("--a", o.a_text)->required();
    h0b->add_option("--b", o.b_text)->required();

    auto* walls_cmd = add_common(app.add_subcommand("walls", "enumerate walls"));
    walls_cmd->add_option("--c1", o.c1_text);
    walls_cmd->add_option("--c2", o.c2_text)->required();
    walls_cmd->add_option("--H", o.h_text);
    walls_cmd->add_option("--svg", o.svg_path);

    auto* chamber = add_common(app.add_subcommand("chamber", "locate chamber"));
    chamber->add_option("--c1", o.c1_text);
    chamber->add_option("--c2", o.c2_text)->required();
    chamber->add_option("--H", o.h_text)->required();

    auto* cross = add_common(app.add_subcommand("cross", "wall crossing"));
    cross->add_option("--c1", o.c1_text);
    cross->add_option("--c2", o.c2_text)->required();
    cross->add_option("--zeta", o.zeta_text)->required();

    auto* zetab = add_common(app.add_subcommand("zetab", "zeta_b family"));
    zetab->add_option("--m", o.m);
    zetab->add_option("--k", o.k_text)->required();
    zetab->add_option("--c2", o.c2_text)->required();

    auto* cls = add_common(app.add_subcommand("classify", "Brill-Noether verdict"));
    cls->add_option("--c1", o.c1_text);
    cls->add_option("--c2", o.c2_text)->required();
    cls->add_option("--H", o.h_text)->required();
    cls->add_option("--k", o.k_text)->required();
    cls->add_flag("--assume-large-c2", o.assume_large_c2);

    auto* scan = add_common(app.add_subcommand("scan", "dichotomy table"));
    scan->add_option("--c1", o.c1_text);
    scan->add_option("--c2", o.c2_text)->required();
    scan->add_option("--H", o.h_text)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 4;
    }

    try {
        if (surface->parsed()) cmd_surface(o, out);
        else if (chi->parsed()) cmd_chi(o, out);
        else if (rho_cmd->parsed()) cmd_rho(o, out);
        else if (h0b->parsed()) cmd_h0bounds(o, out);
        else if (walls_cmd->parsed()) cmd_walls(o, out);
        else if (chamber->parsed()) cmd_chamber(o, out);
        else if (cross->parsed()) cmd_cross(o, out);
        else if (zetab->parsed()) cmd_zetab(o, out);
        else if (cls->parsed()) cmd_classify(o, out);
        else if (scan->parsed()) cmd_scan(o, out);
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const OutOfRangeError& e) {
        err << "out of range: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 2;
    }
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double to_double(const Rat& r) {
    return r.convert_to<double>();
}

} // namespace

std::string render_walls_svg(const std::vector<Wall>& walls,
                             const Polarization* h, const RuledSurface& s,
                             double max_slope) {
    constexpr double W = 640, H = 640, pad = 40;
    const double ox = pad, oy = H - pad;       // cone apex
    const double aw = W - 2 * pad, ah = H - 2 * pad;

    // Endpoint of the ray of given slope from the apex, clipped to the box.
    auto ray_end = [&](double m) {
        double t = (m > 0) ? std::min(aw, ah / m) : aw;
        return std::pair<double, double>{ox + t, oy - t * m};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" "
           "fill=\"white\"/>\n";

    // Ample cone sector {alpha > 0, beta > e*alpha}.
    double eclamp = std::min<double>(s.e, max_slope);
    auto [bx, by] = ray_end(eclamp);
    svg << "<polygon points=\"" << fmt(ox) << "," << fmt(oy);
    if (by > pad) svg << " " << fmt(bx) << "," << fmt(by) << " "
                      << fmt(ox + aw) << "," << fmt(pad);
    else svg << " " << fmt(bx) << "," << fmt(by);
    svg << " " << fmt(ox) << "," << fmt(pad)
        << "\" fill=\"#eef6ee\" stroke=\"none\"/>\n";
    // Cone boundary: the beta-axis and the slope-e ray.
    svg << "<line x1=\"" << fmt(ox) << "\" y1=\"" << fmt(oy) << "\" x2=\""
        << fmt(ox) << "\" y2=\"" << fmt(pad)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg << "<line x1=\"" << fmt(ox) << "\" y1=\"" << fmt(oy) << "\" x2=\""
        << fmt(bx) << "\" y2=\"" << fmt(by)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << fmt(ox + 4) << "\" y=\"" << fmt(pad + 12)
        << "\" font-size=\"12\">beta/alpha axis, cone boundary slope e="
        << s.e << "</text>\n";

    for (const Wall& w : walls) {
        double m = to_double(w.slope);
        bool clamped = m > max_slope;
        double md = clamped ? max_slope : m;
        auto [x2, y2] = ray_end(md);
        svg << "<line x1=\"" << fmt(ox) << "\" y1=\"" << fmt(oy) << "\" x2=\""
            << fmt(x2) << "\" y2=\"" << fmt(y2)
            << "\" stroke=\"#b03030\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(x2 + 3) << "\" y=\"" << fmt(y2 - 3)
            << "\" font-size=\"10\" fill=\"#b03030\">zeta=" << w.zeta.str()
            << " |Z|=" << w.zlen.str() << " slope=" << rat_str(w.slope);
        if (clamped) svg << " (clamped)";
        svg << "</text>\n";
    }

    if (h) {
        double ha = h->alpha().convert_to<double>();
        double hb = h->beta().convert_to<double>();
        double t = 0.6 * std::min(aw / ha, ah / hb);
        double px = ox + t * ha, py = oy - t * hb;
        bool on_wall = false;
        Rat hs = h->slope();
        for (const Wall& w : walls) on_wall = on_wall || w.slope == hs;
        svg << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
            << "\" r=\"4\" fill=\"#2040b0\"/>\n";
        svg << "<text x=\"" << fmt(px + 6) << "\" y=\"" << fmt(py + 4)
            << "\" font-size=\"11\" fill=\"#2040b0\">H=" << h->str();
        if (on_wall) svg << " (face)";
        svg << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace ruled
