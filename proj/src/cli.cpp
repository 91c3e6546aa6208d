#include "ordens/cli.hpp"

#include "ordens/golden.hpp"
#include "ordens/parse.hpp"
#include "ordens/prime_scan.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ordens::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { plain, csv, json };

struct Options {
    Format format = Format::plain;
    bool decimal = false;
    unsigned long ell = 2;
    std::string field = "Q";
    std::string a;
    unsigned long val = 0;
    unsigned long m = 1;
    unsigned long n = 0;
    std::uint64_t bound = 100000;
    bool compare = false;
    std::vector<int> which;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

template <class... Cells>
void csv_row(std::ostream& out, const Cells&... cells) {
    bool first = true;
    ((out << (first ? "" : ",") << csv_cell(cells), first = false), ...);
    out << '\n';
}

ordered_json integer_json(const Integer& z) {
    if (z.fits_ulong_p()) return z.get_ui();
    return z.get_str();
}

std::string field_label(const FieldSpec& f) { return f.str(); }

void check_ell(unsigned long ell) {
    if (!is_prime(ell)) throw DomainError("--ell " + std::to_string(ell) + " is not prime");
}

struct Input {
    FieldSpec field;
    Element a;
};

Input read_input(const Options& o) {
    check_ell(o.ell);
    const FieldSpec f = parse_field(o.field);
    Element a = parse_element(o.a, f);
    if (a.is_zero()) throw DomainError("a = 0 has no multiplicative order");
    return {f, a};
}

ordered_json derivation_json(const Derivation& dv) {
    ordered_json j;
    j["method"] = to_string(dv.method);
    j["family"] = dv.family;
    j["branch"] = dv.branch;
    j["case"] = to_string(dv.kind);
    j["d"] = dv.d;
    j["r"] = dv.r;
    j["t"] = dv.t;
    j["s"] = dv.s == 0 ? ordered_json(nullptr) : ordered_json(dv.s);
    j["epsilon"] = dv.epsilon ? ordered_json(dv.epsilon->str()) : ordered_json(nullptr);
    j["n"] = dv.n;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_density(const Options& o, std::ostream& out) {
    const Input in = read_input(o);
    const DensityValue dv = density(in.a, o.ell, o.val);
    switch (o.format) {
        case Format::plain:
            out << dv.value.str();
            if (o.decimal) out << ' ' << dv.value.decimal(6);
            out << '\n';
            break;
        case Format::csv:
            csv_row(out, "field", "a", "ell", "n", "exact", "empirical", "abs_error");
            csv_row(out, field_label(in.field), in.a.str(), std::to_string(o.ell), std::to_string(o.val),
                    dv.value.str(), "", "");
            break;
        case Format::json: {
            ordered_json j;
            j["field"] = field_label(in.field);
            j["a"] = in.a.str();
            j["ell"] = o.ell;
            j["n"] = o.val;
            j["value"] = dv.value.str();
            j["decimal"] = dv.value.decimal(6);
            j["derivation"] = derivation_json(dv.derivation);
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

int cmd_kummer(const Options& o, std::ostream& out) {
    const Input in = read_input(o);
    if (o.n > o.m) throw DomainError("--n must not exceed --m");
    const Decomposition dec = decompose(in.a, o.ell);
    KummerQuery q;
    q.m = o.m;
    q.n = o.n;
    q.decomp = DecompParams::of(dec);
    q.profile = cyclo_profile(in.field, o.ell);
    if (dec.kind != DecompCase::trivial_root_of_unity && q.profile.noncyclic_two())
        q.special = special_case_flag(in.field, q.profile, dec.b);
    const Integer rel = kummer_relative_degree(q);
    const Integer cyc = cyclotomic_degree(q.profile, o.m);
    const Integer total = total_degree(q);
    switch (o.format) {
        case Format::plain:
            out << "relative_degree " << rel.get_str() << '\n'
                << "cyclotomic_degree " << cyc.get_str() << '\n'
                << "total_degree " << total.get_str() << '\n';
            break;
        case Format::csv:
            csv_row(out, "field", "a", "ell", "m", "n", "relative_degree", "cyclotomic_degree", "total_degree");
            csv_row(out, field_label(in.field), in.a.str(), std::to_string(o.ell), std::to_string(o.m),
                    std::to_string(o.n), rel.get_str(), cyc.get_str(), total.get_str());
            break;
        case Format::json: {
            ordered_json j;
            j["field"] = field_label(in.field);
            j["a"] = in.a.str();
            j["ell"] = o.ell;
            j["m"] = o.m;
            j["n"] = o.n;
            j["relative_degree"] = integer_json(rel);
            j["cyclotomic_degree"] = integer_json(cyc);
            j["total_degree"] = integer_json(total);
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const Input in = read_input(o);
    const Decomposition dec = decompose(in.a, o.ell);
    const bool trivial = dec.kind == DecompCase::trivial_root_of_unity;
    const std::string b = trivial ? "" : dec.b.str();
    switch (o.format) {
        case Format::plain:
            out << "case " << to_string(dec.kind) << '\n';
            if (!trivial) out << "d " << dec.d << '\n' << "b " << b << '\n';
            out << "xi " << dec.xi.str() << '\n' << "r " << dec.r << '\n';
            break;
        case Format::csv:
            csv_row(out, "field", "a", "ell", "case", "d", "b", "xi", "r");
            csv_row(out, field_label(in.field), in.a.str(), std::to_string(o.ell), to_string(dec.kind),
                    trivial ? std::string() : std::to_string(dec.d), b, dec.xi.str(), std::to_string(dec.r));
            break;
        case Format::json: {
            ordered_json j;
            j["field"] = field_label(in.field);
            j["a"] = in.a.str();
            j["ell"] = o.ell;
            j["case"] = to_string(dec.kind);
            j["d"] = trivial ? ordered_json(nullptr) : ordered_json(dec.d);
            j["b"] = trivial ? ordered_json(nullptr) : ordered_json(b);
            j["xi"] = dec.xi.str();
            j["r"] = dec.r;
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

int cmd_profile(const Options& o, std::ostream& out) {
    check_ell(o.ell);
    const FieldSpec f = parse_field(o.field);
    const CycloProfile p = cyclo_profile(f, o.ell);
    const std::string s = p.s == 0 ? "" : std::to_string(p.s);
    const auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
    switch (o.format) {
        case Format::plain:
            out << "field " << field_label(f) << '\n'
                << "ell " << p.ell << '\n'
                << "contains_zeta_ell " << yn(p.contains_zeta_ell) << '\n'
                << "contains_zeta4 " << yn(p.contains_zeta4) << '\n'
                << "deg_K_ell " << p.deg_K_ell << '\n'
                << "t " << p.t << '\n'
                << "s " << (s.empty() ? "n/a" : s) << '\n'
                << "tower " << to_string(p.tower_type) << '\n';
            break;
        case Format::csv:
            csv_row(out, "field", "ell", "contains_zeta_ell", "contains_zeta4", "deg_K_ell", "t", "s", "tower");
            csv_row(out, field_label(f), std::to_string(p.ell), yn(p.contains_zeta_ell), yn(p.contains_zeta4),
                    std::to_string(p.deg_K_ell), std::to_string(p.t), s, to_string(p.tower_type));
            break;
        case Format::json: {
            ordered_json j;
            j["field"] = field_label(f);
            j["ell"] = p.ell;
            j["contains_zeta_ell"] = p.contains_zeta_ell;
            j["contains_zeta4"] = p.contains_zeta4;
            j["deg_K_ell"] = p.deg_K_ell;
            j["t"] = p.t;
            j["s"] = p.s == 0 ? ordered_json(nullptr) : ordered_json(p.s);
            j["tower"] = to_string(p.tower_type);
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const Input in = read_input(o);
    const ScanReport rep = empirical_density(in.a, o.ell, o.bound);

    std::vector<unsigned long> levels;
    for (const auto& [n, v] : rep.exact) levels.push_back(n);
    auto count_at = [&](unsigned long n) {
        const auto it = rep.histogram.find(n);
        return it == rep.histogram.end() ? std::uint64_t{0} : it->second;
    };
    auto abs_err = [&](unsigned long n) { return (rep.empirical.at(n) - rep.exact.at(n).value).abs(); };

    switch (o.format) {
        case Format::plain: {
            out << "field " << field_label(in.field) << "  a " << in.a.str() << "  ell " << o.ell << "  bound "
                << o.bound << '\n'
                << "counted " << rep.counted << "  excluded " << rep.excluded() << '\n';
            out << std::left << std::setw(4) << "n" << std::setw(10) << "count" << std::setw(12) << "empirical";
            if (o.compare) out << std::setw(14) << "exact" << std::setw(12) << "decimal" << "abs_error";
            out << '\n';
            for (unsigned long n : levels) {
                out << std::setw(4) << n << std::setw(10) << count_at(n) << std::setw(12)
                    << rep.empirical.at(n).decimal(6);
                if (o.compare)
                    out << std::setw(14) << rep.exact.at(n).value.str() << std::setw(12)
                        << rep.exact.at(n).value.decimal(6) << abs_err(n).decimal(6);
                out << '\n';
            }
            if (o.compare) out << "max_abs_error " << rep.max_abs_error.decimal(6) << '\n';
            break;
        }
        case Format::csv:
            csv_row(out, "field", "a", "ell", "n", "exact", "empirical", "abs_error");
            for (unsigned long n : levels)
                csv_row(out, field_label(in.field), in.a.str(), std::to_string(o.ell), std::to_string(n),
                        o.compare ? rep.exact.at(n).value.str() : std::string(), rep.empirical.at(n).decimal(6),
                        o.compare ? abs_err(n).decimal(6) : std::string());
            break;
        case Format::json: {
            ordered_json j;
            j["field"] = field_label(in.field);
            j["a"] = in.a.str();
            j["ell"] = o.ell;
            j["bound"] = o.bound;
            j["counted"] = rep.counted;
            j["excluded"] = rep.excluded();
            ordered_json rows = ordered_json::array();
            for (unsigned long n : levels) {
                ordered_json r;
                r["n"] = n;
                r["count"] = count_at(n);
                r["empirical"] = rep.empirical.at(n).str();
                if (o.compare) {
                    r["exact"] = rep.exact.at(n).value.str();
                    r["abs_error"] = abs_err(n).str();
                }
                rows.push_back(r);
            }
            j["levels"] = rows;
            if (o.compare) j["max_abs_error"] = rep.max_abs_error.str();
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

const char* table_title(int which) {
    switch (which) {
        case 1: return "K = Q, ell = 2, a = +-b^(2^d)";
        case 2: return "ell = 3";
        case 3: return "ell = 2, zeta4 in K";
        case 4: return "ell = 2, zeta4 not in K";
    }
    return "";
}

int cmd_tables(const Options& o, std::ostream& out) {
    std::vector<int> which = o.which;
    if (which.empty()) which = {1, 2, 3, 4};
    std::size_t diffs = 0;
    ordered_json all = ordered_json::array();
    if (o.format == Format::csv) csv_row(out, "table", "label", "field", "a", "ell", "n", "expected", "computed", "match");

    for (int w : which) {
        const std::vector<GoldenRow> rows = evaluate_table(w);
        std::size_t table_diffs = 0;
        for (const GoldenRow& r : rows) table_diffs += r.match ? 0 : 1;
        diffs += table_diffs;

        if (o.format == Format::plain) {
            out << "# table " << w << ": " << table_title(w) << '\n';
            out << std::left << std::setw(30) << "label" << std::setw(24) << "field" << std::setw(4) << "n"
                << std::setw(10) << "expected" << std::setw(10) << "computed" << "status" << '\n';
        }
        ordered_json jrows = ordered_json::array();
        for (const GoldenRow& r : rows) {
            const GoldenEntry& e = r.entry;
            for (std::size_t k = 0; k < e.instances.size(); ++k) {
                const auto& inst = e.instances[k];
                const bool ok = r.computed[k] == e.expected;
                switch (o.format) {
                    case Format::plain:
                        out << std::setw(30) << (e.instances.size() > 1 ? e.label + " [" + inst.element + "]" : e.label)
                            << std::setw(24) << inst.field << std::setw(4) << e.n << std::setw(10)
                            << e.expected.str() << std::setw(10) << r.computed[k].str() << (ok ? "ok" : "DIFF")
                            << '\n';
                        break;
                    case Format::csv:
                        csv_row(out, std::to_string(w), e.label, inst.field, inst.element, std::to_string(e.ell),
                                std::to_string(e.n), e.expected.str(), r.computed[k].str(), ok ? "true" : "false");
                        break;
                    case Format::json: {
                        ordered_json j;
                        j["label"] = e.label;
                        j["field"] = inst.field;
                        j["a"] = inst.element;
                        j["ell"] = e.ell;
                        j["n"] = e.n;
                        j["expected"] = e.expected.str();
                        j["computed"] = r.computed[k].str();
                        j["match"] = ok;
                        jrows.push_back(j);
                        break;
                    }
                }
            }
        }
        if (o.format == Format::plain) out << "rows " << rows.size() << "  diffs " << table_diffs << "\n\n";
        if (o.format == Format::json) {
            ordered_json t;
            t["table"] = w;
            t["rows"] = rows.size();
            t["diffs"] = table_diffs;
            t["entries"] = jrows;
            all.push_back(t);
        }
    }
    if (o.format == Format::json) out << all.dump(2) << '\n';
    return diffs == 0 ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------------------

struct Check {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

Check check_tables() {
    Check c{"golden tables 1-4", 0, 0, ""};
    for (int w = 1; w <= 4; ++w)
        for (const GoldenRow& r : evaluate_table(w)) {
            ++c.cases;
            if (!r.match) c.fail("table " + std::to_string(w) + " " + r.entry.label);
        }
    return c;
}

std::vector<std::pair<FieldSpec, Element>> selfcheck_corpus() {
    std::vector<std::pair<FieldSpec, Element>> out;
    const char* elements[] = {"2", "-2", "3", "-3", "4", "-4", "12", "-16", "81", "1/2", "5/9", "2^9"};
    for (std::int64_t d : {0, -1, -3, 2, -2, 3, 5, -7}) {
        const FieldSpec f = d == 0 ? FieldSpec::rationals() : FieldSpec::quadratic(d);
        for (const char* a : elements) out.emplace_back(f, parse_element(a, f));
        if (d != 0) out.emplace_back(f, parse_element("1+1*sqrt(" + std::to_string(d) + ")", f));
    }
    return out;
}

Check check_series(const std::vector<std::pair<FieldSpec, Element>>& corpus) {
    Check c{"closed form = series", 0, 0, ""};
    for (const auto& [f, a] : corpus)
        for (unsigned long ell : {2UL, 3UL, 5UL}) {
            ++c.cases;
            const Rational x = density_closed(a, ell).value;
            const Rational y = density_series(a, ell).value;
            if (x != y) c.fail(f.str() + " a=" + a.str() + " ell=" + std::to_string(ell));
        }
    return c;
}

Check check_shapes(const std::vector<std::pair<FieldSpec, Element>>& corpus) {
    Check c{"density shape", 0, 0, ""};
    for (const auto& [f, a] : corpus)
        for (unsigned long ell : {2UL, 3UL, 5UL}) {
            const ShapeReport rep = shape_check(a, ell);
            if (rep.shape == Shape::not_applicable) continue;
            ++c.cases;
            if (!rep.holds) c.fail(f.str() + " a=" + a.str() + " ell=" + std::to_string(ell));
        }
    return c;
}

Check check_valuation_sums(const std::vector<std::pair<FieldSpec, Element>>& corpus) {
    Check c{"valuation densities telescope", 0, 0, ""};
    for (const auto& [f, a] : corpus)
        for (unsigned long ell : {2UL, 3UL}) {
            ++c.cases;
            const Decomposition dec = decompose(a, ell);
            Rational sum;
            for (unsigned long n = 0; n <= 4; ++n) sum += density(dec, n).value;
            if (sum != density_closed(dec.raised(4)).value)
                c.fail(f.str() + " a=" + a.str() + " ell=" + std::to_string(ell));
        }
    return c;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
    const auto corpus = selfcheck_corpus();
    const std::vector<Check> checks = {check_tables(), check_series(corpus), check_shapes(corpus),
                                       check_valuation_sums(corpus)};
    bool ok = true;
    ordered_json all = ordered_json::array();
    if (o.format == Format::csv) csv_row(out, "check", "cases", "failures", "first_failure");
    for (const Check& c : checks) {
        ok = ok && c.failures == 0;
        switch (o.format) {
            case Format::plain:
                out << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
                if (c.failures) out << ", " << c.failures << " failed, first: " << c.first_failure;
                out << ")\n";
                break;
            case Format::csv:
                csv_row(out, c.name, std::to_string(c.cases), std::to_string(c.failures), c.first_failure);
                break;
            case Format::json:
                all.push_back({{"check", c.name}, {"cases", c.cases}, {"failures", c.failures},
                               {"first_failure", c.first_failure}});
                break;
        }
    }
    if (o.format == Format::json) out << all.dump(2) << '\n';
    return ok ? exit_ok : exit_mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Densities of primes by the ell-adic valuation of multiplicative orders"};
    app.require_subcommand(1);

    std::map<std::string, Format> formats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("plain");
    app.add_flag("--decimal", o.decimal, "Append a 6-decimal approximation (plain density output)");

    auto add_ell = [&](CLI::App* sub) { sub->add_option("--ell", o.ell, "Prime ell")->required(); };
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "Q or Q(sqrt D)")->default_str("Q");
    };
    auto add_a = [&](CLI::App* sub) { sub->add_option("--a", o.a, "Element of the field")->required(); };

    CLI::App* density_cmd = app.add_subcommand("density", "Density of primes with v_ell(ord) = val");
    add_ell(density_cmd);
    density_cmd->add_option("--val", o.val, "Valuation n")->default_str("0");
    add_field(density_cmd);
    add_a(density_cmd);

    CLI::App* kummer_cmd = app.add_subcommand("kummer", "Degrees of K(zeta_{ell^m}, a^(1/ell^n))");
    add_ell(kummer_cmd);
    kummer_cmd->add_option("--m", o.m, "Cyclotomic level m >= 1")->required();
    kummer_cmd->add_option("--n", o.n, "Kummer level n <= m")->required();
    add_field(kummer_cmd);
    add_a(kummer_cmd);

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "Write a = b^(ell^d) * xi");
    add_ell(decompose_cmd);
    add_field(decompose_cmd);
    add_a(decompose_cmd);

    CLI::App* profile_cmd = app.add_subcommand("profile", "Cyclotomic parameters of K at ell");
    add_ell(profile_cmd);
    add_field(profile_cmd);

    CLI::App* scan_cmd = app.add_subcommand("scan", "Empirical valuation histogram over primes");
    add_ell(scan_cmd);
    add_field(scan_cmd);
    add_a(scan_cmd);
    scan_cmd->add_option("--bound", o.bound, "Norm bound")->default_str("100000");
    scan_cmd->add_flag("--compare", o.compare, "Compare against exact densities");

    CLI::App* tables_cmd = app.add_subcommand("tables", "Recompute the golden tables and diff them");
    tables_cmd->add_option("--which", o.which, "Table number(s); all when omitted")->check(CLI::Range(1, 4));

    CLI::App* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the built-in consistency checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    }

    try {
        if (density_cmd->parsed()) return cmd_density(o, out);
        if (kummer_cmd->parsed()) return cmd_kummer(o, out);
        if (decompose_cmd->parsed()) return cmd_decompose(o, out);
        if (profile_cmd->parsed()) return cmd_profile(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out);
        if (tables_cmd->parsed()) return cmd_tables(o, out);
        if (selfcheck_cmd->parsed()) return cmd_selfcheck(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::logic_error& e) {
        err << "invariant failure: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_parse_error;
}

}  // namespace ordens::cli
