#include <mexlab/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <mexlab/combinat.hpp>
#include <mexlab/qfactory.hpp>
#include <mexlab/report_json.hpp>
#include <mexlab/series.hpp>
#include <mexlab/verify.hpp>

namespace mexlab
{

namespace
{

enum class Method { Series, Oracle, Both };
enum class Format { Csv, Json };

struct RunConfig {
    MexVariant variant = MexVariant::Overlined;
    unsigned max_n = 10;
    std::optional<std::size_t> order;
    Method method = Method::Series;
    Format format = Format::Csv;
    std::string out_path;
    std::optional<std::string> only;
    unsigned oracle_limit = default_oracle_limit;
    std::vector<std::int64_t> points;
    bool by_class = false;
};

class UsageError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

void require_oracle_range(const RunConfig &c)
{
    if (c.max_n > c.oracle_limit) {
        throw UsageError("--max-n " + std::to_string(c.max_n) + " exceeds the oracle limit "
                         + std::to_string(c.oracle_limit) + "; use --method series or raise --oracle-limit");
    }
}

int cmd_table(const RunConfig &c, std::ostream &out)
{
    if (c.method != Method::Series) {
        require_oracle_range(c);
    }
    std::optional<Series> gf;
    if (c.method != Method::Oracle) {
        gf = sigma_mex_gf(c.variant, c.max_n);
    }

    bool mismatch = false;
    nlohmann::json rows = nlohmann::json::array();
    if (c.format == Format::Csv) {
        out << (c.method == Method::Both ? "n,series,oracle,match\n" : "n,value\n");
    }
    for (unsigned n = 0; n <= c.max_n; ++n) {
        std::optional<BigInt> oracle;
        if (c.method != Method::Series) {
            oracle = mex_distribution(n, c.oracle_limit, 0).sigma_of(c.variant);
        }
        const bool match = !gf || !oracle || (*gf)[n] == *oracle;
        mismatch = mismatch || !match;
        if (c.format == Format::Csv) {
            out << n;
            if (gf) {
                out << ',' << (*gf)[n].get_str();
            }
            if (oracle) {
                out << ',' << oracle->get_str();
            }
            if (c.method == Method::Both) {
                out << ',' << (match ? "match" : "mismatch");
            }
            out << '\n';
        } else {
            if (gf) {
                rows.push_back({{"n", n}, {"value", (*gf)[n].get_str()}, {"method", "series"}});
            }
            if (oracle) {
                rows.push_back({{"n", n}, {"value", oracle->get_str()}, {"method", "oracle"}});
            }
        }
    }
    if (c.format == Format::Json) {
        out << rows.dump(2) << '\n';
    }
    return mismatch ? exit_failure : exit_ok;
}

void write_report_csv_header(std::ostream &out)
{
    out << "check_name,status,range_checked,failure_n,failure_m,expected,actual\n";
}

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        q += ch;
        if (ch == '"') {
            q += '"';
        }
    }
    return q + '"';
}

void write_report(const VerifyReport &r, Format f, std::ostream &out)
{
    if (f == Format::Json) {
        out << to_json(r).dump() << '\n';
        return;
    }
    out << r.check_name << ',' << (r.passed() ? "PASS" : "FAIL") << ',' << csv_quote(r.range_checked) << ',';
    if (r.first_failure) {
        out << r.first_failure->n << ',' << (r.first_failure->m ? std::to_string(*r.first_failure->m) : "") << ','
            << csv_quote(r.first_failure->expected) << ',' << csv_quote(r.first_failure->actual);
    } else {
        out << ",,,";
    }
    out << '\n';
}

int cmd_verify(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    SuiteConfig sc;
    sc.oracle_limit = c.oracle_limit;
    sc.oracle_n_max = std::min<unsigned>(sc.oracle_n_max, c.oracle_limit);
    if (c.order) {
        sc.identity_order = *c.order;
    }
    if (c.only && std::find(suite_check_names().begin(), suite_check_names().end(), *c.only) == suite_check_names().end()) {
        std::string known;
        for (const auto &n : suite_check_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw UsageError("unknown check '" + *c.only + "' (known: " + known + ")");
    }
    const auto reports = run_suite(sc, c.only);
    if (c.format == Format::Csv) {
        write_report_csv_header(out);
    }
    for (const auto &r : reports) {
        write_report(r, c.format, out);
        if (!r.passed()) {
            err << "FAIL " << r.check_name << '\n';
        }
    }
    return verify_exit_code(reports);
}

int cmd_asym(const RunConfig &c, std::ostream &out)
{
    std::vector<std::int64_t> points = c.points;
    if (points.empty()) {
        points = SuiteConfig{}.asym_points;
    }
    auto [rows, report] = asym_ratio_table(points);
    if (c.format == Format::Csv) {
        out << "n,exact,predicted,ratio\n";
        out.precision(17);
        for (const auto &row : rows) {
            out << row.n << ',' << row.exact.get_str() << ',' << row.predicted << ',' << row.ratio << '\n';
        }
    } else {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (const auto &row : rows) {
            j["rows"].push_back(to_json(row));
        }
        j["report"] = to_json(report);
        out << j.dump(2) << '\n';
    }
    return report.passed() ? exit_ok : exit_failure;
}

int cmd_parity(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    const auto s2 = sigma_mex_gf(c.variant, c.max_n, 2);
    std::optional<VerifyReport> report;
    switch (c.variant) {
        case MexVariant::All:
            if (c.max_n >= 1) {
                report = check_parity_all_even(c.max_n);
            }
            break;
        case MexVariant::Overlined:
            if (c.max_n >= 100) {
                report = check_parity_density(c.max_n);
            }
            break;
        case MexVariant::NonOverlined:
            if (c.max_n >= 1) {
                report = check_triangular_parity(c.max_n);
            }
            break;
    }
    if (c.format == Format::Csv) {
        out << "n,residue\n";
        for (std::size_t n = 0; n <= c.max_n; ++n) {
            out << n << ',' << s2[n].get_str() << '\n';
        }
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = 0; n <= c.max_n; ++n) {
            rows.push_back({{"n", n}, {"residue", s2[n].get_ui()}});
        }
        out << rows.dump(2) << '\n';
    }
    if (report) {
        err << report->check_name << ": " << (report->passed() ? "PASS" : "FAIL") << " (" << report->range_checked << ")\n";
        return report->passed() ? exit_ok : exit_failure;
    }
    return exit_ok;
}

int cmd_enum(const RunConfig &c, std::ostream &out)
{
    require_oracle_range(c);
    const auto classes = class_decomposition(c.max_n, c.oracle_limit);
    if (c.format == Format::Csv) {
        out << "n,class,overpartition,underlying,mex_nonoverlined,mex_overlined,mex_all\n";
        for (std::size_t k = 0; k < classes.size(); ++k) {
            for (const auto &pi : classes[k].members) {
                out << c.max_n << ',' << k + 1 << ',' << pi.to_string() << ',' << classes[k].underlying.to_string() << ','
                    << pi.mex(MexVariant::NonOverlined) << ',' << pi.mex(MexVariant::Overlined) << ','
                    << pi.mex(MexVariant::All) << '\n';
            }
        }
        if (c.by_class) {
            out << "\nclass,underlying,size,mex_all\n";
            for (std::size_t k = 0; k < classes.size(); ++k) {
                out << k + 1 << ',' << classes[k].underlying.to_string() << ',' << classes[k].size << ','
                    << classes[k].mex_all << '\n';
            }
        }
        return exit_ok;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        for (const auto &pi : classes[k].members) {
            auto row = to_json(pi);
            row["n"] = c.max_n;
            row["class"] = k + 1;
            row["underlying"] = classes[k].underlying.to_string();
            row["mex"] = {{"nonoverlined", pi.mex(MexVariant::NonOverlined)},
                          {"overlined", pi.mex(MexVariant::Overlined)},
                          {"all", pi.mex(MexVariant::All)}};
            rows.push_back(std::move(row));
        }
    }
    if (c.by_class) {
        nlohmann::json cls = nlohmann::json::array();
        for (std::size_t k = 0; k < classes.size(); ++k) {
            cls.push_back({{"class", k + 1},
                           {"underlying", classes[k].underlying.to_string()},
                           {"size", classes[k].size},
                           {"mex_all", classes[k].mex_all}});
        }
        out << nlohmann::json{{"overpartitions", rows}, {"classes", cls}}.dump(2) << '\n';
    } else {
        out << rows.dump(2) << '\n';
    }
    return exit_ok;
}

} // namespace

int verify_exit_code(std::span<const VerifyReport> reports)
{
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport &r) { return r.passed(); });
    return ok ? exit_ok : exit_failure;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"mexlab: minimal excludant statistics of overpartitions"};
    app.require_subcommand(1);

    RunConfig c;
    const std::map<std::string, MexVariant> variants{{"nonoverlined", MexVariant::NonOverlined},
                                                     {"overlined", MexVariant::Overlined},
                                                     {"all", MexVariant::All}};
    const std::map<std::string, Method> methods{{"series", Method::Series}, {"oracle", Method::Oracle}, {"both", Method::Both}};
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};

    std::string variant_name = "overlined";
    std::string method_name = "series";
    std::string format_name = "csv";
    auto choices = [](const auto &m) {
        std::vector<std::string> keys;
        for (const auto &kv : m) {
            keys.push_back(kv.first);
        }
        return CLI::IsMember(keys);
    };

    auto common = [&](CLI::App *sub, bool with_variant) {
        if (with_variant) {
            sub->add_option("--variant", variant_name, "nonoverlined | overlined | all")
                ->check(choices(variants))
                ->capture_default_str();
        }
        sub->add_option("--format", format_name, "csv | json")->check(choices(formats));
        sub->add_option("--out", c.out_path, "write results to this file instead of stdout");
        sub->add_option("--oracle-limit", c.oracle_limit, "largest n the enumeration oracle accepts")
            ->capture_default_str();
    };

    auto *table = app.add_subcommand("table", "sigma-mex values for n = 0..max-n");
    common(table, true);
    table->add_option("--max-n", c.max_n, "largest n")->capture_default_str();
    table->add_option("--method", method_name, "series | oracle | both")->check(choices(methods))->capture_default_str();

    auto *verify = app.add_subcommand("verify", "run the verification suite (JSON lines by default)");
    common(verify, false);
    verify->add_option("--only", c.only, "run a single check");
    verify->add_option("--order", c.order, "truncation order for the identity checks (default 2000)");

    auto *asym = app.add_subcommand("asym", "exact sigma-mex(overlined) against e^{pi sqrt n}/(4n)");
    common(asym, false);
    asym->add_option("--points", c.points, "ascending n values (default 100 400 900 1600 2500)")->delimiter(',');

    auto *parity = app.add_subcommand("parity", "sigma-mex residues mod 2 and the matching parity check");
    common(parity, true);
    parity->add_option("--max-n", c.max_n, "largest n")->capture_default_str();

    auto *enumerate = app.add_subcommand("enum", "list the overpartitions of n with their mex values");
    common(enumerate, false);
    enumerate->add_option("--n,--max-n", c.max_n, "the integer to enumerate")->capture_default_str();
    enumerate->add_flag("--by-class", c.by_class, "also print the overline-erasure classes");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    c.variant = variants.at(variant_name);
    c.method = methods.at(method_name);
    // verify streams JSON lines unless csv is asked for explicitly.
    const bool format_given = app.get_subcommands().front()->count("--format") > 0;
    c.format = (!format_given && verify->parsed()) ? Format::Json : formats.at(format_name);

    std::ofstream file;
    std::ostream *sink = &out;
    if (!c.out_path.empty()) {
        file.open(c.out_path);
        if (!file) {
            err << "error: cannot open " << c.out_path << " for writing\n";
            return exit_usage;
        }
        sink = &file;
    }

    try {
        if (table->parsed()) {
            return cmd_table(c, *sink);
        }
        if (verify->parsed()) {
            return cmd_verify(c, *sink, err);
        }
        if (asym->parsed()) {
            return cmd_asym(c, *sink);
        }
        if (parity->parsed()) {
            return cmd_parity(c, *sink, err);
        }
        return cmd_enum(c, *sink);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OracleLimitError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace mexlab
