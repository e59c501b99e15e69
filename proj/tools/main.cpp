// Command-line front end: sequence/polynomial tables, identity verification,
// and side-by-side text tables over the exact-arithmetic core.
//
// Exit codes: 0 success, 1 any check failure (identity or oracle mismatch),
// 2 usage/parse error, 3 size limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include "dpoly/errors.hpp"
#include "dpoly/identities.hpp"
#include "dpoly/oracles.hpp"
#include "dpoly/sequences.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace dpoly;

constexpr const char* kVersion = "dpoly 0.1.0";

bool is_triangle(FamilyTag tag) {
    return tag == FamilyTag::Stirling1 || tag == FamilyTag::Stirling2 ||
           tag == FamilyTag::DegenStirling2;
}

StirlingKind stirling_kind(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Stirling1: return StirlingKind::First;
        case FamilyTag::Stirling2: return StirlingKind::Second;
        default: return StirlingKind::SecondDegenerate;
    }
}

FamilyTag parse_family_or_throw(const std::string& id) {
    auto tag = parse_family(id);
    if (!tag) {
        throw std::invalid_argument("unknown family '" + id + "'");
    }
    return *tag;
}

Route parse_route_or_throw(const std::string& id) {
    auto route = parse_route(id);
    if (!route) {
        throw std::invalid_argument("unknown route '" + id + "'");
    }
    return *route;
}

BiPoly family_value(Catalog& cat, FamilyTag tag, unsigned n, unsigned k, Route route) {
    switch (tag) {
        case FamilyTag::DerangementNumber: return BiPoly(cat.derangement_number(n, route));
        case FamilyTag::DerangementPoly: return cat.derangement_poly(n, route);
        case FamilyTag::DegenDerangementPoly: return cat.degen_derangement_poly(n, route);
        case FamilyTag::Stirling1:
        case FamilyTag::Stirling2:
        case FamilyTag::DegenStirling2: return cat.stirling(stirling_kind(tag), n, k);
        case FamilyTag::FubiniPoly: return cat.fubini_poly(n, route);
        case FamilyTag::BellPoly: return cat.bell_poly(n, false, route);
        case FamilyTag::DegenBellPoly: return cat.bell_poly(n, true, route);
        case FamilyTag::BernoulliPoly: return cat.bernoulli_poly(n);
        case FamilyTag::DegenBernoulli: return cat.degen_bernoulli(n);
        case FamilyTag::DegenEuler: return cat.degen_euler(n);
    }
    throw std::invalid_argument("unhandled family");
}

// "family:n[:k[:delta]]" — a fault-injection hook for demonstrating that
// verification really fails on corrupted data. delta defaults to 1.
void apply_inject(Catalog& cat, const std::string& descriptor) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = descriptor.find(':', start);
        parts.push_back(descriptor.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 4) {
        throw std::invalid_argument("--inject expects family:n[:k[:delta]], got '" + descriptor + "'");
    }
    FamilyTag tag = parse_family_or_throw(parts[0]);
    unsigned n = 0, k = 0;
    try {
        std::size_t used = 0;
        n = static_cast<unsigned>(std::stoul(parts[1], &used));
        if (used != parts[1].size()) throw std::invalid_argument("");
        if (parts.size() >= 3) {
            k = static_cast<unsigned>(std::stoul(parts[2], &used));
            if (used != parts[2].size()) throw std::invalid_argument("");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--inject has a malformed index in '" + descriptor + "'");
    }
    Rational delta(1);
    if (parts.size() == 4) {
        delta = Rational::from_string(parts[3]);
    }
    cat.inject_offset(tag, n, k, delta);
}

// --- seq -----------------------------------------------------------------

struct SeqOptions {
    std::string family;
    unsigned n = 0;
    std::string route = "canonical";
    std::optional<unsigned> k;
    std::optional<std::string> x;
    std::optional<std::string> lambda;
    std::string format = "text";
    bool oracle = false;
    std::vector<std::string> inject;
};

// Cross-checks one canonical value against the matching brute-force count.
// Returns false (after a stderr note) on mismatch.
bool oracle_agrees(Catalog& cat, FamilyTag tag, unsigned n, unsigned k) {
    Rational expected, actual;
    switch (tag) {
        case FamilyTag::DerangementNumber:
            expected = oracles::count_derangements(n).value;
            actual = cat.derangement_number(n);
            break;
        case FamilyTag::Stirling2:
            expected = oracles::count_partitions(n, k).value;
            actual = cat.stirling(StirlingKind::Second, n, k).constant_value();
            break;
        case FamilyTag::FubiniPoly:
            for (unsigned j = 0; j <= n; ++j) {
                expected += oracles::count_surjections(n, j).value;
            }
            actual = cat.fubini_poly(n).substitute_x(Rational(1)).constant_value();
            break;
        case FamilyTag::BellPoly:
            for (unsigned j = 0; j <= n; ++j) {
                expected += oracles::count_partitions(n, j).value;
            }
            actual = cat.bell_poly(n, false).substitute_x(Rational(1)).constant_value();
            break;
        default:
            throw std::invalid_argument("--oracle is not available for family '" +
                                        std::string(family_id(tag)) + "'");
    }
    if (actual == expected) return true;
    std::cerr << "oracle mismatch for " << family_id(tag) << " at n=" << n
              << ": computed " << actual.str() << ", enumerated " << expected.str() << "\n";
    return false;
}

int run_seq(const SeqOptions& opt) {
    FamilyTag tag = parse_family_or_throw(opt.family);
    Route route = parse_route_or_throw(opt.route);
    if (!family_supports(tag, route)) {
        throw std::invalid_argument("family '" + opt.family + "' has no route '" + opt.route +
                                    "'");
    }
    if (is_triangle(tag) && !opt.k) {
        throw std::invalid_argument("family '" + opt.family + "' needs --k");
    }
    if (!is_triangle(tag) && opt.k) {
        throw std::invalid_argument("--k only applies to the triangle families");
    }
    std::optional<Rational> x_value, lambda_value;
    if (opt.x) x_value = Rational::from_string(*opt.x);
    if (opt.lambda) lambda_value = Rational::from_string(*opt.lambda);

    Catalog cat;
    for (const auto& descriptor : opt.inject) apply_inject(cat, descriptor);

    unsigned k = opt.k.value_or(0);
    std::vector<std::string> rendered;
    bool ok = true;
    for (unsigned n = 0; n <= opt.n; ++n) {
        BiPoly value = family_value(cat, tag, n, k, route).eval(x_value, lambda_value);
        rendered.push_back(value.str());
        if (opt.oracle) {
            ok = oracle_agrees(cat, tag, n, k) && ok;
        }
    }

    if (opt.format == "text") {
        for (const auto& line : rendered) std::cout << line << "\n";
    } else if (opt.format == "csv") {
        for (unsigned n = 0; n <= opt.n; ++n) std::cout << n << "," << rendered[n] << "\n";
    } else { // json
        nlohmann::json out;
        out["family"] = opt.family;
        out["route"] = opt.route;
        if (opt.k) out["k"] = *opt.k;
        nlohmann::json values = nlohmann::json::array();
        for (unsigned n = 0; n <= opt.n; ++n) {
            values.push_back({{"n", n}, {"value", rendered[n]}});
        }
        out["values"] = std::move(values);
        std::cout << out.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::vector<std::string> ids;
    bool all = false;
    unsigned max_n = 0;
    std::string format = "text";
    bool no_timing = false;
    std::vector<std::string> inject;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.all == !opt.ids.empty()) {
        throw std::invalid_argument("pass either --all or at least one --id");
    }
    std::vector<identities::Id> ids;
    if (opt.all) {
        auto span = identities::all_ids();
        ids.assign(span.begin(), span.end());
    } else {
        for (const auto& name : opt.ids) ids.push_back(identities::parse_id(name));
    }

    Catalog cat;
    for (const auto& descriptor : opt.inject) apply_inject(cat, descriptor);

    auto reports = identities::run_suite(ids, opt.max_n, cat);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (opt.format == "json") {
        std::cout << identities::reports_to_json(reports, !opt.no_timing) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << identities::id_name(r.id) << ": ";
            if (r.pass) {
                std::cout << "pass (n_max=" << r.n_max;
                if (!opt.no_timing) {
                    std::cout << ", "
                              << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed)
                                     .count()
                              << " ms";
                }
                std::cout << ")\n";
            } else {
                std::cout << "FAIL at n=" << r.witness->n;
                if (r.witness->m) std::cout << ", m=" << *r.witness->m;
                std::cout << "\n  lhs = " << r.witness->lhs << "\n  rhs = " << r.witness->rhs
                          << "\n";
            }
        }
    }
    return all_pass ? 0 : 1;
}

// --- table -------------------------------------------------------------------

struct TableOptions {
    std::vector<std::string> families;
    unsigned n = 0;
};

// Trim to at most `limit` bytes without splitting a UTF-8 sequence; append
// "..." when something was dropped.
std::string clip(const std::string& text, std::size_t limit) {
    if (text.size() <= limit) return text;
    std::size_t cut = limit > 3 ? limit - 3 : 0;
    while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
    return text.substr(0, cut) + "...";
}

int run_table(const TableOptions& opt) {
    if (opt.families.empty()) {
        throw std::invalid_argument("--families needs at least one family");
    }
    std::size_t width = 120;
    if (const char* hint = std::getenv("DPOLY_TABLE_WIDTH")) {
        width = std::max(16ul, std::strtoul(hint, nullptr, 10));
    }

    std::vector<FamilyTag> tags;
    for (const auto& id : opt.families) tags.push_back(parse_family_or_throw(id));

    Catalog cat;
    // rows[r][c]: r = 0 header, then one row per n; c = 0 index column
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"n"};
    header.insert(header.end(), opt.families.begin(), opt.families.end());
    rows.push_back(std::move(header));
    for (unsigned n = 0; n <= opt.n; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (FamilyTag tag : tags) {
            if (is_triangle(tag)) {
                std::string cell;
                for (unsigned k = 0; k <= n; ++k) {
                    if (k > 0) cell += ", ";
                    cell += cat.stirling(stirling_kind(tag), n, k).str();
                }
                row.push_back(std::move(cell));
            } else {
                row.push_back(family_value(cat, tag, n, 0, Route::Canonical).str());
            }
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> col_width(rows[0].size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            col_width[c] = std::max(col_width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += " | ";
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(col_width[c] - row[c].size(), ' ');
            }
        }
        std::cout << clip(line, width) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator and identity verifier for derangement-adjacent "
                 "number/polynomial families"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SeqOptions seq_opt;
    CLI::App* seq = app.add_subcommand("seq", "print family values for n = 0..N");
    seq->add_option("--family", seq_opt.family, "family id (see README)")->required();
    seq->add_option("--n", seq_opt.n, "largest index N")->required();
    seq->add_option("--route", seq_opt.route, "evaluation strategy (default canonical)");
    seq->add_option("--k", seq_opt.k, "column for the triangle families");
    seq->add_option("--x", seq_opt.x, "evaluate at x = <rational>");
    seq->add_option("--lambda", seq_opt.lambda, "evaluate at λ = <rational>");
    seq->add_option("--format", seq_opt.format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    seq->add_flag("--oracle", seq_opt.oracle, "cross-check against brute-force enumeration");
    seq->add_option("--inject", seq_opt.inject,
                    "fault injection family:n[:k[:delta]] (testing hook)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "check identities up to --max-n");
    verify->add_option("--id", verify_opt.ids, "identity label (repeatable)");
    verify->add_flag("--all", verify_opt.all, "check every registered identity");
    verify->add_option("--max-n", verify_opt.max_n, "largest index to check")->required();
    verify->add_option("--format", verify_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--no-timing", verify_opt.no_timing,
                     "omit elapsed times for reproducible output");
    verify->add_option("--inject", verify_opt.inject,
                       "fault injection family:n[:k[:delta]] (testing hook)");

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand("table", "side-by-side text table of families");
    table->add_option("--families", table_opt.families, "comma-separated family ids")
        ->required()
        ->delimiter(',');
    table->add_option("--n", table_opt.n, "largest index N")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) return run_seq(seq_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        return run_table(table_opt);
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
