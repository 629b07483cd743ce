#include "dirackit/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirackit/ep.hpp"
#include "dirackit/errors.hpp"
#include "dirackit/io.hpp"
#include "dirackit/twisted_cartan.hpp"

namespace dirackit {

namespace {

using nlohmann::json;

constexpr const char* kOrientation = "sdiff-top-plus";

struct CliConfig {
    std::string input_path;
    bool table = false;
    std::string mode_override;
    std::string angles_override;
};

std::vector<double> parse_angle_list(const std::string& text) {
    std::vector<double> angles;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            angles.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ConfigError("malformed angle: " + item);
        }
    }
    return angles;
}

JobSpec load_job(const CliConfig& cfg) {
    if (cfg.input_path.empty()) throw ConfigError("an --input file is required");
    std::ifstream in(cfg.input_path);
    if (!in) throw ConfigError("cannot read input file: " + cfg.input_path);
    JobSpec job = job_from_json(json::parse(in));
    if (cfg.mode_override == "ordinary") job.mode = IndexMode::ordinary;
    if (cfg.mode_override == "twisted") job.mode = IndexMode::twisted;
    if (!cfg.angles_override.empty()) job.angles = parse_angle_list(cfg.angles_override);
    return job;
}

std::string mode_name(IndexMode mode) {
    return mode == IndexMode::ordinary ? "ordinary" : "twisted";
}

std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

// Left-aligned column emitter for every --table view.
void emit_table(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size()) cell.resize(width[i] + 2, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

std::string term_string(Int coeff, const Weight& w) {
    std::string sign = coeff < 0 ? "-" : "+";
    Int mag = coeff < 0 ? -coeff : coeff;
    return sign + std::to_string(mag) + " E_" + weight_string(w);
}

void cmd_classify(const JobSpec& job, bool table, std::ostream& out) {
    const PairDatum& pair = job.pair;
    json doc{{"command", "classify"},
             {"denominator", 2},
             {"family", family_tag_name(pair.tag)}};
    json rows = json::array();
    std::vector<std::vector<std::string>> cells;
    if (pair.tag == FamilyTag::complex_pair) {
        cells.push_back({"representative", "size", "h+", "h-"});
        for (const ComplexTwistedCartan& c : twisted_cartan_classes_complex(pair)) {
            std::string rep = signed_perm_string(c.w_rep.mat);
            rows.push_back({{"representative", rep},
                            {"class_size", c.class_size},
                            {"h_plus", c.h_plus_dim},
                            {"h_minus", c.h_minus_dim}});
            cells.push_back({rep, std::to_string(c.class_size), std::to_string(c.h_plus_dim),
                             std::to_string(c.h_minus_dim)});
        }
    } else if (pair.tag == FamilyTag::gl_real) {
        cells.push_back({"stratum", "involution", "size", "t", "a"});
        for (const GlTwistedClass& c : twisted_cartan_classes_gl(pair.gl_m)) {
            std::string rep = signed_perm_string(c.involution.mat);
            rows.push_back({{"untransformed_pairs", c.untransformed_pairs},
                            {"involution", rep},
                            {"class_size", c.class_size},
                            {"t_dim", c.t_dim},
                            {"a_dim", c.a_dim}});
            cells.push_back({std::to_string(c.untransformed_pairs), rep,
                             std::to_string(c.class_size), std::to_string(c.t_dim),
                             std::to_string(c.a_dim)});
        }
    } else {
        cells.push_back({"cartan_k", "t", "a", "cayley roots", "theta_h"});
        for (const CartanClass& c : job.cartans) {
            std::string roots;
            json jroots = json::array();
            for (const Weight& r : c.cayley_roots) {
                if (!roots.empty()) roots += " ";
                roots += weight_string(r);
                jroots.push_back(weight_to_json(r));
            }
            std::string theta = signed_perm_string(c.theta_h);
            rows.push_back({{"cartan_k", c.index_k},
                            {"t_dim", c.t_dim},
                            {"a_dim", c.a_dim},
                            {"cayley_roots", jroots},
                            {"theta_h", theta}});
            cells.push_back({std::to_string(c.index_k), std::to_string(c.t_dim),
                             std::to_string(c.a_dim), roots.empty() ? "-" : roots, theta});
        }
    }
    doc["rows"] = rows;
    if (table) {
        out << "classes: " << family_tag_name(pair.tag) << "\n";
        emit_table(cells, out);
    } else {
        out << doc.dump(2) << "\n";
    }
}

void cmd_index(const JobSpec& job, bool table, std::ostream& out) {
    const PairDatum& pair = job.pair;
    json doc{{"command", "index"},
             {"denominator", 2},
             {"mode", mode_name(job.mode)},
             {"orientation", kOrientation}};
    json results = json::array();
    std::ostringstream text;
    for (const NamedParam& named : job.params) {
        VirtualKModule v = index_virtual(pair, named.terms, job.mode);
        json row{{"name", named.name}, {"index", module_to_json(v)}};
        text << "index " << named.name << " (" << mode_name(job.mode) << "):";
        if (v.is_zero()) text << " 0";
        text << "\n";
        for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
            text << "  " << term_string(it->second, it->first) << "\n";
        }
        if (!named.terms.empty()) {
            Weight chi = infinitesimal_char(pair, named.terms.front().second);
            VoganReport vr = vogan_check(v, chi, pair);
            bool d2_zero = true;
            for (const auto& [tau, mult] : v.terms) {
                (void)mult;
                if (!d2_eigenvalue(tau, chi, pair).is_zero()) d2_zero = false;
            }
            row["infinitesimal_character"] = weight_to_json(chi);
            row["vogan_ok"] = vr.ok;
            row["d2_all_zero"] = d2_zero;
            text << "  infinitesimal character " << weight_string(chi) << ", vogan "
                 << (vr.ok ? "ok" : "VIOLATED") << ", d2 " << (d2_zero ? "zero" : "NONZERO")
                 << "\n";
            if (!named.is_virtual) {
                if (const auto* rp = std::get_if<StandardParamReal>(&named.terms.front().second)) {
                    row["case_tag"] = case_tag_name(rp->case_tag);
                    text << "  case " << case_tag_name(rp->case_tag);
                    if (positive_system_theta_stable(pair, rp->cartan, rp->positive_system)) {
                        Int dim = dim_u_cap_s(pair, rp->cartan, rp->positive_system);
                        Int eta = (dim % 2 == 0 ? 1 : -1) * rp->epsilon;
                        row["eta"] = eta;
                        text << ", eta " << (eta > 0 ? "+1" : "-1");
                    }
                    text << "\n";
                }
            }
        }
        results.push_back(row);
    }
    doc["results"] = results;
    if (table) {
        out << text.str() << "orientation: " << kOrientation << "\n";
    } else {
        out << doc.dump(2) << "\n";
    }
}

void cmd_ep(const JobSpec& job, bool table, std::ostream& out) {
    if (job.params.empty()) throw UsageError("ep needs at least one parameter");
    const size_t n = job.params.size();
    std::vector<std::vector<Int>> matrix(n, std::vector<Int>(n, 0));
    std::vector<std::vector<bool>> mismatched(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            EpResult r = ep_virtual(job.pair, job.params[i].terms, job.params[j].terms, job.mode);
            matrix[i][j] = matrix[j][i] = r.value;
            mismatched[i][j] = mismatched[j][i] = r.infinitesimal_mismatch;
        }
    }
    bool any_mismatch = false;
    json jmatrix = json::array(), jmismatch = json::array(), labels = json::array();
    for (size_t i = 0; i < n; ++i) {
        labels.push_back(job.params[i].name);
        json row = json::array(), mrow = json::array();
        for (size_t j = 0; j < n; ++j) {
            row.push_back(matrix[i][j]);
            mrow.push_back(static_cast<bool>(mismatched[i][j]));
            if (mismatched[i][j]) any_mismatch = true;
        }
        jmatrix.push_back(row);
        jmismatch.push_back(mrow);
    }
    json doc{{"command", "ep"},     {"denominator", 2}, {"mode", mode_name(job.mode)},
             {"labels", labels},    {"matrix", jmatrix}, {"mismatched", jmismatch}};
    if (job.mode == IndexMode::twisted) doc["twisted_constant"] = twisted_ep_constant(job.pair);
    if (table) {
        out << "EP matrix (" << mode_name(job.mode) << ")";
        if (job.mode == IndexMode::twisted) {
            out << ", constant " << twisted_ep_constant(job.pair);
        }
        out << "\n";
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{""};
        for (size_t j = 0; j < n; ++j) header.push_back(job.params[j].name);
        cells.push_back(header);
        for (size_t i = 0; i < n; ++i) {
            std::vector<std::string> row{job.params[i].name};
            for (size_t j = 0; j < n; ++j) {
                row.push_back(std::to_string(matrix[i][j]) + (mismatched[i][j] ? "*" : ""));
            }
            cells.push_back(row);
        }
        emit_table(cells, out);
        if (any_mismatch) {
            out << "* infinitesimal characters differ; those pairings vanish\n";
        }
    } else {
        out << doc.dump(2) << "\n";
    }
}

void cmd_character(const JobSpec& job, bool table, std::ostream& out) {
    if (job.params.empty()) throw UsageError("character needs a parameter");
    // The last declared entry is the one evaluated, so a virtual combination
    // placed after its ingredients is picked up naturally.
    const NamedParam& named = job.params.back();
    VirtualKModule v = index_virtual(job.pair, named.terms, job.mode);
    EllipticCharacter ell = elliptic_character(v, job.pair, job.mode);
    json doc{{"command", "character"},
             {"denominator", 2},
             {"mode", mode_name(job.mode)},
             {"orientation", kOrientation},
             {"name", named.name},
             {"character",
              {{"numerator", poly_to_json(ell.numerator)},
               {"denominator", poly_to_json(ell.denominator)}}}};
    std::ostringstream text;
    text << "character " << named.name << " (" << mode_name(job.mode) << ")\n";
    auto emit_poly = [&text](const char* label, const CharacterPoly& p) {
        text << label << ":";
        if (p.is_zero()) text << " 0";
        text << "\n";
        for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
            Int c = it->second;
            text << "  " << (c < 0 ? "-" : "+") << (c < 0 ? -c : c) << " e_"
                 << weight_string(it->first) << "\n";
        }
    };
    if (table) {
        emit_poly("numerator", ell.numerator);
        emit_poly("denominator", ell.denominator);
    }
    if (!job.angles.empty()) {
        std::complex<double> value = elliptic_value(v, job.pair, job.mode, job.angles);
        doc["value"] = {{"re", value.real()}, {"im", value.imag()}};
        text << "value: " << format_double(value.real()) << " + "
             << format_double(value.imag()) << "i\n";
    }
    if (table) {
        out << text.str();
    } else {
        out << doc.dump(2) << "\n";
    }
}

bool suite_gl_oracle(std::ostream& out) {
    for (int m = 2; m <= 6; ++m) {
        std::map<int, std::multiset<std::pair<int, int>>> closed, brute;
        auto classes = twisted_cartan_classes_gl(m);
        for (const GlTwistedClass& c : classes) {
            closed[c.untransformed_pairs].insert({c.t_dim, c.a_dim});
        }
        OracleReport report = sigma_stable_oracle(m);
        for (const OracleStratum& s : report.strata) {
            for (const OracleClass& c : s.classes) {
                brute[s.untransformed_pairs].insert({c.t_dim, c.a_dim});
            }
        }
        if (closed != brute || static_cast<int>(classes.size()) != report.total_classes) {
            out << "FAIL gl twisted classes disagree with the pairing oracle at m=" << m << "\n";
            return false;
        }
    }
    out << "ok   gl twisted classes match the pairing oracle (m=2..6)\n";
    return true;
}

bool suite_roundtrip(std::ostream& out) {
    auto check = [](const PairDatum& pair, const Weight& tau) {
        VirtualKModule expected;
        expected.add(tau, 1);
        return decompose_into_ktypes(k_character(tau, pair), pair) == expected;
    };
    PairDatum su2 = build_complex_pair('C', 1);
    PairDatum sp4 = build_equal_rank_pair('C', 2, {weight_from_ints({1, -1})});
    bool ok = check(su2, weight_from_doubled({0})) && check(su2, weight_from_doubled({2})) &&
              check(su2, weight_from_doubled({8})) && check(sp4, weight_from_doubled({2, 0})) &&
              check(sp4, weight_from_doubled({3, -1})) && check(sp4, weight_from_doubled({1, 1}));
    out << (ok ? "ok  " : "FAIL") << " K-type decomposition inverts the character formula\n";
    return ok;
}

bool suite_vogan(std::ostream& out) {
    bool ok = true;
    auto sweep = [&ok](const PairDatum& pair, const StandardParamReal& p) {
        VirtualKModule v = index_standard_real(pair, p);
        Weight chi = infinitesimal_char(pair, AnyStandardParam{p});
        if (!vogan_check(v, chi, pair).ok) ok = false;
        for (const auto& [tau, mult] : v.terms) {
            (void)mult;
            if (!d2_eigenvalue(tau, chi, pair).is_zero()) ok = false;
        }
    };
    PairDatum sl2r = build_equal_rank_pair('C', 1, {});
    std::vector<CartanClass> cls = cartan_classes(sl2r);
    WeylElement flip = weyl_from_matrix(parse_signed_perm("[-1]", 1), sl2r.g);
    for (Int n = 0; n <= 2; ++n) {
        sweep(sl2r, {cls[0], identity_weyl(1), weight_from_ints({n}), 1, CaseTag::case1});
        sweep(sl2r, {cls[0], flip, weight_from_ints({-n}), 1, CaseTag::case1});
    }
    PairDatum sp4 = build_equal_rank_pair('C', 2, {weight_from_ints({1, -1})});
    std::vector<CartanClass> scls = cartan_classes(sp4);
    for (const char* s : {"e", "[1,-2]", "[-2,1]", "[-1,-2]"}) {
        sweep(sp4, {scls[0], weyl_from_matrix(parse_signed_perm(s, 2), sp4.g), zero_weight(2), 1,
                    CaseTag::case1});
    }
    out << (ok ? "ok  " : "FAIL") << " index constituents pass the Vogan and d2 checks\n";
    return ok;
}

bool suite_spin(std::ostream& out) {
    bool ok = spin_rho_multiplicity(build_complex_pair('C', 1)) == 1 &&
              spin_rho_multiplicity(build_complex_pair('C', 2)) == 2 &&
              spin_rho_multiplicity(build_complex_pair('A', 3)) == 2;
    out << (ok ? "ok  " : "FAIL") << " spin multiplicities agree with character division\n";
    return ok;
}

int cmd_selfcheck(std::ostream& out) {
    int failures = 0;
    for (bool passed : {suite_gl_oracle(out), suite_roundtrip(out), suite_vogan(out),
                        suite_spin(out)}) {
        if (!passed) ++failures;
    }
    if (failures == 0) {
        out << "selfcheck: all suites passed\n";
        return 0;
    }
    out << "selfcheck: " << failures << " suite(s) FAILED\n";
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact twisted Cartan classes, Dirac indices, Euler-Poincare pairings,"
                 " and elliptic characters for classical real groups"};
    app.name("dirackit");
    app.require_subcommand(1);

    CliConfig cfg;
    auto add_common = [&cfg](CLI::App* cmd, bool with_angles) {
        cmd->add_option("--input", cfg.input_path, "job description (JSON)");
        cmd->add_flag("--table", cfg.table, "aligned text tables instead of JSON");
        cmd->add_option("--mode", cfg.mode_override, "override the document mode")
            ->check(CLI::IsMember({"ordinary", "twisted"}));
        if (with_angles) {
            cmd->add_option("--angles", cfg.angles_override,
                            "comma-separated torus angles for evaluation");
        }
    };
    CLI::App* classify = app.add_subcommand("classify", "twisted Cartan class table");
    CLI::App* index = app.add_subcommand("index", "Dirac index of each parameter");
    CLI::App* ep = app.add_subcommand("ep", "Euler-Poincare pairing matrix");
    CLI::App* character =
        app.add_subcommand("character", "elliptic character of the last parameter");
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the built-in oracle suites");
    add_common(classify, false);
    add_common(index, false);
    add_common(ep, false);
    add_common(character, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        // Build the whole report before emitting so output lands atomically.
        std::ostringstream buffer;
        int code = 0;
        if (selfcheck->parsed()) {
            code = cmd_selfcheck(buffer);
        } else {
            JobSpec job = load_job(cfg);
            if (classify->parsed()) cmd_classify(job, cfg.table, buffer);
            if (index->parsed()) cmd_index(job, cfg.table, buffer);
            if (ep->parsed()) cmd_ep(job, cfg.table, buffer);
            if (character->parsed()) cmd_character(job, cfg.table, buffer);
        }
        out << buffer.str();
        return code;
    } catch (const SingularPointError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dirackit
