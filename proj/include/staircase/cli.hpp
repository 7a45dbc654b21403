#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "staircase/composition.hpp"
#include "staircase/diagram.hpp"
#include "staircase/errors.hpp"
#include "staircase/monk.hpp"
#include "staircase/permutation.hpp"
#include "staircase/poset.hpp"
#include "staircase/verify.hpp"
#include "staircase/words.hpp"

namespace staircase::cli {

namespace detail {

inline nlohmann::json composition_json(const Composition& a) {
    return nlohmann::json{{"n", a.degree()}, {"parts", a.parts()}};
}

inline nlohmann::json report_json(const VerifyReport& report) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : report.mismatches)
        mismatches.push_back({{"subject", m.subject},
                              {"against", m.against},
                              {"oracle", m.oracle_answer},
                              {"poset", m.poset_answer}});
    return nlohmann::json{{"mode", report.mode},
                          {"n", report.degree},
                          {"pairs_checked", report.pairs_checked},
                          {"mismatches", mismatches}};
}

inline void print_report(const VerifyReport& report, bool json, std::ostream& out) {
    if (json) {
        out << report_json(report).dump() << "\n";
        return;
    }
    out << report.mode << " n=" << report.degree << ": pairs_checked=" << report.pairs_checked
        << " mismatches=" << report.mismatches.size() << " elapsed_ms=" << std::fixed
        << std::setprecision(1) << report.elapsed_ms << "\n";
    for (const auto& m : report.mismatches)
        out << "  mismatch: " << m.subject << " vs " << m.against << " oracle="
            << m.oracle_answer << " poset=" << m.poset_answer << "\n";
}

} // namespace detail

/// Dispatches one invocation; `args` excludes the program name. Usage
/// errors exit 2, domain errors exit 1 with the error name on stderr, and
/// `verify` exits 1 when any mismatch was found.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"staircase compositions, their cover poset, and the Bruhat order"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* code_cmd = app.add_subcommand("code", "Lehmer code of a permutation");
    std::string code_perm;
    bool code_json = false;
    code_cmd->add_option("permutation", code_perm, "one-line values, e.g. 5,7,6,2,1,8,3,4")
        ->required();
    code_cmd->add_flag("--json", code_json, "machine-readable output");
    code_cmd->callback([&] {
        const Composition a = encode(parse_permutation(code_perm));
        if (code_json)
            out << detail::composition_json(a).dump() << "\n";
        else
            out << to_string(a) << "\n";
    });

    auto* decode_cmd = app.add_subcommand("decode", "permutation of a composition");
    std::string decode_comp;
    bool decode_json = false;
    decode_cmd->add_option("composition", decode_comp, "parts with degree, e.g. 0,0,0@4")
        ->required();
    decode_cmd->add_flag("--json", decode_json, "machine-readable output");
    decode_cmd->callback([&] {
        const Permutation w = decode(parse_composition(decode_comp));
        if (decode_json)
            out << nlohmann::json{{"values", w.values()}}.dump() << "\n";
        else
            out << to_string(w) << "\n";
    });

    auto* cmatrix_cmd = app.add_subcommand("cmatrix", "extended code matrix");
    std::string cmatrix_comp;
    bool cmatrix_json = false;
    cmatrix_cmd->add_option("composition", cmatrix_comp)->required();
    cmatrix_cmd->add_flag("--json", cmatrix_json, "machine-readable output");
    cmatrix_cmd->callback([&] {
        const CMatrix m = extended_code_matrix(parse_composition(cmatrix_comp));
        if (cmatrix_json) {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 1; i <= m.row_count(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int j = 1; j <= m.column_count(); ++j) row.push_back(m.at(i, j));
                rows.push_back(std::move(row));
            }
            out << nlohmann::json{{"n", m.degree()}, {"rows", rows}}.dump() << "\n";
            return;
        }
        for (int i = 1; i <= m.row_count(); ++i) {
            for (int j = 1; j <= m.column_count(); ++j) {
                if (j > 1) out << ' ';
                out << m.at(i, j);
            }
            out << "\n";
        }
    });

    auto* covers_cmd = app.add_subcommand("covers", "covers of a composition");
    std::string covers_comp;
    bool covers_up = false;
    bool covers_down = false;
    bool covers_json = false;
    covers_cmd->add_option("composition", covers_comp)->required();
    covers_cmd->add_flag("--up", covers_up, "compositions covering this one");
    covers_cmd->add_flag("--down", covers_down, "compositions covered by this one");
    covers_cmd->add_flag("--json", covers_json, "machine-readable output");
    covers_cmd->callback([&] {
        if (covers_up == covers_down)
            throw CLI::ValidationError("covers", "choose exactly one of --up / --down");
        const Composition a = parse_composition(covers_comp);
        for (const auto& [other, witness] : covers_up ? upper_covers(a) : lower_covers(a)) {
            if (covers_json)
                out << nlohmann::json{{"composition", to_string(other)},
                                      {"i", witness.i},
                                      {"j", witness.j},
                                      {"z", witness.z}}
                           .dump()
                    << "\n";
            else
                out << to_string(other) << " (i=" << witness.i << ",j=" << witness.j
                    << ",z=" << witness.z << ")\n";
        }
    });

    const auto add_row_amount = [](CLI::App* cmd, std::string& comp, int& i, int& z) {
        cmd->add_option("composition", comp)->required();
        cmd->add_option("-i,--row", i, "part index")->required();
        cmd->add_option("-z,--amount", z, "amount")->required();
    };

    auto* removable_cmd = app.add_subcommand("removable", "test (i,z)-removability");
    std::string removable_comp;
    int removable_i = 0, removable_z = 0;
    bool removable_json = false;
    add_row_amount(removable_cmd, removable_comp, removable_i, removable_z);
    removable_cmd->add_flag("--json", removable_json, "machine-readable output");
    removable_cmd->callback([&] {
        const bool answer = is_removable(parse_composition(removable_comp), removable_i,
                                         removable_z);
        if (removable_json)
            out << nlohmann::json{{"removable", answer}}.dump() << "\n";
        else
            out << (answer ? "true" : "false") << "\n";
    });

    auto* insertable_cmd = app.add_subcommand("insertable", "test (i,z)-insertability");
    std::string insertable_comp;
    int insertable_i = 0, insertable_z = 0;
    bool insertable_json = false;
    add_row_amount(insertable_cmd, insertable_comp, insertable_i, insertable_z);
    insertable_cmd->add_flag("--json", insertable_json, "machine-readable output");
    insertable_cmd->callback([&] {
        const bool answer = is_insertable(parse_composition(insertable_comp), insertable_i,
                                          insertable_z);
        if (insertable_json)
            out << nlohmann::json{{"insertable", answer}}.dump() << "\n";
        else
            out << (answer ? "true" : "false") << "\n";
    });

    auto* remove_cmd = app.add_subcommand("remove", "the (i,z)-removal");
    std::string remove_comp;
    int remove_i = 0, remove_z = 0;
    bool remove_json = false;
    add_row_amount(remove_cmd, remove_comp, remove_i, remove_z);
    remove_cmd->add_flag("--json", remove_json, "machine-readable output");
    remove_cmd->callback([&] {
        const Composition a = removal(parse_composition(remove_comp), remove_i, remove_z);
        if (remove_json)
            out << detail::composition_json(a).dump() << "\n";
        else
            out << to_string(a) << "\n";
    });

    auto* insert_cmd = app.add_subcommand("insert", "the (i,z)-insertion");
    std::string insert_comp;
    int insert_i = 0, insert_z = 0;
    bool insert_json = false;
    add_row_amount(insert_cmd, insert_comp, insert_i, insert_z);
    insert_cmd->add_flag("--json", insert_json, "machine-readable output");
    insert_cmd->callback([&] {
        const Composition a = insertion(parse_composition(insert_comp), insert_i, insert_z);
        if (insert_json)
            out << detail::composition_json(a).dump() << "\n";
        else
            out << to_string(a) << "\n";
    });

    auto* word_cmd = app.add_subcommand("word", "row-reading reduced word");
    std::string word_comp;
    bool word_plain = false;
    bool word_json = false;
    word_cmd->add_option("composition", word_comp)->required();
    word_cmd->add_flag("--plain", word_plain, "space-separated letters without row grouping");
    word_cmd->add_flag("--json", word_json, "machine-readable output");
    word_cmd->callback([&] {
        const Composition a = parse_composition(word_comp);
        if (word_json) {
            const ReducedWord w = row_reading(a);
            out << nlohmann::json{{"n", w.degree()}, {"letters", w.letters()}}.dump() << "\n";
        } else if (word_plain) {
            out << to_string(row_reading(a)) << "\n";
        } else {
            out << row_grouped_string(a) << "\n";
        }
    });

    auto* schedule_cmd = app.add_subcommand("schedule", "move schedule of an (i,z)-removal");
    std::string schedule_comp;
    int schedule_i = 0, schedule_z = 0;
    bool schedule_json = false;
    add_row_amount(schedule_cmd, schedule_comp, schedule_i, schedule_z);
    schedule_cmd->add_flag("--json", schedule_json, "machine-readable output");
    schedule_cmd->callback([&] {
        const Composition a = parse_composition(schedule_comp);
        auto cover = staircase::detail::try_removal(a, schedule_i, schedule_z);
        if (!cover)
            throw not_removable("(" + std::to_string(schedule_i) + "," +
                                std::to_string(schedule_z) + ") does not remove from " +
                                to_string(a));
        const int index = cover_index(a, cover->second);
        const auto moves = move_schedule(a, cover->second);
        if (schedule_json) {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& move : moves)
                list.push_back(
                    {{"position", move.position},
                     {"kind", move.kind == MoveKind::braid ? "braid" : "commutation"}});
            out << nlohmann::json{{"cover_index", index}, {"moves", list}}.dump() << "\n";
            return;
        }
        out << "cover_index " << index << "\n";
        for (const auto& move : moves)
            out << (move.kind == MoveKind::braid ? "braid " : "commutation ") << move.position
                << "\n";
    });

    auto* diagram_cmd = app.add_subcommand("diagram", "box diagram rendering");
    std::string diagram_comp;
    std::string diagram_glyph = "□";
    int diagram_path = 0;
    std::vector<int> diagram_ladder;
    bool diagram_top_down = false;
    diagram_cmd->add_option("composition", diagram_comp)->required();
    diagram_cmd->add_option("--path", diagram_path, "overlay the path of this row");
    diagram_cmd->add_option("--ladder", diagram_ladder, "print the (i,z) ladder-move trace")
        ->expected(2);
    diagram_cmd->add_option("--glyph", diagram_glyph, "box glyph");
    diagram_cmd->add_flag("--top-down", diagram_top_down, "print row 1 first");
    diagram_cmd->callback([&] {
        const Composition a = parse_composition(diagram_comp);
        if (!diagram_ladder.empty()) {
            std::vector<BoxDiagram> trace;
            const auto result = ladder_removal(a, diagram_ladder[0], diagram_ladder[1], &trace);
            for (const auto& d : trace) out << render(d, diagram_glyph) << "\n";
            if (result)
                out << to_string(*result) << "\n";
            else
                out << "not removable\n";
            return;
        }
        if (diagram_path != 0) {
            out << render_with_path(a, diagram_path);
            return;
        }
        out << render(a, diagram_glyph, diagram_top_down);
    });

    auto* hasse_cmd = app.add_subcommand("hasse", "cover graph of one degree");
    int hasse_n = 0;
    bool hasse_dot = false;
    bool hasse_jsonl = false;
    bool hasse_force = false;
    hasse_cmd->add_option("-n,--n", hasse_n, "degree")->required();
    hasse_cmd->add_flag("--dot", hasse_dot, "emit DOT");
    hasse_cmd->add_flag("--jsonl", hasse_jsonl, "emit one JSON edge per line");
    hasse_cmd->add_flag("--force", hasse_force, "override the degree cap");
    hasse_cmd->callback([&] {
        const HasseDiagram diagram = hasse(hasse_n, hasse_force);
        if (hasse_dot)
            out << diagram.to_dot();
        else if (hasse_jsonl)
            out << diagram.to_jsonl();
        else
            out << "nodes=" << diagram.nodes().size() << " edges=" << diagram.edges().size()
                << "\n";
    });

    auto* monk_cmd = app.add_subcommand("monk", "Monk cover terms");
    std::string monk_comp;
    int monk_r = 0;
    bool monk_json = false;
    monk_cmd->add_option("--code", monk_comp, "composition, e.g. 2,5,4,1,0,2,1@8")->required();
    monk_cmd->add_option("--r", monk_r, "position r")->required();
    monk_cmd->add_flag("--json", monk_json, "one JSON term per line");
    monk_cmd->callback([&] {
        for (const auto& term : monk_terms(parse_composition(monk_comp), monk_r)) {
            if (monk_json)
                out << nlohmann::json{{"i", term.i},
                                      {"j", term.j},
                                      {"target", detail::composition_json(term.target)}}
                           .dump()
                    << "\n";
            else
                out << "i=" << term.i << " j=" << term.j << " target=" << to_string(term.target)
                    << "\n";
        }
    });

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive cross-checks at one degree");
    int verify_n = 0;
    bool verify_theorem_flag = false;
    bool verify_monk_flag = false;
    bool verify_geometric_flag = false;
    bool verify_json = false;
    bool verify_force = false;
    verify_cmd->add_option("-n,--n", verify_n, "degree")->required();
    verify_cmd->add_flag("--theorem", verify_theorem_flag, "covering equivalence");
    verify_cmd->add_flag("--monk", verify_monk_flag, "Monk term enumeration");
    verify_cmd->add_flag("--geometric", verify_geometric_flag, "diagram machinery");
    verify_cmd->add_flag("--json", verify_json, "one JSON report per line");
    verify_cmd->add_flag("--force", verify_force, "override the degree cap");
    verify_cmd->callback([&] {
        const bool all = !verify_theorem_flag && !verify_monk_flag && !verify_geometric_flag;
        std::vector<VerifyReport> reports;
        if (all || verify_theorem_flag) reports.push_back(verify_theorem(verify_n, verify_force));
        if (all || verify_monk_flag) reports.push_back(verify_monk(verify_n, verify_force));
        if (all || verify_geometric_flag)
            reports.push_back(verify_geometric(verify_n, verify_force));
        for (const auto& report : reports) {
            detail::print_report(report, verify_json, out);
            if (!report.ok()) exit_code = 1;
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const staircase::error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace staircase::cli
