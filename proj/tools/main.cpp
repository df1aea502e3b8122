#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockinv/census.hpp"
#include "blockinv/chroma.hpp"
#include "blockinv/design.hpp"
#include "blockinv/eval.hpp"
#include "blockinv/gen.hpp"
#include "blockinv/presets.hpp"
#include "blockinv/symmetry.hpp"

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw blockinv::ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Presets win over files of the same name; the collision is only warned.
std::vector<blockinv::BlockDesign> load_designs(const std::string& input) {
    if (auto preset = blockinv::find_design_preset(input)) {
        if (std::filesystem::exists(input))
            std::cerr << "warning: '" << input
                      << "' names both a preset and a file; using the preset\n";
        return {*preset};
    }
    if (!std::filesystem::exists(input))
        throw blockinv::ParseError("no preset or file named '" + input + "'");
    std::vector<blockinv::BlockDesign> designs;
    std::istringstream lines(read_file(input));
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        designs.push_back(blockinv::parse_block_list(line));
    }
    if (designs.empty())
        throw blockinv::ParseError("no designs in file '" + input + "'");
    return designs;
}

blockinv::FormSet load_forms(const std::string& forms_file,
                             const std::string& preset) {
    if (!preset.empty()) {
        auto fs = blockinv::find_form_preset(preset);
        if (!fs) throw blockinv::ParseError("unknown form preset '" + preset + "'");
        return *fs;
    }
    return blockinv::parse_form_set(read_file(forms_file));
}

std::string coloring_line(const std::vector<int>& assignment) {
    std::ostringstream out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i) out << ',';
        out << assignment[i];
    }
    return out.str();
}

int run_validate(const std::vector<blockinv::BlockDesign>& designs, bool as_json) {
    for (const auto& d : designs) {
        auto report = blockinv::validate(d);
        if (as_json) {
            json record{{"points", d.num_points()},
                        {"blocks", d.num_blocks()},
                        {"block_size", d.block_size()},
                        {"biregular", report.is_biregular},
                        {"degree", d.point_degree()},
                        {"repeated_vertices", report.has_repeated_vertices},
                        {"repeated_blocks", report.has_repeated_blocks}};
            std::cout << record.dump() << "\n";
        } else {
            std::cout << "points=" << d.num_points() << " blocks=" << d.num_blocks()
                      << " block-size=" << d.block_size()
                      << " biregular=" << (report.is_biregular ? "yes" : "no")
                      << " degree=" << d.point_degree()
                      << " repeated-vertices="
                      << (report.has_repeated_vertices ? "yes" : "no")
                      << " repeated-blocks="
                      << (report.has_repeated_blocks ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

int run_eval(const std::vector<blockinv::BlockDesign>& designs,
             const blockinv::FormSet& forms, int parts,
             const std::string& divisor, bool as_json) {
    blockinv::ExactInt div = 1;
    if (!divisor.empty()) {
        div = blockinv::exact_from_string(divisor);
        if (div == 0) throw blockinv::ValidationError("divisor must be nonzero");
    }
    auto divide = [&div](const blockinv::ExactInt& v) {
        if (v % div != 0)
            throw blockinv::ValidationError("value " + blockinv::to_string(v) +
                                            " is not divisible by " +
                                            blockinv::to_string(div));
        return blockinv::ExactInt(v / div);
    };
    if (designs.size() == 1) {
        blockinv::ExactInt value =
            parts > 1 ? blockinv::parallel_evaluate(designs[0], forms, parts)
                      : blockinv::evaluate(designs[0], forms);
        value = divide(value);
        if (as_json)
            std::cout << json{{"value", blockinv::to_string(value)}}.dump()
                      << "\n";
        else
            std::cout << value << "\n";
        return 0;
    }
    auto batch = blockinv::evaluate_batch(designs, forms);
    for (auto& v : batch.raw) v = divide(v);
    for (std::size_t i = 0; i < batch.raw.size(); ++i) {
        if (as_json)
            std::cout << json{{"index", i},
                              {"raw", blockinv::to_string(batch.raw[i])},
                              {"normalized",
                               blockinv::to_string(batch.normalized[i])}}
                             .dump()
                      << "\n";
        else
            std::cout << "raw=" << batch.raw[i]
                      << " normalized=" << batch.normalized[i] << "\n";
    }
    blockinv::ExactInt g = blockinv::exact_gcd(batch.raw);
    if (as_json)
        std::cout << json{{"gcd", blockinv::to_string(g)}}.dump() << "\n";
    else
        std::cout << "gcd=" << g << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "block designs encoding SL-invariants: chromatic filters and exact "
        "evaluation at sums of powers of linear forms"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "one JSON record per result line");

    std::string input;
    auto* cmd_validate = app.add_subcommand(
        "validate", "structural report for a design (preset name or file)");
    cmd_validate->add_option("input", input)->required();

    auto* cmd_chi =
        app.add_subcommand("chi", "chromatic number of the collinearity graph");
    cmd_chi->add_option("input", input)->required();

    int colors = 0;
    bool count_only = false;
    auto* cmd_colorings =
        app.add_subcommand("colorings", "list or count proper colorings");
    cmd_colorings->add_option("input", input)->required();
    cmd_colorings->add_option("--colors", colors, "number of colors")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_colorings->add_flag("--count-only", count_only,
                            "print only the number of proper colorings");

    std::string forms_file, forms_preset, divisor;
    int parts = 1;
    auto* cmd_eval = app.add_subcommand(
        "eval", "evaluate the encoded invariant at a sum of powers of forms");
    cmd_eval->add_option("input", input)->required();
    auto* opt_forms = cmd_eval->add_option("--forms", forms_file,
                                           "form set file, one vector per line");
    auto* opt_preset =
        cmd_eval->add_option("--preset", forms_preset, "named form set");
    opt_forms->excludes(opt_preset);
    cmd_eval->add_option("--parts", parts, "partitioned evaluation")
        ->check(CLI::PositiveNumber);
    cmd_eval->add_option("--divisor", divisor,
                         "divide results exactly by this integer");

    bool on_collinearity = false;
    auto* cmd_aut = app.add_subcommand("aut", "automorphism group order");
    cmd_aut->add_option("input", input)->required();
    cmd_aut->add_flag("--collinearity", on_collinearity,
                      "order of the collinearity graph group instead");

    auto* cmd_census = app.add_subcommand("census", "closed-form counts");
    cmd_census->require_subcommand(1);
    int rows = 0, cols = 0, row_sum = 0, col_sum = 0;
    auto* census_isobaric =
        cmd_census->add_subcommand("isobaric", "weight arrays up to column permutation");
    census_isobaric->add_option("--rows", rows)->required();
    census_isobaric->add_option("--cols", cols)->required();
    census_isobaric->add_option("--row-sum", row_sum)->required();
    census_isobaric->add_option("--col-sum", col_sum)->required();
    long vars = 0, degree = 0, cover_m = 0;
    auto* census_total =
        cmd_census->add_subcommand("total", "monomial count C(vars+degree-1, degree)");
    census_total->add_option("--vars", vars)->required();
    census_total->add_option("--degree", degree)->required();
    auto* census_cover =
        cmd_census->add_subcommand("cover-bound", "pair-covering lower bound B(m)");
    census_cover->add_option("--m", cover_m)->required();
    blockinv::AHTriple triple;
    auto* census_ah =
        cmd_census->add_subcommand("ah", "secant variety codimension (k,d,n)");
    census_ah->add_option("--k", triple.k)->required();
    census_ah->add_option("--d", triple.d)->required();
    census_ah->add_option("--n", triple.n)->required();

    blockinv::GenParams params;
    int pipeline_target = 0;
    bool unbounded = false;
    auto* cmd_generate = app.add_subcommand(
        "generate", "isomorph-free generation of biregular designs");
    cmd_generate->add_option("--points", params.num_points)->required();
    cmd_generate->add_option("--blocks", params.num_blocks)->required();
    cmd_generate->add_option("--block-size", params.block_size)->required();
    cmd_generate->add_option("--degree", params.point_degree)->required();
    cmd_generate->add_option("--pipeline", pipeline_target,
                             "also run the filter pipeline with this target");
    cmd_generate->add_flag("--unbounded", unbounded,
                           "allow search spaces above the 10^7 guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_validate))
            return run_validate(load_designs(input), as_json);

        if (app.got_subcommand(cmd_chi)) {
            for (const auto& d : load_designs(input)) {
                int chi = blockinv::chromatic_number(blockinv::collinearity(d));
                if (as_json)
                    std::cout << json{{"chi", chi}}.dump() << "\n";
                else
                    std::cout << chi << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_colorings)) {
            auto designs = load_designs(input);
            for (std::size_t i = 0; i < designs.size(); ++i) {
                auto graph = blockinv::collinearity(designs[i]);
                if (count_only) {
                    auto count = blockinv::count_proper_colorings(graph, colors);
                    if (as_json)
                        std::cout << json{{"count", count}}.dump() << "\n";
                    else
                        std::cout << count << "\n";
                } else {
                    if (designs.size() > 1 && !as_json)
                        std::cout << "# design " << i << "\n";
                    blockinv::for_each_proper_coloring(
                        graph, colors, [&](const std::vector<int>& c) {
                            if (as_json)
                                std::cout << json{{"coloring", c}}.dump() << "\n";
                            else
                                std::cout << coloring_line(c) << "\n";
                            return true;
                        });
                }
            }
            return 0;
        }

        if (app.got_subcommand(cmd_eval)) {
            if (forms_file.empty() && forms_preset.empty()) {
                std::cerr << "eval requires --forms FILE or --preset NAME\n";
                return 1;
            }
            return run_eval(load_designs(input),
                            load_forms(forms_file, forms_preset), parts,
                            divisor, as_json);
        }

        if (app.got_subcommand(cmd_aut)) {
            for (const auto& d : load_designs(input)) {
                std::uint64_t order =
                    on_collinearity
                        ? blockinv::graph_aut_order(blockinv::collinearity(d))
                        : blockinv::design_aut_order(d);
                if (as_json)
                    std::cout << json{{"order", order}}.dump() << "\n";
                else
                    std::cout << order << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_census)) {
            blockinv::ExactInt value;
            if (cmd_census->got_subcommand(census_isobaric))
                value = blockinv::count_weight_arrays(rows, cols, row_sum, col_sum);
            else if (cmd_census->got_subcommand(census_total))
                value = blockinv::count_total_monomials(vars, degree);
            else if (cmd_census->got_subcommand(census_cover))
                value = blockinv::covering_bound(cover_m);
            else
                value = blockinv::ah_codimension(triple);
            if (as_json)
                std::cout << json{{"value", blockinv::to_string(value)}}.dump()
                          << "\n";
            else
                std::cout << value << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_generate)) {
            bool run_pipeline = cmd_generate->count("--pipeline") > 0;
            blockinv::generate(
                params,
                [&](const blockinv::BlockDesign& d) {
                    if (run_pipeline) {
                        auto verdict =
                            blockinv::pipeline_filter(d, pipeline_target);
                        std::string tag = verdict.tag();
                        if (verdict.kind ==
                            blockinv::PipelineVerdict::Kind::RejectedChi)
                            tag += ":" + std::to_string(verdict.chi);
                        if (as_json) {
                            json record{{"verdict", verdict.tag()},
                                        {"design", d.to_block_list()}};
                            if (verdict.chi >= 0) record["chi"] = verdict.chi;
                            std::cout << record.dump() << "\n";
                        } else {
                            std::cout << tag << "\t" << d.to_block_list() << "\n";
                        }
                    } else {
                        if (as_json)
                            std::cout
                                << json{{"design", d.to_block_list()}}.dump()
                                << "\n";
                        else
                            std::cout << d.to_block_list() << "\n";
                    }
                },
                unbounded,
                [](std::uint64_t visited) {
                    std::cerr << "progress: " << visited
                              << " partial designs visited\n";
                });
            return 0;
        }
    } catch (const blockinv::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const blockinv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const blockinv::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
