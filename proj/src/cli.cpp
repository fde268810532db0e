#include "skein/cli.hpp"

#include "skein/braid.hpp"
#include "skein/checks.hpp"
#include "skein/hecke.hpp"
#include "skein/limits.hpp"
#include "skein/qdim.hpp"
#include "skein/young.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace skein {

namespace {

using nlohmann::json;

std::string factored_alpha(const YoungDiagram& d) {
    int content_sum = 0;
    std::vector<int> hooks;
    for (const Cell& c : d.cells()) {
        content_sum += d.content(c);
        if (d.hook_length(c) > 1) hooks.push_back(d.hook_length(c));
    }
    std::sort(hooks.rbegin(), hooks.rend());
    std::ostringstream os;
    if (content_sum != 0) {
        os << 's';
        if (content_sum != 1) os << '^' << content_sum;
        if (!hooks.empty()) os << " * ";
    }
    for (int h : hooks) os << '[' << h << ']';
    if (content_sum == 0 && hooks.empty()) os << '1';
    return os.str();
}

json partition_json(const YoungDiagram& d) {
    json out = json::array();
    for (int r : d.rows()) out.push_back(r);
    return out;
}

int cmd_qdim(const std::string& partition, int rank, const std::string& format,
             std::ostream& out) {
    const YoungDiagram d = YoungDiagram::parse(partition);
    const LaurentPoly q = quantum_dimension(d, rank);
    const Int dim = classical_dimension(d, rank);
    if (format == "json") {
        json j{{"partition", partition_json(d)},
               {"N", rank},
               {"qdim", q.to_string()},
               {"dim", dim.convert_to<long long>()}};
        out << j.dump() << '\n';
    } else {
        out << "qdim = " << q.to_string() << '\n';
        out << "dim = " << dim.str() << '\n';
    }
    return 0;
}

int cmd_alpha(const std::string& partition, const std::string& format, std::ostream& out) {
    const YoungDiagram d = YoungDiagram::parse(partition);
    const LaurentPoly a = hook_content_scalar(d);
    if (format == "json") {
        json j{{"partition", partition_json(d)},
               {"alpha", a.to_string()},
               {"factored", factored_alpha(d)}};
        out << j.dump() << '\n';
    } else {
        out << "alpha = " << a.to_string() << '\n';
        out << "factored = " << factored_alpha(d) << '\n';
    }
    return 0;
}

int cmd_homfly(int strands, const std::string& word, bool normalized,
               const std::string& format, std::ostream& out) {
    const BraidWord braid = BraidWord::parse(strands, word);
    const RatFunc framed = framed_homfly(braid);
    if (format == "json") {
        json j{{"strands", strands},
               {"word", braid.letters},
               {"writhe", braid.writhe()},
               {"X", framed.to_string()}};
        if (normalized) j["P"] = normalized_homfly(braid).to_string();
        out << j.dump() << '\n';
    } else {
        out << "X = " << framed.to_string() << '\n';
        if (normalized) out << "P = " << normalized_homfly(braid).to_string() << '\n';
    }
    return 0;
}

int cmd_table(int max_cells, int rank, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json rows = json::array();
        for (const YoungDiagram& d : partitions_up_to(max_cells)) {
            rows.push_back({{"partition", partition_json(d)},
                            {"alpha", hook_content_scalar(d).to_string()},
                            {"qdim", quantum_dimension(d, rank).to_string()},
                            {"dim", classical_dimension(d, rank).convert_to<long long>()}});
        }
        out << rows.dump() << '\n';
    } else {
        out << "partition,alpha,qdim,dim\n";
        for (const YoungDiagram& d : partitions_up_to(max_cells)) {
            out << '"' << d.to_string() << "\"," << hook_content_scalar(d).to_string() << ','
                << quantum_dimension(d, rank).to_string() << ','
                << classical_dimension(d, rank).str() << '\n';
        }
    }
    return 0;
}

int cmd_verify(int max_cells, std::vector<std::string> names, const Limits& limits,
               std::ostream& out, std::ostream& err) {
    if (names.empty()) names = checks::check_names();
    int passed = 0;
    for (const std::string& name : names) {
        checks::Result r;
        try {
            r = checks::run_named(name, max_cells, limits);
        } catch (const std::invalid_argument& e) {
            err << "verify: " << e.what() << '\n';
            return 1;
        }
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        if (r.passed) ++passed;
    }
    out << "verify: " << passed << '/' << names.size() << " checks passed\n";
    return passed == static_cast<int>(names.size()) ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hecke-algebra calculator for framed Homfly invariants,\n"
                 "Young idempotents and quantum dimensions"};
    app.require_subcommand(1);
    app.fallthrough();

    int unsafe_max = 0;
    app.add_option("--unsafe-max", unsafe_max,
                   "widen the factorial size guards up to this many strands/cells "
                   "(never narrows them)")
        ->envname("SKEIN_MAX_STRANDS");

    std::string partition;
    int rank = 1;
    std::string format = "text";

    auto* qdim_cmd = app.add_subcommand("qdim", "quantum and classical dimension of an irreducible");
    qdim_cmd->add_option("-p,--partition", partition, "partition, e.g. 4,2,1 (empty for the empty diagram)")
        ->required();
    qdim_cmd->add_option("-N,--rank", rank, "rank parameter N (>= 1)")->required();
    qdim_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* alpha_cmd = app.add_subcommand("alpha", "scalar square of the Young quasi-idempotent");
    alpha_cmd->add_option("-p,--partition", partition, "partition, e.g. 4,2,1")->required();
    alpha_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int strands = 1;
    std::string word;
    bool normalized = false;
    auto* homfly_cmd = app.add_subcommand("homfly", "framed Homfly polynomial of a braid closure");
    homfly_cmd->add_option("-n,--strands", strands, "strand count (>= 1)")->required();
    homfly_cmd->add_option("-w,--word", word,
                           "braid word as signed generator indices, e.g. \"1 -2 1\"");
    homfly_cmd->add_flag("--normalized", normalized,
                         "also print the writhe- and unknot-normalized value");
    homfly_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int max_cells = 0;
    std::string table_format = "csv";
    auto* table_cmd = app.add_subcommand("table", "tabulate alpha, qdim and dim per partition");
    table_cmd->add_option("--max-cells", max_cells, "largest partition size (<= 8)")->required();
    table_cmd->add_option("-N,--rank", rank, "rank parameter N (>= 1)")->required();
    table_cmd->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    int verify_cells = 5;
    std::vector<std::string> check_list;
    auto* verify_cmd = app.add_subcommand("verify", "run the exact identity verification suites");
    verify_cmd->add_option("--max-cells", verify_cells,
                           "size bound for the checked identities (<= 5 unless widened)");
    verify_cmd->add_option("--checks", check_list, "subset of suites to run")
        ->delimiter(',');

    std::vector<const char*> argv;
    argv.push_back("skein");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "skein: " << e.what() << '\n';
        return 1;
    }

    const Limits limits = Limits{}.widened(unsafe_max);

    try {
        if (app.got_subcommand(qdim_cmd)) return cmd_qdim(partition, rank, format, out);
        if (app.got_subcommand(alpha_cmd)) return cmd_alpha(partition, format, out);
        if (app.got_subcommand(homfly_cmd))
            return cmd_homfly(strands, word, normalized, format, out);
        if (app.got_subcommand(table_cmd)) {
            if (max_cells < 0 || max_cells > 8) {
                err << "skein: --max-cells must be between 0 and 8\n";
                return 1;
            }
            return cmd_table(max_cells, rank, table_format, out);
        }
        if (app.got_subcommand(verify_cmd)) {
            if (verify_cells > std::max(5, unsafe_max)) {
                err << "skein: verify --max-cells above 5 requires --unsafe-max\n";
                return 1;
            }
            return cmd_verify(verify_cells, check_list, limits, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "skein: " << e.what() << '\n';
        return 1;
    } catch (const std::length_error& e) {
        err << "skein: " << e.what() << " (see --unsafe-max)\n";
        return 1;
    } catch (const std::exception& e) {
        err << "skein: internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace skein
