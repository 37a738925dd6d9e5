#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "multidb/counting.hpp"
#include "multidb/ebwt.hpp"
#include "multidb/enumerate.hpp"
#include "multidb/graphcycles.hpp"
#include "multidb/randomgen.hpp"
#include "multidb/textio.hpp"

using json = nlohmann::json;
using namespace multidb;

namespace {

long long default_space_bits() {
    if (const char* env = std::getenv("MULTIDB_MAX_SPACE_BITS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("bad MULTIDB_MAX_SPACE_BITS value");
    }
    return 32;
}

Seq parse_initial_kmer(const std::string& text, const Params& p) {
    Seq y = parse_seq(text);
    if (static_cast<long long>(y.size()) != p.k)
        throw std::invalid_argument("--y must have length k");
    for (int a : y)
        if (a < 0 || a >= p.q) throw std::invalid_argument("--y symbol out of range");
    return y;
}

struct Output {
    bool json_mode = false;
    std::vector<std::string> lines;

    void line(const std::string& s) {
        if (json_mode)
            lines.push_back(s);
        else
            std::cout << s << '\n';
    }

    void finish(const char* key) {
        if (!json_mode) return;
        if (lines.size() == 1 && std::string(key) != "sequences" && std::string(key) != "samples")
            std::cout << json{{key, lines.front()}}.dump() << '\n';
        else
            std::cout << json{{key, lines}}.dump() << '\n';
    }
};

int run_count(const std::string& type, const Params& p, long long d, bool have_d, Output& out) {
    Count c;
    if (type == "linear")
        c = count_linear(p);
    else if (type == "linearized")
        c = count_linearized(p);
    else if (type == "linearized-start")
        c = count_linearized_starting(p);
    else if (type == "cyclic")
        c = count_cyclic(p);
    else if (type == "multicyclic")
        c = count_multicyclic(p);
    else if (type == "spanning-trees")
        c = count_spanning_trees(p);
    else if (type == "eulerian-fixed-edge")
        c = count_eulerian_fixed_edge(p);
    else if (type == "cyclic-order") {
        if (!have_d) throw std::invalid_argument("--d is required with --type cyclic-order");
        c = count_cyclic_order(p, d);
    } else
        throw std::invalid_argument("unknown count type: " + type);
    out.line(to_decimal(c));
    out.finish("count");
    return 0;
}

int run_enumerate(const std::string& type, const Params& p, const std::string& y_text,
                  const SearchBudget& budget, Output& out) {
    if (type == "cyclic") {
        enumerate_cyclic(p, budget, [&](const CyclicSeq& c) {
            out.line(to_string(c));
            return true;
        });
    } else if (type == "linearized-start") {
        Seq y = y_text.empty() ? Seq(static_cast<size_t>(p.k), 0) : parse_initial_kmer(y_text, p);
        enumerate_linearized_starting(p, y, budget, [&](const Seq& s) {
            out.line(to_string(s));
            return true;
        });
    } else if (type == "linear") {
        enumerate_linear(p, budget, [&](const Seq& s) {
            out.line(to_string(s));
            return true;
        });
    } else if (type == "multicyclic") {
        enumerate_multicyclic(p, budget, [&](const MultiCyclicSeq& mc) {
            out.line(to_string(mc));
            return true;
        });
    } else
        throw std::invalid_argument("unknown enumerate type: " + type);
    out.finish("sequences");
    return 0;
}

int run_random(const std::string& type, const Params& p, const std::string& y_text,
               std::optional<std::uint64_t> seed, long long n, Output& out) {
    if (!seed) {
        seed = std::random_device{}();
        std::cerr << "seed: " << *seed << '\n';
    }
    RngState rng(*seed);
    for (long long i = 0; i < n; ++i) {
        if (type == "linear")
            out.line(to_string(random_linear(p, rng)));
        else if (type == "linearized") {
            Seq y =
                y_text.empty() ? Seq(static_cast<size_t>(p.k), 0) : parse_initial_kmer(y_text, p);
            out.line(to_string(random_linearized(p, y, rng)));
        } else if (type == "cyclic")
            out.line(to_string(random_cyclic(p, rng)));
        else if (type == "multicyclic")
            out.line(to_string(random_multicyclic(p, rng)));
        else
            throw std::invalid_argument("unknown random type: " + type);
    }
    out.finish("samples");
    return 0;
}

int run_graph_count(const std::string& path, Output& out) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open graph fixture: " + path);
        text << in.rdbuf();
    }
    out.line(to_decimal(count_aperiodic_multisets(parse_graph(text.str()))));
    out.finish("count");
    return 0;
}

int run_verify(const Params& p, const SearchBudget& budget, Output& out) {
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        out.line(std::string(ok ? "PASS" : "FAIL") + ": " + name);
        all_ok = all_ok && ok;
    };

    long long n_cyclic = 0;
    bool members_ok = true;
    std::map<long long, long long> order_hist;
    enumerate_cyclic(p, budget, [&](const CyclicSeq& c) {
        ++n_cyclic;
        members_ok = members_ok && is_member_cyclic(c, p);
        ++order_hist[rotation_order(c.rep)];
        return true;
    });
    check("cyclic enumeration count = closed form", Count(n_cyclic) == count_cyclic(p));
    check("every enumerated cycle is a member", members_ok);

    bool hist_ok = true;
    for (long long d : divisors(p.m)) {
        Count expect = count_cyclic_order(p, d);
        long long got = order_hist.count(d) ? order_hist[d] : 0;
        hist_ok = hist_ok && (Count(got) == expect);
    }
    check("rotation-order histogram matches closed forms", hist_ok);

    long long n_start = 0;
    enumerate_linearized_starting(p, Seq(static_cast<size_t>(p.k), 0), budget,
                                  [&](const Seq&) { ++n_start; return true; });
    check("linearized-start count = closed form", Count(n_start) == count_linearized_starting(p));

    long long n_linear = 0;
    enumerate_linear(p, budget, [&](const Seq&) { ++n_linear; return true; });
    check("linear count = closed form", Count(n_linear) == count_linear(p));

    long long n_mc = 0;
    bool mc_ok = true;
    enumerate_multicyclic(p, budget, [&](const MultiCyclicSeq& mc) {
        ++n_mc;
        mc_ok = mc_ok && is_member_multicyclic(mc, p);
        return true;
    });
    check("multicyclic count = closed form", Count(n_mc) == count_multicyclic(p));
    check("every multicyclic image is a member", mc_ok);

    out.finish("report");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi de Bruijn sequence toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    long long m = 1, q = 2, k = 1, d = 1, limit = -1, n_samples = 1;
    long long space_bits = -1;
    std::string type, y_text, arg_text, graph_path;
    std::uint64_t seed_value = 0;

    auto add_params = [&](CLI::App* sub, bool required) {
        auto* om = sub->add_option("-m", m, "multiplicity");
        auto* oq = sub->add_option("-q", q, "alphabet size");
        auto* ok = sub->add_option("-k", k, "word size");
        if (required) { om->required(); oq->required(); ok->required(); }
    };

    auto* c_count = app.add_subcommand("count", "closed-form counts");
    c_count->add_option("--type", type)->required();
    add_params(c_count, true);
    auto* opt_d = c_count->add_option("--d", d, "rotation order");

    auto* c_enum = app.add_subcommand("enumerate", "exhaustive enumeration");
    c_enum->add_option("--type", type)->required();
    add_params(c_enum, true);
    c_enum->add_option("--y", y_text, "initial k-mer");
    c_enum->add_option("--limit", limit, "stop after N results");
    c_enum->add_option("--max-space-bits", space_bits, "search budget");

    auto* c_rand = app.add_subcommand("random", "uniform sampling");
    c_rand->add_option("--type", type)->required();
    add_params(c_rand, true);
    c_rand->add_option("--y", y_text, "initial k-mer");
    auto* opt_seed = c_rand->add_option("--seed", seed_value, "RNG seed");
    c_rand->add_option("--count", n_samples, "number of samples");

    auto* c_ebwt = app.add_subcommand("ebwt", "extended BWT of a cycle multiset");
    c_ebwt->add_option("sigma", arg_text)->required();
    auto* c_iebwt = app.add_subcommand("iebwt", "inverse extended BWT");
    c_iebwt->add_option("w", arg_text)->required();
    auto* c_bwt = app.add_subcommand("bwt", "BWT of a word");
    c_bwt->add_option("s", arg_text)->required();
    auto* c_ibwt = app.add_subcommand("ibwt", "inverse BWT; NONE when absent");
    c_ibwt->add_option("w", arg_text)->required();

    auto* c_graph = app.add_subcommand("graph-count", "aperiodic cycle multisets of a fixture");
    c_graph->add_option("fixture", graph_path, "path or - for stdin")->required();

    auto* c_verify = app.add_subcommand("verify", "cross-check formulas against enumeration");
    add_params(c_verify, true);
    c_verify->add_option("--max-space-bits", space_bits, "search budget");

    // Let --format appear after the subcommand as well.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.json_mode = (format == "json");

    try {
        SearchBudget budget;
        budget.max_space_bits = space_bits > 0 ? space_bits : default_space_bits();
        if (limit >= 0) budget.limit = limit;

        if (*c_count) return run_count(type, Params(m, q, k), d, opt_d->count() > 0, out);
        if (*c_enum) return run_enumerate(type, Params(m, q, k), y_text, budget, out);
        if (*c_rand) {
            std::optional<std::uint64_t> seed;
            if (opt_seed->count() > 0) seed = seed_value;
            return run_random(type, Params(m, q, k), y_text, seed, n_samples, out);
        }
        if (*c_ebwt) {
            out.line(to_string(ebwt(parse_multicyclic(arg_text))));
            out.finish("result");
            return 0;
        }
        if (*c_iebwt) {
            out.line(to_string(inverse_ebwt(parse_seq(arg_text))));
            out.finish("result");
            return 0;
        }
        if (*c_bwt) {
            out.line(to_string(bwt(parse_seq(arg_text))));
            out.finish("result");
            return 0;
        }
        if (*c_ibwt) {
            auto t = inverse_bwt(parse_seq(arg_text));
            out.line(t ? to_string(*t) : "NONE");
            out.finish("result");
            return 0;
        }
        if (*c_graph) return run_graph_count(graph_path, out);
        if (*c_verify) return run_verify(Params(m, q, k), budget, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
