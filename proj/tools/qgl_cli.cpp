#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgl/daha.hpp"
#include "qgl/errors.hpp"
#include "qgl/macdonald.hpp"
#include "qgl/suites.hpp"

using namespace qgl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("not an integer: " + item);
        }
        if (used != item.size()) throw InvalidInput("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto v = parse_ints(text);
    if (v.size() != 2) throw InvalidInput("expected lo,hi: " + text);
    return {v[0], v[1]};
}

struct Qmode {
    bool numeric = false;
    std::uint64_t seed = 1;
};

Qmode parse_qmode(const std::string& text) {
    if (text == "symbolic") return {};
    const std::string prefix = "numeric:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            return {true, std::stoull(text.substr(prefix.size()))};
        } catch (const std::exception&) {
        }
    }
    throw InvalidInput("--qmode must be symbolic or numeric:<seed>");
}

struct Options {
    std::string module = "fock";
    int n = -1;
    int mode_window = -1;
    int max_weight = -1;
    std::string entry_window;
    int series_order = -1;
    std::string qmode = "symbolic";
    int k = 1;
    int r = 2;
    std::string c;
    std::string out;
    bool all = false;
    unsigned workers = 0;
    std::string shape;
    bool print = false;
    std::string kind;
    int i = 0;
    std::string modes = "-1,1";
    int entries = 6;
};

void add_window_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--mode-window", o.mode_window, "Mode window W");
    cmd->add_option("--max-weight", o.max_weight, "Weight bound for partition bases");
    cmd->add_option("--entry-window", o.entry_window, "Entry range lo,hi for vector, tensor and W^N bases");
    cmd->add_option("--series-order", o.series_order, "psi series order K (>= W + 3)");
    cmd->add_option("--qmode", o.qmode, "symbolic or numeric:<seed>");
    cmd->add_option("--out", o.out, "Report JSON path");
    cmd->add_option("--workers", o.workers, "Worker threads (0: hardware)");
}

void add_tail_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--k", o.k, "Resonance k");
    cmd->add_option("--r", o.r, "Resonance r");
    cmd->add_option("--c", o.c, "Tail offsets c_1,...,c_{k-1}");
}

VerifyOptions verify_options(const Options& o, const std::string& module) {
    VerifyOptions v;
    v.module = module;
    v.n = o.n;
    v.mode_window = o.mode_window;
    v.max_weight = o.max_weight;
    if (!o.entry_window.empty()) v.entry_window = parse_range(o.entry_window);
    v.series_order = o.series_order;
    Qmode q = parse_qmode(o.qmode);
    v.numeric = q.numeric;
    v.seed = q.seed;
    v.tail = TailSpec{o.k, o.r, parse_ints(o.c)};
    v.workers = o.workers;
    v.resolve();
    return v;
}

/// Collapses several reports into one, prefixing case ids with their suite.
Report combine(const std::string& name, const std::vector<Report>& parts) {
    Report all;
    all.suite = name;
    all.params = {{"suites", nlohmann::json::array()}};
    for (const auto& p : parts) {
        all.params["suites"].push_back({{"suite", p.suite}, {"params", p.params}});
        for (auto c : p.cases) {
            c.id = "[" + p.suite + "] " + c.id;
            all.cases.push_back(std::move(c));
        }
        all.seconds += p.seconds;
    }
    return all;
}

int finish(const std::vector<Report>& reports, const std::string& name, const std::string& out_path) {
    Report rep = reports.size() == 1 ? reports.front() : combine(name, reports);
    std::ostringstream text;
    for (const auto& r : reports) text << r.summary_line() << "\n";
    int shown = 0;
    for (const auto& c : rep.cases) {
        if (c.status == CaseStatus::pass) continue;
        if (shown++ == 20) {
            text << "  ...\n";
            break;
        }
        text << "  " << (c.status == CaseStatus::fail ? "FAIL " : "ERROR ") << c.id << ": " << c.detail << "\n";
    }
    text << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.cases.size() << " cases)\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitConfig;
        }
        f << rep.to_json().dump(2) << "\n";
    }
    std::cout << text.str();
    return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification suites and objects for quantum continuous gl(infinity) modules"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Run the relation suite of one module family");
    verify->add_option("--module", o.module, "vector | tensor | wn | fock | resonance");
    verify->add_option("--N", o.n, "Tensor factors or W^N size");
    verify->add_flag("--all", o.all, "Run every acceptance suite");
    add_window_flags(verify, o);
    add_tail_flags(verify, o);

    auto* fock = app.add_subcommand("fock", "Fock module suite");
    add_window_flags(fock, o);

    auto* wn = app.add_subcommand("wn", "W^N suite");
    wn->add_option("--N", o.n, "N");
    add_window_flags(wn, o);

    auto* res = app.add_subcommand("resonance", "Resonance module suite");
    add_window_flags(res, o);
    add_tail_flags(res, o);

    auto* mac = app.add_subcommand("macdonald", "Macdonald oracle: print P or run the identification");
    mac->add_option("--N", o.n, "Number of variables");
    mac->add_option("--shape", o.shape, "Shape, e.g. 2,0");
    mac->add_flag("--print", o.print, "Print P_shape in the monomial basis");
    mac->add_option("--max-weight", o.max_weight, "Weight bound for the identification");
    mac->add_option("--out", o.out, "Report JSON path");

    auto* daha = app.add_subcommand("daha", "Identification, mode recursion and cocycle checks");
    daha->add_option("--N", o.n, "Largest N");
    daha->add_option("--max-weight", o.max_weight, "Weight bound");
    daha->add_option("--out", o.out, "Report JSON path");

    auto* print = app.add_subcommand("print", "Print a canonical object: gamma | fock-row | tail");
    print->add_option("kind", o.kind, "Object kind")->required();
    print->add_option("--i", o.i, "gamma index");
    print->add_option("--shape", o.shape, "fock-row shape");
    print->add_option("--modes", o.modes, "fock-row mode range lo,hi");
    print->add_option("--entries", o.entries, "tail entries");
    add_tail_flags(print, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (verify->parsed() && o.all) {
            Qmode q = parse_qmode(o.qmode);
            std::vector<Report> reports;
            for (int c = 1; c <= 10; ++c)
                for (auto& r : acceptance_reports(c, q.numeric, q.seed)) reports.push_back(std::move(r));
            return finish(reports, "acceptance", o.out);
        }
        if (verify->parsed()) return finish({verify_module(verify_options(o, o.module))}, o.module, o.out);
        if (fock->parsed()) return finish({verify_module(verify_options(o, "fock"))}, "fock", o.out);
        if (wn->parsed()) return finish({verify_module(verify_options(o, "wn"))}, "wn", o.out);
        if (res->parsed()) return finish({verify_module(verify_options(o, "resonance"))}, "resonance", o.out);
        if (mac->parsed()) {
            int n = o.n < 0 ? 3 : o.n;
            if (o.print || !o.shape.empty()) {
                if (o.shape.empty()) throw InvalidInput("--print needs --shape");
                std::cout << macdonald_P_laurent(parse_ints(o.shape), n).to_string() << "\n";
                return kExitPass;
            }
            int w = o.max_weight < 0 ? 5 : o.max_weight;
            std::vector<Report> reports;
            for (int m = 1; m <= n; ++m) reports.push_back(check_identification(m, w));
            return finish(reports, "macdonald", o.out);
        }
        if (daha->parsed())
            return finish({verify_daha(o.n < 0 ? 3 : o.n, o.max_weight < 0 ? 5 : o.max_weight)}, "daha", o.out);
        if (print->parsed()) {
            PrintParams p;
            p.i = o.i;
            p.shape = parse_ints(o.shape);
            p.modes = parse_range(o.modes);
            p.tail = TailSpec{o.k, o.r, parse_ints(o.c)};
            p.entries = o.entries;
            std::string s = print_object(o.kind, p);
            std::cout << s << (s.empty() || s.back() != '\n' ? "\n" : "");
            return kExitPass;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitConfig;
    } catch (const UnsupportedResonance& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}
