// donut: command-line front end for the donut library.
//
// Exit codes: 0 success / verified, 1 domain-negative result (not a donut,
// counterexample found), 2 usage error, 130 interrupted sweep.

#include <CLI11.hpp>
#include <unistd.h>

#include <atomic>
#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "donut/census.hpp"
#include "donut/core.hpp"
#include "donut/format.hpp"
#include "donut/kernels.hpp"
#include "donut/pythagoras.hpp"
#include "donut/squares.hpp"

namespace {

using donut::u64;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInterrupted = 130;

std::atomic<bool> g_interrupted{false};

const CLI::Range kPositive(std::int64_t{1}, std::numeric_limits<std::int64_t>::max(), "POSITIVE");

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_threads() {
    if (const char* env = std::getenv("DONUT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid DONUT_THREADS=" << env << '\n';
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

donut::OutputFormat to_format(const std::string& name) {
    auto fmt = donut::parse_format(name);
    if (!fmt) throw UsageError("unknown format: " + name);
    return *fmt;
}

void add_format(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format,-f", target, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
}

void add_quad(CLI::App* cmd, std::int64_t (&q)[4]) {
    const char* names[] = {"a", "b", "x", "y"};
    const char* help[] = {"Exterior long side", "Exterior short side", "Hole side parallel to a",
                          "Hole side parallel to b"};
    for (int i = 0; i < 4; ++i) {
        cmd->add_option(names[i], q[i], help[i])->required()->check(kPositive);
    }
}

donut::Quad to_quad(const std::int64_t (&q)[4]) {
    return {static_cast<u64>(q[0]), static_cast<u64>(q[1]), static_cast<u64>(q[2]),
            static_cast<u64>(q[3])};
}

std::set<donut::DonutKind> parse_kinds(const std::vector<std::string>& names) {
    std::set<donut::DonutKind> out;
    for (const auto& name : names) {
        bool found = false;
        for (auto k : {donut::DonutKind::NotADonut, donut::DonutKind::PlainDonut,
                       donut::DonutKind::Primitive, donut::DonutKind::QuasiPrimitive}) {
            if (donut::kind_name(k) == name) {
                out.insert(k);
                found = true;
            }
        }
        if (!found) throw UsageError("unknown class: " + name);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rectangular donuts: construction, classification and exhaustive verification"};
    app.require_subcommand(1);

    std::string format = "plain";
    std::int64_t quad[4] = {0, 0, 0, 0};
    std::int64_t number = 0;
    std::int64_t range = 0;
    std::int64_t limit = 0;
    std::int64_t scale = 20;
    unsigned threads = default_threads();
    std::string theorem;
    std::string out_path;
    std::vector<std::string> only;
    bool multiplicity = false;
    bool quiet = false;

    auto* check = app.add_subcommand("check", "Validate a quadruple (a,b,x,y)");
    add_quad(check, quad);
    add_format(check, format);

    auto* enumerate = app.add_subcommand("enumerate", "List every configuration of D");
    enumerate->add_option("D", number, "Donut number")->required()->check(kPositive);
    add_format(enumerate, format);

    auto* classify = app.add_subcommand("classify", "Classify D, or every D up to --range N");
    auto* classify_d = classify->add_option("D", number, "Donut number")->check(kPositive);
    auto* classify_range =
        classify->add_option("--range", range, "Classify 1..N")->check(kPositive);
    classify_d->excludes(classify_range);
    classify->add_option("--only", only,
                         "With --range, keep only these classes "
                         "(not_a_donut, plain, primitive, quasi_primitive)")
        ->delimiter(',');
    add_format(classify, format);

    auto* twistable = app.add_subcommand("twistable", "Decide whether the hole can be rotated");
    add_quad(twistable, quad);
    add_format(twistable, format);

    auto* square = app.add_subcommand("square", "Every square donut (n,n,a,b)");
    square->add_option("n", number, "Exterior side")->required()->check(kPositive);
    add_format(square, format);

    auto* square_hole = app.add_subcommand("square-hole", "Every square-holed donut (a,b,n,n)");
    square_hole->add_option("n", number, "Hole side")->required()->check(kPositive);
    add_format(square_hole, format);

    auto* sequence = app.add_subcommand("sequence", "Primitive Pythagorean perimeters up to a limit");
    sequence->add_option("--limit", limit, "Largest term")->required()->check(kPositive);
    sequence->add_flag("--multiplicity", multiplicity, "Also print how many triples share each term");
    add_format(sequence, format);

    auto* verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    verify->add_option("--theorem", theorem, "Which claim to sweep")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "no-square-square-hole"}));
    verify->add_option("--limit", limit, "Sweep bound")->required()->check(kPositive);
    verify->add_option("--threads", threads, "Worker threads (default: DONUT_THREADS or all cores)")
        ->check(kPositive);
    verify->add_flag("--quiet,-q", quiet, "No progress on stderr");
    add_format(verify, format);

    auto* render = app.add_subcommand("render", "Draw a donut as SVG 1.1");
    add_quad(render, quad);
    render->add_option("--out,-o", out_path, "Output file (default: stdout)");
    render->add_option("--scale,-s", scale, "Pixels per unit")->check(kPositive)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        const auto fmt = to_format(format);

        if (*check) {
            const auto q = to_quad(quad);
            const auto report = donut::validate(q);
            std::cout << donut::format_validation(q, report, fmt);
            return report.valid ? kOk : kNegative;
        }

        if (*enumerate) {
            const u64 D = static_cast<u64>(number);
            std::cout << donut::format_configurations(D, donut::configurations(D), donut::classify(D), fmt);
            return kOk;
        }

        if (*classify) {
            if (range == 0 && number == 0) throw UsageError("classify needs D or --range N");
            if (range == 0) {
                const u64 D = static_cast<u64>(number);
                std::cout << donut::format_classification(D, donut::classify(D), fmt, true);
                return kOk;
            }
            const auto kinds = parse_kinds(only);
            bool header = true;
            for (u64 D = 1; D <= static_cast<u64>(range); ++D) {
                const auto cls = donut::classify(D);
                if (!kinds.empty() && !kinds.contains(cls.kind)) continue;
                std::cout << donut::format_classification(D, cls, fmt, header);
                header = false;
            }
            return kOk;
        }

        if (*twistable) {
            const auto q = to_quad(quad);
            const auto d = donut::DonutConfig::make(q);
            if (!d) {
                std::cerr << donut::format_validation(q, donut::validate(q), donut::OutputFormat::Plain);
                return kNegative;
            }
            const bool def = donut::is_twistable_definitional(*d);
            const bool fast = donut::is_twistable_fast(*d);
            if (fmt == donut::OutputFormat::Json) {
                std::cout << R"({"donut":[)" << q.a << ',' << q.b << ',' << q.x << ',' << q.y
                          << R"(],"twistable":)" << (def ? "true" : "false") << R"(,"closed_form":)"
                          << (fast ? "true" : "false") << "}\n";
            } else if (fmt == donut::OutputFormat::Csv) {
                std::cout << "a,b,x,y,twistable,closed_form\n"
                          << q.a << ',' << q.b << ',' << q.x << ',' << q.y << ',' << def << ',' << fast << '\n';
            } else {
                std::cout << q << (def ? " is twistable" : " is not twistable") << " (2x > a: "
                          << (2 * q.x > q.a ? "yes" : "no") << ", 2y > a: " << (2 * q.y > q.a ? "yes" : "no")
                          << ")\n";
            }
            return kOk;
        }

        if (*square) {
            const u64 n = static_cast<u64>(number);
            std::cout << donut::format_square_family("square", n, donut::square_donut_all(n), fmt);
            return kOk;
        }

        if (*square_hole) {
            const u64 n = static_cast<u64>(number);
            std::cout << donut::format_square_family("square-holed", n, donut::square_hole_all(n), fmt);
            return kOk;
        }

        if (*sequence) {
            const u64 lim = static_cast<u64>(limit);
            if (multiplicity) {
                std::vector<u64> terms, counts;
                for (const auto& [term, count] : donut::primitive_perimeter_multiplicity(lim)) {
                    terms.push_back(term);
                    counts.push_back(count);
                }
                std::cout << donut::format_sequence(lim, terms, &counts, fmt);
            } else {
                std::cout << donut::format_sequence(lim, donut::primitive_perimeters(lim), nullptr, fmt);
            }
            return kOk;
        }

        if (*verify) {
            std::signal(SIGINT, on_sigint);
            donut::SweepOptions options;
            options.threads = threads;
            options.cancel = &g_interrupted;
            if (!quiet && isatty(STDERR_FILENO)) {
                options.progress = [&](std::size_t done, std::size_t total) {
                    std::cerr << "\r[" << theorem << "] " << done << '/' << total << " chunks" << std::flush;
                    if (done == total) std::cerr << '\n';
                };
            }
            const u64 lim = static_cast<u64>(limit);
            donut::VerificationReport report;
            if (theorem == "1") {
                report = donut::verify_theorem1(lim, options);
            } else if (theorem == "2") {
                report = donut::verify_twistability(lim, options);
            } else if (theorem == "3") {
                report = donut::verify_theorem3(lim, options);
            } else if (theorem == "4") {
                report = donut::verify_theorem4(lim, options);
            } else {
                report = donut::verify_no_square_square_hole(lim, options);
            }
            std::cout << donut::format_report(report, fmt) << std::flush;
            if (!report.complete) return kInterrupted;
            return report.counterexamples.empty() ? kOk : kNegative;
        }

        if (*render) {
            const auto q = to_quad(quad);
            const auto d = donut::DonutConfig::make(q);
            if (!d) {
                std::cerr << donut::format_validation(q, donut::validate(q), donut::OutputFormat::Plain);
                return kNegative;
            }
            const auto svg = donut::render_svg(*d, static_cast<u64>(scale));
            if (out_path.empty()) {
                std::cout << svg;
                return kOk;
            }
            std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
            if (!file || !(file << svg) || !file.flush()) {
                std::cerr << "error: cannot write " << out_path << '\n';
                return kUsage;
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const donut::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const donut::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
