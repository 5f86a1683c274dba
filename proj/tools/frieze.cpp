#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "frieze/invariants.hpp"
#include "frieze/json_io.hpp"
#include "frieze/linalg.hpp"
#include "frieze/parser.hpp"
#include "frieze/variety.hpp"
#include "reproduce.hpp"

using namespace frieze;

namespace {

// Exit codes: 0 success, 1 invalid input, 2 non-generic specialization,
// 3 bound exceeded / not found within bounds, 4 golden mismatch.
constexpr int kExitInvalid = 1;
constexpr int kExitNonGeneric = 2;
constexpr int kExitBound = 3;
constexpr int kExitGoldenMismatch = 4;

Quiver load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open quiver file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InvalidInput("bad quiver JSON in " + path + ": " + e.what());
    }
    LoadedQuiver loaded = quiver_from_json(doc);
    if (loaded.relabeled) {
        std::cerr << "note: quiver relabeled to an admissible order; new labels:";
        for (std::size_t i = 0; i < loaded.relabeling.size(); ++i)
            std::cerr << " " << (i + 1) << "->" << loaded.relabeling[i];
        std::cerr << "\n";
    }
    return loaded.quiver;
}

Point parse_start(const std::string& text, int n) {
    Point p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(rational_from_string(item));
    if (static_cast<int>(p.size()) != n)
        throw InvalidInput("start point has " + std::to_string(p.size()) +
                           " coordinates, the quiver has " + std::to_string(n) + " vertices");
    return p;
}

std::string point_text(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

void print_vanishing(const VanishingSpace& space, bool pretty) {
    if (!pretty) {
        std::cout << to_json(space).dump() << "\n";
        return;
    }
    std::cout << "degree bound " << space.degree_bound << ", kernel dimension "
              << space.basis.size() << ", " << space.points_used << " points, "
              << (space.stabilized ? "stabilized" : "NOT stabilized") << "\n";
    for (const auto& g : space.generators) std::cout << "  " << g.to_text() << "\n";
}

void print_components(const ComponentDecomposition& comps, bool pretty) {
    if (!pretty) {
        std::cout << to_json(comps).dump() << "\n";
        return;
    }
    std::cout << "m = " << comps.m << (comps.verified_cycle ? " (verified cycle)" : "") << "\n";
    for (const auto& cls : comps.classes) {
        std::cout << "class " << cls.residue << " (dim estimate " << cls.dim.value
                  << ", an upper bound at " << point_text(cls.base_point) << "):\n";
        for (const auto& g : cls.space.generators) std::cout << "  " << g.to_text() << "\n";
    }
}

void print_certificate(const InvariantCertificate& cert, bool pretty) {
    if (!pretty) {
        std::cout << to_json(cert).dump() << "\n";
        return;
    }
    std::cout << "period " << cert.period << "\nconstants:";
    for (const auto& c : cert.orbit_constants) std::cout << " " << to_string(c);
    std::cout << "\n";
    for (std::size_t j = 0; j < cert.equations.size(); ++j)
        for (std::size_t t = 0; t < cert.equations[j].size(); ++t)
            std::cout << "F[" << j << "][" << t << "] = " << cert.equations[j][t].to_text()
                      << "\n";
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ZeroStartCoordinate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const NonGenericSpecialization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const PoleAtPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const NotInvariant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const DegenerateInvariant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact frieze varieties of acyclic quivers: Coxeter orbits, vanishing "
                 "ideals, component decompositions and invariant Laurent polynomials"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool pretty = false;
    std::size_t bit_budget = kDefaultBitBudget;
    if (const char* env = std::getenv("FRIEZE_BUDGET_BITS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) bit_budget = static_cast<std::size_t>(v);
    }
    std::size_t term_budget = kDefaultTermBudget;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.add_option("--bit-budget", bit_budget,
                   "bit-length budget per orbit coordinate (env FRIEZE_BUDGET_BITS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--term-budget", term_budget, "term budget for symbolic cluster work")
        ->check(CLI::PositiveNumber);

    std::string quiver_path, start_text = "", h_text;
    long steps = 10;
    int degree = kDefaultDegreeCap;
    long offset = 0, stride = 1, m_max = 6;
    int k_max = 8;
    std::string case_name;
    int atilden_n = 3;
    int reproduce_degree = 2;

    auto* cmd_orbit = app.add_subcommand("orbit", "dump the Coxeter-mutation orbit");
    cmd_orbit->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    cmd_orbit->add_option("--start", start_text, "start point, e.g. 1,1 or 5/2,3")->required();
    cmd_orbit->add_option("--steps", steps, "number of Coxeter steps")->required();

    auto* cmd_vanish = app.add_subcommand("vanish", "stabilized vanishing space of the orbit");
    cmd_vanish->add_option("--quiver", quiver_path)->required();
    cmd_vanish->add_option("--start", start_text)->required();
    cmd_vanish->add_option("--degree", degree, "degree bound (default 3)");
    cmd_vanish->add_option("--offset", offset, "first orbit index to sample");
    cmd_vanish->add_option("--stride", stride, "sample every stride-th point");

    auto* cmd_components = app.add_subcommand("components", "residue-class decomposition");
    cmd_components->add_option("--quiver", quiver_path)->required();
    cmd_components->add_option("--start", start_text)->required();
    cmd_components->add_option("--degree", degree, "degree bound (default 3)");
    cmd_components->add_option("--m-max", m_max, "largest residue count tried");

    auto* cmd_invariant = app.add_subcommand("invariant", "invariant certificate for h");
    cmd_invariant->set_help_flag("--help", "print help");  // frees -h / --h
    cmd_invariant->add_option("--quiver", quiver_path)->required();
    cmd_invariant->add_option("--h", h_text, "rational function in x1..xn")->required();
    cmd_invariant->add_option("--start", start_text)->required();
    cmd_invariant->add_option("--k-max", k_max, "largest period tried");

    auto* cmd_classify = app.add_subcommand("classify", "representation type of the quiver");
    cmd_classify->add_option("--quiver", quiver_path)->required();

    auto* cmd_quiver = app.add_subcommand("quiver", "validate and normalize a quiver file");
    cmd_quiver->add_option("--quiver", quiver_path)->required();

    auto* cmd_reproduce =
        app.add_subcommand("reproduce", "regenerate a worked example and compare");
    cmd_reproduce->add_option("case", case_name, "a2, kronecker, a3double, atilde2, atilden, qa5")
        ->required();
    cmd_reproduce->add_option("--n", atilden_n, "ring size for atilden (3..6)");
    cmd_reproduce->add_option("--degree", reproduce_degree, "degree bound for the suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    return guarded([&]() -> int {
        if (cmd_orbit->parsed()) {
            Quiver q = load_quiver_file(quiver_path);
            Point start = parse_start(start_text, q.n());
            OrbitRecord record = iterate(q, start, steps, bit_budget);
            for (const Point& p : record.points)
                std::cout << (pretty ? point_text(p) : to_json(p).dump()) << "\n";
            if (record.failure) {
                std::cerr << "error: coordinate " << record.failure->vertex
                          << " became zero at step " << record.failure->step
                          << "; the start is not a generic specialization\n";
                return kExitNonGeneric;
            }
            return 0;
        }
        if (cmd_vanish->parsed()) {
            Quiver q = load_quiver_file(quiver_path);
            Point start = parse_start(start_text, q.n());
            VanishingSpace space =
                stabilized_vanishing_space(q, start, degree, offset, stride,
                                           {bit_budget, term_budget});
            print_vanishing(space, pretty);
            return 0;
        }
        if (cmd_components->parsed()) {
            Quiver q = load_quiver_file(quiver_path);
            Point start = parse_start(start_text, q.n());
            ComponentDecomposition comps =
                detect_components(q, start, degree, m_max, {bit_budget, term_budget});
            print_components(comps, pretty);
            return 0;
        }
        if (cmd_invariant->parsed()) {
            Quiver q = load_quiver_file(quiver_path);
            Point start = parse_start(start_text, q.n());
            RationalFunction h = parse_rational_function(h_text, q.n());
            InvariantCertificate cert =
                component_equations(q, h, start, k_max, {term_budget, bit_budget});
            print_certificate(cert, pretty);
            return 0;
        }
        if (cmd_classify->parsed()) {
            QuiverClass cls = classify(load_quiver_file(quiver_path));
            if (pretty) {
                std::cout << to_string(cls.kind);
                if (cls.diagram) std::cout << " (" << *cls.diagram << ")";
                std::cout << "\n";
            } else {
                std::cout << to_json(cls).dump() << "\n";
            }
            return 0;
        }
        if (cmd_quiver->parsed()) {
            Quiver q = load_quiver_file(quiver_path);
            json doc = to_json(q);
            doc["class"] = to_json(classify(q));
            std::cout << doc.dump(pretty ? 2 : -1) << "\n";
            return 0;
        }
        if (cmd_reproduce->parsed()) {
            frieze_cli::ReproduceOptions options;
            options.n = atilden_n;
            options.degree = reproduce_degree;
            options.pretty = pretty;
            options.term_budget = term_budget;
            options.bit_budget = bit_budget;
            bool ok = frieze_cli::run_reproduce_case(case_name, options);
            return ok ? 0 : kExitGoldenMismatch;
        }
        return kExitInvalid;
    });
}
