// Command-line front end: parses rings and ideals, dispatches the library
// computations, and renders text, structured (JSON), or CAS-style output.
//
// Exit codes: 0 success (and all checks passed), 1 a check or suite reported
// a fail verdict, 2 usage or input-grammar errors, 3 domain precondition
// violations, 4 internal consistency failures.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratpow/decompose.hpp"
#include "ratpow/errors.hpp"
#include "ratpow/ideal.hpp"
#include "ratpow/numeric.hpp"
#include "ratpow/parse.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/powers.hpp"
#include "ratpow/serialize.hpp"
#include "ratpow/theorem_lab.hpp"

namespace {

using namespace ratpow;

enum class Format { text, structured, cas };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "structured") return Format::structured;
    if (name == "cas") return Format::cas;
    throw ParseError("unknown output format '" + name + "'", 1, 1);
}

// Shared option values; each subcommand binds the subset it needs.
struct Options {
    std::string ring_spec;
    std::string ring_a_spec;
    std::string ring_b_spec;
    std::string ideal_text;
    std::string second_ideal_text;
    std::string aux_ideal_text;
    std::string u_text;
    std::string method_name = "localization-contraction";
    std::string format_name = "text";
    std::string valuation_text;
    std::string characteristic_text = "0";
    long long box_margin = 0;
    std::size_t diagnostic = 0;
    bool primary = false;
    bool verify = false;
    long long max_denominator = 8;
    std::string u_max_text = "3";
    std::size_t k_max = 0;
    std::size_t samples = 0;
    bool standard = false;
    std::size_t instances = 200;
    std::uint64_t seed = 20260819;
};

Integer parse_characteristic(const std::string& text) {
    std::vector<Integer> values = parse_integer_list(text);
    if (values.size() != 1 || values[0] < 0)
        throw ParseError("characteristic must be a single nonnegative integer", 1, 1);
    return values[0];
}

Ring make_ring(const Options& opt) {
    return parse_ring(opt.ring_spec, parse_characteristic(opt.characteristic_text));
}

MonomialIdeal make_ideal(const Options& opt) {
    return parse_ideal(opt.ideal_text, make_ring(opt));
}

Rational make_u(const Options& opt) { return parse_rational(opt.u_text); }

void print_ideal(const MonomialIdeal& I, Format format) {
    switch (format) {
        case Format::text: std::cout << ideal_to_text(I) << "\n"; break;
        case Format::structured: std::cout << ideal_to_json(I) << "\n"; break;
        case Format::cas: std::cout << ideal_to_cas(I) << "\n"; break;
    }
}

void print_power(const RationalPowerResult& result, Format format) {
    if (format == Format::structured)
        std::cout << power_result_to_json(result) << "\n";
    else
        print_ideal(result.ideal, format);
}

void print_polyhedron(const HalfSpacePolyhedron& P, Format format) {
    switch (format) {
        case Format::text: std::cout << polyhedron_to_text(P); break;
        case Format::structured: std::cout << polyhedron_to_json(P) << "\n"; break;
        case Format::cas:
            throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
    }
}

int print_reports(const std::vector<CheckReport>& reports, Format format) {
    if (format == Format::cas)
        throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
    bool all_pass = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (format == Format::structured) {
            std::cout << report_to_json(reports[i]) << "\n";
        } else {
            if (i > 0) std::cout << "\n";
            std::cout << report_to_text(reports[i]);
        }
        all_pass = all_pass && reports[i].pass;
    }
    return all_pass ? 0 : 1;
}

PowerMethod make_method(const std::string& name) {
    if (auto method = method_from_name(name)) return *method;
    throw ParseError("unknown method '" + name + "'", 1, 1);
}

// RATPOW_THREADS is accepted for compatibility with parallel builds of the
// library; this build is sequential, so any positive value behaves like 1.
void validate_threads_env() {
    const char* value = std::getenv("RATPOW_THREADS");
    if (value == nullptr) return;
    std::string text(value);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
        text == "0")
        throw ParseError("RATPOW_THREADS must be a positive integer, got '" + text + "'", 1, 1);
}

int dispatch(CLI::App& app, const Options& opt) {
    Format format = parse_format(opt.format_name);
    Integer margin(opt.box_margin);

    if (app.got_subcommand("closure")) {
        print_ideal(integral_closure(make_ideal(opt), margin), format);
    } else if (app.got_subcommand("rpower")) {
        print_power(rational_power(make_ideal(opt), make_u(opt), margin), format);
    } else if (app.got_subcommand("rsympower")) {
        print_power(rational_symbolic_power(make_ideal(opt), make_u(opt),
                                            make_method(opt.method_name), margin),
                    format);
    } else if (app.got_subcommand("diffpower")) {
        print_ideal(differential_power_monomial(make_ideal(opt), make_u(opt), margin), format);
    } else if (app.got_subcommand("satpower")) {
        Ring ring = make_ring(opt);
        MonomialIdeal I = parse_ideal(opt.ideal_text, ring);
        MonomialIdeal K = parse_ideal(opt.aux_ideal_text, ring);
        print_ideal(saturated_power(I, make_u(opt), K), format);
    } else if (app.got_subcommand("np")) {
        print_polyhedron(newton_polyhedron(make_ideal(opt)), format);
    } else if (app.got_subcommand("sp")) {
        print_polyhedron(symbolic_polyhedron(make_ideal(opt)), format);
    } else if (app.got_subcommand("waldschmidt")) {
        MonomialIdeal I = make_ideal(opt);
        std::vector<Integer> coefficients;
        if (opt.valuation_text.empty())
            coefficients.assign(I.ring().size(), Integer(1));
        else
            coefficients = parse_integer_list(opt.valuation_text);
        SkewValuation v(std::move(coefficients));
        Rational w = waldschmidt(I, v);
        std::vector<Rational> estimates;
        if (opt.diagnostic > 0) estimates = waldschmidt_diagnostic(I, v, opt.diagnostic);
        if (format == Format::structured) {
            std::cout << "{\"waldschmidt\":\"" << rat_to_string(w) << "\"";
            if (!estimates.empty()) {
                std::cout << ",\"estimates\":[";
                for (std::size_t k = 0; k < estimates.size(); ++k) {
                    if (k > 0) std::cout << ",";
                    std::cout << "\"" << rat_to_string(estimates[k]) << "\"";
                }
                std::cout << "]";
            }
            std::cout << "}\n";
        } else if (format == Format::text) {
            for (std::size_t k = 0; k < estimates.size(); ++k)
                std::cout << (k + 1) << ": " << rat_to_string(estimates[k]) << "\n";
            std::cout << rat_to_string(w) << "\n";
        } else {
            throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
        }
    } else if (app.got_subcommand("ass")) {
        std::vector<MonomialPrime> primes = associated_primes(make_ideal(opt));
        if (format == Format::structured) {
            std::cout << primes_to_json(primes) << "\n";
        } else if (format == Format::text) {
            for (const auto& p : primes) std::cout << prime_to_text(p) << "\n";
        } else {
            throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
        }
    } else if (app.got_subcommand("decompose")) {
        MonomialIdeal I = make_ideal(opt);
        if (opt.primary) {
            PrimaryDecomposition pd = primary_components_min(I);
            if (format == Format::structured) {
                std::cout << primary_decomposition_to_json(pd) << "\n";
            } else if (format == Format::text) {
                for (const auto& [prime, component] : pd.components)
                    std::cout << prime_to_text(prime) << ": " << ideal_to_text(component) << "\n";
            } else {
                throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
            }
        } else {
            std::vector<IrreducibleComponent> components = irreducible_decomposition(I);
            if (format == Format::structured) {
                std::cout << "[";
                for (std::size_t i = 0; i < components.size(); ++i) {
                    if (i > 0) std::cout << ",";
                    std::cout << ideal_to_json(components[i].to_ideal());
                }
                std::cout << "]\n";
            } else if (format == Format::text) {
                for (const auto& component : components)
                    std::cout << ideal_to_text(component.to_ideal()) << "\n";
            } else {
                throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
            }
        }
    } else if (app.got_subcommand("stability-e")) {
        MonomialIdeal I = make_ideal(opt);
        Integer e = opt.verify
            ? stability_denominator_verified(I, Integer(opt.max_denominator),
                                             parse_rational(opt.u_max_text))
            : stability_denominator(I).e;
        if (format == Format::structured)
            std::cout << "{\"e\":\"" << int_to_string(e) << "\"}\n";
        else if (format == Format::text)
            std::cout << int_to_string(e) << "\n";
        else
            throw ParseError("cas format is only available for ideal-valued commands", 1, 1);
    } else if (app.got_subcommand("suite")) {
        if (!opt.standard)
            throw ParseError("only the standard suite exists; pass --standard", 1, 1);
        SuiteOptions suite_options;
        suite_options.instances_per_theorem = opt.instances;
        suite_options.seed = opt.seed;
        std::vector<CheckReport> reports = run_standard_suite(suite_options);
        int code = print_reports(reports, format);
        std::size_t passed = 0;
        for (const auto& r : reports) passed += r.pass ? 1 : 0;
        if (format == Format::text)
            std::cout << "\npassed " << passed << " of " << reports.size() << " checks\n";
        return code;
    }
    return 0;
}

int dispatch_check(const std::string& theorem, const Options& opt) {
    Format format = parse_format(opt.format_name);
    std::vector<CheckReport> reports;

    if (theorem == "containment") {
        reports.push_back(check_containment(make_ideal(opt), make_u(opt)));
    } else if (theorem == "symbolic-primary-decomposition") {
        reports.push_back(check_symbolic_primary_decomposition(make_ideal(opt), make_u(opt)));
    } else if (theorem == "binomial" || theorem == "binomial-rational" ||
               theorem == "binomial-symbolic") {
        MonomialIdeal I = parse_ideal(opt.ideal_text, parse_ring(opt.ring_a_spec));
        MonomialIdeal J = parse_ideal(opt.second_ideal_text, parse_ring(opt.ring_b_spec));
        Rational u = make_u(opt);
        if (theorem != "binomial-symbolic") reports.push_back(check_binomial_rational(I, J, u));
        if (theorem != "binomial-rational") reports.push_back(check_binomial_symbolic(I, J, u));
    } else if (theorem == "ass-star-stabilization") {
        reports.push_back(check_ass_star_stabilization(make_ideal(opt), opt.k_max));
    } else if (theorem == "splitting-stability") {
        reports.push_back(check_splitting_stability(make_ideal(opt), opt.samples));
    } else {
        throw ParseError("unknown theorem '" + theorem + "'", 1, 1);
    }
    return print_reports(reports, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational and symbolic powers of monomial ideals"};
    app.require_subcommand(1);

    Options opt;
    std::string theorem;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format,-f", opt.format_name, "Output format: text, structured, cas")
            ->capture_default_str();
    };
    auto add_ring_ideal = [&](CLI::App* sub) {
        sub->add_option("--ring", opt.ring_spec, "Comma-separated variable names, e.g. x,y,z")
            ->required();
        sub->add_option("-I,--ideal", opt.ideal_text, "Generators, e.g. \"x*y, y*z\"")
            ->required();
        sub->add_option("--char", opt.characteristic_text, "Ring characteristic")
            ->capture_default_str();
        sub->add_option("--box-margin", opt.box_margin,
                        "Extra widening of the scan box (debugging only)")
            ->capture_default_str();
        add_format(sub);
    };
    auto add_u = [&](CLI::App* sub) {
        sub->add_option("-u", opt.u_text, "Rational exponent, e.g. 5/2")->required();
    };

    add_ring_ideal(app.add_subcommand("closure", "Integral closure of a monomial ideal"));

    auto* rpower = app.add_subcommand("rpower", "Rational power via the Newton polyhedron");
    add_ring_ideal(rpower);
    add_u(rpower);

    auto* rsympower = app.add_subcommand("rsympower", "Rational symbolic power");
    add_ring_ideal(rsympower);
    add_u(rsympower);
    rsympower
        ->add_option("--method", opt.method_name,
                     "localization-contraction, root-characterization, sp-scaling, or "
                     "prime-intersection")
        ->capture_default_str();

    auto* diffpower = app.add_subcommand("diffpower", "Differential power (monomial part)");
    add_ring_ideal(diffpower);
    add_u(diffpower);

    auto* satpower = app.add_subcommand("satpower", "Rational power saturated by an ideal");
    add_ring_ideal(satpower);
    add_u(satpower);
    satpower->add_option("-K", opt.aux_ideal_text, "Auxiliary ideal to saturate by")->required();

    add_ring_ideal(app.add_subcommand("np", "Newton polyhedron half-spaces"));
    add_ring_ideal(app.add_subcommand("sp", "Symbolic polyhedron half-spaces"));

    auto* wald = app.add_subcommand("waldschmidt", "Skew Waldschmidt constant");
    add_ring_ideal(wald);
    wald->add_option("-v", opt.valuation_text,
                     "Valuation coefficients, e.g. 1,1,1 (default: all ones)");
    wald->add_option("--diagnostic", opt.diagnostic,
                     "Also print the estimates v(I^{(k)})/k for k = 1..N");

    add_ring_ideal(app.add_subcommand("ass", "Associated primes"));

    auto* decompose = app.add_subcommand("decompose", "Irreducible or primary decomposition");
    add_ring_ideal(decompose);
    decompose->add_flag("--primary", opt.primary,
                        "Primary components over the minimal primes (requires Ass = Min)");

    auto* stability = app.add_subcommand("stability-e", "Stability denominator of the filtration");
    add_ring_ideal(stability);
    stability->add_flag("--verify", opt.verify, "Cross-check by a jump scan before printing");
    stability->add_option("--max-den", opt.max_denominator, "Jump-scan denominator bound")
        ->capture_default_str();
    stability->add_option("--u-max", opt.u_max_text, "Jump-scan exponent bound")
        ->capture_default_str();

    auto* check = app.add_subcommand("check", "Verify one identity on one instance");
    check->add_option("theorem", theorem,
                      "containment, symbolic-primary-decomposition, binomial, "
                      "binomial-rational, binomial-symbolic, ass-star-stabilization, or "
                      "splitting-stability")
        ->required();
    check->add_option("--ring", opt.ring_spec, "Ring for single-ideal checks");
    check->add_option("--ring-a", opt.ring_a_spec, "Left ring for binomial checks");
    check->add_option("--ring-b", opt.ring_b_spec, "Right ring for binomial checks");
    check->add_option("-I,--ideal", opt.ideal_text, "Ideal (left ideal for binomial checks)");
    check->add_option("-J", opt.second_ideal_text, "Right ideal for binomial checks");
    check->add_option("-u", opt.u_text, "Rational exponent");
    check->add_option("--k-max", opt.k_max, "Stabilization window (default 3e)");
    check->add_option("--samples", opt.samples, "Splitting samples (default: full grid)");
    add_format(check);

    auto* suite = app.add_subcommand("suite", "Run the randomized verification suite");
    suite->add_flag("--standard", opt.standard, "The standard suite (required)");
    suite->add_option("--instances", opt.instances, "Instances per theorem")
        ->capture_default_str();
    suite->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    add_format(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits cleanly; usage errors exit 2
    }

    try {
        validate_threads_env();
        if (app.got_subcommand("check")) return dispatch_check(theorem, opt);
        return dispatch(app, opt);
    } catch (const ratpow::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ratpow::InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 4;
    } catch (const ratpow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
