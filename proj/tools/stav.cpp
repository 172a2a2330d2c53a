// stav: exact spacetime-algebra verifier.
//
//   stav verify <suite>      run a verification suite, emit a report
//   stav generate <kind>     emit an exact solution as a field document
//   stav transcribe <dir>    rewrite fields between the even-multivector
//                            and ideal-valued forms
//
// Exit codes: 0 all checks pass / operation succeeded, 1 a verification
// check failed, 2 usage, parameter or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sta/doc_io.hpp"
#include "sta/generators.hpp"
#include "sta/matrix_rep.hpp"
#include "sta/suites.hpp"
#include "sta/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw sta::error("cannot write '" + out_path + "'");
    out << text;
}

std::vector<sta::Rational> parse_rational_list(const std::string& text, std::size_t n) {
    std::vector<sta::Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(sta::rational_from_string(item));
    if (values.size() != n)
        throw sta::parse_error("expected " + std::to_string(n) +
                               " comma-separated rationals, got '" + text + "'");
    return values;
}

int cmd_verify(const std::string& suite, const sta::SuiteOptions& options,
               const std::string& out_path) {
    if (!sta::is_known_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'; known:";
        for (const auto& s : sta::suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return kExitUsage;
    }
    auto report = sta::run_suite(suite, options);
    write_output(report.dump(), out_path);
    if (!out_path.empty())
        std::cout << "suite " << suite << ": " << report.passed() << " pass, "
                  << report.failed() << " fail\n";
    return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_generate(const std::string& kind, const std::string& mass_text,
                 const std::string& k_text, std::uint64_t seed, const std::string& out_path) {
    sta::FieldDocument doc;
    doc.params["kind"] = kind;
    sta::Rng rng(seed);
    if (kind == "rest-solution") {
        sta::Rational m = sta::rational_from_string(mass_text.empty() ? "1" : mass_text);
        if (m <= 0) throw sta::parse_error("mass must be a positive rational");
        doc.real_fields["psi"] = sta::rest_solution(m).field();
        doc.params["mass"] = sta::rational_to_string(m);
    } else if (kind == "null-plane-wave") {
        auto k_values = parse_rational_list(k_text.empty() ? "1,0,0,1" : k_text, 4);
        sta::WaveVector k(k_values[0], k_values[1], k_values[2], k_values[3]);
        sta::Multivector<sta::Rational> x_odd;
        if (seed == 0) {
            x_odd = sta::Multivector<sta::Rational>::generator(1);
        } else {
            x_odd = grade(sta::random_multivector(rng), 1) +
                    grade(sta::random_multivector(rng), 3);
            if (x_odd.is_zero()) x_odd = sta::Multivector<sta::Rational>::generator(1);
        }
        doc.real_fields["psi"] = sta::null_plane_wave(k, x_odd).field();
        doc.params["k"] = k_text.empty() ? "1,0,0,1" : k_text;
    } else if (kind == "superpotential") {
        auto sp = sta::random_superpotential(rng);
        auto sys = sta::gme_from_superpotential(sp);
        doc.real_fields["A"] = sp.A;
        doc.real_fields["B"] = sp.B;
        doc.real_fields["F"] = sys.F;
        doc.real_fields["Je"] = sys.Je;
        doc.real_fields["Jm"] = sys.Jm;
        doc.params["seed"] = std::to_string(seed);
    } else if (kind == "hertz-rest") {
        sta::Rational m = sta::rational_from_string(mass_text.empty() ? "1" : mass_text);
        if (m <= 0) throw sta::parse_error("mass must be a positive rational");
        auto h = sta::hertz_rest(m);
        doc.real_fields["Pi"] = h.Pi;
        doc.real_fields["G"] = sta::MultivectorField<sta::Rational>::scalar(h.G);
        doc.real_fields["P"] = sta::MultivectorField<sta::Rational>::scalar(h.P);
        doc.params["mass"] = sta::rational_to_string(m);
    } else if (kind == "random-field") {
        doc.real_fields["f"] = sta::random_field(rng);
        doc.params["seed"] = std::to_string(seed);
    } else {
        std::cerr << "unknown kind '" << kind
                  << "'; known: rest-solution null-plane-wave superpotential hertz-rest "
                     "random-field\n";
        return kExitUsage;
    }
    write_output(doc.dump(), out_path);
    return kExitPass;
}

int cmd_transcribe(const std::string& direction, const std::string& in_path,
                   const std::string& idempotent, const std::string& out_path) {
    if (idempotent != "standard")
        throw sta::parse_error("only the standard idempotent is supported");
    auto input = sta::load_document(in_path);
    if (input.is_complex())
        throw sta::parse_error("transcription input must be over the rational ring");

    if (direction == "bosonize") {
        auto it = input.real_fields.find("psi");
        if (it == input.real_fields.end())
            throw sta::parse_error("bosonize input needs a field named 'psi'");
        if (!is_even(it->second))
            throw sta::grade_error("bosonize input 'psi' must be an even field");
        sta::DHRepresentative psi(it->second);
        auto bos = sta::bosonize(psi);
        sta::GMESystem sys(bos.F, bos.Je, bos.Jm);
        auto residual = sta::gme_residual(sys);
        sta::FieldDocument out;
        out.real_fields["F"] = bos.F;
        out.real_fields["Je"] = bos.Je;
        out.real_fields["Jm"] = bos.Jm;
        out.real_fields["residual"] = residual;
        out.params["direction"] = "bosonize";
        out.params["residual_zero"] = residual.is_zero() ? "true" : "false";
        write_output(out.dump(), out_path);
        return kExitPass;
    }
    if (direction == "fermionize") {
        auto it = input.real_fields.find("F");
        if (it == input.real_fields.end())
            throw sta::parse_error("fermionize input needs a field named 'F'");
        auto zero = sta::MultivectorField<sta::Rational>::zero();
        auto je_it = input.real_fields.find("Je");
        auto jm_it = input.real_fields.find("Jm");
        sta::GMESystem sys(it->second, je_it == input.real_fields.end() ? zero : je_it->second,
                           jm_it == input.real_fields.end() ? zero : jm_it->second);
        auto f = sta::standard_idempotent();
        auto Psi = sta::project_ideal(sys.F, f);
        auto je_ideal = sta::project_ideal(sys.Je, f);
        auto jm_ideal = sta::project_ideal(sys.Jm, f);
        auto g5c = sta::MultivectorField<sta::Complex>::constant(
            complexify(sta::gamma5<sta::Rational>()));
        auto residual = dirac(Psi.value()) - je_ideal.value() - g5c * jm_ideal.value();
        sta::FieldDocument out = sta::FieldDocument::complex_document();
        out.complex_fields["Psi"] = Psi.value();
        out.complex_fields["Je_ideal"] = je_ideal.value();
        out.complex_fields["Jm_ideal"] = jm_ideal.value();
        out.complex_fields["residual"] = residual;
        out.params["direction"] = "fermionize";
        out.params["residual_zero"] = residual.is_zero() ? "true" : "false";
        write_output(out.dump(), out_path);
        return kExitPass;
    }
    std::cerr << "unknown direction '" << direction << "'; known: bosonize fermionize\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for the spacetime algebra Cl(1,3)"};
    app.set_version_flag("--version", std::string(sta::kEngineVersion));
    app.require_subcommand(1);

    // verify
    std::string suite;
    sta::SuiteOptions options;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name (or 'all')")->required();
    verify->add_option("--seed", options.seed, "corpus seed");
    verify->add_option("--count", options.count, "corpus size override");
    verify->add_option("--out", verify_out, "write the report to a file");
    verify->add_flag("--flip-magnetic-sign", options.flip_magnetic_sign,
                     "self-test hook: flip the calibrated magnetic-current sign; "
                     "the bosonization checks must then fail");

    // generate
    std::string kind, mass_text, k_text, generate_out;
    std::uint64_t generate_seed = 0;
    auto* generate = app.add_subcommand("generate", "emit an exact solution document");
    generate->add_option("kind", kind,
                         "rest-solution | null-plane-wave | superpotential | hertz-rest | "
                         "random-field")
        ->required();
    generate->add_option("--mass", mass_text, "mass as p/q");
    generate->add_option("--k", k_text, "wave vector as four comma-separated rationals");
    generate->add_option("--seed", generate_seed, "randomization seed");
    generate->add_option("--out", generate_out, "write the document to a file");

    // transcribe
    std::string direction, in_path, transcribe_out;
    std::string idempotent = "standard";
    auto* transcribe = app.add_subcommand("transcribe",
                                          "rewrite fields between even-multivector and "
                                          "ideal-valued form");
    transcribe->add_option("direction", direction, "bosonize | fermionize")->required();
    transcribe->add_option("--in", in_path, "input field document")->required();
    transcribe->add_option("--idempotent", idempotent, "idempotent choice (standard)");
    transcribe->add_option("--out", transcribe_out, "write the result to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, options, verify_out);
        if (generate->parsed())
            return cmd_generate(kind, mass_text, k_text, generate_seed, generate_out);
        if (transcribe->parsed())
            return cmd_transcribe(direction, in_path, idempotent, transcribe_out);
    } catch (const sta::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sta::grade_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sta::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
