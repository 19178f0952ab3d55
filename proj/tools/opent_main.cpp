// opent: operator-entanglement toolkit command line.
//
// Exit codes:
//   0  success, all agreement flags true
//   2  usage / flag parse error
//   3  file not found
//   4  malformed input file
//   5  invalid input (non-square, non-unitary, bad dimensions)
//   6  numerical failure
//   7  an internal agreement or verification check failed

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opent/choi.hpp"
#include "opent/epower.hpp"
#include "opent/gates.hpp"
#include "opent/io.hpp"
#include "opent/protocol.hpp"
#include "opent/random.hpp"
#include "opent/schmidt.hpp"
#include "opent/tensor.hpp"
#include "opent/verify.hpp"

namespace {

using nlohmann::json;
using namespace opent;

enum ExitCode {
    kOk = 0,
    kUsage = 2,
    kFileNotFound = 3,
    kParseError = 4,
    kInvalidInput = 5,
    kNumericalFailure = 6,
    kAgreementFailure = 7,
};

struct GateFlags {
    std::string gate;
    std::string file;
    int dim = 2;
    bool dimSet = false;
    std::optional<double> theta;
};

void add_gate_flags(CLI::App* cmd, GateFlags& f) {
    cmd->add_option("--gate", f.gate, "named gate: identity, swap, cnot, cz, expzz, controlled-phase");
    cmd->add_option("--file", f.file, "matrix JSON file");
    cmd->add_option_function<int>(
        "--dim", [&f](int d) { f.dim = d; f.dimSet = true; }, "local dimension d");
    cmd->add_option_function<double>(
        "--theta", [&f](double t) { f.theta = t; }, "angle for parametric gates");
}

BipartiteOperator resolve_gate(const GateFlags& f) {
    if (!f.file.empty()) {
        Matrix m = load_matrix(f.file);
        if (m.rows() != m.cols())
            throw std::invalid_argument("matrix file: operator is not square");
        const long n = m.rows();
        long dA = f.dim;
        if (!f.dimSet) {
            const long s = std::lround(std::sqrt(static_cast<double>(n)));
            if (s * s != n)
                throw std::invalid_argument(
                    "matrix file: dimension is not a perfect square; pass --dim");
            dA = s;
        }
        if (dA < 1 || n % dA != 0)
            throw std::invalid_argument("matrix file: --dim does not divide the matrix dimension");
        return BipartiteOperator(std::move(m), static_cast<int>(dA),
                                 static_cast<int>(n / dA));
    }
    if (f.gate.empty())
        throw CLI::ValidationError("--gate or --file is required");
    return make_gate(f.gate, f.dim, f.theta);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("OPENT_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 42;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_entanglement(const GateFlags& f, double tol) {
    const BipartiteOperator u = resolve_gate(f);
    const auto rep = entanglement_report(u);
    const auto schmidt = operator_schmidt(u, 1e-12);

    json out{
        {"linearEntropy", rep.linearEntropy},
        {"vonNeumannEntropy", rep.vonNeumannEntropy},
        {"schmidtRank", rep.schmidtRank},
        {"coefficients", schmidt.coefficients},
    };

    double maxDev = 0.0;
    if (u.dimA == u.dimB) {
        const double viaSwap = entanglement_via_swap(u);
        out["swapPath"] = viaSwap;
        maxDev = std::max(maxDev, std::abs(viaSwap - rep.linearEntropy));
        if (is_unitary(u.matrix, 1e-8)) {
            const double p = protocol_probability(u);
            const double viaProtocol = 2.0 * protocol_factor(u.dimA) * p;
            out["protocolPath"] = viaProtocol;
            maxDev = std::max(maxDev, std::abs(viaProtocol - rep.linearEntropy));
        }
    }
    out["maxDeviation"] = maxDev;
    const bool agrees = maxDev <= tol;
    out["agrees"] = agrees;
    emit(out);
    return agrees ? kOk : kAgreementFailure;
}

int cmd_sweep(double thetaStart, double thetaEnd, int steps) {
    if (steps < 2) throw CLI::ValidationError("--steps must be >= 2");
    if (!(thetaEnd >= thetaStart)) throw CLI::ValidationError("invalid theta range");
    std::printf("theta,E,closedForm,absError\r\n");
    for (int i = 0; i < steps; ++i) {
        const double theta =
            thetaStart + (thetaEnd - thetaStart) * i / (steps - 1.0);
        const double e = linear_entanglement(exp_zz(theta));
        const double closed = exp_zz_closed_form(theta);
        std::printf("%.17g,%.17g,%.17g,%.17g\r\n", theta, e, closed,
                    std::abs(e - closed));
    }
    return kOk;
}

int cmd_epower(const GateFlags& f, long mcSamples, std::uint64_t seed) {
    const BipartiteOperator u = resolve_gate(f);
    const auto rep = entangling_power(u);
    json out{
        {"ep", rep.ep},       {"eU", rep.eU},
        {"eUS", rep.eUS},     {"eS", rep.eS},
        {"bound", rep.bound}, {"optimal", rep.optimal},
        {"dim", rep.localDim},
    };
    bool agrees = true;
    if (mcSamples > 0) {
        const auto mc = mc_entangling_power(u, mcSamples, seed);
        agrees = std::abs(rep.ep - mc.mean) <= 3.0 * mc.stderror;
        out["mc"] = json{{"mean", mc.mean},
                         {"stderr", mc.stderror},
                         {"samples", mc.samples},
                         {"seed", mc.seed},
                         {"agrees", agrees}};
    }
    emit(out);
    return agrees ? kOk : kAgreementFailure;
}

int cmd_haar_average(int dim, long samples, std::uint64_t seed) {
    if (dim < 2) throw CLI::ValidationError("--dim must be >= 2");
    const auto est =
        mc_average_operator_entanglement(dim, samples, RandomSource(seed));
    const double analytic = (static_cast<double>(dim) * dim - 1.0) /
                            (static_cast<double>(dim) * dim + 1.0);
    const bool within = std::abs(est.mean - analytic) <= 3.0 * est.stderror;
    emit(json{{"dim", dim},
              {"samples", est.samples},
              {"seed", est.seed},
              {"mean", est.mean},
              {"stderr", est.stderror},
              {"analytic", analytic},
              {"withinBand", within}});
    return within ? kOk : kAgreementFailure;
}

int cmd_choi(const std::string& file) {
    const KrausMap map = load_kraus(file);
    const auto choi = choi_of_map(map);
    const double purity = choi_purity(choi);
    const bool isPure = map.kraus.size() == 1 || purity > 1.0 - 1e-9;
    json out{
        {"trace", choi.matrix.trace().real()},
        {"purity", purity},
        {"rank", choi_rank(choi)},
        {"isPure", isPure},
    };
    if (isPure) {
        const BipartiteOperator a(map.kraus[0], map.dimA, map.dimB);
        out["entanglement"] = entanglement_via_choi(a);
    }
    emit(out);
    return kOk;
}

int cmd_protocol(const GateFlags& f, long shots, std::uint64_t seed) {
    const BipartiteOperator u = resolve_gate(f);
    const double p = protocol_probability(u);
    const double rescaled = 2.0 * protocol_factor(u.dimA) * p;
    const double e = linear_entanglement(u);
    const bool agrees = std::abs(rescaled - e) <= 1e-9;
    json out{
        {"probability", p},
        {"rescaledE", rescaled},
        {"agrees", agrees},
    };
    if (shots > 0) {
        RandomSource rng(seed);
        long hits = 0;
        for (long i = 0; i < shots; ++i)
            if (rng.uniform() < p) ++hits;
        out["shots"] = shots;
        out["seed"] = seed;
        out["sampledFrequency"] = static_cast<double>(hits) / shots;
    }
    emit(out);
    return agrees ? kOk : kAgreementFailure;
}

int cmd_verify(std::uint64_t seed) {
    std::printf("verification seed: %llu\n", static_cast<unsigned long long>(seed));
    const auto results = run_verification(seed);
    std::fputs(render_verification(results).c_str(), stdout);
    for (const auto& r : results)
        if (!r.pass) return kAgreementFailure;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator entanglement toolkit"};
    app.require_subcommand(1);

    GateFlags entFlags;
    double entTol = 1e-9;
    auto* ent = app.add_subcommand("entanglement", "operator entanglement of a gate");
    add_gate_flags(ent, entFlags);
    ent->add_option("--tol", entTol, "cross-path agreement tolerance");

    double thetaStart = 0.0, thetaEnd = 1.5707963267948966;
    int steps = 50;
    auto* sweep = app.add_subcommand("sweep", "theta sweep of the expzz family (CSV)");
    sweep->add_option("--theta-start", thetaStart);
    sweep->add_option("--theta-end", thetaEnd);
    sweep->add_option("--steps", steps);

    GateFlags epFlags;
    long mcSamples = 0;
    std::uint64_t epSeed = default_seed();
    auto* ep = app.add_subcommand("epower", "entangling power report");
    add_gate_flags(ep, epFlags);
    ep->add_option("--mc-samples", mcSamples, "Monte-Carlo cross-check sample count");
    ep->add_option("--seed", epSeed);

    int haDim = 2;
    long haSamples = 20000;
    std::uint64_t haSeed = default_seed();
    auto* ha = app.add_subcommand("haar-average", "mean E over Haar unitaries");
    ha->add_option("--dim", haDim);
    ha->add_option("--samples", haSamples);
    ha->add_option("--seed", haSeed);

    std::string choiFile;
    auto* choi = app.add_subcommand("choi", "Choi operator of a Kraus map");
    choi->add_option("--file", choiFile, "Kraus JSON file")->required();

    GateFlags protFlags;
    long shots = 0;
    std::uint64_t protSeed = default_seed();
    auto* prot = app.add_subcommand("protocol", "measurement-protocol probability");
    add_gate_flags(prot, protFlags);
    prot->add_option("--shots", shots, "Bernoulli demonstration samples");
    prot->add_option("--seed", protSeed);

    std::uint64_t verifySeed = default_seed();
    auto* verify = app.add_subcommand("verify", "run the full verification battery");
    verify->add_option("--seed", verifySeed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*ent) return cmd_entanglement(entFlags, entTol);
        if (*sweep) return cmd_sweep(thetaStart, thetaEnd, steps);
        if (*ep) return cmd_epower(epFlags, mcSamples, epSeed);
        if (*ha) return cmd_haar_average(haDim, haSamples, haSeed);
        if (*choi) return cmd_choi(choiFile);
        if (*prot) return cmd_protocol(protFlags, shots, protSeed);
        if (*verify) return cmd_verify(verifySeed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFileNotFound;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        return what.find("JSON") != std::string::npos ? kParseError : kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalFailure;
    }
    return kUsage;
}
