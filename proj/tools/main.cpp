#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmat/autosimilar.hpp"
#include "pmat/families.hpp"
#include "pmat/io.hpp"
#include "pmat/spectra.hpp"
#include "pmat/verify.hpp"

namespace {

struct ComputeConfig {
    std::string target;
    std::string family = "pascal";
    std::optional<long long> n;
    std::optional<long long> mod;
    long long k = 0;
    long long base = 2;
    std::vector<std::string> seed;
    std::string format = "json";
    std::string out;
};

struct VerifyConfig {
    std::string target;
    pmat::VerifyOptions opts;
    std::string format = "json";
    std::string out;
};

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw pmat::parameter_error("cannot open output file: " + path);
    return file;
}

enum class Repr { z, q, fp };

struct BuiltMatrix {
    Repr repr = Repr::z;
    pmat::MatZ z;
    pmat::MatQ q;
    pmat::MatFp fp;
};

pmat::TriKind tri_kind(const std::string& fam) {
    if (fam == "T") return pmat::TriKind::T;
    if (fam == "L") return pmat::TriKind::L;
    return pmat::TriKind::Ltilde;
}

BuiltMatrix build_matrix(const ComputeConfig& cfg) {
    using namespace pmat;
    if (!cfg.n) throw parameter_error("compute: --n is required");
    long long n = *cfg.n;
    if (n < 0) throw parameter_error("compute: --n must be >= 0");
    BuiltMatrix built;
    const std::string& fam = cfg.family;
    if (fam == "autosimilar") {
        if (cfg.mod)
            throw parameter_error("compute: autosimilar sections are rational; --mod is unsupported");
        long long b = cfg.base;
        if (b < 2) throw parameter_error("compute: --base must be >= 2");
        if (static_cast<long long>(cfg.seed.size()) != b * b)
            throw parameter_error("compute: --seed needs exactly base^2 comma-separated entries");
        MatQ seed(b, b, QDomain{});
        for (long long i = 0; i < b; ++i)
            for (long long j = 0; j < b; ++j) {
                const std::string& s = cfg.seed[static_cast<size_t>(i * b + j)];
                mpq_class v;
                try {
                    v = mpq_class(s);
                } catch (const std::exception&) {
                    throw parameter_error("compute: bad seed entry '" + s + "'");
                }
                v.canonicalize();
                seed.at(i, j) = v;
            }
        built.repr = Repr::q;
        built.q = materialize(make_autosimilar(b, std::move(seed)), n);
        return built;
    }
    std::optional<FpDomain> dom;
    if (cfg.mod) dom.emplace(*cfg.mod);
    if (fam == "pascal") {
        if (dom) {
            built.repr = Repr::fp;
            built.fp = pascal_symmetric_fp(n, *dom);
        } else {
            built.z = pascal_symmetric(n);
        }
        return built;
    }
    if (fam == "T" || fam == "L" || fam == "Ltilde") {
        if (dom) {
            built.repr = Repr::fp;
            built.fp = triangular_fp(tri_kind(fam), n, *dom);
        } else {
            built.z = triangular(tri_kind(fam), n);
        }
        return built;
    }
    if (fam == "shifted") {
        if (dom) {
            built.repr = Repr::fp;
            built.fp = shifted_pascal_fp(n, cfg.k, *dom);
        } else {
            built.z = shifted_pascal(n, cfg.k);
        }
        return built;
    }
    MatZ zmat;
    if (fam == "reduced2")
        zmat = pascal_reduced(n, 2);
    else if (fam == "reduced3")
        zmat = pascal_reduced(n, 3);
    else if (fam == "shiftedunit")
        zmat = shifted_unit_pascal(n, cfg.k);
    else
        throw parameter_error("compute: unknown family '" + fam + "'");
    if (dom) {
        built.repr = Repr::fp;
        built.fp = reduce_mod(zmat, *dom);
    } else {
        built.z = std::move(zmat);
    }
    return built;
}

template <class D>
void emit_matrix(const pmat::Matrix<D>& m, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << pmat::matrix_to_json(m).dump() << '\n';
    } else if (format == "csv") {
        for (long long i = 0; i < m.rows(); ++i) {
            for (long long j = 0; j < m.cols(); ++j) {
                if (j) os << ',';
                os << m.domain().str(m.at(i, j));
            }
            os << '\n';
        }
    } else {
        os << pmat::matrix_to_plain(m);
    }
}

template <class D>
void emit_poly(const pmat::Poly<D>& f, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << pmat::poly_to_json(f).dump() << '\n';
    } else if (format == "csv") {
        for (long long i = 0; i <= f.degree(); ++i) {
            if (i) os << ',';
            os << f.domain().str(f.coeff(i));
        }
        os << '\n';
    } else {
        os << pmat::poly_to_string(f) << '\n';
    }
}

void emit_scalar(const std::string& value, const std::string& format, std::ostream& os) {
    if (format == "json")
        os << nlohmann::ordered_json(value).dump() << '\n';
    else
        os << value << '\n';
}

int run_compute(const ComputeConfig& cfg) {
    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.target == "gamma") {
        if (!cfg.n) throw pmat::parameter_error("compute gamma: --n is required");
        pmat::GammaPair g = pmat::gamma_pair(*cfg.n);
        if (cfg.format == "json") {
            nlohmann::ordered_json j{{"gamma", g.gamma}, {"gamma2", g.gamma2}};
            os << j.dump() << '\n';
        } else if (cfg.format == "csv") {
            os << "gamma,gamma2\n" << g.gamma << ',' << g.gamma2 << '\n';
        } else {
            os << "gamma = " << g.gamma << "\ngamma2 = " << g.gamma2 << '\n';
        }
        os.flush();
        return 0;
    }
    BuiltMatrix m = build_matrix(cfg);
    if (cfg.target == "matrix") {
        switch (m.repr) {
        case Repr::z: emit_matrix(m.z, cfg.format, os); break;
        case Repr::q: emit_matrix(m.q, cfg.format, os); break;
        case Repr::fp: emit_matrix(m.fp, cfg.format, os); break;
        }
    } else if (cfg.target == "det") {
        std::string value;
        switch (m.repr) {
        case Repr::z: value = m.z.det_exact().get_str(); break;
        case Repr::q: value = m.q.det_exact().get_str(); break;
        case Repr::fp: value = std::to_string(m.fp.det_exact()); break;
        }
        emit_scalar(value, cfg.format, os);
    } else { // charpoly
        switch (m.repr) {
        case Repr::z: emit_poly(m.z.charpoly(), cfg.format, os); break;
        case Repr::q:
            throw pmat::parameter_error(
                "compute charpoly: rational matrices are not serialized; reduce mod a prime instead");
        case Repr::fp: emit_poly(m.fp.charpoly(), cfg.format, os); break;
        }
    }
    os.flush();
    return 0;
}

int run_verify(const VerifyConfig& cfg) {
    pmat::VerifyResult res = pmat::verify_target(cfg.target, cfg.opts);
    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.format == "csv") os << pmat::report_csv_header() << '\n';
    for (const auto& rep : res.reports) {
        if (cfg.format == "json")
            os << pmat::report_to_json(rep).dump() << '\n';
        else if (cfg.format == "csv")
            os << pmat::report_to_csv(rep) << '\n';
        else
            os << pmat::report_to_plain(rep) << '\n';
    }
    os.flush();
    return res.theorem_failure ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pascal-matrix spectra toolkit"};
    app.require_subcommand(1);

    ComputeConfig ccfg;
    VerifyConfig vcfg;

    CLI::App* compute = app.add_subcommand(
        "compute", "Print a matrix, determinant, characteristic polynomial, or gamma pair");
    compute->add_option("target", ccfg.target, "matrix | det | charpoly | gamma")
        ->required()
        ->check(CLI::IsMember({"matrix", "det", "charpoly", "gamma"}));
    compute->add_option("--n", ccfg.n, "Size (or index for gamma)");
    compute->add_option("--family", ccfg.family,
                        "pascal | reduced2 | reduced3 | T | L | Ltilde | shifted | shiftedunit | autosimilar")
        ->check(CLI::IsMember({"pascal", "reduced2", "reduced3", "T", "L", "Ltilde", "shifted",
                               "shiftedunit", "autosimilar"}));
    compute->add_option("--mod", ccfg.mod, "Prime modulus; work over F_p");
    compute->add_option("--k", ccfg.k, "Shift parameter for the shifted families");
    compute->add_option("--base", ccfg.base, "Autosimilar base");
    compute->add_option("--seed", ccfg.seed, "Autosimilar seed, base^2 rationals row-major")
        ->delimiter(',');
    compute->add_option("--format", ccfg.format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    compute->add_option("--out", ccfg.out, "Write output to a file instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "Run a verification target, one report per instance");
    verify->add_option("target", vcfg.target, "Verification target (or 'all')")
        ->required()
        ->check(CLI::IsMember(pmat::verify_target_names()));
    verify->add_option("--max-n", vcfg.opts.max_n, "Upper bound for size sweeps");
    verify->add_option("--max-q", vcfg.opts.max_q, "Upper bound for prime-power sweeps");
    verify->add_option("--max-k", vcfg.opts.max_k, "Upper bound for the c_k index");
    verify->add_option("--primes", vcfg.opts.primes, "Override the target's prime/prime-power list")
        ->delimiter(',');
    verify->add_option("--jobs", vcfg.opts.jobs, "Parallel instances (default 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", vcfg.format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    verify->add_option("--out", vcfg.out, "Write reports to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(ccfg);
        if (verify->parsed()) return run_verify(vcfg);
        std::cerr << "error: expected a subcommand\n";
        return 2;
    } catch (const pmat::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
