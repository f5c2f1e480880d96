// mzv: exact function-field multiple zeta values and the verification
// suites for their identities.
//
//   mzv zeta     --q 3 --prec 30 --array "({1}|1)({}|2)"
//   mzv powersum --array "({1,2}|2)" --d 2 --method brute
//   mzv stuffle  --array "({1}|1)" --array "({2}|1)" --mode zeta
//   mzv kernel   --sigma 1,2 --j 1,0 --mode symbolic
//   mzv verify   --suite all --q 3 --prec 30 --report out.json

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mzv/harness.hpp"

namespace {

std::vector<unsigned> parse_uint_list(const std::string& text) {
    std::vector<unsigned> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(static_cast<unsigned>(std::stoul(cur)));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(static_cast<unsigned>(std::stoul(cur)));
    return out;
}

mzv::FieldSpec field_spec(unsigned q, const std::string& modulus) {
    for (unsigned p = 2; p <= q; ++p) {
        if (!mzv::is_prime(p) || q % p != 0) continue;
        unsigned m = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) break;
        mzv::FieldSpec spec;
        spec.p = p;
        spec.m = m;
        if (!modulus.empty()) spec.modulus = parse_uint_list(modulus);
        return spec;
    }
    throw mzv::DomainError("--q must be a prime power");
}

std::vector<std::uint32_t> parse_sigma(const std::string& text) {
    std::vector<std::uint32_t> out;
    for (unsigned v : parse_uint_list(text)) out.push_back(v);
    return out;
}

bool g_json = false;

void print_tate(const mzv::TateElem& t) {
    if (g_json) {
        std::cout << mzv::tate_to_json(t);
        return;
    }
    std::cout << t.to_string() << "\n";
    std::cout << "requested precision N=" << t.prec << ", certified floor θ^" << t.floorv << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Carlitz/Pellarin multiple zeta values over F_q[θ]"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned q = 3;
    std::string modulus;
    long prec = 30;
    std::uint64_t seed = 0;
    bool json_out = false;
    app.add_option("--q", q, "field size (prime power)")->capture_default_str();
    app.add_option("--modulus", modulus, "F_p coefficients of the extension modulus, ascending");
    app.add_option("--prec", prec, "Laurent precision N")->capture_default_str();
    app.add_option("--seed", seed, "random seed for the verification suites")->capture_default_str();
    app.add_flag("--json", json_out, "emit values as JSON");

    std::vector<std::string> arrays;
    std::string sigma_text, j_text, mode = "symbolic", method = "fast", suite = "all", report;
    unsigned degree = 0;
    unsigned imax = 4;

    auto* zeta = app.add_subcommand("zeta", "truncated Pellarin multiple zeta value");
    zeta->add_option("--array", arrays, "admissible array, e.g. ({1}|1)({}|2)")->required();
    zeta->add_option("--method", method, "fast | brute");

    auto* lambda = app.add_subcommand("lambda", "truncated multiple polylogarithm");
    lambda->add_option("--array", arrays)->required();
    auto* lambda_d = lambda->add_option("--d", degree, "flag-degree override");

    auto* powersum = app.add_subcommand("powersum", "exact per-degree power sum");
    powersum->add_option("--array", arrays)->required();
    powersum->add_option("--d", degree, "degree of the slice")->required();
    powersum->add_option("--method", method, "fast | brute | dagger");

    auto* stuffle = app.add_subcommand("stuffle", "expand a product of power sums");
    stuffle->add_option("--array", arrays, "two arrays (give --array twice)")->expected(2);
    stuffle->add_option("--mode", mode, "dd | dlt | ltlt | zeta | dagger");

    auto* gmap = app.add_subcommand("gmap", "G-image of an eta generator");
    gmap->add_option("--sigma", sigma_text, "type, e.g. 1,2")->required();
    gmap->add_option("--j", j_text, "generator tuple, e.g. 1,0")->required();
    gmap->add_option("--mode", mode, "symbolic | numeric");

    auto* kernel = app.add_subcommand("kernel", "kernel basis element and its G-image");
    kernel->add_option("--sigma", sigma_text)->required();
    kernel->add_option("--j", j_text)->required();
    kernel->add_option("--mode", mode, "symbolic | numeric");
    kernel->add_option("--i-max", imax, "X-exponent tower bound for the F-route");

    auto* verify = app.add_subcommand("verify", "run named verification suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--report", report, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g_json = json_out;
        mzv::Config cfg;
        cfg.field = field_spec(q, modulus);
        cfg.prec = prec;
        cfg.seed = seed;
        mzv::Ctx ctx(cfg.field);

        if (zeta->parsed()) {
            mzv::AdmissibleArray a = mzv::array_parse(arrays.at(0));
            auto m = (method == "brute") ? mzv::SumMethod::Brute : mzv::SumMethod::Fast;
            print_tate(mzv::zeta_value(ctx, a, prec, m));
        } else if (lambda->parsed()) {
            mzv::AdmissibleArray a = mzv::array_parse(arrays.at(0));
            std::optional<unsigned> dmax;
            if (lambda_d->count() > 0) dmax = degree;
            print_tate(mzv::lambda_value(ctx, a, prec, dmax));
        } else if (powersum->parsed()) {
            mzv::AdmissibleArray a = mzv::array_parse(arrays.at(0));
            mzv::TPoly v = (method == "brute")  ? mzv::power_sum_brute(ctx, a, degree)
                           : (method == "dagger") ? mzv::dagger_power_sum(ctx, a, degree)
                                                  : mzv::power_sum_fast(ctx, a, degree);
            std::cout << (json_out ? mzv::tpoly_to_json(v) : v.to_string() + "\n");
        } else if (stuffle->parsed()) {
            mzv::AdmissibleArray a = mzv::array_parse(arrays.at(0));
            mzv::AdmissibleArray b = mzv::array_parse(arrays.at(1));
            mzv::ArrayCombo combo(ctx.F());
            if (mode == "zeta") {
                if (a.depth() != 1 || b.depth() != 1)
                    throw mzv::DomainError("zeta expansion takes two depth-1 arrays");
                combo = mzv::zeta_product_expand(ctx, a.slots()[0].first, a.slots()[0].second,
                                                 b.slots()[0].first, b.slots()[0].second);
            } else {
                mzv::ProdMode pm = mode == "dlt"    ? mzv::ProdMode::D_LT
                                   : mode == "ltlt" ? mzv::ProdMode::LT_LT
                                                    : mzv::ProdMode::DD;
                combo = (mode == "dagger") ? mzv::dagger_stuffle(ctx, a, b, mzv::ProdMode::DD)
                                           : mzv::stuffle_product(ctx, a, b, pm);
            }
            std::cout << (json_out ? mzv::combo_to_json(combo) : combo.to_string() + "\n");
        } else if (gmap->parsed()) {
            auto sigma = parse_sigma(sigma_text);
            mzv::KTuple k;
            for (unsigned v : parse_uint_list(j_text)) k.push_back(v);
            mzv::TrivialMZV f = mzv::TrivialMZV::eta(ctx, sigma, k);
            if (mode == "numeric") {
                std::cout << mzv::g_map_numeric(ctx, f, prec).to_string() << "\n";
            } else {
                std::cout << mzv::g_map_symbolic(ctx, f).to_string() << "\n";
            }
        } else if (kernel->parsed()) {
            auto sigma = parse_sigma(sigma_text);
            mzv::KTuple j;
            for (unsigned v : parse_uint_list(j_text)) j.push_back(v);
            mzv::TrivialMZV f = mzv::kernel_basis(ctx, sigma, j);
            if (json_out) std::cout << mzv::trivial_to_json(f);
            else std::cout << "basis element: " << f.to_string() << "\n";
            std::cout << "G-image (symbolic): " << mzv::g_map_symbolic(ctx, f).to_string() << "\n";
            if (mode == "numeric") {
                mzv::Laurent v = mzv::g_map_numeric(ctx, f, prec);
                std::cout << "G-image (numeric): " << v.to_string() << "\n";
                mzv::EvNumeric ev = mzv::ev_map_numeric(ctx, mzv::f_map(ctx, f, imax), f, prec);
                std::cout << "ev∘F (numeric, i_max=" << imax << "): " << ev.value.to_string()
                          << "\n";
            }
        } else if (verify->parsed()) {
            auto results = mzv::run_suite(suite, cfg);
            std::stable_sort(results.begin(), results.end(),
                             [](const auto& x, const auto& y) { return x.check_id < y.check_id; });
            for (const auto& r : results) {
                std::cout << r.status << "  " << r.check_id << " [" << r.mode;
                if (r.residual_valuation) std::cout << ", residual v=" << *r.residual_valuation;
                std::cout << ", " << r.runtime_ms << "ms]";
                auto it = r.params.find("reason");
                if (it != r.params.end()) std::cout << " (" << it->second << ")";
                std::cout << "\n";
            }
            if (!report.empty()) {
                std::ofstream out(report);
                if (!out) throw mzv::DomainError("cannot open report file: " + report);
                out << mzv::report_json(results, cfg);
            }
            return mzv::aggregate_exit(results);
        }
        return 0;
    } catch (const mzv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mzv::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
