// Command-line front end: lattice queries, cumulant and convolution
// calculus, transform inversion, the verification suites, and the Monte
// Carlo harness. Exit codes: 0 success, 1 a verification suite found a
// violation, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncprob/conv.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/json_io.hpp"
#include "ncprob/mk.hpp"
#include "ncprob/ncpart.hpp"
#include "ncprob/rmt.hpp"
#include "ncprob/suites.hpp"

namespace {

using namespace ncprob;
using nlohmann::json;

json rat_array(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(rat_to_string(r));
    return a;
}

std::vector<Rat> take_first(const std::vector<Rat>& v, int K) {
    return std::vector<Rat>(v.begin(), v.begin() + K + 1);
}

SequenceFile load_sequence(const std::string& path) {
    return sequence_from_json(read_text_file(path));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << text << "\n";
}

int run_verify(const std::string& suite, int max_n) {
    int failures = 0, checks = 0;
    for (const SuiteResult& sr : run_suites(suite, max_n)) {
        for (const CheckResult& c : sr.checks) {
            ++checks;
            if (c.pass) {
                std::cout << "[PASS] " << sr.suite << ": " << c.name << "\n";
            } else {
                ++failures;
                std::cout << "[FAIL] " << sr.suite << ": " << c.name << " -- " << c.detail
                          << "\n";
            }
        }
    }
    std::cout << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int run_rmt(const std::string& config_path, const std::string& out_path,
            std::uint64_t seed, bool seed_set) {
    RmtConfig cfg = rmt_config_from_json(read_text_file(config_path));
    if (seed_set) cfg.spec.seed = seed;
    std::vector<int> sizes = cfg.sizes.empty() ? std::vector<int>{cfg.spec.N} : cfg.sizes;
    std::string csv;
    std::size_t rows = 0;
    for (int N : sizes) {
        EnsembleSpec spec = cfg.spec;
        spec.N = N;
        SimResult r = run(spec, cfg.words);
        rows += r.rows.size();
        std::string block = to_csv(r);
        if (!csv.empty()) block.erase(0, block.find('\n') + 1);  // keep one header
        csv += block;
    }
    emit(out_path, csv);
    if (!out_path.empty())
        std::cout << "wrote " << out_path << " (" << rows << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for noncrossing-partition combinatorics, independence "
                 "engines, convolution calculus, and matrix simulations"};
    app.require_subcommand(1);

    // nc
    CLI::App* nc = app.add_subcommand("nc", "Noncrossing-partition lattice queries");
    nc->require_subcommand(1);
    int nc_n = 3;
    CLI::App* nc_enum = nc->add_subcommand("enumerate", "List NC(n) as JSON");
    nc_enum->add_option("--n", nc_n, "Ground-set size")->required()->check(CLI::Range(1, 12));
    std::string nc_part;
    CLI::App* nc_kr = nc->add_subcommand("kreweras", "Complement of a partition");
    nc_kr->add_option("--partition", nc_part, "Partition literal like [[1,2],[3]]")->required();

    // cumulants
    std::string cum_file, cum_out;
    int cum_order = 8;
    CLI::App* cum = app.add_subcommand("cumulants", "Free cumulants of a moment sequence");
    cum->add_option("--moments", cum_file, "Moment-sequence JSON file")->required();
    cum->add_option("--order", cum_order, "Truncation order");
    cum->add_option("--out", cum_out, "Output path (default stdout)");

    // conv
    std::string conv_op, conv_a, conv_b, conv_out;
    int conv_order = 6;
    CLI::App* conv = app.add_subcommand("conv", "Convolution of two distributions");
    conv->add_option("op", conv_op, "free|boolean|monotone|boxtimes|cfree|inf|cam")
        ->required()
        ->check(CLI::IsMember({"free", "boolean", "monotone", "boxtimes", "cfree", "inf", "cam"}));
    conv->add_option("--a", conv_a, "First input JSON file")->required();
    conv->add_option("--b", conv_b, "Second input JSON file")->required();
    conv->add_option("--order", conv_order, "Truncation order")->required();
    conv->add_option("--out", conv_out, "Output path (default stdout)");

    // mk
    CLI::App* mk = app.add_subcommand("mk", "Transform inversion");
    mk->require_subcommand(1);
    std::string mk_file, mk_out;
    int mk_order = -1;
    CLI::App* mk_inv = mk->add_subcommand(
        "inverse", "Sequence t with G_mu' = -G_t G_mu, from the moments of mu");
    mk_inv->add_option("--moments", mk_file, "Moment-sequence JSON file")->required();
    mk_inv->add_option("--order", mk_order, "Truncation order (default: input order)");
    mk_inv->add_option("--out", mk_out, "Output path (default stdout)");

    // verify
    std::string verify_suite = "all";
    int verify_maxn = 6;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", verify_suite, "lattice|cumulants|engines|bprime|mk|all")
        ->check(CLI::IsMember({"lattice", "cumulants", "engines", "bprime", "mk", "all"}));
    verify->add_option("--max-n", verify_maxn, "Depth cap (sizes, word lengths, orders)")
        ->check(CLI::Range(1, 12));

    // rmt
    std::string rmt_config, rmt_out;
    std::uint64_t rmt_seed = 0;
    CLI::App* rmt = app.add_subcommand("rmt", "Monte Carlo simulation from a JSON config");
    rmt->add_option("--config", rmt_config, "Config JSON file")->required();
    rmt->add_option("--out", rmt_out, "CSV output path (default stdout)");
    CLI::Option* seed_opt = rmt->add_option("--seed", rmt_seed, "Override the config seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nc_enum->parsed()) {
            std::cout << partitions_to_json(nc_n, enumerate_nc(nc_n)) << "\n";
        } else if (nc_kr->parsed()) {
            std::cout << partition_to_json(kreweras(partition_from_json(nc_part))) << "\n";
        } else if (cum->parsed()) {
            SequenceFile f = load_sequence(cum_file);
            if (cum_order < 1 || cum_order > static_cast<int>(f.moments.size()) - 1)
                throw std::invalid_argument("--order must be between 1 and the input order");
            std::vector<Rat> kappa =
                cumulants_from_moment_seq(take_first(f.moments, cum_order));
            kappa[0] = 0;  // unused slot, fixed for output stability
            json j{{"order", cum_order}, {"cumulants", rat_array(kappa)}};
            emit(cum_out, j.dump(2));
        } else if (conv->parsed()) {
            SequenceFile a = load_sequence(conv_a);
            SequenceFile b = load_sequence(conv_b);
            const int K = conv_order;
            json j{{"order", K}};
            if (conv_op == "free") {
                j["moments"] = rat_array(free_add(Dist(a.moments), Dist(b.moments), K).m);
            } else if (conv_op == "boolean") {
                j["moments"] = rat_array(boolean_add(Dist(a.moments), Dist(b.moments), K).m);
            } else if (conv_op == "monotone") {
                j["moments"] = rat_array(monotone_add(Dist(a.moments), Dist(b.moments), K).m);
            } else if (conv_op == "boxtimes") {
                j["moments"] = rat_array(free_mult(Dist(a.moments), Dist(b.moments), K).m);
            } else if (conv_op == "cfree") {
                // second layers default to the first, which degenerates to free
                std::vector<Rat> pa = a.psi.empty() ? a.moments : a.psi;
                std::vector<Rat> pb = b.psi.empty() ? b.moments : b.psi;
                j["moments"] = rat_array(free_add(Dist(a.moments), Dist(b.moments), K).m);
                j["psi"] = rat_array(
                    cfree_add(Dist(a.moments), Dist(pa), Dist(b.moments), Dist(pb), K).m);
            } else if (conv_op == "inf") {
                InfDist da{Dist(a.moments),
                           a.inf.empty() ? std::vector<Rat>(a.moments.size(), Rat(0)) : a.inf};
                InfDist db{Dist(b.moments),
                           b.inf.empty() ? std::vector<Rat>(b.moments.size(), Rat(0)) : b.inf};
                InfDist sum = inf_free_add(da, db, K);
                j["moments"] = rat_array(sum.std.m);
                j["inf"] = rat_array(sum.inf);
            } else {  // cam: --a main layer, --b perturbation layer
                Dist mu(a.moments);
                j["moments"] = rat_array(take_first(mu.m, K));
                j["inf"] = rat_array(cyclic_antimonotone_conv(mu, b.moments, K));
            }
            emit(conv_out, j.dump(2));
        } else if (mk_inv->parsed()) {
            SequenceFile f = load_sequence(mk_file);
            Dist mu(f.moments);
            int K = mk_order < 0 ? mu.order() : mk_order;
            emit(mk_out, sequence_to_json(inverse_mk_uni(mu, K).m));
        } else if (verify->parsed()) {
            return run_verify(verify_suite, verify_maxn);
        } else if (rmt->parsed()) {
            return run_rmt(rmt_config, rmt_out, rmt_seed, seed_opt->count() > 0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
