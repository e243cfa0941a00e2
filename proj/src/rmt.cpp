#include "ncprob/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ncprob {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

// Diagonal of a main generator at size N: atom multiplicities from rounded
// cumulative weights, so the empirical spectrum converges to the atoms.
Eigen::VectorXd main_diagonal(const GeneratorSpec& g, int N) {
    if (g.atoms.empty()) throw std::invalid_argument("rmt: main generator without a spectrum");
    Eigen::VectorXd d(N);
    Rat cum = 0;
    int filled = 0;
    for (const auto& [value, weight] : g.atoms) {
        cum += weight;
        int upto = static_cast<int>(std::lround(to_double(cum) * N));
        upto = std::min(upto, N);
        for (; filled < upto; ++filled) d(filled) = to_double(value);
    }
    for (; filled < N; ++filled) d(filled) = to_double(g.atoms.back().first);
    return d;
}

Eigen::VectorXd pert_diagonal(const GeneratorSpec& g, int N, Model model) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(N);
    if (model == Model::MINOR) {
        d(N - 1) = 1.0;  // the corner projection
        return d;
    }
    if (static_cast<int>(g.pert_eigs.size()) > N)
        throw std::invalid_argument("rmt: perturbation rank exceeds N");
    for (std::size_t i = 0; i < g.pert_eigs.size(); ++i)
        d(static_cast<Eigen::Index>(i)) = to_double(g.pert_eigs[i]);
    return d;
}

std::vector<Rat> atom_moments(const GeneratorSpec& g, int K) {
    std::vector<Rat> m(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        Rat s = 0;
        for (const auto& [value, weight] : g.atoms) {
            Rat p = 1;
            for (int j = 0; j < k; ++j) p *= value;
            s += weight * p;
        }
        m[static_cast<std::size_t>(k)] = s;
    }
    return m;
}

std::vector<Rat> pert_trace_values(const GeneratorSpec& g, Model model, int K) {
    std::vector<Rat> v(static_cast<std::size_t>(K) + 1, Rat(0));
    for (int k = 1; k <= K; ++k) {
        if (model == Model::MINOR) {
            v[static_cast<std::size_t>(k)] = 1;
            continue;
        }
        Rat s = 0;
        for (const Rat& e : g.pert_eigs) {
            Rat p = 1;
            for (int j = 0; j < k; ++j) p *= e;
            s += p;
        }
        v[static_cast<std::size_t>(k)] = s;
    }
    return v;
}

constexpr int kMarginalOrder = 16;

struct Stats {
    double mean = 0, stderr_ = 0;
};

Stats reduce(const std::vector<double>& xs) {
    Stats s;
    std::size_t n = xs.size();
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(n);
    if (n > 1) {
        double m2 = 0;
        for (double x : xs) m2 += (x - s.mean) * (x - s.mean);
        s.stderr_ = std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
    }
    return s;
}

int thread_count() {
    if (const char* env = std::getenv("NCPROB_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

}  // namespace

Eigen::MatrixXcd sample_haar(int N, std::mt19937_64& rng) {
    if (N < 1) throw std::invalid_argument("sample_haar: N must be positive");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) z(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < N; ++k) {
        std::complex<double> rk = r(k, k);
        double a = std::abs(rk);
        if (a > 0) q.col(k) /= rk / a;
    }
    return q;
}

Scenario prediction_scenario(const EnsembleSpec& spec) {
    Scenario s;
    s.law = spec.model == Model::BPRIME ? Law::BPRIME : Law::WEAK_BPRIME;
    bool joint_perts = spec.model != Model::BPRIME;
    std::vector<const GeneratorSpec*> perts;
    for (const auto& g : spec.gens) {
        s.alphabet.add({g.id, g.id, g.perturbation ? GenKind::Perturbation : GenKind::Main,
                        spec.model == Model::MINOR && g.perturbation});
        if (g.perturbation) {
            s.pert_groups.insert(g.id);
            perts.push_back(&g);
            if (!joint_perts)
                s.groups.emplace(g.id,
                                 phi_functional_from_values(pert_trace_values(g, spec.model,
                                                                              kMarginalOrder)));
        } else {
            s.algebra_groups.insert(g.id);
            s.groups.emplace(g.id, functional_from_moments(atom_moments(g, kMarginalOrder)));
        }
    }
    if (joint_perts && !perts.empty()) {
        // exact joint traces of the fixed diagonal perturbations
        std::map<std::string, std::vector<Rat>> diags;
        std::size_t rank = spec.model == Model::MINOR ? 1 : 0;
        for (const auto* g : perts) rank = std::max(rank, g->pert_eigs.size());
        for (const auto* g : perts) {
            std::vector<Rat> d(rank, Rat(0));
            if (spec.model == Model::MINOR)
                d[0] = 1;
            else
                for (std::size_t i = 0; i < g->pert_eigs.size(); ++i) d[i] = g->pert_eigs[i];
            diags.emplace(g->id, std::move(d));
        }
        Alphabet alpha = s.alphabet;
        s.pert_joint = MomentFunctional([alpha, diags](const Word& w) {
            if (w.empty()) return DualQ(Rat(0));
            Rat total = 0;
            std::size_t rank = diags.begin()->second.size();
            for (std::size_t k = 0; k < rank; ++k) {
                Rat p = 1;
                for (int l : w.letters) p *= diags.at(alpha.at(l).id)[k];
                total += p;
            }
            return DualQ(total);
        });
    }
    return s;
}

SimResult run(const EnsembleSpec& spec, const std::vector<std::vector<std::string>>& words) {
    const int N = spec.N;
    Scenario s = prediction_scenario(spec);
    std::vector<Word> parsed;
    for (const auto& ids : words) parsed.push_back(s.alphabet.parse_word(ids));

    // fixed diagonals per generator
    std::vector<Eigen::VectorXd> diag;
    for (const auto& g : spec.gens)
        diag.push_back(g.perturbation ? pert_diagonal(g, N, spec.model) : main_diagonal(g, N));

    const std::size_t nw = parsed.size();
    std::vector<std::vector<double>> tr_vals(nw, std::vector<double>(spec.samples));
    std::vector<std::vector<double>> trdiff_vals(nw, std::vector<double>(spec.samples));

    auto worker = [&](int lo, int hi) {
        for (int sm = lo; sm < hi; ++sm) {
            std::mt19937_64 rng(splitmix64(spec.seed + static_cast<std::uint64_t>(sm)));
            std::vector<Eigen::MatrixXcd> mat(spec.gens.size());
            for (std::size_t gi = 0; gi < spec.gens.size(); ++gi) {
                const auto& g = spec.gens[gi];
                bool conjugate = !g.perturbation || spec.model == Model::BPRIME;
                if (!conjugate) {
                    mat[gi] = diag[gi].cast<std::complex<double>>().asDiagonal();
                    continue;
                }
                Eigen::MatrixXcd u = sample_haar(N, rng);
                if (spec.checks) {
                    double dev = (u.adjoint() * u - Eigen::MatrixXcd::Identity(N, N))
                                     .cwiseAbs()
                                     .maxCoeff();
                    if (dev > 1e-10) throw std::runtime_error("rmt: unitarity check failed");
                }
                mat[gi] = u * diag[gi].asDiagonal() * u.adjoint();
            }
            for (std::size_t wi = 0; wi < nw; ++wi) {
                const Word& w = parsed[wi];
                Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(N, N);
                bool has_pert = false;
                for (int l : w.letters) {
                    acc = acc * mat[static_cast<std::size_t>(l)];
                    has_pert = has_pert || s.is_pert(l);
                }
                double tr = acc.trace().real();
                tr_vals[wi][static_cast<std::size_t>(sm)] = tr / N;
                // the zero-perturbation word value vanishes when a
                // perturbation letter is present, so Tr of the difference is
                // Tr of the word itself; main-only words difference to zero
                trdiff_vals[wi][static_cast<std::size_t>(sm)] = has_pert ? tr : 0.0;
            }
        }
    };

    int threads = std::min(thread_count(), spec.samples);
    if (threads <= 1) {
        worker(0, spec.samples);
    } else {
        std::vector<std::thread> pool;
        int chunk = (spec.samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk, hi = std::min(spec.samples, lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SimResult out;
    out.N = N;
    out.samples = spec.samples;
    for (std::size_t wi = 0; wi < nw; ++wi) {
        DualQ pred = mm_bprime(s, parsed[wi]);
        WordResult row;
        row.word = s.alphabet.show(parsed[wi]);
        Stats tr = reduce(tr_vals[wi]);
        Stats td = reduce(trdiff_vals[wi]);
        row.emp_tr_mean = tr.mean;
        row.emp_tr_stderr = tr.stderr_;
        row.pred_phi = to_double(pred.std_);
        row.emp_trdiff_mean = td.mean;
        row.emp_trdiff_stderr = td.stderr_;
        row.pred_phi_prime = to_double(pred.inf_);
        row.abs_err_phi = std::abs(row.emp_tr_mean - row.pred_phi);
        row.abs_err_phi_prime = std::abs(row.emp_trdiff_mean - row.pred_phi_prime);
        out.rows.push_back(std::move(row));
    }
    return out;
}

ConvergenceTable convergence_study(EnsembleSpec spec, const std::vector<int>& sizes,
                                   const std::vector<std::vector<std::string>>& words) {
    ConvergenceTable table;
    std::map<std::string, std::pair<double, double>> prev;  // word -> (err, noise)
    for (int n : sizes) {
        spec.N = n;
        SimResult r = run(spec, words);
        for (const auto& row : r.rows) {
            table.rows.push_back({n, row.word, row.abs_err_phi, row.abs_err_phi_prime});
            double err = std::max(row.abs_err_phi, row.abs_err_phi_prime);
            double noise = 3.0 * (row.emp_tr_stderr + row.emp_trdiff_stderr) + 5.0 / n;
            auto it = prev.find(row.word);
            if (it != prev.end() && err > it->second.first + it->second.second + noise)
                table.anomalies.push_back(row.word + " at N=" + std::to_string(n));
            prev[row.word] = {err, noise};
        }
    }
    return table;
}

std::string to_csv(const SimResult& r) {
    std::ostringstream os;
    os << "word,N,samples,emp_tr_mean,emp_tr_stderr,pred_phi,emp_Trdiff_mean,"
          "emp_Trdiff_stderr,pred_phi_prime,abs_err_phi,abs_err_phi_prime\n";
    os.precision(12);
    for (const auto& row : r.rows)
        os << row.word << ',' << r.N << ',' << r.samples << ',' << row.emp_tr_mean << ','
           << row.emp_tr_stderr << ',' << row.pred_phi << ',' << row.emp_trdiff_mean << ','
           << row.emp_trdiff_stderr << ',' << row.pred_phi_prime << ',' << row.abs_err_phi << ','
           << row.abs_err_phi_prime << '\n';
    return os.str();
}

}  // namespace ncprob
