#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "permlab/canonical.hpp"
#include "permlab/catalan.hpp"
#include "permlab/coalescent.hpp"
#include "permlab/feasible.hpp"
#include "permlab/gentree.hpp"
#include "permlab/permutation.hpp"
#include "permlab/permuton.hpp"
#include "permlab/rng.hpp"
#include "permlab/rooted.hpp"
#include "permlab/skew.hpp"
#include "permlab/square.hpp"
#include "permlab/svg.hpp"
#include "permlab/tandem.hpp"

using namespace permlab;

namespace {

struct RunConfig {
    std::string family;
    int n = 10;
    int k = 3;
    int reps = 1;
    uint64_t seed = 1;
    std::string out;
    std::string format = "text";
    double rho = -0.5;
    double q = 0.5;
    double delta_exp = 0.85;
    int cap = 100000;
    int jobs = 1;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

Permutation sample_family(const RunConfig& cfg, int rep) {
    Rng rng = Rng(cfg.seed).substream("rep", static_cast<uint64_t>(rep));
    if (cfg.family == "av231") return sample_av231(cfg.n, rng);
    if (cfg.family == "av321") return sample_av321(cfg.n, rng);
    if (cfg.family == "separable") return sample_separable(cfg.n, rng);
    if (cfg.family == "square") return sample_square(cfg.n, rng, cfg.delta_exp, cfg.cap);
    if (cfg.family == "baxter") return sample_baxter(cfg.n, rng);
    if (cfg.family == "gentree1423") {
        if (cfg.n <= 600) {
            CountTable table(SuccessionRule::av1423_4123(), cfg.n);
            return realize_1423_4123(sample_path(table, cfg.n, rng));
        }
        return realize_1423_4123(sample_path_av1423_large(cfg.n, rng));
    }
    throw CLI::ValidationError("unknown family: " + cfg.family);
}

bool family_predicate(const std::string& family, const Permutation& s) {
    if (family == "av231") return avoids(s, Permutation::parse("231"));
    if (family == "av321") return avoids(s, Permutation::parse("321"));
    if (family == "separable")
        return avoids_all(s, {Permutation::parse("2413"), Permutation::parse("3142")});
    if (family == "square") return is_square(s);
    if (family == "baxter") return is_baxter(s);
    if (family == "gentree1423")
        return avoids_all(s, {Permutation::parse("1423"), Permutation::parse("4123")});
    return true;
}

int cmd_sample(const RunConfig& cfg) {
    static const std::vector<std::string> kFamilies = {
        "av231", "av321", "separable", "square", "baxter", "gentree1423", "skew-permuton"};
    if (std::find(kFamilies.begin(), kFamilies.end(), cfg.family) == kFamilies.end())
        throw CLI::ValidationError("unknown family: " + cfg.family);
    std::ostringstream out;
    if (cfg.family == "skew-permuton") {
        SkewDriveConfig scfg;
        scfg.rho = cfg.rho;
        scfg.q = cfg.q;
        scfg.n = cfg.n;
        scfg.rejection_cap = cfg.cap;
        Rng rng = Rng(cfg.seed).substream("rep", 0);
        GridPermuton g = skew_permuton_simulate(scfg, rng);
        write_output(cfg.out, g.to_json() + "\n");
        return 0;
    }
    std::vector<Permutation> samples(static_cast<size_t>(cfg.reps));
    std::vector<std::string> errors(static_cast<size_t>(cfg.reps));
    auto worker = [&](int from, int to) {
        for (int r = from; r < to; ++r) {
            try {
                samples[static_cast<size_t>(r)] = sample_family(cfg, r);
            } catch (const std::exception& e) {
                errors[static_cast<size_t>(r)] = e.what();
            }
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker(0, cfg.reps);
    } else {
        std::vector<std::thread> pool;
        int chunk = (cfg.reps + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            int from = j * chunk, to = std::min(cfg.reps, from + chunk);
            if (from < to) pool.emplace_back(worker, from, to);
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
    for (const auto& s : samples)
        if (!family_predicate(cfg.family, s))
            throw std::runtime_error("sample failed its family predicate; refusing to write");

    if (cfg.format == "text") {
        for (const auto& s : samples) out << s.to_string() << '\n';
    } else if (cfg.format == "csv") {
        out << "rep,permutation\n";
        for (int r = 0; r < cfg.reps; ++r) {
            std::string v = samples[static_cast<size_t>(r)].to_string();
            std::replace(v.begin(), v.end(), ' ', '-');
            out << r << ',' << v << '\n';
        }
    } else if (cfg.format == "json") {
        out << "[";
        for (int r = 0; r < cfg.reps; ++r) out << (r ? "," : "") << samples[static_cast<size_t>(r)].to_json();
        out << "]\n";
    } else if (cfg.format == "svg") {
        out << svg_permutation(samples.front());
    } else {
        throw CLI::ValidationError("unknown format: " + cfg.format);
    }
    write_output(cfg.out, out.str());
    return 0;
}

bool report(std::ostream& os, const std::string& suite, const std::string& name, bool pass,
            const std::string& detail = "") {
    os << "[" << suite << "] " << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) os << " (" << detail << ")";
    os << '\n';
    return pass;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    std::ostream& os = std::cout;
    bool ok = true;
    if (suite == "counts") {
        int nmax = std::min(cfg.n, enumeration_cap());
        for (int n = 1; n <= nmax; ++n) {
            auto a231 = enumerate_class(n, [](const Permutation& s) { return avoids(s, Permutation::parse("231")); });
            auto a321 = enumerate_class(n, [](const Permutation& s) { return avoids(s, Permutation::parse("321")); });
            ok &= report(os, suite, "catalan n=" + std::to_string(n),
                         a231.size() == catalan(n) && a321.size() == catalan(n));
        }
        for (int n = 1; n <= std::min(nmax, 6); ++n) {
            auto sep = enumerate_class(n, [](const Permutation& s) {
                return avoids_all(s, {Permutation::parse("2413"), Permutation::parse("3142")});
            });
            ok &= report(os, suite, "schroeder n=" + std::to_string(n), bigint(sep.size()) == separable_count(n));
        }
        for (int n = 1; n <= std::min(nmax, 6); ++n) {
            auto bax = enumerate_class(n, [](const Permutation& s) { return is_baxter(s); });
            ok &= report(os, suite, "baxter n=" + std::to_string(n),
                         static_cast<long long>(bax.size()) == count_baxter_via_pipeline(n));
        }
        for (int n = 3; n <= std::min(nmax, 8); ++n)
            ok &= report(os, suite, "square n=" + std::to_string(n), count_square(n) == count_square_brute(n));
    } else if (suite == "bijections") {
        for (int n = 1; n <= 8; ++n) {
            bool round = true;
            for (const auto& t : enumerate_binary_trees(n))
                round &= av231_to_binary(binary_to_av231(t)) == t;
            ok &= report(os, suite, "binary/av231 n=" + std::to_string(n), round);
        }
        for (int v = 2; v <= 8; ++v) {
            bool round = true;
            for (const auto& t : enumerate_plane_trees(v))
                round &= av321_to_plane_tree(plane_tree_to_av321(t)) == t;
            ok &= report(os, suite, "plane/av321 v=" + std::to_string(v), round);
        }
        for (int n = 1; n <= 6; ++n) {
            bool round = true;
            for (const auto& s : enumerate_class(n, [](const Permutation&) { return true; }))
                round &= compose(decompose(s)) == s;
            ok &= report(os, suite, "canonical n=" + std::to_string(n), round);
        }
    } else if (suite == "diagram") {
        int nmax = std::min(cfg.n, 7);
        for (int n = 1; n <= nmax; ++n) {
            DiagramReport rep = diagram_check_exhaustive(n);
            ok &= report(os, suite, "exhaustive n=" + std::to_string(n), rep.ok(),
                         std::to_string(rep.checked) + " orientations");
        }
        Rng rng(cfg.seed);
        DiagramReport rep = diagram_check_sampled(20, cfg.reps > 1 ? cfg.reps : 100, rng);
        ok &= report(os, suite, "sampled n=20", rep.ok(), std::to_string(rep.checked) + " orientations");
    } else if (suite == "square") {
        for (int n = 3; n <= 8; ++n)
            ok &= report(os, suite, "count n=" + std::to_string(n), count_square(n) == count_square_brute(n));
        Rng rng(cfg.seed);
        int n = std::max(cfg.n, 128);
        bool inverse = true;
        int built = 0;
        while (built < 50) {
            AnchoredPair p = sample_good_pair(n, rng);
            if (!rho_reconstructible(p, cfg.delta_exp)) continue;
            ++built;
            inverse &= project_phi(reconstruct_rho(p, cfg.delta_exp, false)) == p;
        }
        ok &= report(os, suite, "phi o rho = id, n=" + std::to_string(n), inverse, "50 regular pairs");
    } else if (suite == "polytope") {
        ok &= report(os, suite, "dim k=2", polytope_dimension(2) == 1);
        ok &= report(os, suite, "dim k=3", polytope_dimension(3) == 4);
        ok &= report(os, suite, "dim k=4", polytope_dimension(4) == 18);
    } else if (suite == "local") {
        Rng rng(cfg.seed);
        bool identity_ok = true;
        for (int t = 0; t < 25; ++t) {
            int n = 20 + rng.below_int(60);
            std::vector<int> vals(static_cast<size_t>(n));
            std::iota(vals.begin(), vals.end(), 1);
            for (int i = n - 1; i > 0; --i) std::swap(vals[static_cast<size_t>(i)], vals[static_cast<size_t>(rng.below_int(i + 1))]);
            Permutation sigma{vals};
            for (int h = 1; h <= 2; ++h) {
                auto hist = restriction_histogram(sigma, h);
                for (const auto& [r, c] : hist)
                    if (r.perm.size() == 2 * h + 1 && r.root == h + 1)
                        identity_ok &= c == static_cast<long long>(count_consecutive(r.perm, sigma));
            }
        }
        ok &= report(os, suite, "interior window mass = cocc", identity_ok);
        bool law_ok = true;
        for (int h = 0; h <= 3; ++h) {
            WindowLaw law = limit_restriction_law(LimitVariant::Av321, h);
            long long total = 0;
            for (const auto& [r, w] : law.weight) {
                total += w;
                if (r.perm == Permutation::identity(2 * h + 1))
                    law_ok &= w == 2 * h + 2;
                else
                    law_ok &= w == 1 && count_consecutive(Permutation::parse("21"), r.perm.inverse()) == 1;
            }
            law_ok &= total == law.denom;
        }
        ok &= report(os, suite, "av321 limit law h<=3", law_ok);
    } else if (suite == "concentration") {
        int reps = std::max(10, cfg.reps);
        int n = std::max(500, cfg.n);
        auto rows = concentration_experiment(
            "av231", [](int nn, Rng& r) { return sample_av231(nn, r); },
            {Permutation::parse("12"), Permutation::parse("123")}, n, reps, cfg.seed);
        ok &= report(os, suite, "av231 cocc(12) -> 1/2", std::abs(rows[0].mean - 0.5) < 0.05,
                     "mean " + std::to_string(rows[0].mean));
        ok &= report(os, suite, "av231 cocc(123) -> 1/4", std::abs(rows[1].mean - 0.25) < 0.05,
                     "mean " + std::to_string(rows[1].mean));
        auto rows321 = concentration_experiment(
            "av321", [](int nn, Rng& r) { return sample_av321(nn, r); },
            {Permutation::parse("12")}, n, reps, cfg.seed);
        ok &= report(os, suite, "av321 cocc(12) -> 3/4", std::abs(rows321[0].mean - 0.75) < 0.05,
                     "mean " + std::to_string(rows321[0].mean));
    } else {
        throw CLI::ValidationError("unknown suite: " + suite);
    }
    return ok ? 0 : 1;
}

int cmd_render(const RunConfig& cfg, const std::string& type, const std::string& value,
               const std::string& input) {
    std::string payload = value;
    if (!input.empty()) {
        std::ifstream f(input);
        if (!f) throw std::runtime_error("cannot open input file: " + input);
        std::stringstream ss;
        ss << f.rdbuf();
        payload = ss.str();
    }
    while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r')) payload.pop_back();
    std::string svg;
    if (type == "perm") {
        svg = svg_permutation(Permutation::parse(payload));
    } else if (type == "walk") {
        Walk2D w = payload.find("points") != std::string::npos ? Walk2D::from_json(payload)
                                                               : throw std::runtime_error("walk input must be json");
        svg = svg_walk(w);
    } else if (type == "coalescent") {
        Walk2D w = Walk2D::from_json(payload);
        svg = svg_coalescent(wcp(w));
    } else {
        throw CLI::ValidationError("unknown render type: " + type);
    }
    write_output(cfg.out, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: samplers, bijections and limit diagnostics for constrained random permutations"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string suite, render_type = "perm", render_value, render_input;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n, "size parameter");
        cmd->add_option("--k", cfg.k, "pattern size parameter");
        cmd->add_option("--reps", cfg.reps, "number of repetitions");
        cmd->add_option("--seed", cfg.seed, "random seed");
        cmd->add_option("--out", cfg.out, "output path (default stdout)");
        cmd->add_option("--format", cfg.format, "text|csv|json|svg");
        cmd->add_option("--rho", cfg.rho, "driver correlation");
        cmd->add_option("--q", cfg.q, "skew parameter");
        cmd->add_option("--delta-exp", cfg.delta_exp, "anchor window exponent for square sampling");
        cmd->add_option("--cap", cfg.cap, "rejection cap");
        cmd->add_option("--jobs", cfg.jobs, "worker threads over reps");
    };

    CLI::App* sample = app.add_subcommand("sample", "sample from a permutation family");
    sample->add_option("--family", cfg.family, "av231|av321|separable|square|baxter|gentree1423|skew-permuton")
        ->required();
    add_common(sample);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "counts|bijections|diagram|square|polytope|local|concentration")
        ->required();
    add_common(verify);

    CLI::App* render = app.add_subcommand("render", "render an artifact as svg");
    render->add_option("--type", render_type, "perm|walk|coalescent");
    render->add_option("--value", render_value, "inline value (one-line permutation or json)");
    render->add_option("--in", render_input, "input file");
    add_common(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed()) return cmd_sample(cfg);
        if (verify->parsed()) return cmd_verify(cfg, suite);
        if (render->parsed()) return cmd_render(cfg, render_type, render_value, render_input);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
