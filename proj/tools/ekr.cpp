// Command-line front end: exact certificates that Sym(n) and Alt(n) acting on
// k-subsets (k = 3, 4, 5) have intersection density 1, plus the supporting
// character tables, weight schemes and small-group brute-force checks.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "ekr/brute.hpp"
#include "ekr/certify.hpp"
#include "ekr/characters.hpp"
#include "ekr/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUnsupported = 3;

std::int64_t unix_timestamp() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

void write_json(const std::string& path, ekr::OrderedJson j) {
    j["timestamp"] = unix_timestamp();
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

void print_certificate(const ekr::Certificate& cert) {
    std::cout << "certificate n=" << cert.n << " k=" << cert.k << " [" << cert.provenance
              << "]\n";
    std::cout << "  scheme (" << cert.scheme.entries.size() << " classes):";
    for (const auto& e : cert.scheme.entries)
        std::cout << " " << e.cycle_type.to_string() << "=" << ekr::rat_to_string(e.omega);
    std::cout << "\n";
    std::cout << "  max eigenvalue " << ekr::rat_to_string(cert.max_eig) << " with multiplicity "
              << cert.multiplicity << ", min eigenvalue " << ekr::rat_to_string(cert.min_eig)
              << " at " << cert.min_attained_at.size() << " shapes\n";
    if (cert.certified) {
        std::cout << "  coclique bounds: sym " << cert.sym_bound.str();
        if (cert.alt_bound) std::cout << ", alt " << cert.alt_bound->str();
        std::cout << "\n  intersection density 1: sym " << (cert.sym_density_one ? "yes" : "no")
                  << ", alt " << (cert.alt_density_one ? "yes" : "no") << "\n";
        std::cout << "  CERTIFIED\n";
    } else {
        std::cout << "  FAILED\n";
        for (const auto& v : cert.violations) std::cout << "    violation: " << v << "\n";
    }
}

int run_certify(int n, int k, const std::string& json_path, int threads, int cap) {
    ekr::CertifyOptions opt;
    opt.threads = threads;
    if (cap > 0) opt.max_partitions = cap;
    ekr::Certificate cert = ekr::certify(n, k, opt);
    print_certificate(cert);
    if (!json_path.empty()) write_json(json_path, ekr::certificate_json(cert));
    return cert.certified ? kExitOk : kExitViolation;
}

ekr::WeightScheme scheme_for(int n, int k, bool search, int threads, int cap,
                             ekr::FeasibilityResult* lp_info) {
    if (!search && ekr::closed_form_in_range(n, k)) {
        bool even = n % 2 == 0;
        switch (k) {
            case 3: return even ? ekr::scheme_k3_even(n) : ekr::scheme_k3_odd(n);
            case 4: return even ? ekr::scheme_k4_even(n) : ekr::scheme_k4_odd(n);
            default: return even ? ekr::scheme_k5_even(n) : ekr::scheme_k5_odd(n);
        }
    }
    ekr::FeasibilityOptions fopt;
    fopt.threads = threads;
    if (cap > 0) fopt.max_partitions = cap;
    ekr::FeasibilityResult fr = ekr::feasibility_search(n, k, fopt);
    if (lp_info) *lp_info = fr;
    if (fr.status != ekr::FeasibilityResult::Status::feasible)
        throw ekr::UndecidedError("weight search: " + fr.note);
    return fr.scheme;
}

int run_weights(int n, int k, bool search, const std::string& json_path, int threads, int cap) {
    ekr::FeasibilityResult info;
    ekr::WeightScheme scheme = scheme_for(n, k, search, threads, cap, &info);
    std::cout << "weights n=" << n << " k=" << k << ":\n";
    for (const auto& e : scheme.entries)
        std::cout << "  " << e.cycle_type.to_string() << "  " << ekr::rat_to_string(e.omega)
                  << "\n";
    if (search)
        std::cout << "  lp: feasible after " << info.rounds << " rounds, "
                  << info.simplex_iterations << " simplex iterations\n";
    if (!json_path.empty()) {
        ekr::OrderedJson j;
        j["n"] = n;
        j["k"] = k;
        j["weights"] = ekr::scheme_json(scheme);
        if (search) {
            j["lp_status"] = "feasible";
            j["lp_iterations"] = info.simplex_iterations;
            j["lp_rounds"] = info.rounds;
        }
        write_json(json_path, j);
    }
    return kExitOk;
}

int run_spectrum(int n, int k, bool search, const std::string& json_path, int threads, int cap) {
    ekr::WeightScheme scheme = scheme_for(n, k, search, threads, cap, nullptr);
    ekr::Spectrum sp = ekr::full_spectrum(scheme, threads);
    std::cout << "spectrum n=" << n << " k=" << k << ": " << sp.shapes.size()
              << " eigenvalues, max " << ekr::rat_to_string(sp.max_value) << ", min "
              << ekr::rat_to_string(sp.min_value) << "\n";
    std::cout << "  max attained at:";
    for (const auto& p : sp.argmax) std::cout << " " << p.to_string();
    std::cout << "\n  min attained at:";
    for (const auto& p : sp.argmin) std::cout << " " << p.to_string();
    std::cout << "\n";
    if (!json_path.empty()) write_json(json_path, ekr::spectrum_json(sp));
    return kExitOk;
}

int run_chartab(int n, const std::string& case_name, const std::string& json_path) {
    ekr::CharGrid grid = ekr::character_grid(case_name, n);
    std::size_t width = 14;
    std::cout << std::left << std::setw(static_cast<int>(width)) << "shape";
    for (const auto& c : grid.classes)
        std::cout << std::setw(static_cast<int>(width)) << c.to_string();
    std::cout << "\n";
    for (std::size_t r = 0; r < grid.shapes.size(); ++r) {
        std::cout << std::setw(static_cast<int>(width)) << grid.shapes[r].to_string();
        for (const auto& v : grid.values[r])
            std::cout << std::setw(static_cast<int>(width)) << v.str();
        std::cout << "\n";
    }
    if (!json_path.empty()) {
        ekr::OrderedJson cells = ekr::OrderedJson::array();
        for (std::size_t r = 0; r < grid.shapes.size(); ++r)
            for (std::size_t c = 0; c < grid.classes.size(); ++c)
                cells.push_back({{"shape", grid.shapes[r].parts()},
                                 {"class", grid.classes[c].parts()},
                                 {"value", grid.values[r][c].str()}});
        ekr::OrderedJson j;
        j["case"] = case_name;
        j["n"] = n;
        j["cells"] = cells;
        write_json(json_path, j);
    }
    return kExitOk;
}

int run_brute(const std::string& group_name, int n, int k, bool witness,
              const std::string& json_path, int cap) {
    ekr::Group group = group_name == "alt" ? ekr::Group::alt : ekr::Group::sym;
    ekr::DerangementGraph graph(group, n, k, cap > 0 ? static_cast<std::size_t>(cap) : 5040);
    ekr::CocliqueWitness w = ekr::max_coclique(graph);
    ekr::Rat density = ekr::Rat(ekr::Int(w.size)) * ekr::Rat(ekr::factorial(n)) /
                       (ekr::Rat(ekr::Int(graph.num_vertices())) *
                        ekr::Rat(ekr::factorial(k) * ekr::factorial(n - k)));
    std::cout << "brute " << group_name << "(" << n << ") on " << k << "-subsets: "
              << graph.num_vertices() << " vertices, degree " << graph.degree() << "\n";
    std::cout << "  derangement classes:";
    for (const auto& t : graph.derangement_types()) std::cout << " " << t.to_string();
    std::cout << "\n  alpha = " << w.size << " (canonical: " << (w.is_canonical ? "yes" : "no")
              << "), intersection density = " << ekr::rat_to_string(density) << "\n";
    if (witness) {
        std::cout << "  witness:";
        for (const auto& m : w.members) std::cout << " " << ekr::perm_to_string(m);
        std::cout << "\n";
    }
    if (!json_path.empty()) {
        ekr::OrderedJson j;
        j["group"] = group_name;
        j["n"] = n;
        j["k"] = k;
        j["num_vertices"] = graph.num_vertices();
        j["degree"] = graph.degree();
        j["alpha"] = w.size;
        j["intersection_density"] = ekr::rat_to_string(density);
        j["witness"] = witness ? ekr::witness_json(w)["members"] : ekr::OrderedJson(nullptr);
        j["is_canonical"] = w.is_canonical;
        write_json(json_path, j);
    }
    return kExitOk;
}

int run_sweep(int k, int n_from, int n_to, const std::string& json_path, int threads, int cap) {
    int worst = kExitOk;
    ekr::OrderedJson rows = ekr::OrderedJson::array();
    std::cout << std::left << std::setw(6) << "n" << std::setw(22) << "scheme" << std::setw(12)
              << "max" << std::setw(8) << "mult" << std::setw(8) << "min" << std::setw(10)
              << "status" << "\n";
    for (int n = n_from; n <= n_to; ++n) {
        std::string status;
        std::string provenance = "-";
        std::string max_s = "-", min_s = "-";
        int mult = 0;
        try {
            ekr::CertifyOptions opt;
            opt.threads = threads;
            if (cap > 0) opt.max_partitions = cap;
            ekr::Certificate cert = ekr::certify(n, k, opt);
            provenance = cert.provenance;
            max_s = ekr::rat_to_string(cert.max_eig);
            min_s = ekr::rat_to_string(cert.min_eig);
            mult = cert.multiplicity;
            status = cert.certified ? "ok" : "FAILED";
            if (!cert.certified) worst = std::max(worst, kExitViolation);
            rows.push_back(ekr::certificate_json(cert));
        } catch (const ekr::UnsupportedError& e) {
            status = "unsupported";
            worst = std::max(worst, kExitUnsupported);
        } catch (const ekr::UndecidedError& e) {
            status = std::string("undecided: ") + e.what();
            worst = std::max(worst, kExitUnsupported);
        }
        std::cout << std::setw(6) << n << std::setw(22) << provenance << std::setw(12) << max_s
                  << std::setw(8) << mult << std::setw(8) << min_s << std::setw(10) << status
                  << "\n";
    }
    if (!json_path.empty()) {
        ekr::OrderedJson j;
        j["k"] = k;
        j["n_from"] = n_from;
        j["n_to"] = n_to;
        j["certificates"] = rows;
        write_json(json_path, j);
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection-density certificates for Sym(n) and Alt(n) on k-subsets"};
    app.require_subcommand(1);

    int n = 0, k = 0, threads = 0, cap = 0;
    int n_from = 0, n_to = 0;
    bool search = false, witness = false;
    std::string json_path, case_name, group_name = "sym";

    auto* c_cert = app.add_subcommand("certify", "Certify intersection density 1 for (n, k)");
    c_cert->add_option("--n", n, "degree n")->required();
    c_cert->add_option("--k", k, "subset size k")->required();
    c_cert->add_option("--json", json_path, "write the certificate as JSON ('-' for stdout)");
    c_cert->add_option("--threads", threads, "worker threads (default: all cores)");
    c_cert->add_option("--cap", cap, "partition-count cap for the LP search");

    auto* c_spec = app.add_subcommand("spectrum", "Full spectrum of the scheme for (n, k)");
    c_spec->add_option("--n", n, "degree n")->required();
    c_spec->add_option("--k", k, "subset size k")->required();
    c_spec->add_flag("--search", search, "force the LP search even in closed-form range");
    c_spec->add_option("--json", json_path, "write the spectrum as JSON");
    c_spec->add_option("--threads", threads, "worker threads");
    c_spec->add_option("--cap", cap, "partition-count cap for the LP search");

    auto* c_chart = app.add_subcommand("chartab", "Character grid for a weighting case");
    c_chart->add_option("--n", n, "degree n")->required();
    c_chart
        ->add_option("--case", case_name,
                     "one of k3-even, k3-odd, k4-even, k4-odd, k5-even, k5-odd")
        ->required();
    c_chart->add_option("--json", json_path, "write the grid as JSON triples");

    auto* c_weights = app.add_subcommand("weights", "Weight scheme for (n, k)");
    c_weights->add_option("--n", n, "degree n")->required();
    c_weights->add_option("--k", k, "subset size k")->required();
    c_weights->add_flag("--search", search, "force the LP search");
    c_weights->add_option("--json", json_path, "write the scheme as JSON");
    c_weights->add_option("--threads", threads, "worker threads");
    c_weights->add_option("--cap", cap, "partition-count cap for the LP search");

    auto* c_brute = app.add_subcommand("brute", "Exact maximum coclique for a small group");
    c_brute->add_option("--group", group_name, "sym or alt")
        ->check(CLI::IsMember({"sym", "alt"}));
    c_brute->add_option("--n", n, "degree n")->required();
    c_brute->add_option("--k", k, "subset size k")->required();
    c_brute->add_flag("--witness", witness, "print the coclique members");
    c_brute->add_option("--json", json_path, "write the result as JSON");
    c_brute->add_option("--cap", cap, "vertex cap (default 5040)");

    auto* c_sweep = app.add_subcommand("sweep", "Certify a range of n for fixed k");
    c_sweep->add_option("--k", k, "subset size k")->required();
    c_sweep->add_option("--n-from", n_from, "first n")->required();
    c_sweep->add_option("--n-to", n_to, "last n")->required();
    c_sweep->add_option("--json", json_path, "write all certificates as JSON");
    c_sweep->add_option("--threads", threads, "worker threads");
    c_sweep->add_option("--cap", cap, "partition-count cap for the LP search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const char* cache_dir = std::getenv("EKR_CACHE_DIR");
    if (cache_dir) ekr::load_character_cache(cache_dir);

    int rc = kExitOk;
    try {
        if (c_cert->parsed()) rc = run_certify(n, k, json_path, threads, cap);
        else if (c_spec->parsed()) rc = run_spectrum(n, k, search, json_path, threads, cap);
        else if (c_chart->parsed()) rc = run_chartab(n, case_name, json_path);
        else if (c_weights->parsed()) rc = run_weights(n, k, search, json_path, threads, cap);
        else if (c_brute->parsed()) rc = run_brute(group_name, n, k, witness, json_path, cap);
        else if (c_sweep->parsed()) rc = run_sweep(k, n_from, n_to, json_path, threads, cap);
    } catch (const ekr::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        rc = kExitUnsupported;
    } catch (const ekr::UndecidedError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        rc = kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitViolation;
    }

    if (cache_dir) ekr::save_character_cache(cache_dir);
    return rc;
}
