#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "derivlab/campaign.hpp"
#include "derivlab/parallel.hpp"
#include "derivlab/scan.hpp"
#include "derivlab/serialize.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitInputError = 2;

using namespace derivlab;

// exhaustive when the finite carrier fits the budget, sampled otherwise
PointSet default_points(const Ring& ring, std::size_t n, Carrier carrier, std::size_t samples,
                        std::uint64_t seed) {
    if (ring.is_finite()) {
        const Int card = ring.cardinality();
        Int total = 1;
        bool fits = true;
        for (std::size_t i = 0; i < carrier_dim(carrier, n) && fits; ++i) {
            total *= card;
            if (total > Int(kExhaustivePointBudget)) fits = false;
        }
        if (fits) return PointSet::exhaustive();
    }
    return PointSet::sampled(samples, seed);
}

void emit(const std::string& text, const std::string& out_path) {
    std::cout << text << std::endl;
    if (!out_path.empty()) write_text_file(out_path, text + "\n");
}

int cmd_check(const std::string& map_path, bool exhaustive, std::size_t samples,
              std::uint64_t seed, bool samples_given, unsigned workers,
              const std::string& out_path) {
    const AdditiveMap f = map_from_json(read_text_file(map_path));
    PointSet pts = exhaustive ? PointSet::exhaustive()
                   : samples_given
                       ? PointSet::sampled(samples, seed)
                       : default_points(f.ring(), f.n(), f.carrier(), samples, seed);
    const Verdict v = f.carrier() == Carrier::FullMatrixAlgebra
                          ? check_local_inner(f, pts, workers)
                          : check_local_inner_jordan(f, pts, workers);
    emit(to_json(v), out_path);
    return v.accepted() ? kExitAccept : kExitReject;
}

int cmd_globalize(const std::string& map_path, std::size_t samples, std::uint64_t seed,
                  unsigned workers, const std::string& out_path) {
    const AdditiveMap f = map_from_json(read_text_file(map_path));
    if (f.carrier() == Carrier::FullMatrixAlgebra) {
        const PointSet pts = default_points(f.ring(), f.n(), f.carrier(), samples, seed);
        const ReconstructReport rep = reconstruct_and_verify(f, pts, workers);
        emit(to_json(rep), out_path);
        return rep.success ? kExitAccept : kExitReject;
    }
    const JordanGlobalizeOutcome rep = globalize_jordan(f);
    emit(to_json(rep), out_path);
    return rep.ok() ? kExitAccept : kExitReject;
}

int cmd_scan(const std::string& ring_text, std::size_t n, const std::string& algebra,
             unsigned workers, const std::string& out_path) {
    ScanConfig cfg;
    cfg.ring = ring_spec_from_string(ring_text);
    cfg.n = n;
    cfg.algebra = algebra == "jordan" ? Carrier::JordanSymmetric : Carrier::FullMatrixAlgebra;
    cfg.workers = workers;
    const ScanReport rep = run_scan(cfg);
    emit(to_json(rep), out_path);
    const bool classification_clean =
        rep.sets_equal && rep.accepted_all_derivations && rep.accepted_all_reconstruct;
    return classification_clean ? kExitAccept : kExitReject;
}

int cmd_campaign(const std::string& config_path, unsigned workers) {
    CampaignConfig cfg = campaign_config_from_json(read_text_file(config_path));
    if (workers != 0) cfg.workers = workers;
    const CampaignReport rep = run_campaign(cfg);
    const std::string text = to_json(rep);
    std::cout << text << std::endl;
    if (!cfg.output.empty()) write_text_file(cfg.output, text + "\n");
    return kExitAccept;
}

int cmd_gen(const std::string& flavor, const std::string& ring_text, std::size_t n,
            const std::string& algebra, std::uint64_t seed, const std::string& out_path) {
    const Ring ring(ring_spec_from_string(ring_text));
    const Carrier carrier =
        algebra == "jordan" ? Carrier::JordanSymmetric : Carrier::FullMatrixAlgebra;
    Rng rng(seed);
    const AdditiveMap f = flavor == "inner" ? random_inner_map(ring, n, carrier, rng)
                                            : random_patched_map(ring, n, carrier, rng);
    const std::string text = to_json(f);
    if (out_path.empty()) {
        std::cout << text << std::endl;
    } else {
        write_text_file(out_path, text + "\n");
    }
    return kExitAccept;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"derivlab: local inner derivation checking, globalization and exhaustive "
                 "classification scans over exact rings"};
    app.require_subcommand(1);

    unsigned workers = 0;
    app.add_option("--workers", workers,
                   "worker threads (default: hardware; DERIVLAB_WORKERS overrides)");

    std::string map_path, out_path;
    bool exhaustive = false;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "decide whether a map file is a local inner derivation");
    check->add_option("--map", map_path, "map file")->required();
    auto* exh_flag = check->add_flag("--exhaustive", exhaustive, "check every point of the finite algebra");
    auto* samples_opt = check->add_option("--samples", samples, "sampled point count");
    check->add_option("--seed", seed, "sampling seed");
    exh_flag->excludes(samples_opt);

    auto* globalize = app.add_subcommand("globalize", "reconstruct a single implementer from a map file");
    globalize->add_option("--map", map_path, "map file")->required();
    globalize->add_option("--samples", samples, "verification point count for infinite rings");
    globalize->add_option("--seed", seed, "sampling seed");

    std::string ring_text, algebra = "full";
    std::size_t dim = 2;
    auto* scan = app.add_subcommand("scan", "enumerate and classify every linear self-map");
    scan->add_option("--ring", ring_text, "ring spec, e.g. 'gf(2)', 'z/4' or JSON")->required();
    scan->add_option("--n", dim, "matrix dimension")->required();
    scan->add_option("--algebra", algebra, "full | jordan")
        ->check(CLI::IsMember({"full", "jordan"}));

    std::string config_path;
    auto* campaign = app.add_subcommand("campaign", "run a reproducible batch from a config file");
    campaign->add_option("--config", config_path, "campaign config file")->required();

    std::string flavor;
    auto* gen = app.add_subcommand("gen", "generate a map file");
    gen->add_option("flavor", flavor, "inner | patched")
        ->required()
        ->check(CLI::IsMember({"inner", "patched"}));
    gen->add_option("--ring", ring_text, "ring spec")->required();
    gen->add_option("--n", dim, "matrix dimension")->required();
    gen->add_option("--algebra", algebra, "full | jordan")
        ->check(CLI::IsMember({"full", "jordan"}));
    gen->add_option("--seed", seed, "generation seed");
    gen->add_option("--out", out_path, "output path (default: stdout)");

    check->add_option("--out", out_path, "also write the report here");
    globalize->add_option("--out", out_path, "also write the report here");
    scan->add_option("--out", out_path, "also write the report here");

    CLI11_PARSE(app, argc, argv);

    const unsigned resolved_workers = derivlab::effective_workers(workers);
    try {
        if (check->parsed()) {
            return cmd_check(map_path, exhaustive, samples, seed, samples_opt->count() > 0,
                             resolved_workers, out_path);
        }
        if (globalize->parsed()) {
            return cmd_globalize(map_path, samples, seed, resolved_workers, out_path);
        }
        if (scan->parsed()) return cmd_scan(ring_text, dim, algebra, resolved_workers, out_path);
        if (campaign->parsed()) return cmd_campaign(config_path, resolved_workers);
        if (gen->parsed()) return cmd_gen(flavor, ring_text, dim, algebra, seed, out_path);
    } catch (const derivlab::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInputError;
    }
    return kExitInputError;
}
