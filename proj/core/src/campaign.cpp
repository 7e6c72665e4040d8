#include "derivlab/campaign.hpp"

#include <chrono>

#include "check_engine.hpp"
#include "derivlab/parallel.hpp"
#include "derivlab/serialize.hpp"
#include "json_io.hpp"

namespace derivlab {

AdditiveMap random_inner_map(const Ring& ring, std::size_t n, Carrier carrier, Rng& rng) {
    if (carrier == Carrier::FullMatrixAlgebra) {
        return map_from_inner(random_matrix(ring, n, n, rng));
    }
    return jordan_map_from_skew(random_skew(ring, n, rng));
}

AdditiveMap random_patched_map(const Ring& ring, std::size_t n, Carrier carrier, Rng& rng) {
    const unsigned k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(carrier, n) * k;
    std::vector<Matrix> implementers;
    implementers.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        implementers.push_back(carrier == Carrier::FullMatrixAlgebra ? random_matrix(ring, n, n, rng)
                                                                     : random_skew(ring, n, rng));
    }
    return carrier == Carrier::FullMatrixAlgebra
               ? gen_basis_patched(ring, n, implementers)
               : gen_jordan_basis_patched(ring, n, implementers);
}

CampaignConfig campaign_config_from_json(const std::string& text) {
    detail::Json j = detail::Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed campaign config");
    try {
        return detail::campaign_config_from_parsed(j);
    } catch (const detail::Json::exception& e) {
        throw ParseError(e.what());
    }
}

namespace detail {

CampaignConfig campaign_config_from_parsed(const Json& j) {
    CampaignConfig cfg;
    if (!j.contains("ring") || !j.contains("n")) {
        throw ParseError("campaign config needs \"ring\" and \"n\"");
    }
    cfg.ring = detail::ring_spec_from(j["ring"]);
    cfg.n = j["n"].get<std::size_t>();
    if (j.contains("algebra")) {
        cfg.algebra = detail::carrier_from_name(j["algebra"].get<std::string>());
    }
    if (j.contains("mode")) {
        const auto& mode = j["mode"];
        if (mode.is_string() && mode.get<std::string>() == "exhaustive") {
            cfg.exhaustive = true;
        } else if (mode.is_object() && mode.contains("sampled")) {
            cfg.exhaustive = false;
            cfg.samples = mode["sampled"].get<std::size_t>();
        } else {
            throw ParseError("mode must be \"exhaustive\" or {\"sampled\": N}");
        }
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<unsigned>();
    if (j.contains("generators")) {
        if (!j["generators"].is_array()) throw ParseError("generators must be an array");
        for (const auto& g : j["generators"]) {
            GeneratorSpec spec;
            const std::string kind = g.value("kind", "");
            if (kind == "inner-random") {
                spec.kind = GeneratorSpec::Kind::InnerRandom;
                spec.count = g.value("count", std::size_t(0));
            } else if (kind == "basis-patched-random") {
                spec.kind = GeneratorSpec::Kind::BasisPatchedRandom;
                spec.count = g.value("count", std::size_t(0));
            } else if (kind == "explicit-files") {
                spec.kind = GeneratorSpec::Kind::ExplicitFiles;
                if (g.contains("paths")) {
                    for (const auto& p : g["paths"]) spec.paths.push_back(p.get<std::string>());
                }
            } else {
                throw ParseError("unknown generator kind: " + kind);
            }
            cfg.generators.push_back(std::move(spec));
        }
    }
    return cfg;
}

} // namespace detail

CampaignReport run_campaign(const CampaignConfig& config) {
    const Ring ring(config.ring);
    CampaignReport rep;
    rep.config = config;
    rep.variant = jordan_variant(ring);

    // generation is sequential and seed-driven; classification may be
    // parallel without affecting the report
    struct Pending {
        AdditiveMap map;
        std::string generator;
    };
    std::vector<Pending> pending;
    Rng rng(config.seed);
    for (const GeneratorSpec& gen : config.generators) {
        switch (gen.kind) {
            case GeneratorSpec::Kind::InnerRandom:
                for (std::size_t i = 0; i < gen.count; ++i) {
                    pending.push_back({random_inner_map(ring, config.n, config.algebra, rng),
                                       "inner-random"});
                }
                break;
            case GeneratorSpec::Kind::BasisPatchedRandom:
                for (std::size_t i = 0; i < gen.count; ++i) {
                    pending.push_back({random_patched_map(ring, config.n, config.algebra, rng),
                                       "basis-patched-random"});
                }
                break;
            case GeneratorSpec::Kind::ExplicitFiles:
                for (const std::string& path : gen.paths) {
                    AdditiveMap f = map_from_json(read_text_file(path));
                    if (!f.ring().same(ring) || f.n() != config.n || f.carrier() != config.algebra) {
                        throw ParseError("map file does not match the campaign ring/n/algebra: " + path);
                    }
                    pending.push_back({std::move(f), "explicit-files"});
                }
                break;
        }
    }

    const PointSet pts = config.exhaustive ? PointSet::exhaustive()
                                           : PointSet::sampled(config.samples, config.seed);
    if (config.exhaustive) {
        // fail early with the budget diagnosis rather than per map
        detail::exhaustive_point_count(ring, config.n, config.algebra);
    }

    std::vector<MapRecord> records(pending.size());
    parallel_chunks(pending.size(), effective_workers(config.workers),
                    [&](std::size_t begin, std::size_t end) {
                        for (std::size_t i = begin; i < end; ++i) {
                            const auto t0 = std::chrono::steady_clock::now();
                            MapRecord rec;
                            rec.index = i;
                            rec.generator = pending[i].generator;
                            const AdditiveMap& f = pending[i].map;
                            if (config.algebra == Carrier::FullMatrixAlgebra) {
                                rec.verdict = check_local_inner(f, pts, 1);
                                rec.reconstruct = reconstruct_and_verify(f, pts, 1);
                            } else {
                                rec.verdict = check_local_inner_jordan(f, pts, 1);
                                rec.jordan_result = globalize_jordan(f);
                            }
                            rec.timing_ms = std::chrono::duration<double, std::milli>(
                                                std::chrono::steady_clock::now() - t0)
                                                .count();
                            records[i] = std::move(rec);
                        }
                    });
    rep.records = std::move(records);

    for (const MapRecord& rec : rep.records) {
        if (rec.verdict.accepted()) {
            ++rep.accepted;
        } else {
            ++rep.rejected;
        }
        const bool glob_ok = (rec.reconstruct && rec.reconstruct->success) ||
                             (rec.jordan_result && rec.jordan_result->ok());
        if (glob_ok) ++rep.globalize_success;
    }
    return rep;
}

std::string to_json(const CampaignReport& rep) {
    detail::Json j;
    detail::Json cfg;
    cfg["ring"] = detail::ring_spec_json(rep.config.ring);
    cfg["n"] = rep.config.n;
    cfg["algebra"] = detail::carrier_name(rep.config.algebra);
    cfg["mode"] = rep.config.exhaustive ? detail::Json("exhaustive")
                                        : detail::Json{{"sampled", rep.config.samples}};
    cfg["seed"] = rep.config.seed;
    if (!rep.config.output.empty()) cfg["output"] = rep.config.output;
    detail::Json gens = detail::Json::array();
    for (const GeneratorSpec& g : rep.config.generators) {
        detail::Json gj;
        switch (g.kind) {
            case GeneratorSpec::Kind::InnerRandom:
                gj["kind"] = "inner-random";
                gj["count"] = g.count;
                break;
            case GeneratorSpec::Kind::BasisPatchedRandom:
                gj["kind"] = "basis-patched-random";
                gj["count"] = g.count;
                break;
            case GeneratorSpec::Kind::ExplicitFiles:
                gj["kind"] = "explicit-files";
                gj["paths"] = g.paths;
                break;
        }
        gens.push_back(std::move(gj));
    }
    cfg["generators"] = std::move(gens);
    j["config"] = std::move(cfg);

    detail::Json results = detail::Json::array();
    for (const MapRecord& rec : rep.records) {
        detail::Json rj;
        rj["index"] = rec.index;
        rj["generator"] = rec.generator;
        rj["verdict"] = detail::verdict_json(rec.verdict);
        if (rec.reconstruct) rj["globalize"] = detail::reconstruct_json(*rec.reconstruct);
        if (rec.jordan_result) rj["globalize"] = detail::jordan_outcome_json(*rec.jordan_result);
        rj["timing_ms"] = rec.timing_ms;
        results.push_back(std::move(rj));
    }
    j["results"] = std::move(results);

    j["aggregate"] = {{"accepted", rep.accepted},
                      {"rejected", rep.rejected},
                      {"globalize_success", rep.globalize_success}};
    j["jordan_product_variant"] = rep.variant == JordanVariant::Half ? "half" : "doubled";
    j["seed"] = rep.config.seed;
    j["tool_version"] = DERIVLAB_VERSION;
    return j.dump(2);
}

} // namespace derivlab
