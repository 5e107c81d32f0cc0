#include "instance.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "checks.hpp"

namespace functorlab {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Parsed {
    Json doc;
    std::string raw;
    RingTag coeff;
    uint64_t cap = 1u << 16;
};

Parsed parse_file(const std::string& path) {
    Parsed p;
    std::ifstream in(path);
    check(in.good(), ErrKind::Parse, "cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    p.raw = ss.str();
    try {
        p.doc = Json::parse(p.raw);
    } catch (const std::exception& e) {
        fail(ErrKind::Parse, std::string("instance does not parse: ") + e.what());
    }
    check(p.doc.is_object(), ErrKind::Parse, "instance root must be an object");
    check(p.doc.contains("coefficients"), ErrKind::Parse, "missing coefficients section");
    const Json& co = p.doc["coefficients"];
    std::string fld = co.value("field", "");
    if (fld == "Q")
        p.coeff = RingTag::rationals();
    else if (fld == "Fp" || fld == "F") {
        check(co.contains("p"), ErrKind::Parse, "coefficients.p missing");
        p.coeff = RingTag::fp(co["p"].template get<uint32_t>());
    } else
        fail(ErrKind::Parse, "coefficients.field must be Q or Fp");
    if (p.doc.contains("cap"))
        p.cap = p.doc["cap"].template get<uint64_t>();
    if (const char* env = std::getenv("FUNCTORLAB_CAP"))
        p.cap = uint64_t(std::stoull(env));
    return p;
}

/* fully resolved instance data for one coefficient field */
template <class F> struct World {
    F k;
    uint64_t cap = 1u << 16;
    std::map<std::string, FiniteRing> rings;
    std::map<std::string, CatPtr> cats;
    std::map<std::string, std::shared_ptr<const TruncCat>> base_cats;
    std::map<std::string, RingMap> ring_maps;
    std::map<std::string, AddFunctorPtr> functor_maps;
    std::map<std::string, FPtr<F>> functors;
};

template <class F> World<F> build_world(const Parsed& p, const F& k) {
    World<F> w;
    w.k = k;
    w.cap = p.cap;
    const Json& doc = p.doc;

    if (doc.contains("rings"))
        for (auto& [name, spec] : doc["rings"].items()) {
            if (spec.contains("zmod"))
                w.rings.emplace(name, FiniteRing::zmod(spec["zmod"].template get<uint32_t>()));
            else if (spec.contains("fp"))
                w.rings.emplace(name, FiniteRing::fp(spec["fp"].template get<uint32_t>()));
            else if (spec.contains("product")) {
                std::vector<std::string> parts = spec["product"].template get<std::vector<std::string>>();
                check(parts.size() >= 2, ErrKind::Parse, "ring product needs two factors");
                FiniteRing r = w.rings.at(parts[0]);
                for (size_t i = 1; i < parts.size(); ++i)
                    r = FiniteRing::product(r, w.rings.at(parts[i]));
                w.rings.emplace(name, r);
            } else
                fail(ErrKind::Parse, "ring " + name + ": unknown presentation");
        }

    if (doc.contains("categories"))
        for (auto& [name, spec] : doc["categories"].items()) {
            if (spec.contains("ring")) {
                auto base = TruncCat::make(w.rings.at(spec["ring"].template get<std::string>()),
                                           spec["trunc"].template get<uint32_t>(), w.cap);
                w.base_cats.emplace(name, base);
                w.cats.emplace(name, base);
            } else if (spec.contains("product")) {
                auto parts = spec["product"].template get<std::vector<std::string>>();
                check(parts.size() == 2, ErrKind::Parse, "category product takes two names");
                w.cats.emplace(name, product_cat(w.cats.at(parts[0]), w.cats.at(parts[1])));
            } else if (spec.contains("opposite")) {
                w.cats.emplace(name,
                               opposite_cat(w.cats.at(spec["opposite"].template get<std::string>())));
            } else
                fail(ErrKind::Parse, "category " + name + ": unknown kind");
        }

    if (doc.contains("ring_maps"))
        for (auto& [name, spec] : doc["ring_maps"].items()) {
            const FiniteRing& from = w.rings.at(spec["from"].template get<std::string>());
            std::string kind = spec.value("kind", "reduction");
            if (kind == "reduction") {
                const FiniteRing& to = w.rings.at(spec["to"].template get<std::string>());
                w.ring_maps.emplace(name, RingMap::reduction(from, to));
            } else if (kind == "projection") {
                w.ring_maps.emplace(
                    name, RingMap::projection(from, spec["keep"].template get<std::vector<uint32_t>>()));
            } else if (kind == "identity") {
                w.ring_maps.emplace(name, RingMap::identity(from));
            } else
                fail(ErrKind::Parse, "ring map " + name + ": unknown kind " + kind);
        }

    if (doc.contains("functor_maps"))
        for (auto& [name, spec] : doc["functor_maps"].items()) {
            if (spec.contains("quotient")) {
                const Json& q = spec["quotient"];
                w.functor_maps.emplace(
                    name, quotient_functor(w.base_cats.at(q["src"].template get<std::string>()),
                                           w.base_cats.at(q["tgt"].template get<std::string>()),
                                           w.ring_maps.at(q["ring_map"].template get<std::string>())));
            } else if (spec.contains("diagonal")) {
                w.functor_maps.emplace(
                    name, diagonal_functor(w.cats.at(spec["diagonal"].template get<std::string>())));
            } else if (spec.contains("sum")) {
                const Json& q = spec["sum"];
                w.functor_maps.emplace(name,
                                       sum_functor(w.base_cats.at(q["src"].template get<std::string>()),
                                                   w.base_cats.at(q["tgt"].template get<std::string>())));
            } else if (spec.contains("inclusion")) {
                const Json& q = spec["inclusion"];
                w.functor_maps.emplace(
                    name, inclusion_functor(w.base_cats.at(q["src"].template get<std::string>()),
                                            w.base_cats.at(q["tgt"].template get<std::string>())));
            } else if (spec.contains("identity")) {
                w.functor_maps.emplace(
                    name, identity_functor(w.cats.at(spec["identity"].template get<std::string>())));
            } else if (spec.contains("opposite")) {
                w.functor_maps.emplace(
                    name, w.functor_maps.at(spec["opposite"].template get<std::string>())->opposite());
            } else
                fail(ErrKind::Parse, "functor map " + name + ": unknown kind");
        }

    if (doc.contains("functors"))
        for (auto& [name, spec] : doc["functors"].items()) {
            FPtr<F> f;
            if (spec.contains("standard_projective")) {
                const Json& q = spec["standard_projective"];
                f = standard_projective(w.k, w.cats.at(q["cat"].template get<std::string>()),
                                        q["object"].template get<uint32_t>());
            } else if (spec.contains("additive_standard")) {
                const Json& q = spec["additive_standard"];
                f = additive_standard(w.k, w.cats.at(q["cat"].template get<std::string>()),
                                      q["object"].template get<uint32_t>());
            } else if (spec.contains("linearize_hom_quotient")) {
                // k[Hom_target(c, phi(-))] = restrict(phi, P^c of the target)
                const Json& q = spec["linearize_hom_quotient"];
                auto phi = w.functor_maps.at(q["along"].template get<std::string>());
                f = restrict_functor(
                    phi, standard_projective(w.k, phi->tgt(), q["object"].template get<uint32_t>()));
            } else if (spec.contains("constant")) {
                const Json& q = spec["constant"];
                f = constant_functor(w.k, w.cats.at(q["cat"].template get<std::string>()),
                                     q["dim"].template get<uint32_t>());
            } else if (spec.contains("restrict")) {
                const Json& q = spec["restrict"];
                f = restrict_functor(w.functor_maps.at(q["along"].template get<std::string>()),
                                     w.functors.at(q["arg"].template get<std::string>()));
            } else if (spec.contains("tensor")) {
                auto parts = spec["tensor"].template get<std::vector<std::string>>();
                f = w.functors.at(parts[0]);
                for (size_t i = 1; i < parts.size(); ++i)
                    f = pointwise_tensor(f, w.functors.at(parts[i]));
            } else if (spec.contains("external_tensor")) {
                auto parts = spec["external_tensor"].template get<std::vector<std::string>>();
                check(parts.size() == 2, ErrKind::Parse, "external tensor takes two names");
                f = external_tensor(w.functors.at(parts[0]), w.functors.at(parts[1]));
            } else if (spec.contains("reduced")) {
                f = reduced_part<F>(w.functors.at(spec["reduced"].template get<std::string>()));
            } else if (spec.contains("dual")) {
                f = dual_functor<F>(w.functors.at(spec["dual"].template get<std::string>()));
            } else
                fail(ErrKind::Parse, "functor " + name + ": unknown constructor");
            w.functors.emplace(name, f);
        }
    return w;
}

struct JobResult {
    Json body;
    std::string table;
    int exit_code = 0;
    double wall_ms = 0;
};

int verdict_exit(const std::string& v) {
    if (v == "confirmed")
        return 0;
    if (v == "refuted-at-instance")
        return 4;
    if (v == "hypotheses-unmet")
        return 5;
    return 3; // inconclusive-sizing
}

Json summary_json(const HomologySummary& h) {
    Json out = Json::array();
    for (int i = h.lo; i <= h.hi; ++i) {
        Json d;
        d["degree"] = i;
        d["free_rank"] = h.at(i).free_rank;
        Json tor = Json::array();
        for (const auto& t : h.at(i).torsion)
            tor.push_back(t.get_str());
        if (!tor.empty())
            d["torsion"] = tor;
        out.push_back(d);
    }
    return out;
}

template <class F>
JobResult run_one_job(const World<F>& w, const Json& job, int n_max_override) {
    JobResult r;
    const F& k = w.k;
    std::string op = job.at("op").template get<std::string>();
    EngineOpts opts;
    opts.n_max = uint32_t(job.value("n_max", 3));
    if (n_max_override >= 0)
        opts.n_max = uint32_t(n_max_override);
    opts.bar_hard_cap = w.cap * 64;

    auto out_report = [&](const TheoremReport& rep) {
        r.body = rep.to_json();
        r.table = rep.table();
        r.exit_code = verdict_exit(rep.verdict);
    };

    if (op == "tor" || op == "ext") {
        auto f = w.functors.at(job.at("F").template get<std::string>());
        auto g = w.functors.at(job.at("G").template get<std::string>());
        TorExtResult<F> res =
            op == "tor" ? tor_over_cat<F>(f, g, opts) : ext_over_cat<F>(f, g, opts);
        r.body["op"] = op;
        r.body["F"] = f->name;
        r.body["G"] = g->name;
        r.body["route"] = res.route;
        r.body["summary"] = summary_json(res.summary);
        r.table = op + "(" + f->name + ", " + g->name + "): " + res.summary.str() + "\n";
    } else if (op == "hom") {
        auto f = w.functors.at(job.at("F").template get<std::string>());
        auto g = w.functors.at(job.at("G").template get<std::string>());
        auto hs = hom_space(*f, *g);
        r.body["op"] = op;
        r.body["dim"] = hs.dim;
        r.table = "hom(" + f->name + ", " + g->name + ") dim = " + std::to_string(hs.dim) + "\n";
    } else if (op == "tensor") {
        auto f = w.functors.at(job.at("F").template get<std::string>());
        auto g = w.functors.at(job.at("G").template get<std::string>());
        auto t = tensor_over_cat(*f, *g);
        r.body["op"] = op;
        r.body["dim"] = t.dim;
        r.table =
            "tensor(" + f->name + ", " + g->name + ") dim = " + std::to_string(t.dim) + "\n";
    } else if (op == "cross_effect") {
        auto f = w.functors.at(job.at("F").template get<std::string>());
        auto tuple = job.at("tuple").template get<std::vector<uint32_t>>();
        auto rep = cross_effect(*f, job.at("d").template get<uint32_t>(), tuple);
        r.body["op"] = op;
        r.body["cr_dim"] = rep.cr_dim;
        r.body["total_dim"] = rep.total_dim;
        r.body["dim_at_zero"] = rep.dim_f0;
        r.body["identity_holds"] = rep.identity_holds;
        r.table = "cr_" + std::to_string(rep.d) + " " + f->name + " dim = " +
                  std::to_string(rep.cr_dim) + "\n";
    } else if (op == "poly_degree") {
        auto f = w.functors.at(job.at("F").template get<std::string>());
        auto pd = poly_degree(*f, job.at("bound").template get<uint32_t>());
        r.body["op"] = op;
        r.body["bounded"] = pd.bounded;
        if (pd.bounded)
            r.body["degree"] = pd.degree;
        r.body["window"] = pd.window;
        r.table = "poly_degree(" + f->name + ") = " +
                  (pd.bounded ? std::to_string(pd.degree) : ">= " + std::to_string(pd.bound)) +
                  " on " + pd.window + "\n";
    } else if (op == "check:excision") {
        auto phi = w.functor_maps.at(job.at("along").template get<std::string>());
        auto rep = check_excision<F>(phi, w.functors.at(job.at("Fop").template get<std::string>()),
                                     w.functors.at(job.at("F").template get<std::string>()),
                                     w.functors.at(job.at("G").template get<std::string>()), opts);
        out_report(rep);
    } else if (op == "check:general-criterion") {
        auto rep = check_general_criterion<F>(
            w.base_cats.at(job.at("catA").template get<std::string>()),
            w.base_cats.at(job.at("catB").template get<std::string>()),
            w.ring_maps.at(job.at("ring_map").template get<std::string>()), job.at("e").template get<uint32_t>(),
            opts);
        out_report(rep);
    } else if (op == "check:poly-excision") {
        auto rep = check_poly_excision<F>(w.functor_maps.at(job.at("along").template get<std::string>()),
                                          w.functors.at(job.at("Gop").template get<std::string>()),
                                          w.functors.at(job.at("G").template get<std::string>()),
                                          w.functors.at(job.at("F").template get<std::string>()),
                                          job.value("degree_bound", 3u), opts);
        out_report(rep);
    } else if (op == "check:pirashvili") {
        std::vector<FPtr<F>> reduced;
        for (const auto& name : job.at("reduced").template get<std::vector<std::string>>())
            reduced.push_back(w.functors.at(name));
        auto rep =
            check_pirashvili<F>(w.functors.at(job.at("F").template get<std::string>()), reduced, opts);
        out_report(rep);
    } else if (op == "check:kunneth") {
        auto rep = check_kunneth<F>(w.functors.at(job.at("F").template get<std::string>()),
                                    w.functors.at(job.at("H").template get<std::string>()),
                                    w.functors.at(job.at("G").template get<std::string>()),
                                    w.functors.at(job.at("K").template get<std::string>()), opts);
        out_report(rep);
    } else if (op == "check:sum-diagonal") {
        auto rep = check_sum_diagonal<F>(w.base_cats.at(job.at("small").template get<std::string>()),
                                         w.base_cats.at(job.at("big").template get<std::string>()),
                                         w.functors.at(job.at("F").template get<std::string>()),
                                         w.functors.at(job.at("G").template get<std::string>()), opts);
        out_report(rep);
    } else if (op == "check:separation") {
        auto rep = check_separation<F>(w.functors.at(job.at("B").template get<std::string>()),
                                       w.functors.at(job.at("C").template get<std::string>()),
                                       w.functor_maps.at(job.at("along").template get<std::string>()),
                                       job.at("degree_bound").template get<uint32_t>(), opts);
        out_report(rep);
    } else if (op == "check:semisimple-vanishing") {
        auto rep = check_semisimple_vanishing<F>(
            w.functor_maps.at(job.at("along").template get<std::string>()),
            w.functors.at(job.at("Fop").template get<std::string>()),
            w.functors.at(job.at("F").template get<std::string>()),
            w.functors.at(job.at("G").template get<std::string>()), opts);
        out_report(rep);
    } else if (op == "check:bifunctor-vanishing") {
        auto rep = check_bifunctor_vanishing<F>(w.functors.at(job.at("B").template get<std::string>()),
                                                w.functors.at(job.at("C").template get<std::string>()),
                                                opts);
        out_report(rep);
    } else if (op == "check:em-vanishing") {
        auto rep = check_em_vanishing<F>(job.at("orders").template get<std::vector<uint64_t>>(),
                                         job.at("n").template get<uint32_t>(),
                                         job.at("T").template get<uint32_t>(), w.cap);
        out_report(rep);
    } else if (op == "check:local-hurewicz") {
        auto x = em_space(job.at("orders").template get<std::vector<uint64_t>>(),
                          job.at("n").template get<uint32_t>(), job.at("T").template get<uint32_t>());
        auto rep = check_local_hurewicz<F>(x, job.at("e").template get<uint32_t>(), w.cap);
        out_report(rep);
    } else if (op == "homotopy") {
        auto x = em_space(job.at("orders").template get<std::vector<uint64_t>>(),
                          job.at("n").template get<uint32_t>(), job.at("T").template get<uint32_t>());
        uint32_t max_i = job.at("max_i").template get<uint32_t>();
        std::string lin = job.value("linearize", "none");
        r.body["op"] = op;
        if (lin == "none") {
            auto pi = homotopy_groups(x, max_i);
            r.body["pi"] = summary_json(pi.summary);
            r.table = "pi_*: " + pi.summary.str() + "\n";
        } else if (lin == "Z") {
            auto z = linearize_z(x, max_i, w.cap);
            r.body["pi"] = summary_json(z.pi.summary);
            r.table = "pi_* Z[X]: " + z.pi.summary.str() + "\n";
        } else {
            auto dims = linearized_pi_dims(k, x, max_i, w.cap);
            Json arr = Json::array();
            std::string t;
            for (uint32_t i = 0; i < dims.size(); ++i) {
                arr.push_back(dims[i]);
                t += "pi_" + std::to_string(i) + " dim " + std::to_string(dims[i]) +
                     (i + 1 < dims.size() ? "; " : "");
            }
            r.body["pi_dims"] = arr;
            r.table = "pi_* k[X]: " + t + "\n";
        }
    } else if (op == "hurewicz") {
        auto x = em_space(job.at("orders").template get<std::vector<uint64_t>>(),
                          job.at("n").template get<uint32_t>(), job.at("T").template get<uint32_t>());
        auto rep = hurewicz_map(x, job.at("max_i").template get<uint32_t>(), w.cap);
        r.body["op"] = op;
        Json degs = Json::array();
        bool all_split = true;
        for (uint32_t i = 0; i < rep.degs.size(); ++i) {
            Json d;
            d["degree"] = i;
            d["split_injective"] = rep.degs[i].split_injective;
            d["iso"] = rep.degs[i].iso;
            degs.push_back(d);
            all_split = all_split && rep.degs[i].split_injective;
        }
        r.body["degrees"] = degs;
        r.table = std::string("hurewicz split injective: ") + (all_split ? "yes" : "NO") + "\n";
        if (!all_split)
            r.exit_code = 4;
    } else {
        fail(ErrKind::Parse, "unknown job op: " + op);
    }
    return r;
}

template <class F>
std::vector<JobResult> run_all(const Parsed& p, const F& k, const RunFlags& flags) {
    World<F> w = build_world(p, k);
    if (flags.cap_override > 0)
        w.cap = uint64_t(flags.cap_override);
    const Json& jobs = p.doc.value("jobs", Json::array());
    std::vector<JobResult> results(jobs.size());

    auto run_idx = [&](size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        JobResult jr;
        try {
            jr = run_one_job<F>(w, jobs[i], flags.n_max_override);
        } catch (const Error& e) {
            jr.body["op"] = jobs[i].value("op", "?");
            jr.body["error"] = e.what();
            jr.table = std::string("error: ") + e.what() + "\n";
            jr.exit_code =
                e.kind() == ErrKind::TooLarge || e.kind() == ErrKind::TruncationBound ? 3 : 2;
        }
        jr.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        results[i] = std::move(jr);
    };

    if (flags.jobs <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i)
            run_idx(i);
    } else {
        std::vector<std::future<void>> futs;
        auto next = std::make_shared<std::atomic<size_t>>(0);
        for (uint32_t t = 0; t < flags.jobs; ++t)
            futs.push_back(std::async(std::launch::async, [&, next] {
                for (size_t i = next->fetch_add(1); i < jobs.size(); i = next->fetch_add(1))
                    run_idx(i);
            }));
        for (auto& f : futs)
            f.get();
    }
    return results;
}

} // namespace

RunOutcome run_instance(const std::string& instance_path, const std::string& out_dir,
                        const RunFlags& flags) {
    RunOutcome out;
    Parsed p;
    try {
        p = parse_file(instance_path);
    } catch (const Error& e) {
        out.exit_code = 2;
        out.table = std::string("parse error: ") + e.what() + "\n";
        return out;
    }

    std::vector<JobResult> results;
    try {
        if (p.coeff.kind == RingTag::Q)
            results = run_all(p, FQ{}, flags);
        else if (p.coeff.p == 2)
            results = run_all(p, FpC<2>{}, flags);
        else if (p.coeff.p == 3)
            results = run_all(p, FpC<3>{}, flags);
        else
            results = run_all(p, FpD{p.coeff.p}, flags);
    } catch (const Error& e) {
        out.exit_code = e.kind() == ErrKind::Parse ? 2 : 3;
        out.table = std::string("error: ") + e.what() + "\n";
        return out;
    }

    std::filesystem::create_directories(out_dir);
    std::string table;
    table += "functorlab report bundle\n";
    table += "instance: " + std::filesystem::path(instance_path).filename().string() + "\n";
    table += "instance_hash: " + std::to_string(fnv1a(p.raw)) + "\n";
    table += "determinism: seed-free; byte-identical on rerun\n\n";
    std::string timings;
    bool any_refuted = false, any_unmet = false, any_sizing = false, any_parse = false;
    for (size_t i = 0; i < results.size(); ++i) {
        Json body = results[i].body;
        body["job_index"] = i;
        body["coefficients"] = p.coeff.str();
        std::string op = body.value("op", body.value("check", std::string("job")));
        char fname[64];
        snprintf(fname, sizeof(fname), "report_%03zu.json", i);
        std::ofstream jf(out_dir + "/" + fname);
        jf << body.dump(2) << "\n";
        out.job_files.push_back(fname);
        table += "== job " + std::to_string(i) + " (" + op + ") ==\n" + results[i].table + "\n";
        timings += fname + std::string(": ") + std::to_string(results[i].wall_ms) + " ms\n";
        switch (results[i].exit_code) {
        case 2: any_parse = true; break;
        case 3: any_sizing = true; break;
        case 4: any_refuted = true; break;
        case 5: any_unmet = true; break;
        default: break;
        }
    }
    {
        std::ofstream tf(out_dir + "/report.txt");
        tf << table;
        std::ofstream sf(out_dir + "/timing.txt"); // sidecar, excluded from determinism
        sf << timings;
    }
    out.table = table;
    out.exit_code = any_parse ? 2 : any_refuted ? 4 : any_unmet ? 5 : any_sizing ? 3 : 0;
    return out;
}

EstimateOutcome estimate_instance(const std::string& instance_path, const RunFlags& flags) {
    EstimateOutcome out;
    Parsed p;
    try {
        p = parse_file(instance_path);
    } catch (const Error& e) {
        out.exit_code = 2;
        out.table = std::string("parse error: ") + e.what() + "\n";
        return out;
    }
    try {
        Json jrows = Json::array();
        std::string table =
            "estimate for " + std::filesystem::path(instance_path).filename().string() + "\n";
        auto do_world = [&](auto field) {
            auto w = build_world(p, field);
            if (flags.cap_override > 0)
                w.cap = uint64_t(flags.cap_override);
            const Json& jobs = p.doc.value("jobs", Json::array());
            for (size_t i = 0; i < jobs.size(); ++i) {
                const Json& job = jobs[i];
                std::string op = job.value("op", "?");
                Json row;
                row["job_index"] = i;
                row["op"] = op;
                uint32_t n_max = uint32_t(job.value("n_max", 3));
                if (flags.n_max_override >= 0)
                    n_max = uint32_t(flags.n_max_override);
                if (op == "tor" || op == "ext") {
                    auto f = w.functors.at(job.at("F").template get<std::string>());
                    auto g = w.functors.at(job.at("G").template get<std::string>());
                    auto est = op == "tor"
                                   ? bar_rank_estimate(*f, *g, BarMode::Normalized, n_max + 1)
                                   : bar_ext_rank_estimate(*f, *g, BarMode::Normalized,
                                                           n_max + 1);
                    Json ranks = Json::array();
                    uint64_t worst = 0;
                    for (uint64_t rk : est) {
                        ranks.push_back(rk);
                        worst = std::max(worst, rk);
                    }
                    row["bar_ranks_per_degree"] = ranks;
                    row["over_cap"] = worst > w.cap * 64;
                    // rough forecast: ~5 nonzeros of 8 bytes per chain column
                    row["memory_bytes_forecast"] = sat_mul(worst, 40);
                    table += "job " + std::to_string(i) + " " + op + ": max bar rank " +
                             std::to_string(worst) + (worst > w.cap * 64 ? " OVER CAP" : "") +
                             "\n";
                } else {
                    row["note"] = "no bar-rank forecast for this op";
                    table += "job " + std::to_string(i) + " " + op + ": -\n";
                }
                jrows.push_back(row);
            }
        };
        if (p.coeff.kind == RingTag::Q)
            do_world(FQ{});
        else
            do_world(FpC<2>{});
        out.json["jobs"] = jrows;
        out.table = table;
    } catch (const Error& e) {
        out.exit_code = 2;
        out.table = std::string("error: ") + e.what() + "\n";
    }
    return out;
}

} // namespace functorlab
