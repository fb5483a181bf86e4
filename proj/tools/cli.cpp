#include "cli.hpp"

#include "ordlen/length.hpp"
#include "ordlen/poset.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

namespace ordlen::cli {

namespace {

using json = nlohmann::ordered_json;

struct Palette {
    const char* bold = "";
    const char* green = "";
    const char* red = "";
    const char* reset = "";
};

Palette make_palette() {
    const char* v = std::getenv("ORDLEN_COLOR");
    if (v != nullptr && std::string(v) == "1")
        return {"\x1b[1m", "\x1b[32m", "\x1b[31m", "\x1b[0m"};
    return {};
}

std::string tinted(const Palette& pal, bool good, const std::string& text) {
    return std::string(good ? pal.green : pal.red) + text + pal.reset;
}

std::string bool_word(const Palette& pal, bool b) {
    return tinted(pal, b, b ? "true" : "false");
}

std::string pass_word(const Palette& pal, bool b) {
    return tinted(pal, b, b ? "pass" : "fail");
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&]() {
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? std::string()
                                             : cur.substr(a, b - a + 1));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur.push_back(c);
    }
    flush();
    return out;
}

struct ModuleArgs {
    std::string vars;
    std::string ideal;
    std::string quotient;
};

Subquotient build_module(const ModuleArgs& a) {
    std::vector<std::string> vars = split_csv(a.vars);
    MonomialIdeal i = parse_ideal(a.ideal, vars);
    if (!a.quotient.empty()) {
        MonomialIdeal j = parse_ideal(a.quotient, vars);
        return Subquotient::module(i, j);
    }
    return Subquotient::ring(i);
}

json ordinal_json(const Ordinal& a) {
    json terms = json::array();
    for (const OrdinalTerm& t : a.terms()) {
        json entry;
        entry["exp"] = t.exp;
        entry["coef"] = t.coef;
        terms.push_back(entry);
    }
    json out;
    out["terms"] = terms;
    return out;
}

std::vector<std::string> prime_names(const MonomialPrime& p,
                                     const std::vector<std::string>& vars) {
    std::vector<std::string> names;
    for (std::size_t v : p.variables()) names.push_back(vars[v]);
    return names;
}

json cycle_json(const FundamentalCycle& c, const std::vector<std::string>& vars) {
    json arr = json::array();
    for (const CycleEntry& e : c) {
        json entry;
        entry["prime"] = prime_names(e.prime, vars);
        entry["mult"] = e.multiplicity;
        arr.push_back(entry);
    }
    return arr;
}

json length_report_json(const Subquotient& m, unsigned threads) {
    FundamentalCycle cyc = fundamental_cycle(m, threads);
    Ordinal len = cycle_to_ordinal(cyc, m.nvars());
    json out;
    out["cycle"] = cycle_json(cyc, m.vars());
    out["length"] = ordinal_json(len);
    out["pretty"] = format_ordinal(len);
    return out;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars,
                         std::uint64_t deg_lo, std::uint64_t deg_hi) {
    std::vector<std::uint32_t> exps(nvars, 0);
    std::uint64_t d = pick(rng, deg_lo, deg_hi);
    for (std::uint64_t k = 0; k < d; ++k)
        ++exps[pick(rng, 0, nvars - 1)];
    return Monomial(exps);
}

MonomialIdeal random_ideal(std::mt19937_64& rng,
                           const std::vector<std::string>& vars,
                           std::uint64_t gen_lo, std::uint64_t gen_hi,
                           std::uint64_t deg_lo, std::uint64_t deg_hi) {
    std::vector<Monomial> gens;
    std::uint64_t count = pick(rng, gen_lo, gen_hi);
    for (std::uint64_t k = 0; k < count; ++k)
        gens.push_back(random_monomial(rng, vars.size(), deg_lo, deg_hi));
    return MonomialIdeal(vars, std::move(gens));
}

std::vector<std::string> ring_names(std::size_t n) {
    static const char* pool[] = {"x", "y", "z", "w"};
    return std::vector<std::string>(pool, pool + n);
}

void emit_random_summary(std::ostream& out, const Palette& pal, bool as_json,
                         std::uint64_t seed, const std::vector<bool>& results) {
    std::size_t passed = 0;
    for (bool b : results)
        if (b) ++passed;
    if (as_json) {
        json instances = json::array();
        for (std::size_t k = 0; k < results.size(); ++k) {
            json entry;
            entry["index"] = k;
            entry["pass"] = static_cast<bool>(results[k]);
            instances.push_back(entry);
        }
        json report;
        report["seed"] = seed;
        report["instances"] = instances;
        report["passed"] = passed;
        report["total"] = results.size();
        out << report.dump(2) << "\n";
        return;
    }
    for (std::size_t k = 0; k < results.size(); ++k)
        out << "instance " << k << ": " << pass_word(pal, results[k]) << "\n";
    out << "passed " << passed << "/" << results.size() << "\n";
}

// ---------------------------------------------------------------------------
// Subcommand handlers

void run_length(std::ostream& out, const Palette& pal, bool as_json,
                const ModuleArgs& margs, const std::string& extra_vars,
                unsigned threads) {
    Subquotient m = build_module(margs);
    if (!extra_vars.empty())
        m = extend_by_variables(m, split_csv(extra_vars));
    Ordinal len = length_of(m, threads);
    if (as_json) {
        out << ordinal_json(len).dump(2) << "\n";
        return;
    }
    out << pal.bold << format_ordinal(len) << pal.reset << "\n";
}

void run_cycle(std::ostream& out, bool as_json, const ModuleArgs& margs,
               unsigned threads) {
    Subquotient m = build_module(margs);
    if (as_json) {
        out << length_report_json(m, threads).dump(2) << "\n";
        return;
    }
    out << format_cycle(fundamental_cycle(m, threads), m.vars()) << "\n";
}

void run_assoc(std::ostream& out, bool as_json, const ModuleArgs& margs,
               unsigned threads) {
    Subquotient m = build_module(margs);
    std::vector<MonomialPrime> primes = associated_primes(m, threads);
    if (as_json) {
        json arr = json::array();
        for (const MonomialPrime& p : primes)
            arr.push_back(prime_names(p, m.vars()));
        json report;
        report["primes"] = arr;
        out << report.dump(2) << "\n";
        return;
    }
    for (const MonomialPrime& p : primes)
        out << format_prime(p, m.vars()) << "\n";
}

void run_dimfil(std::ostream& out, const Palette& pal, bool as_json,
                const ModuleArgs& margs, unsigned threads) {
    Subquotient m = build_module(margs);
    std::vector<Subquotient> fil = dimension_filtration(m);
    if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < fil.size(); ++i) {
            Ordinal len = length_of(fil[i], threads);
            json entry;
            entry["dim"] = i;
            json gens = json::array();
            for (const Monomial& g : fil[i].numerator().generators())
                gens.push_back(format_monomial(g, m.vars()));
            entry["numerator"] = gens;
            entry["length"] = ordinal_json(len);
            entry["pretty"] = format_ordinal(len);
            arr.push_back(entry);
        }
        json report;
        report["filtration"] = arr;
        out << report.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < fil.size(); ++i)
        out << "fl_" << i << ": " << pal.bold
            << format_ordinal(length_of(fil[i], threads)) << pal.reset << "\n";
}

void run_open(std::ostream& out, const Palette& pal, bool as_json,
              const ModuleArgs& margs, const std::string& sub_text) {
    Subquotient m = build_module(margs);
    std::vector<Monomial> gens =
        parse_ideal(sub_text, split_csv(margs.vars)).generators();
    bool open = is_open(gens, m);
    if (as_json) {
        Ordinal lm = length_of(m);
        Ordinal ln = length_of(m.submodule(gens));
        json report;
        report["open"] = open;
        report["length"] = ordinal_json(lm);
        report["pretty"] = format_ordinal(lm);
        report["sub_length"] = ordinal_json(ln);
        report["sub_pretty"] = format_ordinal(ln);
        out << report.dump(2) << "\n";
        return;
    }
    out << "open: " << bool_word(pal, open) << "\n";
}

void run_closure(std::ostream& out, const Palette& pal, bool as_json,
                 const ModuleArgs& margs, const std::string& sub_text) {
    Subquotient m = build_module(margs);
    std::vector<Monomial> gens =
        parse_ideal(sub_text, split_csv(margs.vars)).generators();
    Subquotient cl = closure(gens, m);
    bool closed = is_closed(gens, m);
    if (as_json) {
        json arr = json::array();
        for (const Monomial& g : cl.numerator().generators())
            arr.push_back(format_monomial(g, m.vars()));
        json report;
        report["closed"] = closed;
        report["closure"] = arr;
        out << report.dump(2) << "\n";
        return;
    }
    out << "closed: " << bool_word(pal, closed) << "\n";
    out << "closure: " << format_ideal(cl.numerator()) << "\n";
}

void run_parameter(std::ostream& out, const Palette& pal, bool as_json,
                   const ModuleArgs& margs, const std::string& element) {
    Subquotient m = build_module(margs);
    MonomialIdeal f_ideal = parse_ideal(element, split_csv(margs.vars));
    if (f_ideal.generators().size() != 1)
        throw domain_error("--element must be a single monomial");
    Monomial f = f_ideal.generators().front();
    bool verdict = is_parameter(f, m);
    if (as_json) {
        json report;
        report["parameter"] = verdict;
        report["element"] = format_monomial(f, m.vars());
        out << report.dump(2) << "\n";
        return;
    }
    out << "parameter: " << bool_word(pal, verdict) << "\n";
}

void run_semiadd_explicit(std::ostream& out, const Palette& pal, bool as_json,
                          const ModuleArgs& margs, const std::string& sub_text) {
    std::vector<std::string> vars = split_csv(margs.vars);
    MonomialIdeal i = parse_ideal(margs.ideal, vars);
    MonomialIdeal k = parse_ideal(sub_text, vars);
    MonomialIdeal j = parse_ideal(margs.quotient, vars);
    SemiAdditivityReport r = check_semi_additivity(j, k, i);
    if (as_json) {
        json checks;
        checks["lower_bound"] = r.lower_bound;
        checks["upper_bound"] = r.upper_bound;
        checks["lower_weaker"] = r.lower_weaker;
        checks["sub_weaker"] = r.sub_weaker;
        checks["top_additive"] = r.top_additive;
        json report;
        report["len_sub"] = ordinal_json(r.len_sub);
        report["len_mid"] = ordinal_json(r.len_mid);
        report["len_quot"] = ordinal_json(r.len_quot);
        report["pretty_sub"] = format_ordinal(r.len_sub);
        report["pretty_mid"] = format_ordinal(r.len_mid);
        report["pretty_quot"] = format_ordinal(r.len_quot);
        report["checks"] = checks;
        report["all"] = r.all_pass();
        out << report.dump(2) << "\n";
        return;
    }
    out << "len K/J: " << format_ordinal(r.len_sub) << "\n";
    out << "len I/J: " << format_ordinal(r.len_mid) << "\n";
    out << "len I/K: " << format_ordinal(r.len_quot) << "\n";
    out << "lower_bound: " << pass_word(pal, r.lower_bound) << "\n";
    out << "upper_bound: " << pass_word(pal, r.upper_bound) << "\n";
    out << "lower_weaker: " << pass_word(pal, r.lower_weaker) << "\n";
    out << "sub_weaker: " << pass_word(pal, r.sub_weaker) << "\n";
    out << "top_additive: " << pass_word(pal, r.top_additive) << "\n";
    out << "all: " << pass_word(pal, r.all_pass()) << "\n";
}

void run_semiadd_random(std::ostream& out, const Palette& pal, bool as_json,
                        std::uint64_t seed, std::uint64_t max_degree) {
    std::mt19937_64 rng(seed);
    std::vector<bool> results;
    for (int instance = 0; instance < 25; ++instance) {
        std::vector<std::string> vars = ring_names(pick(rng, 1, 4));
        MonomialIdeal j = random_ideal(rng, vars, 1, 3, 1, max_degree);
        MonomialIdeal k = ideal_sum(j, random_ideal(rng, vars, 0, 2, 1, max_degree));
        MonomialIdeal i = ideal_sum(k, random_ideal(rng, vars, 0, 2, 0, max_degree));
        results.push_back(check_semi_additivity(j, k, i).all_pass());
    }
    emit_random_summary(out, pal, as_json, seed, results);
}

void run_stdpairs(std::ostream& out, bool as_json, const ModuleArgs& margs) {
    std::vector<std::string> vars = split_csv(margs.vars);
    MonomialIdeal i = parse_ideal(margs.ideal, vars);
    std::vector<StandardPair> pairs = standard_pairs(i);
    if (as_json) {
        json arr = json::array();
        for (const StandardPair& sp : pairs) {
            json entry;
            entry["root"] = format_monomial(sp.root, vars);
            json free = json::array();
            for (std::size_t v : sp.free_vars) free.push_back(vars[v]);
            entry["free"] = free;
            arr.push_back(entry);
        }
        json report;
        report["pairs"] = arr;
        report["count"] = pairs.size();
        out << report.dump(2) << "\n";
        return;
    }
    for (const StandardPair& sp : pairs) {
        out << "(" << format_monomial(sp.root, vars) << ", {";
        for (std::size_t k = 0; k < sp.free_vars.size(); ++k) {
            if (k > 0) out << ", ";
            out << vars[sp.free_vars[k]];
        }
        out << "})\n";
    }
}

void run_oracle_explicit(std::ostream& out, const Palette& pal, bool as_json,
                         const ModuleArgs& margs) {
    std::vector<std::string> vars = split_csv(margs.vars);
    MonomialIdeal i = parse_ideal(margs.ideal, vars);
    Subquotient m = Subquotient::ring(i);
    Ordinal len = length_of(m);
    std::uint64_t kdim = artinian_k_dimension(i);
    Ordinal grass = grassmannian_oracle(m);
    bool agree = len == grass && len == Ordinal(kdim);
    if (as_json) {
        json report;
        report["length"] = ordinal_json(len);
        report["pretty"] = format_ordinal(len);
        report["k_dimension"] = kdim;
        report["grassmannian"] = ordinal_json(grass);
        report["grassmannian_pretty"] = format_ordinal(grass);
        report["agree"] = agree;
        out << report.dump(2) << "\n";
        return;
    }
    out << "length: " << format_ordinal(len) << "\n";
    out << "k_dim: " << kdim << "\n";
    out << "grassmannian: " << format_ordinal(grass) << "\n";
    out << "agree: " << bool_word(pal, agree) << "\n";
}

void run_oracle_random(std::ostream& out, const Palette& pal, bool as_json,
                       std::uint64_t seed, std::uint64_t max_degree) {
    std::mt19937_64 rng(seed);
    std::vector<bool> results;
    for (int instance = 0; instance < 25; ++instance) {
        MonomialIdeal ideal;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 10000)
                throw error("could not sample a small Artinian quotient");
            std::size_t nvars = pick(rng, 1, 3);
            std::vector<std::string> vars = ring_names(nvars);
            std::vector<Monomial> gens;
            for (std::size_t v = 0; v < nvars; ++v)
                gens.push_back(Monomial::variable(
                    nvars, v, static_cast<std::uint32_t>(pick(rng, 1, max_degree))));
            std::uint64_t extras = pick(rng, 0, 2);
            for (std::uint64_t k = 0; k < extras; ++k)
                gens.push_back(random_monomial(rng, nvars, 1, max_degree));
            MonomialIdeal candidate(vars, std::move(gens));
            if (artinian_k_dimension(candidate) <= 5) {
                ideal = candidate;
                break;
            }
        }
        Subquotient m = Subquotient::ring(ideal);
        Ordinal len = length_of(m);
        std::uint64_t kdim = artinian_k_dimension(ideal);
        Ordinal grass = grassmannian_oracle(m);
        results.push_back(len == grass && len == Ordinal(kdim));
    }
    emit_random_summary(out, pal, as_json, seed, results);
}

void run_poset(std::ostream& out, const Palette& pal, bool as_json,
               const std::string& input) {
    FinitePoset p = parse_poset(input);
    Ordinal len = poset_length(p);
    std::vector<std::uint64_t> ranks = p.ranks();
    if (as_json) {
        json report;
        report["length"] = ordinal_json(len);
        report["pretty"] = format_ordinal(len);
        report["ranks"] = ranks;
        out << report.dump(2) << "\n";
        return;
    }
    out << "length: " << pal.bold << format_ordinal(len) << pal.reset << "\n";
    out << "ranks:";
    for (std::uint64_t r : ranks) out << " " << r;
    out << "\n";
}

} // namespace

RunResult run(const std::vector<std::string>& args, const std::string& input) {
    std::ostringstream out;
    std::ostringstream err;
    Palette pal = make_palette();

    CLI::App app{"ordinal lengths of monomial ideals and subquotients"};
    app.name("ordlen");
    app.require_subcommand(1);

    ModuleArgs margs;
    std::string sub_text;
    std::string element;
    std::string extra_vars;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::uint64_t max_degree = 0; // per-subcommand default applied below
    unsigned threads = 1;

    auto add_module_options = [&](CLI::App* sc, bool ideal_required) {
        auto* vars_opt =
            sc->add_option("--vars", margs.vars, "comma list of variable names")
                ->required();
        auto* ideal_opt = sc->add_option("--ideal", margs.ideal,
                                         "ideal generators; 0 is the zero ideal");
        if (ideal_required) ideal_opt->required();
        sc->add_option("--quotient-by", margs.quotient,
                       "denominator ideal: the module becomes ideal/quotient-by");
        sc->add_flag("--json", as_json, "emit a JSON report");
        (void)vars_opt;
        return ideal_opt;
    };

    auto* sc_length = app.add_subcommand("length", "ordinal length of a module");
    add_module_options(sc_length, true);
    sc_length->add_option("--extra-vars", extra_vars,
                          "adjoin fresh polynomial variables first");
    sc_length->add_option("--threads", threads, "worker threads for the prime scan");

    auto* sc_cycle = app.add_subcommand("cycle", "fundamental cycle of a module");
    add_module_options(sc_cycle, true);
    sc_cycle->add_option("--threads", threads, "worker threads for the prime scan");

    auto* sc_assoc = app.add_subcommand("assoc", "associated primes of a module");
    add_module_options(sc_assoc, true);
    sc_assoc->add_option("--threads", threads, "worker threads for the prime scan");

    auto* sc_dimfil =
        app.add_subcommand("dimfil", "dimension filtration of a module");
    add_module_options(sc_dimfil, true);
    sc_dimfil->add_option("--threads", threads, "worker threads for the prime scan");

    auto* sc_open = app.add_subcommand("open", "test a submodule for openness");
    add_module_options(sc_open, true);
    sc_open->add_option("--sub", sub_text, "submodule generators")->required();

    auto* sc_closure =
        app.add_subcommand("closure", "closure of a submodule");
    add_module_options(sc_closure, true);
    sc_closure->add_option("--sub", sub_text, "submodule generators")->required();

    auto* sc_parameter =
        app.add_subcommand("parameter", "test an element for being a parameter");
    add_module_options(sc_parameter, true);
    sc_parameter->add_option("--element", element, "candidate monomial")->required();

    auto* sc_semiadd = app.add_subcommand(
        "semiadd", "semi-additivity report for J within K within I");
    {
        auto* vars_opt = sc_semiadd->add_option("--vars", margs.vars,
                                                "comma list of variable names");
        auto* ideal_opt =
            sc_semiadd->add_option("--ideal", margs.ideal, "outer ideal I");
        auto* sub_opt =
            sc_semiadd->add_option("--sub", sub_text, "middle ideal K");
        auto* quot_opt = sc_semiadd->add_option("--quotient-by", margs.quotient,
                                                "inner ideal J");
        ideal_opt->needs(vars_opt, sub_opt, quot_opt);
        sub_opt->needs(ideal_opt);
        quot_opt->needs(ideal_opt);
        vars_opt->needs(ideal_opt);
        sc_semiadd->add_flag("--json", as_json, "emit a JSON report");
        sc_semiadd->add_option("--seed", seed, "seed for random instances");
        sc_semiadd->add_option("--max-degree", max_degree,
                               "degree bound for random generators (default 5)");
    }

    auto* sc_stdpairs =
        app.add_subcommand("stdpairs", "standard pairs of a monomial ideal");
    sc_stdpairs->add_option("--vars", margs.vars, "comma list of variable names")
        ->required();
    sc_stdpairs->add_option("--ideal", margs.ideal, "ideal generators")->required();
    sc_stdpairs->add_flag("--json", as_json, "emit a JSON report");

    auto* sc_oracle = app.add_subcommand(
        "oracle", "cross-check length against two independent computations");
    {
        auto* vars_opt = sc_oracle->add_option("--vars", margs.vars,
                                               "comma list of variable names");
        auto* ideal_opt = sc_oracle->add_option(
            "--ideal", margs.ideal, "Artinian ideal; omit for random instances");
        ideal_opt->needs(vars_opt);
        vars_opt->needs(ideal_opt);
        sc_oracle->add_flag("--json", as_json, "emit a JSON report");
        sc_oracle->add_option("--seed", seed, "seed for random instances");
        sc_oracle->add_option("--max-degree", max_degree,
                              "exponent bound for random instances (default 3)");
    }

    auto* sc_poset =
        app.add_subcommand("poset", "foundation ranks of a poset read from stdin");
    sc_poset->add_flag("--json", as_json, "emit a JSON report");

    try {
        std::vector<std::string> full;
        full.reserve(args.size() + 1);
        full.push_back("ordlen");
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        argv.reserve(full.size());
        for (const std::string& s : full) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (sc_length->parsed()) {
            run_length(out, pal, as_json, margs, extra_vars, threads);
        } else if (sc_cycle->parsed()) {
            run_cycle(out, as_json, margs, threads);
        } else if (sc_assoc->parsed()) {
            run_assoc(out, as_json, margs, threads);
        } else if (sc_dimfil->parsed()) {
            run_dimfil(out, pal, as_json, margs, threads);
        } else if (sc_open->parsed()) {
            run_open(out, pal, as_json, margs, sub_text);
        } else if (sc_closure->parsed()) {
            run_closure(out, pal, as_json, margs, sub_text);
        } else if (sc_parameter->parsed()) {
            run_parameter(out, pal, as_json, margs, element);
        } else if (sc_semiadd->parsed()) {
            if (margs.ideal.empty())
                run_semiadd_random(out, pal, as_json, seed,
                                   max_degree == 0 ? 5 : max_degree);
            else
                run_semiadd_explicit(out, pal, as_json, margs, sub_text);
        } else if (sc_stdpairs->parsed()) {
            run_stdpairs(out, as_json, margs);
        } else if (sc_oracle->parsed()) {
            if (margs.ideal.empty())
                run_oracle_random(out, pal, as_json, seed,
                                  max_degree == 0 ? 3 : max_degree);
            else
                run_oracle_explicit(out, pal, as_json, margs);
        } else if (sc_poset->parsed()) {
            run_poset(out, pal, as_json, input);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return {2, out.str(), err.str()};
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return {1, out.str(), err.str()};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return {1, out.str(), err.str()};
    }
    return {0, out.str(), err.str()};
}

} // namespace ordlen::cli
