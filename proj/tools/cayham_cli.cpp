#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cayham/disjoint.hpp"
#include "cayham/hampath.hpp"
#include "cayham/infinite.hpp"
#include "cayham/multicycle.hpp"
#include "cayham/oracle.hpp"
#include "cayham/serialize.hpp"

using namespace cayham;

namespace {

constexpr int kOk = 0, kInvalid = 1, kVerifyFail = 2, kNotFound = 3;

void write_out(const std::string& dest, const std::string& text) {
    if (dest == "-" || dest.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(dest);
        f << text << "\n";
    }
}

struct InstanceArgs {
    std::string group, a, b;
    DigraphInstance make() const {
        GroupSpec g = parse_group(group);
        return make_instance(g, parse_element(g, a), parse_element(g, b));
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--group", group, "group spec, e.g. Z:48 or Z2:2,12")->required();
        cmd->add_option("--a", a, "first generator")->required();
        cmd->add_option("--b", b, "second generator")->required();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"hamiltonian paths in 2-generated Cayley digraphs"};
    app.require_subcommand(1);

    long long m = 0, n = 0, e = 0, t = 0, d = 0, maxOrder = 0, window = 10;
    bool asJson = false, dot = false, fallback = false;
    int jobs = 1;
    std::string format = "table", jsonOut = "-", lengthsArg;
    InstanceArgs inst;

    auto* profile = app.add_subcommand("profile", "triangle row table");
    profile->add_option("--m", m)->required();
    profile->add_option("--n", n)->required();
    profile->add_option("--e", e)->required();
    profile->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* spectrum = app.add_subcommand("spectrum", "valid (t,d) list and b-arc counts");
    inst.attach(spectrum);

    auto* hp = app.add_subcommand("hp", "one standard-family quasi-path");
    inst.attach(hp);
    hp->add_option("--t", t)->required();
    hp->add_option("--d", d)->required();
    hp->add_flag("--dot", dot);

    auto* pair = app.add_subcommand("pair", "arc-disjoint hamiltonian path pair");
    inst.attach(pair);
    pair->add_flag("--dot", dot);
    pair->add_option("--json", jsonOut)->expected(0, 1);
    pair->add_flag("--fallback", fallback, "allow exhaustive search on tiny instances");

    auto* multi = app.add_subcommand("multi", "pair in a product of three or more cycles");
    multi->add_option("--lengths", lengthsArg)->required();
    multi->add_option("--json", jsonOut)->expected(0, 1);

    auto* infinite = app.add_subcommand("infinite", "two-way infinite path pair decision");
    inst.attach(infinite);
    infinite->add_option("--window", window);

    auto* scan = app.add_subcommand("scan", "verify the pair conjecture up to an order");
    scan->add_option("--max-order", maxOrder)->required();
    scan->add_flag("--fallback", fallback);
    scan->add_option("--jobs", jobs);
    scan->add_option("--json", jsonOut)->expected(0, 1);

    auto* count = app.add_subcommand("count", "exact hamiltonian path count");
    inst.attach(count);

    auto* bound = app.add_subcommand("bound", "pair-count lower bound for a torus");
    bound->add_option("--m", m)->required();
    bound->add_option("--n", n)->required();

    CLI11_PARSE(app, argc, argv);

    if (profile->parsed()) {
        TriangleProfile tp = triangle_partition(m, n, e);
        if (format == "json")
            std::cout << profile_to_json(tp).dump(2) << "\n";
        else
            std::cout << profile_table(tp);
        return kOk;
    }

    if (spectrum->parsed()) {
        DigraphInstance di = inst.make();
        HPSpectrum sp = hp_spectrum(di);
        std::cout << "valid (t,d):";
        for (auto [tt, dd] : sp.validTD) std::cout << " (" << tt << "," << dd << ")";
        std::cout << "\nb-arc counts:";
        for (long long v : sp.deltas) std::cout << " " << v;
        std::cout << "\n";
        return kOk;
    }

    if (hp->parsed()) {
        DigraphInstance di = inst.make();
        QuasiPath qp = build_htd(di, t, d);
        Classification c = classify_and_deltas(qp);
        std::cout << (c.isHamPath ? "hamiltonian path" : "path with extra cycles")
                  << ": source " << format_element(di.group, c.iota) << ", terminal "
                  << format_element(di.group, c.tau) << ", a-arcs " << c.deltaA
                  << ", b-arcs " << c.deltaB << ", path vertices " << c.visited << "/"
                  << di.order << "\n";
        if (dot) {
            PairCertificate solo{qp, qp, PairStrategy::SpectrumSearch, false};
            std::cout << dot_export(di, solo);
        }
        return kOk;
    }

    if (pair->parsed()) {
        DigraphInstance di = inst.make();
        auto cert = arc_disjoint_hp_pair(di, fallback);
        if (!cert) {
            std::cerr << "{\"error\":\"no arc-disjoint pair found\"}\n";
            return kNotFound;
        }
        if (pair->count("--json"))
            write_out(jsonOut, certificate_to_json(di, *cert).dump(2));
        else
            std::cout << "strategy " << to_string(cert->strategy) << ", b-arc counts "
                      << cert->p.deltaB() << " and " << cert->pPrime.deltaB()
                      << (cert->verified ? ", verified" : ", NOT verified") << "\n";
        if (dot) std::cout << dot_export(di, *cert);
        return cert->verified ? kOk : kVerifyFail;
    }

    if (multi->parsed()) {
        std::vector<long long> lengths;
        std::stringstream ss(lengthsArg);
        std::string part;
        while (std::getline(ss, part, ',')) lengths.push_back(std::stoll(part));
        MultiCertificate cert = multicycle_pair(lengths);
        if (cert.caseUsed == MultiCase::OpenUndecided) {
            std::cerr << "{\"error\":\"open case: three factors, all odd, no "
                         "two-factor cycle\"}\n";
            return kNotFound;
        }
        bool ok = verify_multi(cert);
        if (multi->count("--json"))
            write_out(jsonOut, multi_to_json(cert).dump(2));
        else
            std::cout << "case " << to_string(cert.caseUsed) << ", "
                      << cert.pathA.size() << " vertices per path"
                      << (ok ? ", verified" : ", NOT verified") << "\n";
        return ok ? kOk : kVerifyFail;
    }

    if (infinite->parsed()) {
        GroupSpec g = parse_group(inst.group);
        GroupElement a = parse_element(g, inst.a), b = parse_element(g, inst.b);
        InfiniteDecision dec = decide_infinite_pair(g, a, b);
        if (!dec.pairExists) {
            std::cout << "no arc-disjoint pair of two-way infinite paths\n";
            return kNotFound;
        }
        auto pr = build_periodic_pair(g, a, b);
        if (!pr) return kVerifyFail;
        std::cout << "pair exists with (k,l) = (" << pr->first.k << "," << pr->first.l
                  << ")\n";
        for (const PeriodicPathSpec* spec : {&pr->first, &pr->second}) {
            WindowReport rep = verify_window(*spec, window);
            std::cout << "  path k=" << spec->k << " drift "
                      << format_element(g, spec->drift) << ": "
                      << (rep.ok ? "window verified" : rep.reason) << "\n";
            if (!rep.ok) return kVerifyFail;
        }
        return kOk;
    }

    if (scan->parsed()) {
        ScanReport rep = scan_conjecture(maxOrder, fallback, jobs);
        if (scan->count("--json"))
            write_out(jsonOut, scan_to_json(rep).dump(2));
        else {
            std::cout << "instances tried: " << rep.instancesTried << "\n";
            for (const auto& [k, v] : rep.succeededByStrategy)
                std::cout << "  " << k << ": " << v << "\n";
            std::cout << "failures: " << rep.failures.size() << "\n";
            for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
        }
        return rep.failures.empty() ? kOk : kVerifyFail;
    }

    if (count->parsed()) {
        DigraphInstance di = inst.make();
        std::cout << count_hp(di) << "\n";
        return kOk;
    }

    if (bound->parsed()) {
        BoundResult r = pair_count_bound(m, n);
        std::cout << "spectrum values from interior points: " << r.rSize
                  << "\nintersection size: " << r.intersectSize
                  << "\nexcluded near |G|/2: " << r.excluded
                  << "\nunordered pair lower bound: " << r.lowerBoundPairs << "\n";
        return kOk;
    }

    return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidInput& ex) {
        std::cerr << "{\"error\":\"" << ex.what() << "\"}\n";
        return kInvalid;
    } catch (const std::exception& ex) {
        std::cerr << "{\"error\":\"" << ex.what() << "\"}\n";
        return kInvalid;
    }
}
