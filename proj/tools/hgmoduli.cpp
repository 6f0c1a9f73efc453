// hgmoduli -- exact Hodge/Betti invariants of moduli of genus-0 stable maps
// to Grassmannians, with a persistent JSON cache of intermediate classes.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sys/stat.h>

#include <CLI11.hpp>

#include "hgmoduli/cache.hpp"
#include "hgmoduli/report_io.hpp"
#include "hgmoduli/selfcheck.hpp"

namespace {

using namespace hgm;

struct CacheSession {
    std::string path;
    std::unique_ptr<FileLock> lock;
    bool active = false;
};

bool file_exists(const std::string& path) {
    struct stat st{};
    return ::stat(path.c_str(), &st) == 0;
}

// Path precedence: --cache flag, then HG_MODULI_CACHE, then the default
// ./hgmoduli_cache.json -- which is only picked up when it already exists,
// so plain runs leave no files behind.
CacheSession open_cache(const std::string& flag_path, ModuliStore& store) {
    CacheSession session;
    if (!flag_path.empty()) {
        session.path = flag_path;
    } else if (const char* env = std::getenv("HG_MODULI_CACHE"); env && *env) {
        session.path = env;
    } else if (file_exists("hgmoduli_cache.json")) {
        session.path = "hgmoduli_cache.json";
    } else {
        return session;
    }
    // The lock lives next to the cache file; the cache itself is replaced by
    // rename on save, which would defeat a lock held on its inode.
    session.lock = std::make_unique<FileLock>(session.path + ".lock");
    load_cache_file(session.path, store);
    session.active = true;
    return session;
}

void close_cache(const CacheSession& session, const ModuliStore& store) {
    if (session.active) save_cache_file(session.path, store);
}

void print_payload(const Json& payload, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::bad_range: return 1;
            case Errc::cache_corrupt: return 3;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge-Grothendieck classes of moduli of genus-0 stable maps to G(r,k)"};
    app.require_subcommand(1);

    unsigned r = 0, k = 0, n = 0, d = 0, delta = 0;
    std::string output = "all", basis = "p", format = "text", cache_path;

    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache", cache_path, "cache file path (overrides HG_MODULI_CACHE)");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_rk = [&](CLI::App* cmd) {
        cmd->add_option("--r", r, "subsheaf rank r of G(r,k)")->required();
        cmd->add_option("--k", k, "ambient dimension k of G(r,k)")->required();
    };

    CLI::App* compute = app.add_subcommand("compute", "invariants of Mbar_{0,n}(G(r,k),d)");
    add_rk(compute);
    compute->add_option("--n", n, "number of marked points")->required();
    compute->add_option("--d", d, "degree of the stable maps")->required();
    compute->add_option("--output", output, "which fields to print")
        ->check(CLI::IsMember({"class", "betti", "epoly", "poincare", "euler", "all"}));
    compute->add_option("--basis", basis, "basis for the class output")
        ->check(CLI::IsMember({"p", "h"}));
    add_format(compute);
    add_cache(compute);

    CLI::App* quot = app.add_subcommand("quot", "cell counts of the Quot scheme Qbar_delta");
    add_rk(quot);
    quot->add_option("--delta", delta, "quotient degree")->required();
    add_format(quot);
    add_cache(quot);

    CLI::App* morcmd = app.add_subcommand("mor", "class of Mor_d(P^1, G(r,k))");
    add_rk(morcmd);
    morcmd->add_option("--d", d, "degree")->required();
    add_format(morcmd);
    add_cache(morcmd);

    CLI::App* configcmd = app.add_subcommand("config", "configuration-space class of F(P^1, n)");
    configcmd->add_option("--n", n, "number of points")->required();
    add_format(configcmd);
    add_cache(configcmd);

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the built-in verification suite");
    add_cache(selfcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // bad arguments exit with 1; --help with 0
    }

    const bool as_json = format == "json";
    auto require_rk = [&]() {
        if (r < 1 || r + 1 > k) fail(Errc::bad_range, "need 1 <= r <= k-1");
    };

    return guarded([&]() -> int {
        ModuliStore store;
        if (compute->parsed()) {
            require_rk();
            CacheSession session = open_cache(cache_path, store);
            HodgeReport rep = hodge_report(store, r, k, n, d);
            Json j = report_to_json(rep);
            if (as_json && output != "all") {
                Json filtered;
                filtered["space"] = j["space"];
                if (output == "class") {
                    filtered[basis == "p" ? "class_p" : "class_h"] =
                        j[basis == "p" ? "class_p" : "class_h"];
                } else if (output == "epoly") {
                    filtered["e_poly"] = j["e_poly"];
                } else {
                    filtered[output] = j[output];
                }
                j = std::move(filtered);
            }
            print_payload(j, as_json, as_json ? "" : report_to_text(j, output, basis));
            close_cache(session, store);
        } else if (quot->parsed()) {
            require_rk();
            CacheSession session = open_cache(cache_path, store);
            // the cell counts are exactly the coefficients of [Qbar_delta]
            LPoly q = qbar(store, r, k, delta);
            Json j;
            j["r"] = r;
            j["k"] = k;
            j["delta"] = delta;
            Json arr = Json::array();
            std::ostringstream text;
            for (unsigned i = 0; i <= static_cast<unsigned>(q.degree()); ++i) {
                arr.push_back(q.coeff(i).get_num().get_str());
                text << (i ? " " : "") << q.coeff(i).get_num().get_str();
            }
            text << "\n";
            j["counts"] = std::move(arr);
            print_payload(j, as_json, text.str());
            close_cache(session, store);
        } else if (morcmd->parsed()) {
            require_rk();
            CacheSession session = open_cache(cache_path, store);
            LPoly q = mor(store, r, k, d);
            Json j;
            j["r"] = r;
            j["k"] = k;
            j["d"] = d;
            j["class"] = lpoly_to_json(q);
            print_payload(j, as_json, q.str(true) + "\n");
            close_cache(session, store);
        } else if (configcmd->parsed()) {
            CacheSession session = open_cache(cache_path, store);
            Component comp = config_component(store, n);
            HBasisMap h = to_h_basis(comp, 0);
            Json j;
            j["n"] = n;
            j["class_p"] = component_to_json(comp);
            j["class_h"] = hbasis_to_json(h, 0);
            std::string text = "p: " + component_json_to_text(j["class_p"], "p") + "\n" +
                               "h: " + component_json_to_text(j["class_h"], "h") + "\n";
            print_payload(j, as_json, text);
            close_cache(session, store);
        } else if (selfcheck->parsed()) {
            CacheSession session = open_cache(cache_path, store);
            auto results = run_selfchecks(store);
            bool all_pass = true;
            for (const auto& res : results) {
                std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name;
                if (!res.pass) std::cout << " -- " << res.detail;
                std::cout << "\n";
                all_pass = all_pass && res.pass;
            }
            std::cout << (all_pass ? "selfcheck: all " : "selfcheck: FAILURES among ")
                      << results.size() << " checks" << (all_pass ? " passed" : "") << "\n";
            close_cache(session, store);
            return all_pass ? 0 : 2;
        }
        return 0;
    });
}
