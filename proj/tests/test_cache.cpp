#include <doctest.h>

#include <random>

#include "hgmoduli/cache.hpp"
#include "hgmoduli/report_io.hpp"

using namespace hgm;

namespace {

LPoly P(std::initializer_list<long> ascending) { return LPoly::from_int_coeffs(ascending); }

LPoly random_poly(std::mt19937_64& rng) {
    std::vector<Rat> cs;
    unsigned deg = rng() % 5;
    for (unsigned i = 0; i <= deg; ++i)
        cs.push_back(rat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6)));
    return LPoly(std::move(cs));
}

} // namespace

TEST_CASE("rational and polynomial JSON round-trips are bit-exact") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        LPoly p = random_poly(rng);
        Json j = lpoly_to_json(p);
        CHECK(lpoly_from_json(j) == p);
        CHECK(Json::parse(j.dump()).dump() == j.dump());
    }
    Rat big = rat_from_strings("1267650600228229401496703205376", "7"); // 2^100 / 7
    CHECK(rat_from_json(rat_to_json(big)) == big);
}

TEST_CASE("component JSON round-trip") {
    Component c;
    c.emplace(Partition(), P({1, 2}));
    c.emplace(Partition(std::vector<unsigned>{3, 1}), P({0, 1}).scaled(Rat(2, 3)));
    c.emplace(Partition::ones(2), P({-1}));
    Json j = component_to_json(c);
    CHECK(component_from_json(j) == c);
}

TEST_CASE("store round-trips through cache text") {
    ModuliStore st;
    mbar_class(st, 2, 4, 0, 2);
    config_component(st, 3);
    std::string text = store_to_cache_text(st);

    ModuliStore st2;
    load_cache_text_into_store(text, st2);
    CHECK(st2.polys_snapshot() == st.polys_snapshot());
    CHECK(st2.comps_snapshot() == st.comps_snapshot());
    CHECK(store_to_cache_text(st2) == text);
}

TEST_CASE("warm store yields identical reports and serialized bytes") {
    ModuliStore cold;
    HodgeReport a = hodge_report(cold, 2, 4, 0, 2);

    ModuliStore warm;
    load_cache_text_into_store(store_to_cache_text(cold), warm);
    HodgeReport b = hodge_report(warm, 2, 4, 0, 2);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
}

TEST_CASE("corrupt cache inputs are rejected wholesale") {
    ModuliStore st;
    auto corrupt = [&](const std::string& text) {
        ModuliStore fresh;
        CHECK_THROWS_AS(load_cache_text_into_store(text, fresh), Error);
    };
    corrupt("not json at all");
    corrupt(R"({"entries": {}})");                             // missing version
    corrupt(R"({"version": "2", "entries": {}})");             // wrong version
    corrupt(R"({"version": "1"})");                            // missing entries
    corrupt(R"({"version": "1", "entries": {"zzz": []}})");    // bad key
    corrupt(R"({"version": "1", "entries": {"2:4:QBAR:0:0": [{"num":"1","den":"2","x":3}]}})");
    corrupt(R"({"version": "1", "entries": {"2:4:QBAR:0:0": [{"num":"2","den":"4"}]}})");
    corrupt(R"({"version": "1", "entries": {"2:4:QBAR:0:0": [{"num":"1","den":"0"}]}})");
    corrupt(R"({"version": "1", "entries": {"2:4:QBAR:0:0": [{"num":"1","den":"1"},{"num":"0","den":"1"}]}})");
    // error classification
    try {
        ModuliStore fresh;
        load_cache_text_into_store(R"({"version": "9", "entries": {}})", fresh);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cache_corrupt);
    }
}

TEST_CASE("cache file IO") {
    std::string path = "test_cache_io.json";
    std::remove(path.c_str());
    {
        ModuliStore st;
        qbar(st, 2, 4, 1);
        FileLock lock(path);
        save_cache_file(path, st);
    }
    {
        ModuliStore st;
        load_cache_file(path, st);
        CHECK(st.poly(ModuliKey{2, 4, Kind::QBAR, 0, 1}).has_value());
    }
    std::remove(path.c_str());
    {
        ModuliStore st;
        load_cache_file(path, st); // absent file is fine
        CHECK(st.polys_snapshot().empty());
    }
}
