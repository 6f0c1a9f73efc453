#include "hgmoduli/report_io.hpp"

#include <sstream>

namespace hgm {

Json report_to_json(const HodgeReport& rep) {
    Json j;
    j["space"] = Json{{"r", rep.r}, {"k", rep.k}, {"n", rep.n}, {"d", rep.d}};
    j["empty"] = rep.empty;
    j["dim"] = rep.dim;
    j["class_p"] = component_to_json(rep.p_basis);
    j["class_h"] = hbasis_to_json(rep.h_basis, rep.d);
    Json betti = Json::array();
    for (const Int& b : rep.betti) betti.push_back(b.get_str());
    j["betti"] = std::move(betti);
    Json epoly = Json::array();
    for (const auto& [i, c] : rep.e_poly) epoly.push_back(Json::array({i, c.get_str()}));
    j["e_poly"] = std::move(epoly);
    j["poincare"] = j["betti"]; // P(t) = sum_i b_i t^i, same coefficient vector
    j["euler"] = rep.euler.get_str();
    return j;
}

std::string component_json_to_text(const Json& comp, const std::string& symbol) {
    if (!comp.is_array()) fail(Errc::cache_corrupt, "component is not an array");
    if (comp.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Json& entry : comp) {
        std::vector<unsigned> parts;
        for (const Json& p : entry.at("partition")) parts.push_back(p.get<unsigned>());
        Partition lambda(std::move(parts));
        LPoly c = lpoly_from_json(entry.at("coeff"));
        if (!first) os << " + ";
        first = false;
        std::string cs = c.coeff_str();
        std::string mono = lambda.str(symbol);
        if (mono == "1") {
            os << c.str(true);
        } else if (cs == "1") {
            os << mono;
        } else {
            os << cs << " " << mono;
        }
    }
    return os.str();
}

namespace {

std::string epoly_text(const Json& epoly) {
    if (epoly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = epoly.rbegin(); it != epoly.rend(); ++it) {
        unsigned i = (*it)[0].get<unsigned>();
        std::string c = (*it)[1].get<std::string>();
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << c << " ";
        os << (i == 1 ? "t u" : "t^" + std::to_string(i) + " u^" + std::to_string(i));
    }
    return os.str();
}

std::string poincare_text(const Json& betti) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = betti.size(); i-- > 0;) {
        std::string c = betti[i].get<std::string>();
        if (c == "0") continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << c << " ";
        os << (i == 1 ? "t" : "t^" + std::to_string(i));
    }
    if (first) os << "0";
    return os.str();
}

std::string betti_text(const Json& betti) {
    std::ostringstream os;
    os << "b:";
    for (const Json& b : betti) os << " " << b.get<std::string>();
    return os.str();
}

} // namespace

std::string report_to_text(const Json& rep, const std::string& output, const std::string& basis) {
    std::ostringstream os;
    const Json& space = rep.at("space");
    bool all = output == "all";
    if (all) {
        os << "space: Mbar_{0," << space.at("n").get<unsigned>() << "}(G("
           << space.at("r").get<unsigned>() << "," << space.at("k").get<unsigned>()
           << "), d=" << space.at("d").get<unsigned>() << ")\n";
        os << "empty: " << (rep.at("empty").get<bool>() ? "yes" : "no") << "\n";
        os << "dim: " << rep.at("dim").get<int>() << "\n";
    }
    if (all || output == "class") {
        if (all || basis == "p")
            os << "class[p]: " << component_json_to_text(rep.at("class_p"), "p") << "\n";
        if (all || basis == "h")
            os << "class[h]: " << component_json_to_text(rep.at("class_h"), "h") << "\n";
    }
    if (all || output == "betti") os << betti_text(rep.at("betti")) << "\n";
    if (all || output == "epoly") os << "E(t,u): " << epoly_text(rep.at("e_poly")) << "\n";
    if (all || output == "poincare") os << "P(t): " << poincare_text(rep.at("poincare")) << "\n";
    if (all || output == "euler") os << "euler: " << rep.at("euler").get<std::string>() << "\n";
    return os.str();
}

} // namespace hgm
