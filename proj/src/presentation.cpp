#include "hfill/presentation.hpp"

#include <nlohmann/json.hpp>
#include <set>

namespace hfill {

using nlohmann::ordered_json;

void Presentation::validate() const {
    std::set<std::string> names;
    for (const auto& g : generators) {
        if (g.empty()) throw input_error("empty generator name");
        if (!names.insert(g).second) throw input_error("duplicate generator name: " + g);
    }
    for (const auto& r : relators) {
        if (r.empty()) throw input_error("empty relator rejected");
        if (!is_cyclically_reduced(r))
            throw input_error("relator is not cyclically reduced: " +
                              word_to_string(r, generators));
        for (int x : r.letters)
            if (std::abs(x) < 1 || std::abs(x) > static_cast<int>(generators.size()))
                throw input_error("relator letter out of range");
    }
    if (!factor_of_generator.empty() && factor_of_generator.size() != generators.size())
        throw input_error("factor map size mismatch");
}

std::string Presentation::to_json() const {
    ordered_json j;
    j["generators"] = generators;
    bool all_single = true;
    for (const auto& g : generators)
        if (g.size() != 1) all_single = false;
    j["relators"] = ordered_json::array();
    for (const auto& r : relators) {
        if (all_single) {
            j["relators"].push_back(word_to_string(r, generators));
        } else {
            j["relators"].push_back(r.letters);
        }
    }
    if (!factor_of_generator.empty()) j["factors"] = factor_of_generator;
    return j.dump();
}

Presentation Presentation::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw input_error(std::string("bad presentation JSON: ") + ex.what());
    }
    Presentation p;
    for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
    if (j.contains("relators"))
        for (const auto& r : j["relators"]) {
            if (r.is_string()) {
                p.relators.push_back(word_from_string(r.get<std::string>(), p.generators));
            } else {
                Word w;
                for (const auto& x : r) w.letters.push_back(x.get<int>());
                p.relators.push_back(w);
            }
        }
    if (j.contains("factors"))
        for (const auto& f : j["factors"]) p.factor_of_generator.push_back(f.get<int>());
    p.validate();
    return p;
}

Word Presentation::retract_to_factor(const Word& w, int factor) const {
    if (factor_of_generator.empty())
        throw input_error("presentation carries no factor information");
    Word out;
    for (int x : w.letters) {
        int idx = std::abs(x) - 1;
        if (factor_of_generator[idx] == factor) out.letters.push_back(x);
    }
    return free_reduce(out);
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
    Presentation out;
    std::set<std::string> used(p1.generators.begin(), p1.generators.end());
    out.generators = p1.generators;
    out.factor_of_generator.assign(p1.generators.size(), 0);
    std::vector<int> remap2;
    for (const auto& g : p2.generators) {
        std::string name = g;
        while (used.count(name)) name += "'";
        used.insert(name);
        out.generators.push_back(name);
        out.factor_of_generator.push_back(1);
        remap2.push_back(static_cast<int>(out.generators.size()));
    }
    out.relators = p1.relators;
    for (const auto& r : p2.relators) {
        Word w;
        for (int x : r.letters) {
            int m = remap2[std::abs(x) - 1];
            w.letters.push_back(x > 0 ? m : -m);
        }
        out.relators.push_back(w);
    }
    out.validate();
    return out;
}

} // namespace hfill
