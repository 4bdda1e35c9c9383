#include "hfill/oracle.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "hfill/leary.hpp"

namespace hfill {

using nlohmann::ordered_json;

void FiniteTable::validate() const {
    if (mult.size() != size) throw input_error("finite table: bad row count");
    for (const auto& row : mult) {
        if (row.size() != size) throw input_error("finite table: bad column count");
        for (int x : row)
            if (x < 0 || x >= static_cast<int>(size))
                throw input_error("finite table: entry out of range");
    }
    if (identity < 0 || identity >= static_cast<int>(size))
        throw input_error("finite table: identity out of range");
    for (std::size_t a = 0; a < size; ++a) {
        if (mult[a][identity] != static_cast<int>(a) || mult[identity][a] != static_cast<int>(a))
            throw input_error("finite table: identity axiom fails");
        bool has_inverse = false;
        for (std::size_t b = 0; b < size; ++b)
            if (mult[a][b] == identity && mult[b][a] == identity) has_inverse = true;
        if (!has_inverse) throw input_error("finite table: missing inverse");
    }
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            for (std::size_t c = 0; c < size; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    throw input_error("finite table: not associative");
    for (const auto& [name, el] : generator_element)
        if (el < 0 || el >= static_cast<int>(size))
            throw input_error("finite table: generator element out of range");
}

FiniteTable FiniteTable::cyclic(int n, const std::string& generator) {
    FiniteTable t;
    t.size = static_cast<std::size_t>(n);
    t.mult.assign(t.size, std::vector<int>(t.size, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.mult[i][j] = (i + j) % n;
    t.identity = 0;
    t.generator_element[generator] = n > 1 ? 1 : 0;
    t.validate();
    return t;
}

namespace {

std::string serialize_letters(const std::vector<int>& letters) {
    std::ostringstream os;
    for (int x : letters) os << x << ',';
    return os.str();
}

int table_inverse(const FiniteTable& t, int el) {
    for (std::size_t b = 0; b < t.size; ++b)
        if (t.mult[el][b] == t.identity) return static_cast<int>(b);
    throw internal_error("finite table inverse lookup failed");
}

} // namespace

EqualityOracle EqualityOracle::make_free(std::vector<std::string> generators) {
    EqualityOracle o;
    o.kind_ = Kind::Free;
    o.generators_ = std::move(generators);
    return o;
}

EqualityOracle EqualityOracle::make_free_abelian(std::vector<std::string> generators,
                                                 std::vector<std::vector<long long>> images) {
    EqualityOracle o;
    o.kind_ = Kind::FreeAbelian;
    o.generators_ = std::move(generators);
    if (images.empty()) {
        o.ab_rank_ = o.generators_.size();
        o.ab_images_.assign(o.generators_.size(), std::vector<long long>(o.ab_rank_, 0));
        for (std::size_t i = 0; i < o.generators_.size(); ++i) o.ab_images_[i][i] = 1;
    } else {
        if (images.size() != o.generators_.size())
            throw input_error("free-abelian oracle: one exponent image per generator required");
        o.ab_rank_ = images.front().size();
        for (const auto& v : images)
            if (v.size() != o.ab_rank_)
                throw input_error("free-abelian oracle: image ranks disagree");
        o.ab_images_ = std::move(images);
    }
    return o;
}

EqualityOracle EqualityOracle::make_finite_table(FiniteTable table) {
    table.validate();
    EqualityOracle o;
    o.kind_ = Kind::FiniteTableKind;
    for (const auto& [name, el] : table.generator_element) o.generators_.push_back(name);
    o.table_ = std::move(table);
    return o;
}

EqualityOracle EqualityOracle::make_raag(
    std::vector<std::string> generators,
    std::vector<std::pair<std::string, std::string>> edges) {
    EqualityOracle o;
    o.kind_ = Kind::Raag;
    o.generators_ = std::move(generators);
    o.graph_ = CommutingGraph(o.generators_.size());
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < o.generators_.size(); ++i)
            if (o.generators_[i] == name) return i;
        throw input_error("raag oracle: unknown generator " + name);
    };
    for (const auto& [a, b] : edges) o.graph_.add_edge(index_of(a), index_of(b));
    return o;
}

EqualityOracle EqualityOracle::make_dehn_c16(Presentation p) {
    p.validate();
    CPrimeReport rep = c_prime_check(p, Rational{1, 6});
    if (!rep.verdict)
        throw input_error("dehn-c16 oracle: presentation fails C'(1/6), max piece " +
                          std::to_string(rep.max_piece));
    EqualityOracle o;
    o.kind_ = Kind::DehnC16;
    o.generators_ = p.generators;
    std::set<std::vector<int>> seen;
    for (const auto& r : p.relators) {
        for (const Word& base : {r, r.inverse()}) {
            for (std::size_t k = 0; k < base.size(); ++k) {
                Word rot = rotate(base, k);
                if (seen.insert(rot.letters).second) o.symmetrized_.push_back(rot);
            }
        }
    }
    o.dehn_pres_ = std::move(p);
    return o;
}

EqualityOracle EqualityOracle::make_free_product(EqualityOracle left, EqualityOracle right,
                                                 const Presentation& product) {
    if (product.factor_of_generator.empty())
        throw input_error("free-product oracle needs factor information");
    EqualityOracle o;
    o.kind_ = Kind::FreeProduct;
    o.generators_ = product.generators;
    o.factor_of_generator_ = product.factor_of_generator;
    std::size_t n0 = 0, n1 = 0;
    for (int f : o.factor_of_generator_) {
        if (f == 0)
            o.factor_letter_.push_back(static_cast<int>(++n0));
        else
            o.factor_letter_.push_back(static_cast<int>(++n1));
    }
    if (n0 != left.generators().size() || n1 != right.generators().size())
        throw input_error("free-product oracle: factor generator counts disagree");
    o.left_ = std::make_shared<EqualityOracle>(std::move(left));
    o.right_ = std::make_shared<EqualityOracle>(std::move(right));
    return o;
}

const std::vector<Word>& EqualityOracle::symmetrized_relators() const {
    if (kind_ != Kind::DehnC16) throw input_error("symmetrized relators: not a dehn-c16 oracle");
    return symmetrized_;
}

DehnReduction EqualityOracle::dehn_reduce(const Word& w) const {
    if (kind_ != Kind::DehnC16) throw input_error("dehn_reduce: not a dehn-c16 oracle");
    DehnReduction red;
    red.input = w;
    Word cur = free_reduce(w);
    while (true) {
        // Leftmost position, then longest majority match against the
        // symmetrized relator set, then smallest relator index.
        bool found = false;
        std::size_t best_pos = 0, best_len = 0, best_sym = 0;
        for (std::size_t pos = 0; pos < cur.size() && !found; ++pos) {
            for (std::size_t s = 0; s < symmetrized_.size(); ++s) {
                const Word& sym = symmetrized_[s];
                std::size_t d = 0;
                while (pos + d < cur.size() && d < sym.size() &&
                       cur.letters[pos + d] == sym.letters[d])
                    ++d;
                if (2 * d > sym.size()) {
                    if (!found || d > best_len) {
                        found = true;
                        best_pos = pos;
                        best_len = d;
                        best_sym = s;
                    }
                }
            }
        }
        if (!found) break;
        const Word& sym = symmetrized_[best_sym];
        DehnStep step;
        step.pos = best_pos;
        step.match_len = best_len;
        step.sym_index = best_sym;
        step.replaced.letters.assign(cur.letters.begin() + best_pos,
                                     cur.letters.begin() + best_pos + best_len);
        Word complement;
        complement.letters.assign(sym.letters.begin() + best_len, sym.letters.end());
        step.replacement = complement.inverse();
        red.steps.push_back(step);

        Word next;
        next.letters.assign(cur.letters.begin(), cur.letters.begin() + best_pos);
        next.letters.insert(next.letters.end(), step.replacement.letters.begin(),
                            step.replacement.letters.end());
        next.letters.insert(next.letters.end(), cur.letters.begin() + best_pos + best_len,
                            cur.letters.end());
        cur = free_reduce(next);
    }
    red.result = cur;
    return red;
}

void validate_dehn_trace(const EqualityOracle& oracle, const DehnReduction& red) {
    const auto& sym = oracle.symmetrized_relators();
    Word cur = free_reduce(red.input);
    for (const auto& step : red.steps) {
        if (step.sym_index >= sym.size()) throw input_error("trace: relator index out of range");
        const Word& s = sym[step.sym_index];
        if (step.match_len > s.size() || 2 * step.match_len <= s.size())
            throw input_error("trace: match is not a majority of the relator");
        if (step.pos + step.match_len > cur.size())
            throw input_error("trace: match exceeds word");
        for (std::size_t i = 0; i < step.match_len; ++i) {
            if (cur.letters[step.pos + i] != s.letters[i])
                throw input_error("trace: replaced subword is not a relator prefix");
            if (cur.letters[step.pos + i] != step.replaced.letters[i])
                throw input_error("trace: replaced subword mismatch");
        }
        Word complement;
        complement.letters.assign(s.letters.begin() + step.match_len, s.letters.end());
        if (!(step.replacement == complement.inverse()))
            throw input_error("trace: replacement is not the complement inverse");
        // replaced * replacement^-1 must spell the full relator conjugate
        Word check = free_reduce(step.replaced * step.replacement.inverse());
        if (!(check == s)) throw input_error("trace: step does not reconstruct the relator");
        Word next;
        next.letters.assign(cur.letters.begin(), cur.letters.begin() + step.pos);
        next.letters.insert(next.letters.end(), step.replacement.letters.begin(),
                            step.replacement.letters.end());
        next.letters.insert(next.letters.end(), cur.letters.begin() + step.pos + step.match_len,
                            cur.letters.end());
        cur = free_reduce(next);
    }
    if (!(cur == red.result)) throw input_error("trace: final word mismatch");
}

bool EqualityOracle::is_trivial(const Word& w) const {
    for (int x : w.letters)
        if (std::abs(x) < 1 || std::abs(x) > static_cast<int>(generators_.size()))
            throw input_error("word letter out of range for oracle");
    switch (kind_) {
        case Kind::Free:
            return free_reduce(w).empty();
        case Kind::FreeAbelian: {
            std::vector<long long> acc(ab_rank_, 0);
            for (int x : w.letters) {
                const auto& img = ab_images_[std::abs(x) - 1];
                for (std::size_t i = 0; i < ab_rank_; ++i) acc[i] += x > 0 ? img[i] : -img[i];
            }
            return std::all_of(acc.begin(), acc.end(), [](long long v) { return v == 0; });
        }
        case Kind::FiniteTableKind: {
            int el = table_.identity;
            for (int x : w.letters) {
                int g = table_.generator_element.at(generators_[std::abs(x) - 1]);
                if (x < 0) g = table_inverse(table_, g);
                el = table_.mult[el][g];
            }
            return el == table_.identity;
        }
        case Kind::Raag:
            return raag_is_trivial(graph_, w);
        case Kind::DehnC16:
            return dehn_reduce(w).result.empty();
        case Kind::FreeProduct:
            return canonical_key(w) == canonical_key(Word{});
    }
    throw internal_error("unreachable oracle kind");
}

std::optional<std::string> EqualityOracle::canonical_key(const Word& w) const {
    switch (kind_) {
        case Kind::Free:
            return serialize_letters(free_reduce(w).letters);
        case Kind::FreeAbelian: {
            std::vector<long long> acc(ab_rank_, 0);
            for (int x : w.letters) {
                const auto& img = ab_images_[std::abs(x) - 1];
                for (std::size_t i = 0; i < ab_rank_; ++i) acc[i] += x > 0 ? img[i] : -img[i];
            }
            std::ostringstream os;
            for (long long v : acc) os << v << ',';
            return os.str();
        }
        case Kind::FiniteTableKind: {
            int el = table_.identity;
            for (int x : w.letters) {
                int g = table_.generator_element.at(generators_[std::abs(x) - 1]);
                if (x < 0) g = table_inverse(table_, g);
                el = table_.mult[el][g];
            }
            return std::to_string(el);
        }
        case Kind::Raag:
            return serialize_letters(raag_canonical(graph_, w).letters);
        case Kind::DehnC16:
            return std::nullopt;
        case Kind::FreeProduct: {
            // Alternating normal form: nontrivial syllables with exact factor keys.
            struct Syllable {
                int factor;
                std::vector<int> letters; // in factor numbering
            };
            std::vector<Syllable> syl;
            for (int x : w.letters) {
                int idx = std::abs(x) - 1;
                int f = factor_of_generator_[idx];
                int fl = factor_letter_[idx];
                int letter = x > 0 ? fl : -fl;
                if (syl.empty() || syl.back().factor != f) syl.push_back({f, {}});
                syl.back().letters.push_back(letter);
            }
            auto factor_key = [&](const Syllable& s) {
                const EqualityOracle& o = s.factor == 0 ? *left_ : *right_;
                auto k = o.canonical_key(Word{s.letters});
                if (!k) throw input_error("free-product oracle: factor lacks canonical forms");
                return *k;
            };
            std::string id0 = *left_->canonical_key(Word{});
            std::string id1 = *right_->canonical_key(Word{});
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = 0; i < syl.size(); ++i) {
                    const std::string idk = syl[i].factor == 0 ? id0 : id1;
                    if (factor_key(syl[i]) == idk) {
                        if (i > 0 && i + 1 < syl.size() &&
                            syl[i - 1].factor == syl[i + 1].factor) {
                            syl[i - 1].letters.insert(syl[i - 1].letters.end(),
                                                      syl[i + 1].letters.begin(),
                                                      syl[i + 1].letters.end());
                            syl.erase(syl.begin() + i, syl.begin() + i + 2);
                        } else {
                            syl.erase(syl.begin() + i);
                        }
                        changed = true;
                        break;
                    }
                }
            }
            std::ostringstream os;
            for (const auto& s : syl) os << s.factor << ':' << factor_key(s) << ';';
            return os.str();
        }
    }
    throw internal_error("unreachable oracle kind");
}

std::string EqualityOracle::to_json() const {
    ordered_json j;
    switch (kind_) {
        case Kind::Free:
            j["kind"] = "free";
            j["generators"] = generators_;
            break;
        case Kind::FreeAbelian: {
            j["kind"] = "free-abelian";
            j["generators"] = generators_;
            j["rank"] = ab_rank_;
            ordered_json imgs = ordered_json::array();
            for (const auto& v : ab_images_) imgs.push_back(v);
            j["images"] = imgs;
            break;
        }
        case Kind::FiniteTableKind: {
            j["kind"] = "finite-table";
            j["size"] = table_.size;
            j["identity"] = table_.identity;
            j["mult"] = table_.mult;
            ordered_json ge = ordered_json::object();
            for (const auto& [name, el] : table_.generator_element) ge[name] = el;
            j["generator_elements"] = ge;
            break;
        }
        case Kind::Raag: {
            j["kind"] = "raag";
            j["generators"] = generators_;
            ordered_json edges = ordered_json::array();
            for (std::size_t a = 0; a < generators_.size(); ++a)
                for (std::size_t b = a + 1; b < generators_.size(); ++b)
                    if (graph_.adj[a][b]) edges.push_back({generators_[a], generators_[b]});
            j["edges"] = edges;
            break;
        }
        case Kind::DehnC16:
            j["kind"] = "dehn-c16";
            j["presentation"] = ordered_json::parse(dehn_pres_.to_json());
            break;
        case Kind::FreeProduct:
            j["kind"] = "free-product";
            j["generators"] = generators_;
            j["assignment"] = factor_of_generator_;
            j["left"] = ordered_json::parse(left_->to_json());
            j["right"] = ordered_json::parse(right_->to_json());
            break;
    }
    return j.dump();
}

EqualityOracle EqualityOracle::from_json(const std::string& text,
                                         const std::optional<Presentation>& pres) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw input_error(std::string("bad oracle JSON: ") + ex.what());
    }
    const std::string kind = j.at("kind").get<std::string>();
    auto gens_from = [&](const ordered_json& node) {
        std::vector<std::string> gens;
        if (node.contains("generators"))
            for (const auto& g : node["generators"]) gens.push_back(g.get<std::string>());
        else if (pres)
            gens = pres->generators;
        else
            throw input_error("oracle JSON needs generators");
        return gens;
    };
    if (kind == "free") return make_free(gens_from(j));
    if (kind == "free-abelian") {
        auto gens = gens_from(j);
        std::vector<std::vector<long long>> images;
        if (j.contains("images")) {
            if (j["images"].is_object()) {
                std::size_t rank = j.value("rank", gens.size());
                images.assign(gens.size(), std::vector<long long>(rank, 0));
                std::size_t basis = 0;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    if (j["images"].contains(gens[i])) {
                        images[i] = j["images"][gens[i]].get<std::vector<long long>>();
                        if (images[i].size() != rank)
                            throw input_error("free-abelian oracle: image rank mismatch");
                    } else {
                        if (basis >= rank)
                            throw input_error("free-abelian oracle: too few basis slots");
                        images[i][basis++] = 1;
                    }
                }
            } else {
                for (const auto& v : j["images"]) images.push_back(v.get<std::vector<long long>>());
            }
        }
        return make_free_abelian(gens, images);
    }
    if (kind == "finite-table") {
        FiniteTable t;
        t.size = j.at("size").get<std::size_t>();
        t.identity = j.at("identity").get<int>();
        t.mult = j.at("mult").get<std::vector<std::vector<int>>>();
        for (auto it = j.at("generator_elements").begin(); it != j.at("generator_elements").end();
             ++it)
            t.generator_element[it.key()] = it.value().get<int>();
        return make_finite_table(std::move(t));
    }
    if (kind == "raag") {
        auto gens = gens_from(j);
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        return make_raag(gens, edges);
    }
    if (kind == "dehn-c16") {
        if (j.contains("presentation"))
            return make_dehn_c16(Presentation::from_json(j["presentation"].dump()));
        if (pres) return make_dehn_c16(*pres);
        throw input_error("dehn-c16 oracle needs a presentation");
    }
    if (kind == "free-product") {
        EqualityOracle left = from_json(j.at("left").dump());
        EqualityOracle right = from_json(j.at("right").dump());
        Presentation p;
        for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
        p.factor_of_generator = j.at("assignment").get<std::vector<int>>();
        return make_free_product(std::move(left), std::move(right), p);
    }
    throw input_error("unknown oracle kind: " + kind);
}

} // namespace hfill
