#include "rppc/symfunc.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/reading.hpp"
#include "rppc/word_crystal.hpp"

namespace rppc {

namespace {

std::vector<int> trimmed(std::vector<int> w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

std::vector<int> content(const Filling& t, int m) {
    std::vector<int> counts(m, 0);
    for (int v : t.entries()) ++counts[v - 1];
    return counts;
}

Partition weight_partition(const std::vector<int>& weight) {
    try {
        return Partition(trimmed(weight));
    } catch (const ValidationError&) {
        throw InternalInvariant("lattice filling weight is not a partition");
    }
}

} // namespace

SparsePoly schur(const Partition& nu, int m) {
    SparsePoly out(m);
    if (nu.length() > m) return out;
    enumerate_ssyt(SkewShape(nu), m, [&](const Filling& t) {
        out.add_term(content(t, m), 1);
    });
    return out;
}

SparsePoly skew_schur(const SkewShape& shape, int m) {
    SparsePoly out(m);
    enumerate_ssyt(shape, m, [&](const Filling& t) {
        out.add_term(content(t, m), 1);
    });
    return out;
}

SparsePoly g_poly(const SkewShape& shape, int m) {
    SparsePoly out(m);
    enumerate_rpp(shape, m, [&](const Filling& t) {
        out.add_term(t.weight(), 1);
    });
    return out;
}

SparsePoly g_refined(const SkewShape& shape, int m) {
    int k = std::max(shape.rows() - 1, 0);
    SparsePoly out(m, k);
    enumerate_rpp(shape, m, [&](const Filling& t) {
        Exponent e = t.weight();
        std::vector<int> ceq = t.ceq();
        ceq.resize(k, 0);
        e.insert(e.end(), ceq.begin(), ceq.end());
        out.add_term(e, 1);
    });
    return out;
}

SchurExpansion expand_in_schur(const SparsePoly& p, int m) {
    if (p.t_count() != 0)
        throw ValidationError("schur expansion needs a t-free polynomial");
    if (p.x_count() != m)
        throw ValidationError("variable count does not match m");
    SchurExpansion out;
    SparsePoly rest = p;
    long long rounds = 0;
    while (!rest.is_zero()) {
        if (++rounds > 1000000)
            throw InternalInvariant("schur expansion failed to terminate");
        const auto& [lead, c] = *rest.terms().begin();
        for (std::size_t k = 0; k + 1 < lead.size(); ++k) {
            if (lead[k] < lead[k + 1]) {
                std::string exp;
                for (int v : lead) exp += std::to_string(v) + ",";
                if (!exp.empty()) exp.pop_back();
                throw NotSymmetric("leading exponent (" + exp +
                                   ") is not weakly decreasing");
            }
        }
        Partition nu(trimmed(lead));
        out[nu] += c;
        rest -= schur(nu, m).scaled(c);
    }
    return out;
}

SchurExpansion h_coeffs(const SkewShape& shape, int m) {
    SchurExpansion out;
    enumerate_rpp(shape, m, [&](const Filling& t) {
        if (!is_lattice(reading_word(t))) return;
        out[weight_partition(t.weight())] += 1;
    });
    return out;
}

RefinedExpansion h_coeffs_refined(const SkewShape& shape, int m) {
    RefinedExpansion out;
    enumerate_rpp(shape, m, [&](const Filling& t) {
        if (!is_lattice(reading_word(t))) return;
        out[{weight_partition(t.weight()), t.ceq()}] += 1;
    });
    return out;
}

SchurExpansion lr_classical(const SkewShape& shape) {
    int bound = std::max(shape.cell_count(), 1);
    SchurExpansion out;
    enumerate_ssyt(shape, bound, [&](const Filling& t) {
        Word w = reading_word(t);
        if (!is_lattice(w)) return;
        out[weight_partition(word_weight(w, bound))] += 1;
    });
    return out;
}

long long elegant_count(const Partition& outer, const Partition& nu) {
    if (!nu.contained_in(outer)) return 0;
    return count_elegant(outer, nu);
}

namespace {

std::vector<const SchurExpansion::value_type*> display_order(
    const SchurExpansion& e) {
    std::vector<const SchurExpansion::value_type*> rows;
    for (const auto& kv : e) rows.push_back(&kv);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
        return graded_lex_greater(a->first, b->first);
    });
    return rows;
}

std::string composition_text(const std::vector<int>& alpha) {
    if (alpha.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(alpha[k]);
    }
    return out;
}

std::vector<const RefinedExpansion::value_type*> refined_order(
    const RefinedExpansion& e) {
    std::vector<const RefinedExpansion::value_type*> rows;
    for (const auto& kv : e) rows.push_back(&kv);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
        if (a->first.first != b->first.first)
            return graded_lex_greater(a->first.first, b->first.first);
        return a->first.second < b->first.second;
    });
    return rows;
}

} // namespace

std::string expansion_to_string(const SchurExpansion& e) {
    std::ostringstream out;
    for (const auto* kv : display_order(e))
        out << kv->first.to_string() << " : " << kv->second.str() << "\n";
    return out.str();
}

std::string expansion_to_json(const SchurExpansion& e) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto* kv : display_order(e)) {
        nlohmann::json row;
        row["weight"] = kv->first.parts();
        row["coeff"] = kv->second.str();
        doc.push_back(std::move(row));
    }
    return doc.dump();
}

std::string refined_to_string(const RefinedExpansion& e) {
    std::ostringstream out;
    for (const auto* kv : refined_order(e))
        out << kv->first.first.to_string() << " : "
            << composition_text(kv->first.second) << " : " << kv->second.str()
            << "\n";
    return out.str();
}

std::string refined_to_json(const RefinedExpansion& e) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto* kv : refined_order(e)) {
        nlohmann::json row;
        row["weight"] = kv->first.first.parts();
        row["ceq"] = kv->first.second;
        row["coeff"] = kv->second.str();
        doc.push_back(std::move(row));
    }
    return doc.dump();
}

} // namespace rppc
