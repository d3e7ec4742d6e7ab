#include "rppc/verify.hpp"

#include <functional>
#include <sstream>

#include "rppc/crystal_graph.hpp"
#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/reading.hpp"
#include "rppc/rpp_crystal.hpp"
#include "rppc/symfunc.hpp"
#include "rppc/word_crystal.hpp"

namespace rppc {

namespace {

struct Run {
    VerifyReport report;

    // records the first counterexample and stops the sweep
    bool fail(const std::string& witness) {
        if (report.passed) {
            report.passed = false;
            report.witness = witness;
        }
        return false;
    }
};

std::string describe(const SkewShape& shape, int m) {
    return "shape=" + shape.to_string() + " m=" + std::to_string(m);
}

std::string describe(const Filling& t, int i = 0) {
    std::string out = describe(t.shape(), t.max_entry());
    if (i) out += " i=" + std::to_string(i);
    return out + " tableau=" + to_json(t);
}

// visits every corpus (shape, m) until the callback reports failure
void for_each_shape(const VerifyOptions& o,
                    const std::function<bool(const SkewShape&, int)>& f) {
    for (const Partition& outer : partitions_up_to(o.max_cells))
        for (const Partition& inner : subpartitions(outer))
            for (int m = 1; m <= o.max_entry; ++m)
                if (!f(SkewShape(outer, inner), m)) return;
}

bool same_filling(const std::optional<Filling>& a,
                  const std::optional<Filling>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

VerifyReport suite_intertwine(const VerifyOptions& o) {
    Run run;
    for_each_shape(o, [&](const SkewShape& shape, int m) {
        bool ok = true;
        enumerate_rpp(shape, m, [&](const Filling& t) {
            if (!ok) return;
            Word word = reading_word(t);
            for (int i = 1; i < m && ok; ++i) {
                ++run.report.cases;
                auto lowered = lower_rpp(t, i);
                auto lowered_word = lower_word(word, i);
                if (lowered.has_value() != lowered_word.has_value() ||
                    (lowered && reading_word(*lowered) != *lowered_word)) {
                    ok = run.fail("lowering: " + describe(t, i));
                    return;
                }
                auto raised = raise_rpp(t, i);
                auto raised_word = raise_word(word, i);
                if (raised.has_value() != raised_word.has_value() ||
                    (raised && reading_word(*raised) != *raised_word)) {
                    ok = run.fail("raising: " + describe(t, i));
                }
            }
        });
        return ok;
    });
    return run.report;
}

VerifyReport suite_identity(const VerifyOptions& o) {
    Run run;
    for_each_shape(o, [&](const SkewShape& shape, int m) {
        ++run.report.cases;
        if (expand_in_schur(g_poly(shape, m), m) != h_coeffs(shape, m))
            return run.fail(describe(shape, m));
        return true;
    });
    return run.report;
}

VerifyReport suite_confluence(const VerifyOptions& o) {
    Run run;
    for_each_shape(o, [&](const SkewShape& shape, int m) {
        bool ok = true;
        enumerate_rpp(shape, m, [&](const Filling& t) {
            if (!ok) return;
            for (int i = 1; i < m && ok; ++i) {
                ++run.report.cases;
                auto check = [&](auto op, const char* name) {
                    auto leftmost = op(t, i, ResolveStrategy::Leftmost, 0u);
                    if (!same_filling(leftmost,
                                      op(t, i, ResolveStrategy::Rightmost, 0u)))
                        return run.fail(std::string(name) + " rightmost: " +
                                        describe(t, i));
                    for (int k = 0; k < o.random_orders; ++k) {
                        unsigned seed = o.seed + static_cast<unsigned>(k);
                        if (!same_filling(
                                leftmost,
                                op(t, i, ResolveStrategy::Random, seed)))
                            return run.fail(std::string(name) + " seed " +
                                            std::to_string(seed) + ": " +
                                            describe(t, i));
                    }
                    return true;
                };
                ok = check([](const Filling& f, int idx, ResolveStrategy s,
                              unsigned seed) { return lower_rpp(f, idx, s, seed); },
                           "lower") &&
                     check([](const Filling& f, int idx, ResolveStrategy s,
                              unsigned seed) { return raise_rpp(f, idx, s, seed); },
                           "raise");
            }
        });
        return ok;
    });
    return run.report;
}

VerifyReport suite_elegant(const VerifyOptions& o) {
    Run run;
    for (const Partition& outer : partitions_up_to(o.max_cells)) {
        SkewShape straight(outer);
        for (int m = 1; m <= o.max_entry; ++m) {
            SchurExpansion h = h_coeffs(straight, m);
            for (const Partition& nu : partitions_up_to(outer.size())) {
                if (nu.length() > m) continue;
                ++run.report.cases;
                auto it = h.find(nu);
                BigInt counted = it == h.end() ? BigInt(0) : it->second;
                if (counted != elegant_count(outer, nu)) {
                    run.fail(describe(straight, m) + " nu=" + nu.to_string());
                    return run.report;
                }
            }
        }
    }
    return run.report;
}

VerifyReport suite_symmetry(const VerifyOptions& o) {
    Run run;
    for_each_shape(o, [&](const SkewShape& shape, int m) {
        SparsePoly p = g_poly(shape, m);
        for (int j = 1; j < m; ++j) {
            ++run.report.cases;
            if (!(p.swap_x(j) == p))
                return run.fail(describe(shape, m) + " j=" + std::to_string(j));
        }
        return true;
    });
    return run.report;
}

VerifyReport suite_reconstruct(const VerifyOptions& o) {
    Run run;
    for_each_shape(o, [&](const SkewShape& shape, int m) {
        bool ok = true;
        enumerate_rpp(shape, m, [&](const Filling& t) {
            if (!ok) return;
            ++run.report.cases;
            auto back =
                reconstruct(shape, reading_word(t), height_vector(t), m);
            if (!back || !(*back == t)) ok = run.fail(describe(t));
        });
        return ok;
    });
    return run.report;
}

VerifyReport suite_components(const VerifyOptions& o) {
    Run run;
    for_each_shape(o, [&](const SkewShape& shape, int m) {
        CrystalGraph g = build_crystal_graph(shape, m);
        SchurExpansion observed;
        for (const auto& comp : g.components) {
            ++run.report.cases;
            const Filling& top = g.vertices[comp.highest];
            if (!is_lattice(reading_word(top)))
                return run.fail("highest word not lattice: " + describe(top));
            SparsePoly weight_sum(m);
            for (int v : comp.vertices)
                weight_sum.add_term(g.vertices[v].weight(), 1);
            if (!(weight_sum == schur(comp.weight, m)))
                return run.fail("component of " + describe(top) +
                                " is not a schur polynomial");
            observed[comp.weight] += 1;
        }
        if (observed != h_coeffs(shape, m))
            return run.fail("component weights vs counts: " + describe(shape, m));
        return true;
    });
    return run.report;
}

} // namespace

std::vector<std::string> verify_suite_names() {
    return {"intertwine", "identity", "confluence", "elegant",
            "symmetry",   "reconstruct", "components"};
}

VerifyReport run_verify_suite(const std::string& suite,
                              const VerifyOptions& opts) {
    VerifyReport report;
    if (suite == "intertwine") report = suite_intertwine(opts);
    else if (suite == "identity") report = suite_identity(opts);
    else if (suite == "confluence") report = suite_confluence(opts);
    else if (suite == "elegant") report = suite_elegant(opts);
    else if (suite == "symmetry") report = suite_symmetry(opts);
    else if (suite == "reconstruct") report = suite_reconstruct(opts);
    else if (suite == "components") report = suite_components(opts);
    else throw ValidationError("unknown verify suite: " + suite);
    report.suite = suite;
    return report;
}

} // namespace rppc
