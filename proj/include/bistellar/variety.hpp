/*
   Copyright 2026 The bistellar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstring>
#include <optional>
#include <thread>
#include <vector>

#include <json.hpp>

#include "relations.hpp"

namespace bistellar {

struct EnumOptions {
    std::uint64_t node_budget = 1ull << 34;   // reject runs with q^v above this
    std::uint64_t long_threshold = 1ull << 28;  // flag runs with q^v above this
    std::uint64_t collect_cap = 1ull << 20;
    unsigned threads = 1;
};

/// Exact counts per field plus the derived growth-exponent estimate.
struct FieldCount {
    Domain field;
    std::uint64_t count = 0;
    bool long_run = false;
};

struct CountReport {
    std::vector<FieldCount> counts;
};

struct SolutionSet {
    Domain field;
    std::vector<std::string> vars;
    std::vector<std::vector<std::uint32_t>> assignments;  // values per var, var order of `vars`
};

namespace detail {

constexpr std::size_t kMaxTermFactors = 15;

struct CTerm {
    std::uint32_t coeff = 0;
    std::uint8_t nf = 0;
    std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxTermFactors> f{};  // (var, exp), var ascending

    bool mono_less(const CTerm& o) const {
        const int n = std::min(nf, o.nf);
        for (int i = 0; i < n; ++i) {
            if (f[static_cast<std::size_t>(i)] != o.f[static_cast<std::size_t>(i)])
                return f[static_cast<std::size_t>(i)] < o.f[static_cast<std::size_t>(i)];
        }
        return nf < o.nf;
    }
    bool mono_eq(const CTerm& o) const {
        if (nf != o.nf) return false;
        for (int i = 0; i < nf; ++i)
            if (f[static_cast<std::size_t>(i)] != o.f[static_cast<std::size_t>(i)]) return false;
        return true;
    }
};

struct GfOps {
    unsigned m;
    std::uint32_t q() const { return 1u << m; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return kGf2m.mul[m][a][b];
    }
};

struct ZpOps {
    std::uint32_t p;
    std::uint32_t q() const { return p; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
};

/// Reduce a system coefficient into the enumeration field. Q drops to the
/// prime subfield (denominator must be invertible); F2 lifts into any F_{2^m}.
inline std::uint32_t lift_coeff(const Scalar& c, Domain target) {
    const Domain src = c.domain();
    if (src == target) return c.repr();
    if (src.kind == FieldKind::Rational) {
        const std::uint32_t ch = target.characteristic();
        BigInt num = numerator(c.rat()) % ch;
        BigInt den = denominator(c.rat()) % ch;
        if (den == 0)
            throw input_error("coefficient denominator not invertible modulo " + std::to_string(ch));
        if (num < 0) num += ch;
        std::uint32_t nv = num.convert_to<std::uint32_t>();
        std::uint32_t dv = den.convert_to<std::uint32_t>();
        Scalar s = Scalar::of(target, nv) * Scalar::of(target, dv).inv();
        return s.repr();
    }
    if (src.kind == FieldKind::Binary && target.kind == FieldKind::Binary && src.param == 1)
        return c.repr();  // prime subfield embedding
    throw input_error("cannot interpret " + src.tag() + " coefficients over " + target.tag());
}

struct CompiledSystem {
    std::uint32_t nvars = 0;
    std::uint32_t last_constrained = 0;        // depths >= this touch no relation
    std::vector<std::uint32_t> order;          // order[d] = original var id assigned at depth d
    std::vector<std::vector<CTerm>> relations;  // in internal variable numbering
    std::vector<std::vector<std::uint16_t>> touching;  // depth -> relation indices
    bool infeasible = false;  // a nonzero constant relation
};

inline std::vector<std::uint32_t> greedy_order(const RelationSystem& sys) {
    const std::uint32_t n = static_cast<std::uint32_t>(sys.vars.size());
    std::vector<std::vector<std::uint32_t>> rel_vars;
    for (const auto& r : sys.relations) {
        std::vector<std::uint32_t> vs;
        for (const auto& t : r.terms())
            for (const auto& [v, e] : t.mono.factors()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        rel_vars.push_back(std::move(vs));
    }
    std::vector<bool> assigned(n, false);
    std::vector<bool> done(rel_vars.size(), false);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    // Assign whole relations at a time, cheapest first, so each relation
    // completes (and prunes) as early as possible.
    for (;;) {
        std::size_t best = rel_vars.size();
        std::size_t best_missing = SIZE_MAX;
        for (std::size_t r = 0; r < rel_vars.size(); ++r) {
            if (done[r]) continue;
            std::size_t missing = 0;
            for (auto v : rel_vars[r])
                if (!assigned[v]) ++missing;
            if (missing < best_missing) {
                best_missing = missing;
                best = r;
            }
        }
        if (best == rel_vars.size()) break;
        done[best] = true;
        for (auto v : rel_vars[best])
            if (!assigned[v]) {
                assigned[v] = true;
                order.push_back(v);
            }
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (!assigned[v]) order.push_back(v);
    return order;
}

inline CompiledSystem compile_system(const RelationSystem& sys, Domain field) {
    if (!field.finite()) throw input_error("enumeration requires a finite field");
    if (sys.dom.finite() && sys.dom.characteristic() != field.characteristic())
        throw input_error("system over " + sys.dom.tag() + " cannot be counted over " + field.tag());
    if (sys.vars.size() > 250) throw input_error("too many variables for enumeration");

    CompiledSystem cs;
    cs.nvars = static_cast<std::uint32_t>(sys.vars.size());
    cs.order = greedy_order(sys);
    std::vector<std::uint32_t> rank(cs.nvars);  // original id -> internal depth
    for (std::uint32_t d = 0; d < cs.nvars; ++d) rank[cs.order[d]] = d;

    for (const auto& rel : sys.relations) {
        std::vector<CTerm> terms;
        for (const auto& t : rel.terms()) {
            CTerm ct;
            ct.coeff = lift_coeff(t.coeff, field);
            if (ct.coeff == 0) continue;
            const auto& fs = t.mono.factors();
            if (fs.size() > kMaxTermFactors)
                throw input_error("monomial with more than 15 variables is unsupported");
            for (const auto& [v, e] : fs) {
                if (e > 255) throw input_error("exponent too large");
                ct.f[ct.nf++] = {static_cast<std::uint8_t>(rank[v]), static_cast<std::uint8_t>(e)};
            }
            std::sort(ct.f.begin(), ct.f.begin() + ct.nf);
            terms.push_back(ct);
        }
        cs.relations.push_back(std::move(terms));
    }

    cs.touching.assign(cs.nvars, {});
    for (std::size_t r = 0; r < cs.relations.size(); ++r) {
        std::vector<bool> seen(cs.nvars, false);
        for (const auto& t : cs.relations[r])
            for (int i = 0; i < t.nf; ++i) seen[t.f[static_cast<std::size_t>(i)].first] = true;
        for (std::uint32_t d = 0; d < cs.nvars; ++d)
            if (seen[d]) {
                cs.touching[d].push_back(static_cast<std::uint16_t>(r));
                cs.last_constrained = std::max(cs.last_constrained, d + 1);
            }
    }
    return cs;
}

template <class Ops>
inline void merge_terms(const Ops& ops, std::vector<CTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const CTerm& a, const CTerm& b) { return a.mono_less(b); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        CTerm acc = terms[i];
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].mono_eq(acc)) {
            acc.coeff = ops.add(acc.coeff, terms[j].coeff);
            ++j;
        }
        if (acc.coeff != 0) terms[out++] = acc;
        i = j;
    }
    terms.resize(out);
}

/// Per-relation stack of partial evaluations; one level per substituted depth.
template <class Ops>
class Walker {
  public:
    Walker(const CompiledSystem& cs, Ops ops) : cs_(cs), ops_(ops) {
        states_.resize(cs.relations.size());
        for (std::size_t r = 0; r < states_.size(); ++r) {
            auto& st = states_[r];
            st.levels.resize(cs.nvars + 1);
            st.levels[0] = cs.relations[r];
            merge_terms(ops_, st.levels[0]);
            st.active.push_back(0);
            if (st.levels[0].size() == 1 && st.levels[0][0].nf == 0) infeasible_ = true;
        }
        vals_.assign(cs.nvars, 0);
    }

    bool infeasible() const { return infeasible_; }

    /// Substitute value for the depth-d variable into every relation that
    /// still mentions it. Returns false when some relation is forced nonzero.
    bool push(std::uint32_t depth, std::uint32_t val) {
        vals_[depth] = val;
        std::size_t touched = 0;
        for (std::uint16_t r : cs_.touching[depth]) {
            auto& st = states_[r];
            const auto& cur = st.levels[st.active.back()];
            bool uses = false;
            for (const auto& t : cur) {
                for (int i = 0; i < t.nf; ++i)
                    if (t.f[static_cast<std::size_t>(i)].first == depth) {
                        uses = true;
                        break;
                    }
                if (uses) break;
            }
            if (!uses) continue;
            auto& next = st.levels[depth + 1];
            substitute(cur, static_cast<std::uint8_t>(depth), val, next);
            st.active.push_back(depth + 1);
            ++touched;
            pushed_.push_back(r);
            if (next.size() == 1 && next[0].nf == 0 && next[0].coeff != 0) {
                // forced nonzero: undo this depth's substitutions
                pop(depth);
                return false;
            }
        }
        marks_.push_back(touched);
        return true;
    }

    /// Undo substitutions made at this depth (after a completed push).
    void pop_marked() {
        std::size_t touched = marks_.back();
        marks_.pop_back();
        for (std::size_t i = 0; i < touched; ++i) {
            states_[pushed_.back()].active.pop_back();
            pushed_.pop_back();
        }
    }

    const std::vector<std::uint32_t>& values() const { return vals_; }

  private:
    void pop(std::uint32_t depth) {
        while (!pushed_.empty()) {
            auto& st = states_[pushed_.back()];
            if (st.active.back() != depth + 1) break;
            st.active.pop_back();
            pushed_.pop_back();
        }
    }

    void substitute(const std::vector<CTerm>& in, std::uint8_t var, std::uint32_t val,
                    std::vector<CTerm>& out) {
        out.clear();
        for (const auto& t : in) {
            int pos = -1;
            for (int i = 0; i < t.nf; ++i)
                if (t.f[static_cast<std::size_t>(i)].first == var) {
                    pos = i;
                    break;
                }
            if (pos < 0) {
                out.push_back(t);
                continue;
            }
            std::uint32_t c = t.coeff;
            if (val == 0) continue;  // positive exponent of zero kills the term
            std::uint32_t p = 1;
            for (unsigned e = 0; e < t.f[static_cast<std::size_t>(pos)].second; ++e)
                p = ops_.mul(p, val);
            c = ops_.mul(c, p);
            if (c == 0) continue;
            CTerm nt;
            nt.coeff = c;
            nt.nf = 0;
            for (int i = 0; i < t.nf; ++i)
                if (i != pos) nt.f[nt.nf++] = t.f[static_cast<std::size_t>(i)];
            out.push_back(nt);
        }
        merge_terms(ops_, out);
    }

    struct RelState {
        std::vector<std::vector<CTerm>> levels;
        std::vector<std::uint32_t> active;  // stack of level indices, front is 0
    };

    const CompiledSystem& cs_;
    Ops ops_;
    std::vector<RelState> states_;
    std::vector<std::uint16_t> pushed_;  // relation indices in push order
    std::vector<std::size_t> marks_;     // per-depth touch counts
    std::vector<std::uint32_t> vals_;
    bool infeasible_ = false;
};

struct EnumSink {
    std::uint64_t count = 0;
    std::vector<std::vector<std::uint32_t>>* collect = nullptr;  // original var order
    const std::vector<std::uint32_t>* order = nullptr;
    std::atomic<std::uint64_t>* collected_total = nullptr;
    std::uint64_t collect_cap = 0;
    bool cap_exceeded = false;
};

template <class Ops>
inline void dfs(Walker<Ops>& w, const CompiledSystem& cs, Ops ops, std::uint32_t depth,
                EnumSink& sink) {
    if (!sink.collect && depth >= cs.last_constrained) {
        // Every relation is already a settled constant (nonzero ones pruned
        // the branch), so the remaining variables are free.
        std::uint64_t tail = 1;
        for (std::uint32_t d = depth; d < cs.nvars; ++d) tail *= ops.q();
        sink.count += tail;
        return;
    }
    if (depth == cs.nvars) {
        ++sink.count;
        if (sink.collect) {
            if (sink.collected_total->fetch_add(1, std::memory_order_relaxed) >= sink.collect_cap) {
                sink.cap_exceeded = true;
                return;
            }
            std::vector<std::uint32_t> a(cs.nvars);
            for (std::uint32_t d = 0; d < cs.nvars; ++d) a[cs.order[d]] = w.values()[d];
            sink.collect->push_back(std::move(a));
        }
        return;
    }
    for (std::uint32_t v = 0; v < ops.q(); ++v) {
        if (!w.push(depth, v)) continue;
        dfs(w, cs, ops, depth + 1, sink);
        w.pop_marked();
        if (sink.cap_exceeded) return;
    }
}

inline std::uint64_t checked_pow(std::uint64_t q, std::uint32_t v, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < v; ++i) {
        if (acc > cap / q) return UINT64_MAX;
        acc *= q;
    }
    return acc;
}

template <class Ops>
inline std::uint64_t enumerate_impl(const CompiledSystem& cs, Ops ops, const EnumOptions& opts,
                                    SolutionSet* collect_into) {
    const std::uint32_t q = ops.q();
    // Prefix blocks give a deterministic parallel partition: totals are sums
    // over blocks, solutions concatenate in block order.
    std::uint32_t prefix = 0;
    std::uint64_t blocks = 1;
    while (prefix < cs.nvars && blocks < 1024) {
        blocks *= q;
        ++prefix;
    }
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> collected_total{0};
    std::vector<std::uint64_t> block_counts(blocks, 0);
    std::vector<std::vector<std::vector<std::uint32_t>>> block_solutions;
    if (collect_into) block_solutions.resize(blocks);
    std::atomic<bool> failed{false};

    auto worker = [&]() {
        Walker<Ops> w(cs, ops);
        if (w.infeasible()) return;
        for (;;) {
            const std::uint64_t b = next_block.fetch_add(1, std::memory_order_relaxed);
            if (b >= blocks || failed.load(std::memory_order_relaxed)) break;
            EnumSink sink;
            if (collect_into) {
                sink.collect = &block_solutions[b];
                sink.order = &cs.order;
                sink.collected_total = &collected_total;
                sink.collect_cap = opts.collect_cap;
            }
            // decode block prefix, most significant digit first
            std::uint32_t pushed = 0;
            bool ok = true;
            for (std::uint32_t d = 0; d < prefix && ok; ++d) {
                std::uint64_t div = 1;
                for (std::uint32_t k = d + 1; k < prefix; ++k) div *= q;
                const std::uint32_t val = static_cast<std::uint32_t>(b / div % q);
                ok = w.push(d, val);
                if (ok) ++pushed;
            }
            if (ok) {
                dfs(w, cs, ops, prefix, sink);
                block_counts[b] = sink.count;
            }
            for (std::uint32_t d = 0; d < pushed; ++d) w.pop_marked();
            if (sink.cap_exceeded) {
                failed.store(true, std::memory_order_relaxed);
                break;
            }
        }
    };

    const unsigned nthreads = std::max(1u, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load())
        throw budget_error("solution set exceeds the collect cap of " +
                           std::to_string(opts.collect_cap));

    std::uint64_t total = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) total += block_counts[b];
    if (collect_into)
        for (auto& bs : block_solutions)
            for (auto& s : bs) collect_into->assignments.push_back(std::move(s));
    return total;
}

template <class Fn>
inline auto with_ops(Domain field, Fn&& fn) {
    if (field.kind == FieldKind::Binary) return fn(GfOps{field.param});
    if (field.kind == FieldKind::Prime) return fn(ZpOps{field.param});
    throw input_error("enumeration requires a finite field");
}

}  // namespace detail

inline void check_budget(const RelationSystem& sys, Domain field, const EnumOptions& opts) {
    if (!field.finite()) throw input_error("enumeration requires a finite field");
    const std::uint64_t total =
        detail::checked_pow(field.size(), static_cast<std::uint32_t>(sys.vars.size()), opts.node_budget);
    if (total == UINT64_MAX || total > opts.node_budget)
        throw budget_error("assignment space " + field.tag() + "^" +
                           std::to_string(sys.vars.size()) + " exceeds the node budget of " +
                           std::to_string(opts.node_budget));
}

inline bool is_long_run(const RelationSystem& sys, Domain field, const EnumOptions& opts) {
    return detail::checked_pow(field.size(), static_cast<std::uint32_t>(sys.vars.size()),
                               opts.long_threshold) == UINT64_MAX;
}

/// Exact number of assignments annihilating every relation. Backtracking over
/// a relation-completion variable order; a relation is tested the moment it
/// becomes constant under the partial assignment (exact pruning only).
/// Deterministic for any thread count.
inline std::uint64_t count_solutions(const RelationSystem& sys, Domain field,
                                     const EnumOptions& opts = {}) {
    check_budget(sys, field, opts);
    auto cs = detail::compile_system(sys, field);
    return detail::with_ops(field, [&](auto ops) { return detail::enumerate_impl(cs, ops, opts, nullptr); });
}

/// Explicit solution list (canonically ordered); throws budget_error when the
/// set would exceed opts.collect_cap.
inline SolutionSet collect_solutions(const RelationSystem& sys, Domain field,
                                     const EnumOptions& opts = {}) {
    check_budget(sys, field, opts);
    auto cs = detail::compile_system(sys, field);
    SolutionSet out;
    out.field = field;
    out.vars = sys.vars;
    detail::with_ops(field, [&](auto ops) { return detail::enumerate_impl(cs, ops, opts, &out); });
    std::sort(out.assignments.begin(), out.assignments.end());
    return out;
}

inline CountReport count_over_fields(const RelationSystem& sys, const std::vector<Domain>& fields,
                                     const EnumOptions& opts = {}) {
    CountReport rep;
    for (Domain f : fields)
        rep.counts.push_back({f, count_solutions(sys, f, opts), is_long_run(sys, f, opts)});
    return rep;
}

// --- Dimension-exponent estimation ---

struct PairExponent {
    Domain from, to;
    double raw = 0;
};

struct DimEstimate {
    std::vector<PairExponent> pairs;
    std::optional<long long> dimension;
    std::string diagnostic;  // "", "empty variety", "inconsistent", "insufficient fields"
};

/// Fits log(N_{q'}/N_q) / log(q'/q) per adjacent field pair; reports the
/// common rounded exponent when every pair sits within 0.15 of one integer.
inline DimEstimate dim_estimate(const CountReport& rep, double tolerance = 0.15) {
    DimEstimate est;
    for (const auto& fc : rep.counts)
        if (fc.count == 0) {
            est.diagnostic = "empty variety";
            return est;
        }
    if (rep.counts.size() < 2) {
        est.diagnostic = "insufficient fields";
        return est;
    }
    double sum = 0;
    for (std::size_t i = 0; i + 1 < rep.counts.size(); ++i) {
        const auto& a = rep.counts[i];
        const auto& b = rep.counts[i + 1];
        const double raw = (std::log(static_cast<double>(b.count)) -
                            std::log(static_cast<double>(a.count))) /
                           (std::log(static_cast<double>(b.field.size())) -
                            std::log(static_cast<double>(a.field.size())));
        est.pairs.push_back({a.field, b.field, raw});
        sum += raw;
    }
    const long long candidate = std::llround(sum / static_cast<double>(est.pairs.size()));
    for (const auto& p : est.pairs)
        if (std::fabs(p.raw - static_cast<double>(candidate)) > tolerance) {
            est.diagnostic = "inconsistent";
            return est;
        }
    est.dimension = candidate;
    return est;
}

// --- Stable-equivalence comparison (point-count proxy) ---

enum class EquivKind { Consistent, Approximate, Inconsistent };

struct EquivVerdict {
    EquivKind kind = EquivKind::Inconsistent;
    long long k = 0;  // N_b = N_a * q^k
    CountReport a, b;
    /// This comparison is a necessary-style heuristic on point counts, not a
    /// decision procedure for birational equivalence.
    static constexpr const char* kNote = "point-count heuristic, not a decision procedure";
};

inline EquivVerdict stable_equiv_compare_counts(const CountReport& a, const CountReport& b,
                                                const std::vector<Domain>& fields) {
    EquivVerdict v;
    v.a = a;
    v.b = b;

    bool all_zero = true, any_zero_mismatch = false;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto na = v.a.counts[i].count, nb = v.b.counts[i].count;
        if (na != 0 || nb != 0) all_zero = false;
        if ((na == 0) != (nb == 0)) any_zero_mismatch = true;
    }
    if (all_zero) {
        v.kind = EquivKind::Consistent;
        v.k = 0;
        return v;
    }
    if (any_zero_mismatch) {
        v.kind = EquivKind::Inconsistent;
        return v;
    }

    auto exact_k = [](std::uint64_t na, std::uint64_t nb, std::uint64_t q) -> std::optional<long long> {
        if (na == nb) return 0;
        long long k = 0;
        std::uint64_t lo = na, hi = nb;
        bool flip = false;
        if (lo > hi) {
            std::swap(lo, hi);
            flip = true;
        }
        while (lo < hi) {
            if (lo > hi / q) return std::nullopt;  // would overflow past hi
            lo *= q;
            ++k;
        }
        if (lo != hi) return std::nullopt;
        return flip ? -k : k;
    };

    std::optional<long long> k0 = exact_k(v.a.counts[0].count, v.b.counts[0].count,
                                          fields[0].size());
    if (k0) {
        bool all = true;
        for (std::size_t i = 1; i < fields.size() && all; ++i) {
            auto ki = exact_k(v.a.counts[i].count, v.b.counts[i].count, fields[i].size());
            all = ki && *ki == *k0;
        }
        if (all) {
            v.kind = EquivKind::Consistent;
            v.k = *k0;
            return v;
        }
    }

    double sum = 0;
    std::vector<double> raws;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const double e = (std::log(static_cast<double>(v.b.counts[i].count)) -
                          std::log(static_cast<double>(v.a.counts[i].count))) /
                         std::log(static_cast<double>(fields[i].size()));
        raws.push_back(e);
        sum += e;
    }
    const long long cand = std::llround(sum / static_cast<double>(raws.size()));
    bool fits = true;
    for (double e : raws)
        if (std::fabs(e - static_cast<double>(cand)) > 0.15) fits = false;
    if (fits) {
        v.kind = EquivKind::Approximate;
        v.k = cand;
    } else {
        v.kind = EquivKind::Inconsistent;
    }
    return v;
}

inline EquivVerdict stable_equiv_compare(const RelationSystem& a, const RelationSystem& b,
                                         const std::vector<Domain>& fields,
                                         const EnumOptions& opts = {}) {
    return stable_equiv_compare_counts(count_over_fields(a, fields, opts),
                                       count_over_fields(b, fields, opts), fields);
}

inline std::string equiv_kind_str(EquivKind k) {
    switch (k) {
        case EquivKind::Consistent: return "CONSISTENT";
        case EquivKind::Approximate: return "APPROXIMATE";
        case EquivKind::Inconsistent: return "INCONSISTENT";
    }
    return "?";
}

// --- Solution-set symmetric difference ---

struct DiffReport {
    std::vector<std::vector<std::uint32_t>> only_a, only_b;
    bool empty() const { return only_a.empty() && only_b.empty(); }
};

inline DiffReport solution_diff(const SolutionSet& a, const SolutionSet& b) {
    if (a.field != b.field) throw input_error("solution sets over different fields");
    if (a.vars != b.vars) throw input_error("solution sets over different variable lists");
    DiffReport rep;
    std::set_difference(a.assignments.begin(), a.assignments.end(), b.assignments.begin(),
                        b.assignments.end(), std::back_inserter(rep.only_a));
    std::set_difference(b.assignments.begin(), b.assignments.end(), a.assignments.begin(),
                        a.assignments.end(), std::back_inserter(rep.only_b));
    return rep;
}

// --- JSON (counts as decimal strings; they may exceed 2^53) ---

inline nlohmann::json count_report_to_json(const CountReport& rep) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& fc : rep.counts) {
        nlohmann::json e;
        e["field"] = fc.field.tag();
        e["count"] = std::to_string(fc.count);
        if (fc.long_run) e["long"] = true;
        j.push_back(e);
    }
    return j;
}

inline nlohmann::json dim_estimate_to_json(const DimEstimate& est) {
    nlohmann::json j;
    auto& pairs = j["pair_exponents"] = nlohmann::json::array();
    for (const auto& p : est.pairs) {
        nlohmann::json e;
        e["from"] = p.from.tag();
        e["to"] = p.to.tag();
        e["raw"] = p.raw;
        pairs.push_back(e);
    }
    if (est.dimension) j["dimension"] = *est.dimension;
    else j["diagnostic"] = est.diagnostic;
    return j;
}

inline nlohmann::json solution_set_to_json(const SolutionSet& s) {
    nlohmann::json j;
    j["field"] = s.field.tag();
    j["variables"] = s.vars;
    j["solutions"] = s.assignments;
    return j;
}

}  // namespace bistellar
