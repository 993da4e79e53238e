#include "palf/factor.hpp"

#include "palf/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace palf {

TwistTuple::TwistTuple(std::vector<Curve> cycles) : cycles_(std::move(cycles)) {
    for (const auto& c : cycles_)
        if (c.surface() != cycles_.front().surface())
            throw Error(ErrorKind::InvalidArgument, "tuple mixes curves on different surfaces");
}

std::string TwistTuple::to_string() const {
    std::string out;
    for (size_t i = 0; i < cycles_.size(); ++i) {
        if (i) out += ", ";
        out += cycles_[i].to_string();
    }
    return out;
}

namespace {

MoveStep invert_step(const MoveStep& step) {
    if (auto* h = std::get_if<HurwitzMove>(&step))
        return HurwitzMove{h->index, h->direction == Direction::Forward ? Direction::Inverse : Direction::Forward};
    return Conjugate{invert(std::get<Conjugate>(step).psi)};
}

void require_four_holed(const TwistTuple& t) {
    if (t.surface() != kFourHoled)
        throw Error(ErrorKind::Unsupported, "mapping class arithmetic needs the 4-holed sphere page");
}

} // namespace

MoveCertificate MoveCertificate::inverse() const {
    MoveCertificate out;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.steps.push_back(invert_step(*it));
    return out;
}

MoveCertificate& MoveCertificate::append(const MoveCertificate& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    return *this;
}

MoveCertificate MoveCertificate::simplified() const {
    MoveCertificate out;
    for (const auto& step : steps) {
        if (auto* c = std::get_if<Conjugate>(&step)) {
            if (!out.steps.empty())
                if (auto* prev = std::get_if<Conjugate>(&out.steps.back())) {
                    prev->psi = c->psi * prev->psi;
                    if (prev->psi == MappingClass::identity()) out.steps.pop_back();
                    continue;
                }
            if (c->psi != MappingClass::identity()) out.steps.push_back(step);
            continue;
        }
        const auto& h = std::get<HurwitzMove>(step);
        if (!out.steps.empty())
            if (auto* prev = std::get_if<HurwitzMove>(&out.steps.back()))
                if (prev->index == h.index && prev->direction != h.direction) {
                    out.steps.pop_back();
                    continue;
                }
        out.steps.push_back(step);
    }
    return out;
}

std::string MoveCertificate::to_string() const {
    std::string out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += "; ";
        if (auto* h = std::get_if<HurwitzMove>(&steps[i]))
            out += (h->direction == Direction::Forward ? "H" : "H^-1") + std::string("(") +
                   std::to_string(h->index) + ")";
        else
            out += "conj(" + std::get<Conjugate>(steps[i]).psi.to_string() + ")";
    }
    return out;
}

MappingClass total_monodromy(const TwistTuple& t) {
    require_four_holed(t);
    MappingClass total;
    for (const auto& c : t.cycles()) total = dehn_twist(c) * total;
    return total;
}

TwistTuple hurwitz_move(const TwistTuple& t, size_t index, Direction direction) {
    if (index < 1 || index >= t.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    "Hurwitz index " + std::to_string(index) + " for a tuple of length " + std::to_string(t.size()));
    std::vector<Curve> cycles = t.cycles();
    const Curve left = cycles[index - 1];
    const Curve right = cycles[index];
    if (direction == Direction::Forward) {
        cycles[index - 1] = right;
        cycles[index] = act_on_curve(dehn_twist(right), left);
    } else {
        cycles[index - 1] = act_on_curve(invert(dehn_twist(left)), right);
        cycles[index] = left;
    }
    return TwistTuple(std::move(cycles));
}

TwistTuple total_conjugate(const TwistTuple& t, const MappingClass& psi) {
    require_four_holed(t);
    std::vector<Curve> cycles;
    cycles.reserve(t.size());
    for (const auto& c : t.cycles()) cycles.push_back(act_on_curve(psi, c));
    return TwistTuple(std::move(cycles));
}

std::vector<AbelianClass> ab_invariant(const TwistTuple& t) {
    require_four_holed(t);
    std::vector<AbelianClass> out;
    for (const auto& c : t.cycles()) out.push_back(abelianize(dehn_twist(c)));
    std::sort(out.begin(), out.end());
    return out;
}

TwistTuple replay(const TwistTuple& t, const MoveCertificate& cert) {
    TwistTuple cur = t;
    for (size_t k = 0; k < cert.steps.size(); ++k) {
        if (auto* h = std::get_if<HurwitzMove>(&cert.steps[k])) {
            if (h->index < 1 || h->index >= cur.size())
                throw Error(ErrorKind::InvalidStep, "step " + std::to_string(k + 1) + ": Hurwitz index " +
                                                        std::to_string(h->index) + " out of range");
            cur = hurwitz_move(cur, h->index, h->direction);
        } else {
            cur = total_conjugate(cur, std::get<Conjugate>(cert.steps[k]).psi);
        }
    }
    return cur;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Distinguished: return "distinguished";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Equivalence search

namespace {

BigInt complexity(const TwistTuple& t) {
    BigInt sum = 0;
    for (const auto& c : t.cycles())
        if (c.is_slope()) sum += abs(c.slope_value().p) + c.slope_value().q;
    return sum;
}

struct TupleHash {
    size_t operator()(const TwistTuple& t) const {
        size_t h = t.size();
        auto mix = [&h](uint64_t v) { h ^= std::hash<uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        for (const auto& c : t.cycles()) {
            if (c.is_boundary()) {
                mix(static_cast<uint64_t>(c.boundary_index()));
            } else if (c.is_slope()) {
                mix(hash_value(c.slope_value().p));
                mix(hash_value(c.slope_value().q));
            } else {
                for (int i : c.enclosed()) mix(static_cast<uint64_t>(i) << 32);
            }
        }
        return h;
    }
};

const MappingClass kLetterClasses[4] = {MappingClass::a(1), MappingClass::a(-1), MappingClass::b(1),
                                        MappingClass::b(-1)};

struct SearchNode {
    TwistTuple state;
    int parent;
    std::vector<MoveStep> steps; // from parent (or from the original tuple for roots)
};

struct SearchSide {
    std::vector<SearchNode> nodes;
    std::unordered_map<TwistTuple, int, TupleHash> index;
    std::deque<int> frontier;

    std::vector<MoveStep> path_to(int node) const {
        std::vector<int> chain;
        for (int n = node; n >= 0; n = nodes[static_cast<size_t>(n)].parent) chain.push_back(n);
        std::vector<MoveStep> out;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const auto& s = nodes[static_cast<size_t>(*it)].steps;
            out.insert(out.end(), s.begin(), s.end());
        }
        return out;
    }
};

std::vector<std::pair<std::vector<MoveStep>, TwistTuple>> search_neighbors(const TwistTuple& s) {
    std::vector<std::pair<MoveStep, TwistTuple>> raw;
    for (size_t i = 1; i < s.size(); ++i) {
        raw.emplace_back(HurwitzMove{i, Direction::Forward}, hurwitz_move(s, i, Direction::Forward));
        raw.emplace_back(HurwitzMove{i, Direction::Inverse}, hurwitz_move(s, i, Direction::Inverse));
    }
    std::set<Curve> seen;
    for (const auto& c : s.cycles()) {
        if (!c.is_slope() || !seen.insert(c).second) continue;
        const MappingClass tc = dehn_twist(c);
        raw.emplace_back(Conjugate{tc}, total_conjugate(s, tc));
        raw.emplace_back(Conjugate{invert(tc)}, total_conjugate(s, invert(tc)));
    }
    for (const auto& g : kLetterClasses) raw.emplace_back(Conjugate{g}, total_conjugate(s, g));

    std::vector<std::pair<std::vector<MoveStep>, TwistTuple>> out;
    out.reserve(raw.size());
    for (auto& [step, t] : raw) {
        auto [canon, chi] = conjugation_canonical(t);
        std::vector<MoveStep> steps{step};
        if (chi != MappingClass::identity()) steps.push_back(Conjugate{chi});
        out.emplace_back(std::move(steps), std::move(canon));
    }
    return out;
}

bool totals_conjugate(const TwistTuple& t1, const TwistTuple& t2) {
    return conjugator(total_monodromy(t1), total_monodromy(t2)).has_value();
}

} // namespace

std::pair<TwistTuple, MappingClass> conjugation_canonical(const TwistTuple& t) {
    TwistTuple best = t;
    BigInt best_cost = complexity(t);
    MappingClass chi;
    for (;;) {
        std::optional<size_t> pick;
        TwistTuple pick_tuple;
        BigInt pick_cost = best_cost;
        for (size_t k = 0; k < 4; ++k) {
            TwistTuple cand = total_conjugate(best, kLetterClasses[k]);
            const BigInt cost = complexity(cand);
            const bool better = pick ? (cost < pick_cost || (cost == pick_cost && cand < pick_tuple))
                                     : (cost < best_cost || (cost == best_cost && cand < best));
            if (better) {
                pick = k;
                pick_tuple = std::move(cand);
                pick_cost = cost;
            }
        }
        if (!pick) break;
        best = std::move(pick_tuple);
        best_cost = pick_cost;
        chi = kLetterClasses[*pick] * chi;
    }
    return {best, chi};
}

EquivalenceResult equivalence_bfs(const TwistTuple& t1, const TwistTuple& t2, BfsBudget budget) {
    if (t1.size() != t2.size())
        throw Error(ErrorKind::LengthMismatch,
                    "tuple lengths " + std::to_string(t1.size()) + " and " + std::to_string(t2.size()));
    require_four_holed(t1);
    require_four_holed(t2);

    EquivalenceResult result;
    if (t1 == t2) {
        result.verdict = Verdict::Equivalent;
        result.reason = "identical tuples";
        return result;
    }
    if (ab_invariant(t1) != ab_invariant(t2)) {
        result.verdict = Verdict::Distinguished;
        result.reason = "abelianized twist multisets differ";
        return result;
    }
    if (!totals_conjugate(t1, t2)) {
        result.verdict = Verdict::Distinguished;
        result.reason = "total monodromies are not conjugate";
        return result;
    }

    SearchSide sides[2];
    const TwistTuple* roots[2] = {&t1, &t2};
    for (int s = 0; s < 2; ++s) {
        auto [canon, chi] = conjugation_canonical(*roots[s]);
        std::vector<MoveStep> steps;
        if (chi != MappingClass::identity()) steps.push_back(Conjugate{chi});
        sides[s].nodes.push_back({canon, -1, steps});
        sides[s].index.emplace(canon, 0);
        sides[s].frontier.push_back(0);
    }

    auto finish = [&](int node0, int node1) {
        MoveCertificate forward{sides[0].path_to(node0)};
        MoveCertificate backward{sides[1].path_to(node1)};
        result.certificate = forward;
        result.certificate.append(backward.inverse());
        result.certificate = result.certificate.simplified();
        if (replay(t1, result.certificate) != t2)
            throw Error(ErrorKind::InvalidStep, "internal: search certificate does not replay");
        result.verdict = Verdict::Equivalent;
        result.reason = "connected by search";
        result.states_explored = sides[0].nodes.size() + sides[1].nodes.size();
        return result;
    };

    if (auto it = sides[1].index.find(sides[0].nodes[0].state); it != sides[1].index.end()) return finish(0, it->second);

    while (!sides[0].frontier.empty() && !sides[1].frontier.empty()) {
        if (sides[0].nodes.size() + sides[1].nodes.size() >= budget.max_states) break;
        const int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
        SearchSide& side = sides[s];
        SearchSide& other = sides[1 - s];
        const int current = side.frontier.front();
        side.frontier.pop_front();
        const TwistTuple state = side.nodes[static_cast<size_t>(current)].state;
        for (auto& [steps, next] : search_neighbors(state)) {
            if (side.index.count(next)) continue;
            const int id = static_cast<int>(side.nodes.size());
            side.nodes.push_back({next, current, std::move(steps)});
            side.index.emplace(next, id);
            side.frontier.push_back(id);
            if (auto it = other.index.find(next); it != other.index.end())
                return s == 0 ? finish(id, it->second) : finish(it->second, id);
        }
    }
    result.verdict = Verdict::Unknown;
    result.reason = sides[0].frontier.empty() || sides[1].frontier.empty()
                        ? "search space exhausted without meeting (canonical forms are not complete invariants)"
                        : "search budget exhausted";
    result.states_explored = sides[0].nodes.size() + sides[1].nodes.size();
    return result;
}

// ---------------------------------------------------------------------------
// Length-3 classifier

std::optional<ProjMatrix> pair_representation(const Curve& gamma, const Curve& beta, const MappingClass& psi) {
    const Slope& g = gamma.slope_value();
    const Slope& b = beta.slope_value();
    const BigInt det = g.p * b.q - g.q * b.p;
    if (det == 0) throw Error(ErrorKind::InvalidArgument, "pair representation needs distinct curves");
    const int s = det > 0 ? 1 : -1;
    // P = [gamma | s*beta] conjugates sigma(t_gamma), sigma(t_beta) onto the generators.
    const BigInt p11 = g.p, p12 = s * b.p, p21 = g.q, p22 = s * b.q;
    const ProjMatrix m = sigma(psi);
    // adj(P) * m * P
    const BigInt x11 = p22 * m.a() - p12 * m.c();
    const BigInt x12 = p22 * m.b() - p12 * m.d();
    const BigInt x21 = p11 * m.c() - p21 * m.a();
    const BigInt x22 = p11 * m.d() - p21 * m.b();
    BigInt n[4] = {x11 * p11 + x12 * p21, x11 * p12 + x12 * p22, x21 * p11 + x22 * p21, x21 * p12 + x22 * p22};
    const BigInt scale = abs(det);
    int64_t out[4];
    for (int i = 0; i < 4; ++i) {
        if (n[i] % scale != 0) return std::nullopt;
        out[i] = to_int64(n[i] / scale, "pair representation entry");
    }
    return ProjMatrix(out[0], out[1], out[2], out[3]);
}

std::optional<FreeWord> express_in_twist_pair(const Curve& gamma, const Curve& beta, const MappingClass& psi) {
    auto image = pair_representation(gamma, beta, psi);
    if (!image) return std::nullopt;
    const int64_t z = intersection_number(gamma, beta);
    FreeWord word;
    try {
        word = sanov_decompose(*image, z);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotMember) return std::nullopt;
        throw;
    }
    const FreeWord gens[2] = {dehn_twist(gamma).word(), dehn_twist(beta).word()};
    FreeWord value;
    for (Letter l : word.letters()) value = value * (l.exp > 0 ? gens[l.gen] : gens[l.gen].inverse());
    if (value != psi.word()) throw Error(ErrorKind::InvalidArgument, "internal: pair representation is not faithful");
    return word;
}

namespace {

// Hurwitz-moves every boundary cycle of a length-3 tuple in front of the others.
MoveCertificate boundary_first(TwistTuple& t) {
    MoveCertificate cert;
    size_t front = 0;
    for (size_t k = 0; k < t.size(); ++k) {
        if (!t[k].is_boundary()) continue;
        for (size_t j = k; j > front; --j) {
            cert.steps.push_back(HurwitzMove{j, Direction::Forward});
            t = hurwitz_move(t, j, Direction::Forward);
        }
        ++front;
    }
    return cert;
}

// Sorts t1 into t2 by adjacent swaps; valid when every adjacent pair contains a
// boundary cycle, so a forward Hurwitz move is a plain swap.
std::optional<MoveCertificate> permutation_certificate(const TwistTuple& t1, const TwistTuple& t2) {
    std::vector<Curve> cur = t1.cycles();
    MoveCertificate cert;
    for (size_t target = 0; target < t2.size(); ++target) {
        size_t k = target;
        while (k < cur.size() && cur[k] != t2[target]) ++k;
        if (k == cur.size()) return std::nullopt;
        for (size_t j = k; j > target; --j) {
            cert.steps.push_back(HurwitzMove{j, Direction::Forward});
            std::swap(cur[j - 1], cur[j]);
        }
    }
    return cert;
}

ClassifyResult not_applicable(std::string reason, ClassifyTrace trace = {}) {
    ClassifyResult r;
    r.reason = std::move(reason);
    r.trace = std::move(trace);
    return r;
}

// n with t_beta^n(gamma) = target, if any.
std::optional<int64_t> beta_twist_exponent(const Curve& gamma, const Curve& beta, const Curve& target) {
    const Slope &g = gamma.slope_value(), &b = beta.slope_value(), &h = target.slope_value();
    // t_beta^n(gamma) = gamma + 2 n e beta, e = b.q g.p - b.p g.q
    const BigInt e = b.q * g.p - b.p * g.q;
    if (e == 0) return std::nullopt;
    for (int sign : {1, -1}) {
        const BigInt dx = sign * h.p - g.p;
        const BigInt dy = sign * h.q - g.q;
        std::optional<BigInt> n;
        if (b.p != 0) {
            if (dx % (2 * e * b.p) != 0) continue;
            n = dx / (2 * e * b.p);
        } else if (dx != 0) {
            continue;
        }
        if (b.q != 0) {
            if (dy % (2 * e * b.q) != 0) continue;
            const BigInt ny = dy / (2 * e * b.q);
            if (n && *n != ny) continue;
            n = ny;
        } else if (dy != 0) {
            continue;
        }
        if (!n) continue;
        const int64_t k = to_int64(*n, "twist exponent");
        if (act_on_curve(power(dehn_twist(beta), k), gamma) == target) return k;
    }
    return std::nullopt;
}

// Certificate conjugating (beta, gamma) onto (beta2, gamma2), both pairs with
// the same parity classes; records the route in trace.
std::optional<MoveCertificate> classify_pair(const Curve& gamma, const Curve& beta, const Curve& gamma2,
                                             const Curve& beta2, ClassifyTrace& trace, std::string& reason) {
    auto psi1 = conjugator(dehn_twist(beta), dehn_twist(beta2));
    auto psi2 = conjugator(dehn_twist(gamma), dehn_twist(gamma2));
    if (!psi1 || !psi2) {
        reason = "twists of one parity class failed to be conjugate";
        return std::nullopt;
    }
    trace.psi1 = *psi1;
    trace.psi2 = *psi2;
    const MappingClass quotient = invert(*psi1) * *psi2;
    const Curve reduced_gamma = act_on_curve(invert(*psi1), gamma2);

    trace.conjugators_in_subgroup = express_in_twist_pair(gamma, beta, *psi1).has_value() &&
                                    express_in_twist_pair(gamma, beta, *psi2).has_value();
    trace.quotient_in_subgroup = false;
    trace.quotient_word.reset();
    trace.quotient_image.reset();
    trace.trace_verdict.reset();
    std::optional<int64_t> n;
    if (auto word = express_in_twist_pair(gamma, beta, quotient)) {
        trace.quotient_in_subgroup = true;
        trace.quotient_word = word;
        trace.quotient_image = pair_representation(gamma, beta, quotient);
        trace.trace_verdict = conjugate_trace_test(*trace.quotient_image, trace.z);
        // a = +-1 forces the shape t_beta^n t_gamma^m.
        auto syl = word->syllables();
        const bool shape_ok = syl.size() <= 2 && (syl.size() < 2 || (syl[0].first == 1 && syl[1].first == 0));
        if (*trace.trace_verdict != TraceVerdict::Reject && shape_ok)
            n = !syl.empty() && syl.front().first == 1 ? syl.front().second : 0;
    }
    // psi_1 is unique up to the centraliser <t_beta> x centre, so this test decides.
    if (!n || act_on_curve(power(dehn_twist(beta), *n), gamma) != reduced_gamma)
        n = beta_twist_exponent(gamma, beta, reduced_gamma);
    if (!n) {
        reason = "psi1^-1(gamma') = " + reduced_gamma.to_string() + " is not a twist of " + gamma.to_string() +
                 " along " + beta.to_string();
        return std::nullopt;
    }
    trace.beta_power = *n;
    MoveCertificate cert;
    if (*n != 0) cert.steps.push_back(Conjugate{power(dehn_twist(beta), *n)});
    if (*psi1 != MappingClass::identity()) cert.steps.push_back(Conjugate{*psi1});
    return cert;
}

} // namespace

ClassifyResult classify_length3(const TwistTuple& t1, const TwistTuple& t2) {
    if (t1.size() != 3 || t2.size() != 3) return not_applicable("both tuples must have length 3");
    for (const TwistTuple* t : {&t1, &t2}) {
        if (t->surface() != kFourHoled) return not_applicable("page must be the 4-holed sphere");
        for (const auto& c : t->cycles())
            if (c.is_hole_set()) return not_applicable("hole-set curve " + c.to_string() + " has no twist model");
    }
    if (total_monodromy(t1) != total_monodromy(t2)) return not_applicable("unequal total monodromies");

    auto count_free = [](const TwistTuple& t) {
        return static_cast<int>(std::count_if(t.cycles().begin(), t.cycles().end(),
                                              [](const Curve& c) { return !c.is_boundary(); }));
    };
    ClassifyTrace trace;
    trace.shape_case = count_free(t1);
    if (count_free(t2) != trace.shape_case) return not_applicable("different numbers of boundary cycles", trace);
    if (trace.shape_case == 3) return not_applicable("no boundary cycle", trace);

    ClassifyResult result;
    if (trace.shape_case <= 1) {
        auto cert = permutation_certificate(t1, t2);
        if (!cert) return not_applicable("cycles are not a permutation of each other", trace);
        result.certificate = *cert;
    } else {
        TwistTuple s1 = t1, s2 = t2;
        const MoveCertificate m1 = boundary_first(s1);
        const MoveCertificate m2 = boundary_first(s2);
        if (s1[0] != s2[0]) {
            auto r = not_applicable("boundary cycles differ", trace);
            r.proven_inequivalent = true; // the abelianized multisets differ
            return r;
        }
        const Curve& beta = s1[1];
        const Curve& gamma = s1[2];
        if (beta == gamma) return not_applicable("i(gamma, beta) = 0: non-boundary cycles are isotopic", trace);
        trace.z = intersection_number(gamma, beta);

        // Up to total conjugation the only Hurwitz move on the free pair is the
        // swap (x, y) -> (y, t_y(x)); try both arrangements of T2 whose parity
        // order matches T1.
        std::string last_reason;
        bool matched = false;
        for (int swapped = 0; swapped < 2 && !matched; ++swapped) {
            TwistTuple cand = s2;
            MoveCertificate m2c = m2;
            if (swapped) {
                m2c.steps.push_back(HurwitzMove{2, Direction::Forward});
                cand = hurwitz_move(cand, 2, Direction::Forward);
            }
            if (parity_class(cand[1]) != parity_class(beta) || parity_class(cand[2]) != parity_class(gamma)) continue;
            ClassifyTrace attempt = trace;
            auto cert = classify_pair(gamma, beta, cand[2], cand[1], attempt, last_reason);
            trace = attempt;
            if (!cert) continue;
            result.certificate = m1;
            result.certificate.append(*cert);
            result.certificate.append(m2c.inverse());
            matched = true;
        }
        if (!matched) {
            auto r = not_applicable(last_reason.empty() ? "no arrangement of T2 matches the parity classes of T1"
                                                        : last_reason,
                                    trace);
            r.proven_inequivalent = true;
            return r;
        }
    }
    if (replay(t1, result.certificate) != t2)
        return not_applicable("internal: certificate failed to replay", trace);
    result.equivalent = true;
    result.trace = trace;
    return result;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Curve> enumeration_candidates(EnumBounds bounds) {
    std::set<Curve> out;
    for (int i = 1; i <= 4; ++i) out.insert(Curve::boundary(i));
    const int64_t h = bounds.max_height;
    for (int64_t q = 0; q <= h; ++q)
        for (int64_t p = -h; p <= h; ++p)
            if ((p != 0 || q != 0) && std::gcd(checked_abs(p), q) == 1) out.insert(Curve::slope(p, q));
    for (size_t len = 0; len <= bounds.max_conjugator; ++len)
        for (const auto& w : all_reduced_words(len))
            for (ParityClass cls : {ParityClass::A, ParityClass::B, ParityClass::C})
                out.insert(Curve::slope(act_on_slope(w, base_slope(cls))));
    return {out.begin(), out.end()};
}

std::vector<TwistTuple> enumerate_factorizations(const MappingClass& phi, size_t length, EnumBounds bounds) {
    std::vector<TwistTuple> found;
    if (length == 0) {
        if (phi == MappingClass::identity()) found.emplace_back();
        return found;
    }
    const std::vector<Curve> candidates = enumeration_candidates(bounds);
    const std::set<Curve> allowed(candidates.begin(), candidates.end());
    std::vector<MappingClass> twists;
    std::vector<AbelianClass> abs;
    for (const auto& c : candidates) {
        twists.push_back(dehn_twist(c));
        abs.push_back(abelianize(twists.back()));
    }

    // Abelian classes reachable as a sum of k twists.
    std::vector<AbelianClass> singles;
    for (int i = 0; i < 4; ++i) {
        AbelianClass e;
        e.delta_part[static_cast<size_t>(i)] = 1;
        singles.push_back(e);
    }
    singles.push_back({{}, {1, 0}});
    singles.push_back({{}, {0, 1}});
    singles.push_back({{1, 1, 1, 1}, {-1, -1}});
    std::vector<std::set<AbelianClass>> reachable(length + 1);
    reachable[0].insert(AbelianClass{});
    for (size_t k = 1; k <= length; ++k)
        for (const auto& s : reachable[k - 1])
            for (const auto& one : singles) reachable[k].insert(s + one);

    const AbelianClass target = abelianize(phi);
    std::vector<Curve> prefix;
    std::function<void(const AbelianClass&, const MappingClass&)> extend = [&](const AbelianClass& partial,
                                                                             const MappingClass& prefix_total) {
        if (prefix.size() + 1 == length) {
            if (!reachable[1].count(target - partial)) return;
            auto last = twist_curve(phi * invert(prefix_total));
            if (!last || !allowed.count(*last)) return;
            auto cycles = prefix;
            cycles.push_back(*last);
            found.emplace_back(std::move(cycles));
            return;
        }
        const size_t remaining = length - prefix.size() - 1;
        for (size_t k = 0; k < candidates.size(); ++k) {
            const AbelianClass next = partial + abs[k];
            if (!reachable[remaining].count(target - next)) continue;
            prefix.push_back(candidates[k]);
            extend(next, twists[k] * prefix_total);
            prefix.pop_back();
        }
    };
    extend(AbelianClass{}, MappingClass::identity());
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<TwistTuple> hurwitz_orbit(const TwistTuple& t, size_t max_states) {
    std::vector<TwistTuple> out{t};
    std::unordered_map<TwistTuple, size_t, TupleHash> seen{{t, 0}};
    for (size_t head = 0; head < out.size() && out.size() < max_states; ++head) {
        const TwistTuple cur = out[head];
        for (size_t i = 1; i < cur.size(); ++i) {
            for (Direction d : {Direction::Forward, Direction::Inverse}) {
                TwistTuple next = hurwitz_move(cur, i, d);
                if (seen.count(next)) continue;
                seen.emplace(next, out.size());
                out.push_back(std::move(next));
                if (out.size() >= max_states) return out;
            }
        }
    }
    return out;
}

} // namespace palf
