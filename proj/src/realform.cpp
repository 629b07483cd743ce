#include "dirackit/realform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dirackit {

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::complex_pair: return "complex";
        case FamilyTag::equal_rank: return "equal_rank";
        case FamilyTag::gl_real: return "gl_real";
    }
    throw UsageError("unknown family tag");
}

Int PairDatum::dim_s() const {
    Int total = 0;
    for (const auto& [w, m] : s_weights) total += m;
    return total;
}

Int PairDatum::zero_s_multiplicity() const {
    for (const auto& [w, m] : s_weights) {
        if (w.is_zero()) return m;
    }
    return 0;
}

namespace {

void sort_s_weights(PairDatum& pair) {
    std::sort(pair.s_weights.begin(), pair.s_weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

void check_theta(const PairDatum& pair) {
    if (!(pair.theta * pair.theta).isIdentity()) {
        throw ConfigError("theta is not an involution");
    }
    for (const Weight& p : pair.g.positive_roots) {
        if (!pair.g.is_root(apply(pair.theta, p))) {
            throw ConfigError("theta does not preserve the root set");
        }
    }
}

}  // namespace

PairDatum build_complex_pair(char family, int rank) {
    PairDatum pair;
    pair.tag = FamilyTag::complex_pair;
    pair.root_family = family;
    pair.rank = rank;
    pair.k = build_root_datum(family, rank);
    pair.t_rank = rank;

    // Ambient lattice: left/right weight pairs, with the roots of the two
    // factors side by side. Theta swaps the factors.
    int n2 = 2 * rank;
    std::vector<Weight> ambient_positives;
    for (const Weight& a : pair.k.positive_roots) {
        IVec left = IVec::Zero(n2);
        IVec right = IVec::Zero(n2);
        left.head(rank) = a.c2;
        right.tail(rank) = a.c2;
        ambient_positives.emplace_back(std::move(left));
        ambient_positives.emplace_back(std::move(right));
    }
    pair.g = make_subsystem(std::move(ambient_positives), n2);

    pair.theta = IMat::Zero(n2, n2);
    for (int i = 0; i < rank; ++i) {
        pair.theta(i, rank + i) = 1;
        pair.theta(rank + i, i) = 1;
    }

    for (const Weight& a : pair.k.positive_roots) {
        pair.s_weights.emplace_back(a, 1);
        pair.s_weights.emplace_back(-a, 1);
    }
    pair.s_weights.emplace_back(zero_weight(rank), rank);
    sort_s_weights(pair);

    pair.fundamental_t_dim = rank;
    pair.fundamental_a_dim = rank;
    pair.cache = std::make_shared<PairCaches>();
    check_theta(pair);
    return pair;
}

PairDatum build_equal_rank_pair(char family, int rank,
                                std::vector<Weight> compact_positive) {
    PairDatum pair;
    pair.tag = FamilyTag::equal_rank;
    pair.root_family = family;
    pair.rank = rank;
    pair.g = build_root_datum(family, rank);
    pair.t_rank = rank;
    pair.theta = IMat::Identity(rank, rank);

    std::sort(compact_positive.begin(), compact_positive.end());
    compact_positive.erase(
        std::unique(compact_positive.begin(), compact_positive.end()),
        compact_positive.end());
    for (const Weight& c : compact_positive) {
        if (!pair.g.is_positive_root(c)) {
            throw ConfigError("compact root " + weight_string(c) +
                              " is not a positive root of the ambient system");
        }
    }
    pair.compact_positive = compact_positive;
    pair.k = make_subsystem(compact_positive, rank);

    // The compact/noncompact split must be a symmetric-space grading:
    // [k,k] in k, [k,s] in s, [s,s] in k, read off root sums.
    auto grade = [&](const Weight& r) {
        Weight p = pair.g.is_positive_root(r) ? r : -r;
        return std::binary_search(compact_positive.begin(), compact_positive.end(), p)
                   ? 0
                   : 1;
    };
    std::vector<Weight> all_roots;
    for (const Weight& p : pair.g.positive_roots) {
        all_roots.push_back(p);
        all_roots.push_back(-p);
    }
    for (const Weight& a : all_roots) {
        for (const Weight& b : all_roots) {
            Weight sum = a + b;
            if (sum.is_zero() || !pair.g.is_root(sum)) continue;
            if (grade(sum) != (grade(a) ^ grade(b))) {
                throw ConfigError(
                    "compact subset is not a symmetric-space grading: roots " +
                    weight_string(a) + " + " + weight_string(b));
            }
        }
    }

    for (const Weight& p : pair.g.positive_roots) {
        if (grade(p) == 1) {
            pair.s_weights.emplace_back(p, 1);
            pair.s_weights.emplace_back(-p, 1);
        }
    }
    sort_s_weights(pair);

    pair.fundamental_t_dim = rank;
    pair.fundamental_a_dim = 0;
    pair.cache = std::make_shared<PairCaches>();
    check_theta(pair);
    return pair;
}

PairDatum build_gl_real_pair(int m) {
    if (m < 2) throw ConfigError("gl_real needs m >= 2");
    PairDatum pair;
    pair.tag = FamilyTag::gl_real;
    pair.root_family = 'A';
    pair.rank = m;
    pair.gl_m = m;
    pair.g = build_root_datum('A', m);

    // Coordinates of the fundamental Cartan where theta negates and reverses.
    pair.theta = IMat::Zero(m, m);
    for (int i = 0; i < m; ++i) pair.theta(i, m - 1 - i) = -1;

    int n = m / 2;
    pair.t_rank = n;
    if (m % 2 == 0) {
        pair.k = (n >= 2) ? build_root_datum('D', n) : make_subsystem({}, 1);
    } else {
        pair.k = build_root_datum('B', n);
    }

    // s = symmetric matrices; its t-weights are the pairwise sums of the
    // standard-representation weights {+-u_i} (plus 0 when m is odd).
    auto uvec = [&](int i, Int doubled) {
        IVec v = IVec::Zero(n);
        v[i] = doubled;
        return Weight(std::move(v));
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (Int si : {1, -1}) {
                for (Int sj : {1, -1}) {
                    IVec v = IVec::Zero(n);
                    v[i] = 2 * si;
                    v[j] = 2 * sj;
                    pair.s_weights.emplace_back(Weight(std::move(v)), 1);
                }
            }
        }
        pair.s_weights.emplace_back(uvec(i, 4), 1);
        pair.s_weights.emplace_back(uvec(i, -4), 1);
        if (m % 2 == 1) {
            pair.s_weights.emplace_back(uvec(i, 2), 1);
            pair.s_weights.emplace_back(uvec(i, -2), 1);
        }
    }
    pair.s_weights.emplace_back(zero_weight(n), m % 2 == 0 ? n : n + 1);
    sort_s_weights(pair);

    pair.fundamental_t_dim = n;
    pair.fundamental_a_dim = m - n;
    pair.cache = std::make_shared<PairCaches>();
    check_theta(pair);
    return pair;
}

namespace {

bool strongly_orthogonal(const RootDatum& g, const Weight& a, const Weight& b) {
    return a.c2.dot(b.c2) == 0 && !g.is_root(a + b) && !g.is_root(a - b);
}

// Lexicographically minimal W_k-translate of a set of root lines, each line
// written as its positive representative.
std::vector<Weight> canonical_line_set(const PairDatum& pair,
                                       const std::vector<Weight>& roots) {
    std::vector<Weight> best;
    bool have = false;
    for (const WeylElement& w : weyl_k(pair)) {
        std::vector<Weight> image;
        image.reserve(roots.size());
        for (const Weight& r : roots) {
            Weight x = apply(w, r);
            if (!pair.g.is_positive_root(x)) x = -x;
            image.push_back(std::move(x));
        }
        std::sort(image.begin(), image.end());
        if (!have || image < best) {
            best = std::move(image);
            have = true;
        }
    }
    if (!have) best = roots;
    return best;
}

std::string gl_embedding_string(int m, int outer_pairs) {
    std::ostringstream os;
    os << "t: differences of the outer " << outer_pairs
       << " coordinate pair(s); a: their sums plus the middle "
       << (m - 2 * outer_pairs) << " coordinate(s)";
    return os.str();
}

}  // namespace

std::vector<CartanClass> cartan_classes(const PairDatum& pair) {
    std::vector<CartanClass> out;

    if (pair.tag == FamilyTag::complex_pair) {
        CartanClass c;
        c.index_k = 0;
        c.t_dim = pair.rank;
        c.a_dim = pair.rank;
        c.theta_h = pair.theta;
        c.t_embedding = "t: (x | x); a: (x | -x) in left|right coordinates";
        out.push_back(std::move(c));
        return out;
    }

    if (pair.tag == FamilyTag::gl_real) {
        int m = pair.gl_m;
        int n = m / 2;
        for (int j = 0; j <= n; ++j) {
            int outer = n - j;  // untransformed coordinate pairs
            CartanClass c;
            c.index_k = j;
            c.t_dim = n - j;
            c.a_dim = m - n + j;
            c.theta_h = IMat::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                bool is_outer = i < outer || i >= m - outer;
                if (is_outer) {
                    c.theta_h(i, m - 1 - i) = -1;
                } else {
                    c.theta_h(i, i) = -1;
                }
            }
            for (int p = outer; p < n; ++p) {
                IVec v = IVec::Zero(m);
                v[p] = 2;
                v[m - 1 - p] = -2;
                c.cayley_roots.emplace_back(std::move(v));
            }
            c.t_embedding = gl_embedding_string(m, outer);
            out.push_back(std::move(c));
        }
        return out;
    }

    // Equal rank: strongly orthogonal sets of noncompact positive roots,
    // up to the compact Weyl group acting on root lines.
    std::vector<Weight> noncompact = noncompact_positive(pair);
    std::set<std::vector<Weight>> canonical_sets;
    std::vector<std::vector<Weight>> stack = {{}};
    canonical_sets.insert(canonical_line_set(pair, {}));
    while (!stack.empty()) {
        std::vector<Weight> cur = std::move(stack.back());
        stack.pop_back();
        for (const Weight& cand : noncompact) {
            if (!cur.empty() && !(cur.back() < cand)) continue;
            bool ok = true;
            for (const Weight& have : cur) {
                if (!strongly_orthogonal(pair.g, have, cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<Weight> next = cur;
            next.push_back(cand);
            canonical_sets.insert(canonical_line_set(pair, next));
            stack.push_back(std::move(next));
        }
    }

    for (const std::vector<Weight>& set : canonical_sets) {
        CartanClass c;
        c.index_k = static_cast<int>(set.size());
        c.t_dim = pair.rank - c.index_k;
        c.a_dim = c.index_k;
        c.cayley_roots = set;
        c.theta_h = IMat::Identity(pair.rank, pair.rank);
        for (const Weight& b : set) {
            c.theta_h = c.theta_h * reflection_matrix(b, pair.rank);
        }
        if (set.empty()) {
            c.t_embedding = "t: all coordinates (fundamental Cartan)";
        } else {
            std::ostringstream os;
            os << "a: span of";
            for (const Weight& b : set) os << " " << weight_string(b);
            os << "; t: its orthocomplement";
            c.t_embedding = os.str();
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CartanClass& a, const CartanClass& b) {
        if (a.index_k != b.index_k) return a.index_k < b.index_k;
        return a.cayley_roots < b.cayley_roots;
    });
    return out;
}

Weight theta_action_on_weight(const PairDatum& pair,
                              const std::optional<WeylElement>& w,
                              const Weight& mu) {
    if (mu.rank() != pair.ambient_rank()) {
        throw ShapeError("weight is not in ambient coordinates");
    }
    Weight x = w ? apply(*w, mu) : mu;
    return apply(pair.theta, x);
}

Weight restrict_to_t(const PairDatum& pair, const Weight& ambient) {
    if (ambient.rank() != pair.ambient_rank()) {
        throw ShapeError("weight is not in ambient coordinates");
    }
    switch (pair.tag) {
        case FamilyTag::equal_rank:
            return ambient;
        case FamilyTag::complex_pair: {
            // t is the diagonal; a left|right pair restricts to the sum.
            IVec v(pair.t_rank);
            for (int i = 0; i < pair.t_rank; ++i) {
                v[i] = ambient.c2[i] + ambient.c2[pair.t_rank + i];
            }
            return Weight(std::move(v));
        }
        case FamilyTag::gl_real: {
            // t = {(u, 0, -reverse u)}; a functional restricts to the
            // difference of mirrored coordinates.
            int m = pair.gl_m;
            IVec v(pair.t_rank);
            for (int i = 0; i < pair.t_rank; ++i) {
                v[i] = ambient.c2[i] - ambient.c2[m - 1 - i];
            }
            return Weight(std::move(v));
        }
    }
    throw UsageError("unknown family tag");
}

IVec embed4_t(const PairDatum& pair, const Weight& t_weight) {
    if (t_weight.rank() != pair.t_rank) {
        throw ShapeError("weight is not in t-coordinates");
    }
    switch (pair.tag) {
        case FamilyTag::equal_rank:
            return IVec(2 * t_weight.c2);
        case FamilyTag::complex_pair: {
            // Zero-extension over a is (mu/2 | mu/2); times 4 that is
            // (c2 | c2).
            IVec v(2 * pair.t_rank);
            v.head(pair.t_rank) = t_weight.c2;
            v.tail(pair.t_rank) = t_weight.c2;
            return v;
        }
        case FamilyTag::gl_real: {
            int m = pair.gl_m;
            IVec v = IVec::Zero(m);
            for (int i = 0; i < pair.t_rank; ++i) {
                v[i] = t_weight.c2[i];
                v[m - 1 - i] = -t_weight.c2[i];
            }
            return v;
        }
    }
    throw UsageError("unknown family tag");
}

IVec ambient4(const PairDatum& pair, const Weight& ambient) {
    if (ambient.rank() != pair.ambient_rank()) {
        throw ShapeError("weight is not in ambient coordinates");
    }
    return IVec(2 * ambient.c2);
}

std::vector<Weight> noncompact_positive(const PairDatum& pair) {
    if (pair.tag != FamilyTag::equal_rank) {
        throw UsageError("noncompact positive roots are an equal-rank notion");
    }
    std::vector<Weight> out;
    for (const Weight& p : pair.g.positive_roots) {
        if (!std::binary_search(pair.compact_positive.begin(),
                                pair.compact_positive.end(), p)) {
            out.push_back(p);
        }
    }
    return out;
}

bool is_compact_root(const PairDatum& pair, const Weight& root) {
    if (pair.tag != FamilyTag::equal_rank) {
        throw UsageError("compactness of a root line is an equal-rank notion");
    }
    Weight p = pair.g.is_positive_root(root) ? root : -root;
    return std::binary_search(pair.compact_positive.begin(),
                              pair.compact_positive.end(), p);
}

const std::vector<WeylElement>& weyl_k(const PairDatum& pair) {
    std::call_once(pair.cache->weyl_k_once,
                   [&] { pair.cache->weyl_k = enumerate_weyl(pair.k); });
    return pair.cache->weyl_k;
}

const std::vector<WeylElement>& weyl_g(const PairDatum& pair) {
    std::call_once(pair.cache->weyl_g_once,
                   [&] { pair.cache->weyl_g = enumerate_weyl(pair.g); });
    return pair.cache->weyl_g;
}

const WeylElement& longest_k(const PairDatum& pair) {
    std::call_once(pair.cache->w0_k_once,
                   [&] { pair.cache->w0_k = longest_element(pair.k); });
    return pair.cache->w0_k;
}

const std::vector<WeylElement>& w1_coset_reps(const PairDatum& pair) {
    if (pair.tag != FamilyTag::equal_rank) {
        throw UsageError("W^1 coset representatives are an equal-rank notion");
    }
    std::call_once(pair.cache->w1_once, [&] {
        for (const WeylElement& w : weyl_g(pair)) {
            if (is_dominant(apply(w, pair.g.rho), pair.k)) {
                pair.cache->w1.push_back(w);
            }
        }
    });
    return pair.cache->w1;
}

}  // namespace dirackit
