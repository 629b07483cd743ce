#include "dirackit/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace dirackit {

namespace {

std::vector<Int> flatten(const IMat& m) {
    std::vector<Int> key;
    key.reserve(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) key.push_back(m(i, j));
    }
    return key;
}

bool matrix_lex_less(const IMat& a, const IMat& b) {
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
        }
    }
    return false;
}

}  // namespace

Weight zero_weight(int rank) {
    return Weight(IVec::Zero(rank));
}

Weight weight_from_doubled(const std::vector<Int>& doubled) {
    IVec v(static_cast<int>(doubled.size()));
    for (size_t i = 0; i < doubled.size(); ++i) v[static_cast<int>(i)] = doubled[i];
    return Weight(std::move(v));
}

Weight weight_from_doubled(std::initializer_list<Int> doubled) {
    return weight_from_doubled(std::vector<Int>(doubled));
}

Weight weight_from_ints(const std::vector<Int>& coords) {
    IVec v(static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) v[static_cast<int>(i)] = 2 * coords[i];
    return Weight(std::move(v));
}

Weight weight_from_ints(std::initializer_list<Int> coords) {
    return weight_from_ints(std::vector<Int>(coords));
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw ShapeError("weight rank mismatch in addition");
    return Weight(a.c2 + b.c2);
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw ShapeError("weight rank mismatch in subtraction");
    return Weight(a.c2 - b.c2);
}

Weight operator-(const Weight& a) {
    return Weight(-a.c2);
}

Weight operator*(Int c, const Weight& a) {
    return Weight(c * a.c2);
}

Rational inner(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw ShapeError("weight rank mismatch in inner product");
    // True coordinates are c2/2, so the pairing carries a fixed 1/4.
    return Rational(a.c2.dot(b.c2), 4);
}

Rational norm2(const Weight& a) {
    return inner(a, a);
}

Rational coroot_pairing(const Weight& mu, const Weight& alpha) {
    Rational denom = inner(alpha, alpha);
    if (denom.is_zero()) throw UsageError("coroot pairing against the zero vector");
    return (Rational(2) * inner(mu, alpha)) / denom;
}

WeylElement identity_weyl(int rank) {
    return WeylElement{IMat::Identity(rank, rank), 0};
}

Weight apply(const IMat& m, const Weight& w) {
    if (m.cols() != w.c2.size()) throw ShapeError("matrix/weight rank mismatch");
    return Weight(m * w.c2);
}

Weight apply(const WeylElement& w, const Weight& mu) {
    return apply(w.mat, mu);
}

Int matrix_det(const IMat& m) {
    // Signed permutation matrices only: the determinant is the product of
    // the nonzero entries times the parity of the underlying permutation.
    int n = static_cast<int>(m.rows());
    std::vector<int> row_of(static_cast<size_t>(n), -1);
    Int sign_product = 1;
    for (int j = 0; j < n; ++j) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (m(i, j) != 0) {
                if (hit >= 0) throw ShapeError("determinant expects a signed permutation matrix");
                hit = i;
            }
        }
        if (hit < 0) return 0;
        if (m(hit, j) != 1 && m(hit, j) != -1) {
            throw ShapeError("determinant expects entries in {-1,0,1}");
        }
        sign_product *= m(hit, j);
        row_of[static_cast<size_t>(j)] = hit;
    }
    // Parity of the underlying permutation.
    std::vector<bool> seen(static_cast<size_t>(n), false);
    Int parity = 1;
    for (int j = 0; j < n; ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        int len = 0;
        int k = j;
        while (!seen[static_cast<size_t>(k)]) {
            seen[static_cast<size_t>(k)] = true;
            k = row_of[static_cast<size_t>(k)];
            ++len;
        }
        if (len % 2 == 0) parity = -parity;
    }
    return sign_product * parity;
}

bool RootDatum::is_positive_root(const Weight& w) const {
    return std::binary_search(positive_roots.begin(), positive_roots.end(), w);
}

bool RootDatum::is_root(const Weight& w) const {
    return is_positive_root(w) || is_positive_root(-w);
}

namespace {

Weight half_sum(const std::vector<Weight>& roots, int rank) {
    IVec sum = IVec::Zero(rank);
    for (const Weight& r : roots) sum += r.c2;
    for (int i = 0; i < rank; ++i) {
        if (sum[i] % 2 != 0) throw ConfigError("root sum is not divisible by two");
        sum[i] /= 2;
    }
    return Weight(std::move(sum));
}

Weight unit(int rank, int i, Int doubled) {
    IVec v = IVec::Zero(rank);
    v[i] = doubled;
    return Weight(std::move(v));
}

}  // namespace

RootDatum build_root_datum(char family, int rank) {
    if (family != 'A' && family != 'B' && family != 'C' && family != 'D') {
        throw ConfigError(std::string("unsupported root family '") + family + "'");
    }
    if (rank < 1) throw ConfigError("rank must be positive");
    if (family == 'D' && rank < 2) throw ConfigError("family D needs rank >= 2");
    if (rank > rank_cap()) {
        throw ConfigError("rank " + std::to_string(rank) + " exceeds the rank cap " +
                          std::to_string(rank_cap()));
    }

    RootDatum d;
    d.family = family;
    d.ambient_rank = rank;

    auto eij = [&](int i, int j, Int si, Int sj) {
        IVec v = IVec::Zero(rank);
        v[i] = 2 * si;
        v[j] = 2 * sj;
        return Weight(std::move(v));
    };

    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            d.positive_roots.push_back(eij(i, j, 1, -1));
            if (family == 'B' || family == 'C' || family == 'D') {
                d.positive_roots.push_back(eij(i, j, 1, 1));
            }
        }
        if (family == 'B') d.positive_roots.push_back(unit(rank, i, 2));
        if (family == 'C') d.positive_roots.push_back(unit(rank, i, 4));
    }

    for (int i = 0; i + 1 < rank; ++i) d.simple_roots.push_back(eij(i, i + 1, 1, -1));
    if (family == 'B') d.simple_roots.push_back(unit(rank, rank - 1, 2));
    if (family == 'C') d.simple_roots.push_back(unit(rank, rank - 1, 4));
    if (family == 'D') d.simple_roots.push_back(eij(rank - 2, rank - 1, 1, 1));

    std::sort(d.positive_roots.begin(), d.positive_roots.end());
    d.rho = half_sum(d.positive_roots, rank);
    return d;
}

RootDatum make_subsystem(std::vector<Weight> positive_roots, int ambient_rank) {
    RootDatum d;
    d.family = 'S';
    d.ambient_rank = ambient_rank;

    for (const Weight& r : positive_roots) {
        if (r.rank() != ambient_rank) throw ShapeError("subsystem root rank mismatch");
        if (r.is_zero()) throw ConfigError("zero vector offered as a root");
    }
    std::sort(positive_roots.begin(), positive_roots.end());
    positive_roots.erase(std::unique(positive_roots.begin(), positive_roots.end()),
                         positive_roots.end());
    for (const Weight& r : positive_roots) {
        if (std::binary_search(positive_roots.begin(), positive_roots.end(), -r)) {
            throw ConfigError("positive set contains a root and its negative");
        }
    }
    d.positive_roots = std::move(positive_roots);

    // Simple roots: positives that are not the sum of two positives.
    for (const Weight& r : d.positive_roots) {
        bool is_sum = false;
        for (const Weight& a : d.positive_roots) {
            Weight b = r - a;
            if (b.is_zero() || !(a < r)) continue;
            if (d.is_positive_root(b)) {
                is_sum = true;
                break;
            }
        }
        if (!is_sum) d.simple_roots.push_back(r);
    }

    // Stability under the derived simple reflections is what makes the set a
    // genuine positive subsystem.
    for (const Weight& a : d.simple_roots) {
        IMat refl = reflection_matrix(a, ambient_rank);
        for (const Weight& p : d.positive_roots) {
            Weight image = apply(refl, p);
            if (p == a) {
                if (image != -a) throw ConfigError("reflection failed on its own root");
            } else if (!d.is_positive_root(image)) {
                throw ConfigError("positive set is not closed under its simple reflections");
            }
        }
    }

    d.rho = half_sum(d.positive_roots, ambient_rank);
    return d;
}

IMat reflection_matrix(const Weight& alpha, int ambient_rank) {
    if (alpha.rank() != ambient_rank) throw ShapeError("reflection root rank mismatch");
    const IVec& a = alpha.c2;
    Int q = a.dot(a);
    if (q == 0) throw ConfigError("cannot reflect in the zero vector");
    IMat m = IMat::Identity(ambient_rank, ambient_rank);
    for (int i = 0; i < ambient_rank; ++i) {
        for (int j = 0; j < ambient_rank; ++j) {
            Int numer = 2 * a[i] * a[j];
            if (numer % q != 0) {
                throw ConfigError("reflection matrix is not integral for this root");
            }
            m(i, j) -= numer / q;
        }
    }
    return m;
}

long long theoretical_weyl_order(char family, int rank) {
    if (family != 'A' && family != 'B' && family != 'C' && family != 'D') return 0;
    long long fact = 1;
    for (int i = 2; i <= rank; ++i) fact *= i;
    if (family == 'A') return fact;
    long long two_pow = 1;
    for (int i = 0; i < rank; ++i) two_pow *= 2;
    if (family == 'D') two_pow /= 2;
    return two_pow * fact;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum) {
    long long known = theoretical_weyl_order(datum.family, datum.ambient_rank);
    if (known > kWeylEnumerationCap) {
        throw ResourceError("Weyl group of order " + std::to_string(known) +
                            " exceeds the enumeration cap");
    }

    int n = datum.ambient_rank;
    std::vector<IMat> generators;
    generators.reserve(datum.simple_roots.size());
    for (const Weight& a : datum.simple_roots) {
        generators.push_back(reflection_matrix(a, n));
    }

    std::map<std::vector<Int>, int> seen;
    std::vector<WeylElement> out;
    std::deque<int> queue;

    IMat id = IMat::Identity(n, n);
    seen.emplace(flatten(id), 0);
    out.push_back(WeylElement{id, 0});
    queue.push_back(0);

    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        IMat base = out[static_cast<size_t>(cur)].mat;
        int depth = out[static_cast<size_t>(cur)].length;
        for (const IMat& g : generators) {
            IMat next = base * g;
            auto key = flatten(next);
            if (seen.count(key)) continue;
            if (static_cast<long long>(out.size()) >= kWeylEnumerationCap) {
                throw ResourceError("Weyl enumeration exceeded the hard cap");
            }
            int idx = static_cast<int>(out.size());
            seen.emplace(std::move(key), idx);
            // Cayley-graph distance from the identity in the simple
            // generators is the Coxeter length.
            out.push_back(WeylElement{std::move(next), depth + 1});
            queue.push_back(idx);
        }
    }

    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return matrix_lex_less(a.mat, b.mat);
    });
    return out;
}

int rank_cap() {
    static const int cap = [] {
        const char* env = std::getenv("DIRACKIT_RANK_CAP");
        if (env == nullptr) return 8;
        int v = std::atoi(env);
        if (v < 1) return 8;
        return std::min(v, 16);
    }();
    return cap;
}

DominantRep dominant_rep(const Weight& mu, const RootDatum& datum) {
    if (mu.rank() != datum.ambient_rank) throw ShapeError("weight rank mismatch with datum");
    Weight cur = mu;
    IMat w = IMat::Identity(datum.ambient_rank, datum.ambient_rank);
    int steps = 0;
    const int limit = static_cast<int>(datum.positive_roots.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (const Weight& a : datum.simple_roots) {
            if (cur.c2.dot(a.c2) < 0) {
                IMat refl = reflection_matrix(a, datum.ambient_rank);
                cur = apply(refl, cur);
                w = refl * w;
                ++steps;
                if (steps > limit) {
                    throw ResourceError("dominant chamber walk failed to terminate");
                }
                moved = true;
                break;
            }
        }
    }
    bool singular = false;
    for (const Weight& a : datum.simple_roots) {
        if (cur.c2.dot(a.c2) == 0) {
            singular = true;
            break;
        }
    }
    return DominantRep{WeylElement{std::move(w), steps}, std::move(cur), singular};
}

bool is_dominant(const Weight& mu, const RootDatum& datum) {
    if (mu.rank() != datum.ambient_rank) throw ShapeError("weight rank mismatch with datum");
    for (const Weight& a : datum.simple_roots) {
        if (mu.c2.dot(a.c2) < 0) return false;
    }
    return true;
}

int inversion_count(const IMat& m, const RootDatum& datum) {
    int count = 0;
    for (const Weight& p : datum.positive_roots) {
        if (datum.is_positive_root(-apply(m, p))) ++count;
    }
    return count;
}

WeylElement weyl_from_matrix(const IMat& m, const RootDatum& datum) {
    if (m.rows() != datum.ambient_rank || m.cols() != datum.ambient_rank) {
        throw ShapeError("matrix rank mismatch with datum");
    }
    IMat gram = m * m.transpose();
    if (!gram.isIdentity()) throw ConfigError("matrix is not orthogonal");
    for (const Weight& p : datum.positive_roots) {
        if (!datum.is_root(apply(m, p))) {
            throw ConfigError("matrix does not preserve the root set");
        }
    }
    // Root-set automorphisms that are not Weyl elements (for example -id on
    // family A) are rejected by walking m(rho) back to the dominant chamber:
    // the walk inverts m exactly when m is in the group.
    DominantRep dr = dominant_rep(apply(m, datum.rho), datum);
    if (!(dr.w.mat * m).isIdentity()) {
        throw ConfigError("matrix preserves the roots but is not a Weyl element");
    }
    return WeylElement{m, inversion_count(m, datum)};
}

WeylElement longest_element(const RootDatum& datum) {
    return dominant_rep(-datum.rho, datum).w;
}

std::string signed_perm_string(const IMat& m) {
    int n = static_cast<int>(m.rows());
    std::ostringstream os;
    os << "[";
    for (int j = 0; j < n; ++j) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (m(i, j) != 0) {
                if (hit >= 0 || (m(i, j) != 1 && m(i, j) != -1)) {
                    throw ShapeError("matrix is not a signed permutation");
                }
                hit = i;
            }
        }
        if (hit < 0) throw ShapeError("matrix is not a signed permutation");
        if (j > 0) os << ",";
        os << (m(hit, j) < 0 ? -(hit + 1) : hit + 1);
    }
    os << "]";
    return os.str();
}

std::string weight_string(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < w.rank(); ++i) {
        if (i > 0) os << ",";
        os << Rational(w.c2[i], 2).to_string();
    }
    os << ")";
    return os.str();
}

IMat parse_signed_perm(const std::string& text, int rank) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s == "e") return IMat::Identity(rank, rank);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw ConfigError("signed permutation must look like \"[2,-1]\" or \"e\"");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<Int> entries;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ConfigError("empty entry in signed permutation");
        size_t pos = 0;
        Int v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw ConfigError("bad entry in signed permutation: " + tok);
        entries.push_back(v);
    }
    if (static_cast<int>(entries.size()) != rank) {
        throw ShapeError("signed permutation has " + std::to_string(entries.size()) +
                         " entries, expected " + std::to_string(rank));
    }
    IMat m = IMat::Zero(rank, rank);
    std::vector<bool> used(static_cast<size_t>(rank), false);
    for (int j = 0; j < rank; ++j) {
        Int v = entries[static_cast<size_t>(j)];
        Int a = v < 0 ? -v : v;
        if (a < 1 || a > rank) throw ConfigError("signed permutation entry out of range");
        if (used[static_cast<size_t>(a - 1)]) {
            throw ConfigError("signed permutation repeats a coordinate");
        }
        used[static_cast<size_t>(a - 1)] = true;
        m(static_cast<int>(a - 1), j) = v < 0 ? -1 : 1;
    }
    return m;
}

}  // namespace dirackit
