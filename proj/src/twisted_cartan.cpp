#include "dirackit/twisted_cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dirackit {

namespace {

std::vector<Int> flatten(const IMat& m) {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    }
    return out;
}

}  // namespace

std::vector<InvolutionClass> involution_classes(const RootDatum& datum) {
    const std::vector<WeylElement> weyl = enumerate_weyl(datum);
    std::map<std::vector<Int>, int> index_of;
    for (int i = 0; i < static_cast<int>(weyl.size()); ++i) {
        index_of.emplace(flatten(weyl[i].mat), i);
    }

    const int n = datum.ambient_rank;
    std::vector<int> involutions;
    for (int i = 0; i < static_cast<int>(weyl.size()); ++i) {
        if ((weyl[i].mat * weyl[i].mat) == IMat::Identity(n, n)) {
            involutions.push_back(i);
        }
    }

    std::vector<bool> assigned(weyl.size(), false);
    std::vector<InvolutionClass> classes;
    for (int v : involutions) {
        if (assigned[v]) continue;
        std::set<int> orbit;
        for (const WeylElement& w : weyl) {
            IMat conj = w.mat * weyl[v].mat * w.mat.transpose();
            auto it = index_of.find(flatten(conj));
            if (it == index_of.end()) {
                throw ConfigError("conjugate left the enumerated Weyl group");
            }
            orbit.insert(it->second);
        }
        InvolutionClass cls;
        for (int idx : orbit) {
            assigned[idx] = true;
            cls.members.push_back(weyl[idx]);
        }
        // weyl is sorted by (length, matrix lex), so ascending index order
        // already gives the minimal-length, lex-least representative first.
        cls.representative = cls.members.front();
        classes.push_back(std::move(cls));
    }
    return classes;
}

int twisted_signature_plus(const PairDatum& pair, const WeylElement& w) {
    if (pair.tag != FamilyTag::complex_pair) {
        throw UsageError("twisted signatures are defined for complex pairs");
    }
    if (w.rank() != pair.rank) {
        throw ShapeError("Weyl element does not act on the rank-n torus");
    }
    int n2 = 2 * pair.rank;
    IMat diag = IMat::Zero(n2, n2);
    diag.topLeftCorner(pair.rank, pair.rank) = w.mat;
    diag.bottomRightCorner(pair.rank, pair.rank) = w.mat;
    IMat m = pair.theta * diag;
    if ((m * m) != IMat::Identity(n2, n2)) {
        throw UsageError("theta o (w,w) is not an involution; w must square to e");
    }
    // An involution is diagonalizable with eigenvalues +-1, so the +1
    // eigenspace dimension is (dim + trace) / 2.
    Int tr = m.trace();
    if ((n2 + tr) % 2 != 0) throw ConfigError("involution trace has wrong parity");
    return static_cast<int>((n2 + tr) / 2);
}

std::vector<ComplexTwistedCartan> twisted_cartan_classes_complex(const PairDatum& pair) {
    if (pair.tag != FamilyTag::complex_pair) {
        throw UsageError("twisted Cartan classes by involution need a complex pair");
    }
    std::vector<ComplexTwistedCartan> out;
    for (const InvolutionClass& cls : involution_classes(pair.k)) {
        ComplexTwistedCartan row;
        row.w_rep = cls.representative;
        row.class_size = cls.size();
        row.h_plus_dim = twisted_signature_plus(pair, cls.representative);
        row.h_minus_dim = 2 * pair.rank - row.h_plus_dim;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<GlTwistedClass> twisted_cartan_classes_gl(int m) {
    if (m < 2 || m > 12) {
        throw ResourceError("GL twisted Cartan classification supports 2 <= m <= 12");
    }
    int n = m / 2;
    std::vector<GlTwistedClass> out;
    for (int k = n; k >= 0; --k) {
        std::vector<InvolutionClass> classes;
        if (k == 0) {
            InvolutionClass trivial;
            trivial.representative = WeylElement{IMat::Identity(0, 0), 0};
            trivial.members = {trivial.representative};
            classes.push_back(std::move(trivial));
        } else {
            classes = involution_classes(build_root_datum('A', k));
        }
        for (const InvolutionClass& cls : classes) {
            GlTwistedClass row;
            row.untransformed_pairs = k;
            row.involution = cls.representative;
            row.class_size = cls.size();
            // A fixed point of the pair involution keeps a compact circle; a
            // 2-cycle merges two circles into one compact and one split
            // direction; each Cayley-transformed pair is split.
            Int fixed = cls.representative.mat.trace();
            Int cycles = (k - fixed) / 2;
            row.t_dim = static_cast<int>(fixed + cycles);
            row.a_dim = static_cast<int>(cycles + (n - k));
            out.push_back(std::move(row));
        }
    }
    return out;
}

namespace {

struct Pairing {
    std::vector<std::pair<int, int>> blocks;  // each sorted, list sorted
    int singleton = -1;

    bool operator<(const Pairing& other) const {
        if (blocks != other.blocks) return blocks < other.blocks;
        return singleton < other.singleton;
    }
    bool operator==(const Pairing& other) const {
        return blocks == other.blocks && singleton == other.singleton;
    }
};

Pairing canonical(std::vector<std::pair<int, int>> blocks, int singleton) {
    for (auto& b : blocks) {
        if (b.first > b.second) std::swap(b.first, b.second);
    }
    std::sort(blocks.begin(), blocks.end());
    return Pairing{std::move(blocks), singleton};
}

Pairing apply_map(const std::vector<int>& map, const Pairing& p) {
    std::vector<std::pair<int, int>> blocks;
    blocks.reserve(p.blocks.size());
    for (const auto& [a, b] : p.blocks) blocks.emplace_back(map[a], map[b]);
    return canonical(std::move(blocks), p.singleton < 0 ? -1 : map[p.singleton]);
}

}  // namespace

OracleReport sigma_stable_oracle(int m) {
    if (m < 2 || m > 8) {
        throw ResourceError("sigma-stability oracle enumerates S_m only up to m = 8");
    }
    int n = m / 2;
    OracleReport report;
    report.m = m;

    for (int j = 0; j <= n; ++j) {
        int k = n - j;
        // Index involution induced by sigma on this stratum: reverse the
        // outer 2k coordinates, fix the middle ones.
        std::vector<int> iota(m);
        for (int i = 0; i < m; ++i) {
            bool outer = i < k || i >= m - k;
            iota[i] = outer ? m - 1 - i : i;
        }
        auto is_middle = [&](int i) { return iota[i] == i; };

        // Every W-conjugate of the small torus is a pairing of coordinates;
        // keep the sigma-stable ones.
        std::set<Pairing> stable;
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::pair<int, int>> blocks;
            blocks.reserve(n);
            for (int i = 0; i < n; ++i) blocks.emplace_back(perm[i], perm[m - 1 - i]);
            int singleton = (m % 2 == 1) ? perm[n] : -1;
            Pairing p = canonical(std::move(blocks), singleton);
            if (stable.count(p)) continue;
            bool ok = p.singleton < 0 || iota[p.singleton] == p.singleton;
            for (const auto& [a, b] : p.blocks) {
                if (!ok) break;
                int ia = std::min(iota[a], iota[b]);
                int ib = std::max(iota[a], iota[b]);
                ok = std::binary_search(p.blocks.begin(), p.blocks.end(),
                                        std::make_pair(ia, ib));
            }
            if (ok) stable.insert(std::move(p));
        } while (std::next_permutation(perm.begin(), perm.end()));

        // Real Weyl group of the stratum: flips and permutations of the
        // outer coordinate pairs, arbitrary permutations of the middle.
        std::vector<std::vector<int>> generators;
        auto identity_map = [&] {
            std::vector<int> g(m);
            std::iota(g.begin(), g.end(), 0);
            return g;
        };
        for (int i = 0; i < k; ++i) {
            auto g = identity_map();
            std::swap(g[i], g[m - 1 - i]);
            generators.push_back(std::move(g));
        }
        for (int i = 0; i + 1 < k; ++i) {
            auto g = identity_map();
            std::swap(g[i], g[i + 1]);
            std::swap(g[m - 1 - i], g[m - 2 - i]);
            generators.push_back(std::move(g));
        }
        for (int a = k; a + 1 < m - k; ++a) {
            auto g = identity_map();
            std::swap(g[a], g[a + 1]);
            generators.push_back(std::move(g));
        }

        OracleStratum stratum;
        stratum.untransformed_pairs = k;
        std::set<Pairing> seen;
        for (const Pairing& start : stable) {
            if (seen.count(start)) continue;
            std::set<Pairing> orbit{start};
            std::vector<Pairing> frontier{start};
            while (!frontier.empty()) {
                Pairing cur = std::move(frontier.back());
                frontier.pop_back();
                for (const auto& g : generators) {
                    Pairing next = apply_map(g, cur);
                    if (orbit.insert(next).second) frontier.push_back(std::move(next));
                }
            }
            for (const Pairing& p : orbit) {
                if (!stable.count(p)) {
                    throw ConfigError("real Weyl orbit left the sigma-stable set");
                }
                seen.insert(p);
                for (const auto& [a, b] : p.blocks) {
                    if (is_middle(a) && is_middle(b) && b != m - 1 - a) {
                        stratum.middle_rearranged = true;
                    }
                }
                if (p.singleton >= 0 && p.singleton != m / 2) {
                    stratum.middle_rearranged = true;
                }
            }

            const Pairing& rep = *orbit.begin();
            OracleClass cls;
            cls.blocks = rep.blocks;
            cls.singleton = rep.singleton;
            cls.orbit_size = static_cast<int>(orbit.size());
            int swapped_blocks = 0;
            for (const auto& [a, b] : rep.blocks) {
                if (iota[a] == b) {
                    cls.t_dim += 1;  // block is a sigma-orbit: compact circle
                } else if (is_middle(a) && is_middle(b)) {
                    cls.a_dim += 1;  // sigma fixes both coordinates: split
                } else {
                    swapped_blocks += 1;  // blocks exchanged in sigma-pairs
                }
            }
            if (swapped_blocks % 2 != 0) {
                throw ConfigError("swapped blocks of a stable pairing must pair up");
            }
            cls.t_dim += swapped_blocks / 2;
            cls.a_dim += swapped_blocks / 2;
            stratum.classes.push_back(std::move(cls));
        }
        std::sort(stratum.classes.begin(), stratum.classes.end(),
                  [](const OracleClass& a, const OracleClass& b) {
                      if (a.blocks != b.blocks) return a.blocks < b.blocks;
                      return a.singleton < b.singleton;
                  });
        report.total_classes += static_cast<int>(stratum.classes.size());
        report.strata.push_back(std::move(stratum));
    }
    return report;
}

}  // namespace dirackit
