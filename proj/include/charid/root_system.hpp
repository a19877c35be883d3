#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charid/errors.hpp"
#include "charid/numeric.hpp"

namespace charid {

/// A weight in fundamental-weight coordinates: fc[i] = <mu, alpha_i_vee>.
/// Integral weights are exactly those with integer coordinates.
struct Weight {
    std::vector<Rational> fc;

    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : fc(std::move(coords)) {}

    std::size_t rank() const { return fc.size(); }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight out = a;
        for (std::size_t i = 0; i < out.fc.size(); ++i) out.fc[i] += b.fc[i];
        return out;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight out = a;
        for (std::size_t i = 0; i < out.fc.size(); ++i) out.fc[i] -= b.fc[i];
        return out;
    }
    Weight operator-() const {
        Weight out = *this;
        for (auto& x : out.fc) x = -x;
        return out;
    }
    friend Weight operator*(const Rational& s, const Weight& a) {
        Weight out = a;
        for (auto& x : out.fc) x *= s;
        return out;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.fc == b.fc; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.fc < b.fc; }

    bool is_zero() const {
        return std::all_of(fc.begin(), fc.end(), [](const Rational& x) { return x == 0; });
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < fc.size(); ++i) {
            if (i) os << ",";
            os << fc[i];
        }
        return os.str();
    }
};

struct RootSystemOptions {
    int max_rank = 6;
    int max_roots = 200;
};

/// Root system of a semisimple Lie algebra, built from a Cartan matrix or a
/// textual type spec such as "A2", "B3", "D2" or "A1xA1".
///
/// Conventions:
///  - cartan(i, j) = <alpha_j, alpha_i_vee>, so the fundamental coordinates
///    of a root with simple-root coordinates c are C * c;
///  - roots are indexed with positives first, sorted by (height, coords),
///    and root(i + positive_count) = -root(i).
class RootSystem {
public:
    using Options = RootSystemOptions;

    static RootSystem from_spec(const std::string& spec, Options opts = {}) {
        std::string s = spec;
        s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
        if (s.rfind("cartan:", 0) == 0) {
            return from_cartan(parse_cartan_rows(s.substr(7)), opts, s);
        }
        std::vector<std::pair<char, int>> blocks;
        std::size_t pos = 0;
        while (pos < s.size()) {
            char t = s[pos];
            if (t != 'A' && t != 'B' && t != 'C' && t != 'D')
                throw InvalidCartanData("unknown Cartan type in '" + spec + "'");
            std::size_t j = pos + 1, start = j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == start) throw InvalidCartanData("missing rank in '" + spec + "'");
            int r = std::stoi(s.substr(start, j - start));
            if (t == 'A' && r < 1) throw InvalidCartanData("type A needs rank >= 1");
            if ((t == 'B' || t == 'C' || t == 'D') && r < 2)
                throw InvalidCartanData(std::string("type ") + t + " needs rank >= 2");
            blocks.emplace_back(t, r);
            pos = j;
            if (pos < s.size()) {
                if (s[pos] != 'x') throw InvalidCartanData("expected 'x' between factors in '" + spec + "'");
                ++pos;
                if (pos == s.size()) throw InvalidCartanData("trailing 'x' in '" + spec + "'");
            }
        }
        int rank = 0;
        for (auto& [t, r] : blocks) rank += r;
        std::vector<std::vector<long long>> cartan(rank, std::vector<long long>(rank, 0));
        int base = 0;
        for (auto& [t, r] : blocks) {
            fill_block(cartan, base, t, r);
            base += r;
        }
        return from_cartan(std::move(cartan), opts, s);
    }

    static RootSystem from_cartan(std::vector<std::vector<long long>> cartan, Options opts = {},
                                  std::string spec_label = "") {
        RootSystem rs;
        rs.cartan_ = std::move(cartan);
        rs.spec_ = spec_label.empty() ? cartan_label(rs.cartan_) : std::move(spec_label);
        rs.rank_ = static_cast<int>(rs.cartan_.size());
        rs.validate_cartan(opts);
        rs.derive_symmetrizer();
        rs.check_positive_definite();
        rs.invert_cartan();
        rs.generate_roots(opts);
        rs.finish_roots();
        return rs;
    }

    int rank() const { return rank_; }
    int root_count() const { return static_cast<int>(root_coords_.size()); }
    int positive_count() const { return npos_; }
    const std::string& spec_string() const { return spec_; }
    const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
    const std::vector<Rational>& symmetrizer() const { return d_; }

    const std::vector<long long>& root_coords(int i) const { return root_coords_[i]; }
    const std::vector<long long>& root_fund(int i) const { return root_fund_[i]; }
    /// coroot(i)[j] = <omega_j, alpha_i_vee>; always integral.
    const std::vector<long long>& coroot(int i) const { return coroot_[i]; }
    long long root_height(int i) const { return height_[i]; }
    bool is_positive_root(int i) const { return i < npos_; }
    int negative_of(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
    int simple_root_index(int i) const { return simple_index_[i]; }

    int find_root(const std::vector<long long>& coords) const {
        auto it = index_.find(coords);
        return it == index_.end() ? -1 : it->second;
    }

    /// Index of root(i) + root(j), or -1 when the sum is not a root.
    int root_sum(int i, int j) const {
        std::vector<long long> c = root_coords_[i];
        for (int k = 0; k < rank_; ++k) c[k] += root_coords_[j][k];
        return find_root(c);
    }

    Weight weight_of_root(int i) const {
        std::vector<Rational> fc(rank_);
        for (int j = 0; j < rank_; ++j) fc[j] = Rational(root_fund_[i][j]);
        return Weight(std::move(fc));
    }

    Weight rho() const { return Weight(std::vector<Rational>(rank_, Rational(1))); }

    Weight zero_weight() const { return Weight(std::vector<Rational>(rank_, Rational(0))); }

    /// <mu, alpha_vee> for the coroot of root i.
    Rational pairing(const Weight& mu, int i) const {
        Rational acc(0);
        for (int j = 0; j < rank_; ++j) acc += Rational(coroot_[i][j]) * mu.fc[j];
        return acc;
    }

    /// Invariant inner product; normalized so long roots in each simple
    /// factor have square length 2 for the built-in types.
    Rational inner(const Weight& a, const Weight& b) const {
        // (a, b) = (C^{-1} f(a))^T diag(d) f(b)
        Rational acc(0);
        for (int k = 0; k < rank_; ++k) {
            Rational ck(0);
            for (int j = 0; j < rank_; ++j) ck += cartan_inv_[k][j] * a.fc[j];
            acc += ck * d_[k] * b.fc[k];
        }
        return acc;
    }

    bool is_integral(const Weight& mu) const {
        return std::all_of(mu.fc.begin(), mu.fc.end(), [](const Rational& x) { return is_integer(x); });
    }

    bool is_half_integral(const Weight& mu) const {
        return std::all_of(mu.fc.begin(), mu.fc.end(), [](const Rational& x) { return is_half_integer(x); });
    }

    bool is_dominant(const Weight& mu) const {
        return std::all_of(mu.fc.begin(), mu.fc.end(), [](const Rational& x) { return x >= 0; });
    }

    bool is_regular(const Weight& mu) const {
        for (int i = 0; i < npos_; ++i)
            if (pairing(mu, i) == 0) return false;
        return true;
    }

    /// Half the sum of the roots pairing positively with nu; equals w(rho)
    /// for the w moving nu to the dominant chamber.
    Weight rho_of_chamber(const Weight& nu) const {
        std::vector<Rational> acc(rank_, Rational(0));
        for (int i = 0; i < npos_; ++i) {
            Rational p = pairing(nu, i);
            if (p == 0) throw SingularWeight("weight " + nu.str() + " lies on the wall of root " + std::to_string(i));
            int idx = p > 0 ? i : negative_of(i);
            for (int j = 0; j < rank_; ++j) acc[j] += Rational(root_fund_[idx][j]);
        }
        for (auto& x : acc) x /= 2;
        return Weight(std::move(acc));
    }

    /// Reflection in root i applied to a weight.
    Weight reflect(const Weight& mu, int i) const {
        Rational p = pairing(mu, i);
        Weight out = mu;
        for (int j = 0; j < rank_; ++j) out.fc[j] -= p * Rational(root_fund_[i][j]);
        return out;
    }

    /// The permutation of root indices induced by the reflection in root i.
    std::vector<int> reflection_permutation(int i) const {
        std::vector<int> perm(root_count());
        for (int j = 0; j < root_count(); ++j) {
            Rational p = pairing(weight_of_root(j), i);
            if (!is_integer(p)) throw Error("Internal", "non-integral root pairing");
            long long pi = to_ll(numer(p));
            std::vector<long long> c = root_coords_[j];
            for (int k = 0; k < rank_; ++k) c[k] -= pi * root_coords_[i][k];
            int idx = find_root(c);
            if (idx < 0) throw Error("Internal", "reflection left the root set");
            perm[j] = idx;
        }
        return perm;
    }

private:
    RootSystem() = default;

    std::string spec_;
    int rank_ = 0;
    int npos_ = 0;
    std::vector<std::vector<long long>> cartan_;
    std::vector<Rational> d_;
    std::vector<std::vector<Rational>> cartan_inv_;
    std::vector<std::vector<long long>> root_coords_;
    std::vector<std::vector<long long>> root_fund_;
    std::vector<std::vector<long long>> coroot_;
    std::vector<long long> height_;
    std::vector<int> simple_index_;
    std::map<std::vector<long long>, int> index_;

    static std::vector<std::vector<long long>> parse_cartan_rows(const std::string& body) {
        std::vector<std::vector<long long>> rows;
        std::string row;
        std::istringstream is(body);
        while (std::getline(is, row, ';')) {
            std::vector<long long> r;
            std::string item;
            std::istringstream rs(row);
            while (std::getline(rs, item, ',')) {
                try {
                    r.push_back(std::stoll(item));
                } catch (const std::exception&) {
                    throw InvalidCartanData("bad Cartan entry '" + item + "'");
                }
            }
            rows.push_back(std::move(r));
        }
        return rows;
    }

    static std::string cartan_label(const std::vector<std::vector<long long>>& c) {
        std::ostringstream os;
        os << "cartan:";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ";";
            for (std::size_t j = 0; j < c[i].size(); ++j) {
                if (j) os << ",";
                os << c[i][j];
            }
        }
        return os.str();
    }

    static void fill_block(std::vector<std::vector<long long>>& c, int base, char type, int r) {
        for (int i = 0; i < r; ++i) c[base + i][base + i] = 2;
        auto link = [&](int i, int j, long long cij, long long cji) {
            c[base + i][base + j] = cij;
            c[base + j][base + i] = cji;
        };
        switch (type) {
            case 'A':
                for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
                break;
            case 'B':  // last simple root short
                for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
                link(r - 2, r - 1, -1, -2);
                break;
            case 'C':  // last simple root long
                for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
                link(r - 2, r - 1, -2, -1);
                break;
            case 'D':
                if (r == 2) break;  // two orthogonal A1 nodes
                for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
                link(r - 3, r - 1, -1, -1);
                break;
            default:
                throw InvalidCartanData("unknown block type");
        }
    }

    void validate_cartan(const Options& opts) {
        if (rank_ == 0) throw InvalidCartanData("empty Cartan matrix");
        if (rank_ > opts.max_rank)
            throw InvalidCartanData("rank " + std::to_string(rank_) + " exceeds configured bound " +
                                    std::to_string(opts.max_rank));
        for (int i = 0; i < rank_; ++i) {
            if (static_cast<int>(cartan_[i].size()) != rank_) throw InvalidCartanData("Cartan matrix is not square");
            if (cartan_[i][i] != 2) throw InvalidCartanData("diagonal entries must equal 2");
            for (int j = 0; j < rank_; ++j) {
                if (i == j) continue;
                if (cartan_[i][j] > 0) throw InvalidCartanData("off-diagonal entries must be <= 0");
                if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                    throw InvalidCartanData("zero pattern must be symmetric");
            }
        }
    }

    // Find d with d_i C_ij = d_j C_ji by propagating along the Coxeter graph.
    void derive_symmetrizer() {
        d_.assign(rank_, Rational(0));
        for (int start = 0; start < rank_; ++start) {
            if (d_[start] != 0) continue;
            d_[start] = 1;
            std::vector<int> queue = {start};
            while (!queue.empty()) {
                int i = queue.back();
                queue.pop_back();
                for (int j = 0; j < rank_; ++j) {
                    if (i == j || cartan_[i][j] == 0) continue;
                    Rational expect = d_[i] * make_rational(cartan_[i][j], cartan_[j][i]);
                    if (d_[j] == 0) {
                        d_[j] = expect;
                        queue.push_back(j);
                    } else if (d_[j] != expect) {
                        throw InvalidCartanData("matrix is not symmetrizable");
                    }
                }
            }
        }
    }

    // Positive definiteness of diag(d) * C via Gaussian pivots: finite type.
    void check_positive_definite() const {
        std::vector<std::vector<Rational>> s(rank_, std::vector<Rational>(rank_));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) s[i][j] = d_[i] * Rational(cartan_[i][j]);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (s[i][j] != s[j][i]) throw InvalidCartanData("symmetrized matrix is not symmetric");
        for (int k = 0; k < rank_; ++k) {
            if (s[k][k] <= 0) throw InvalidCartanData("matrix is not of finite type");
            for (int i = k + 1; i < rank_; ++i) {
                Rational f = s[i][k] / s[k][k];
                for (int j = k; j < rank_; ++j) s[i][j] -= f * s[k][j];
            }
        }
    }

    void invert_cartan() {
        std::vector<std::vector<Rational>> a(rank_, std::vector<Rational>(2 * rank_, Rational(0)));
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) a[i][j] = Rational(cartan_[i][j]);
            a[i][rank_ + i] = 1;
        }
        for (int k = 0; k < rank_; ++k) {
            int pivot = -1;
            for (int i = k; i < rank_; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) throw InvalidCartanData("Cartan matrix is singular");
            std::swap(a[k], a[pivot]);
            Rational p = a[k][k];
            for (int j = 0; j < 2 * rank_; ++j) a[k][j] /= p;
            for (int i = 0; i < rank_; ++i) {
                if (i == k || a[i][k] == 0) continue;
                Rational f = a[i][k];
                for (int j = 0; j < 2 * rank_; ++j) a[i][j] -= f * a[k][j];
            }
        }
        cartan_inv_.assign(rank_, std::vector<Rational>(rank_));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) cartan_inv_[i][j] = a[i][rank_ + j];
    }

    std::vector<long long> fund_of(const std::vector<long long>& c) const {
        std::vector<long long> f(rank_, 0);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) f[i] += cartan_[i][j] * c[j];
        return f;
    }

    // Closure of the simple roots under simple reflections.
    void generate_roots(const Options& opts) {
        std::set<std::vector<long long>> seen;
        std::vector<std::vector<long long>> queue;
        for (int i = 0; i < rank_; ++i) {
            std::vector<long long> e(rank_, 0);
            e[i] = 1;
            seen.insert(e);
            queue.push_back(std::move(e));
        }
        while (!queue.empty()) {
            std::vector<long long> c = std::move(queue.back());
            queue.pop_back();
            std::vector<long long> f = fund_of(c);
            for (int i = 0; i < rank_; ++i) {
                std::vector<long long> rc = c;
                rc[i] -= f[i];
                if (seen.insert(rc).second) {
                    if (static_cast<int>(seen.size()) > opts.max_roots)
                        throw InvalidCartanData("root closure exceeds configured bound");
                    queue.push_back(std::move(rc));
                }
            }
        }
        std::vector<std::vector<long long>> positives;
        for (const auto& c : seen) {
            bool pos = true, neg = true;
            for (long long x : c) {
                if (x > 0) neg = false;
                if (x < 0) pos = false;
            }
            if (!pos && !neg) throw InvalidCartanData("root with mixed signs; matrix is not of finite type");
            if (pos) positives.push_back(c);
        }
        std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
            long long ha = 0, hb = 0;
            for (long long x : a) ha += x;
            for (long long x : b) hb += x;
            return ha != hb ? ha < hb : a < b;
        });
        npos_ = static_cast<int>(positives.size());
        root_coords_ = positives;
        for (const auto& c : positives) {
            std::vector<long long> n(c);
            for (auto& x : n) x = -x;
            root_coords_.push_back(std::move(n));
        }
    }

    void finish_roots() {
        const int n = root_count();
        root_fund_.resize(n);
        coroot_.resize(n);
        height_.resize(n);
        for (int i = 0; i < n; ++i) {
            root_fund_[i] = fund_of(root_coords_[i]);
            long long h = 0;
            for (long long x : root_coords_[i]) h += x;
            height_[i] = h;
            index_[root_coords_[i]] = i;

            // (alpha, alpha) = sum_k c_k d_k f_k; coroot entries 2 d_j c_j / (alpha, alpha)
            Rational norm(0);
            for (int k = 0; k < rank_; ++k)
                norm += Rational(root_coords_[i][k]) * d_[k] * Rational(root_fund_[i][k]);
            coroot_[i].resize(rank_);
            for (int j = 0; j < rank_; ++j) {
                Rational v = Rational(2) * d_[j] * Rational(root_coords_[i][j]) / norm;
                if (!is_integer(v)) throw Error("Internal", "coroot pairing is not integral");
                coroot_[i][j] = to_ll(numer(v));
            }
        }
        simple_index_.resize(rank_);
        for (int i = 0; i < rank_; ++i) {
            std::vector<long long> e(rank_, 0);
            e[i] = 1;
            simple_index_[i] = find_root(e);
            if (simple_index_[i] < 0) throw Error("Internal", "simple root missing from closure");
        }
    }
};

}  // namespace charid
