#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charid/errors.hpp"
#include "charid/root_system.hpp"

namespace charid {

/// A Weyl group element: shortlex-minimal reduced word, the permutation it
/// induces on the root list, and its matrix on fundamental-weight
/// coordinates. sign = (-1)^{word length}.
struct WeylElement {
    std::vector<int> word;
    std::vector<int> perm;
    std::vector<std::vector<long long>> mat;

    int length() const { return static_cast<int>(word.size()); }
    int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

/// Full enumeration of the Weyl group of a root system by breadth-first
/// closure over simple reflections. Element order is shortlex on reduced
/// words, so indices, coset representatives and every downstream report are
/// deterministic. Index 0 is the identity.
class WeylGroup {
public:
    explicit WeylGroup(std::shared_ptr<const RootSystem> rs, long long max_order = 46080)
        : rs_(std::move(rs)) {
        const RootSystem& R = *rs_;
        const int nroots = R.root_count();
        const int r = R.rank();

        std::vector<WeylElement> simples(r);
        for (int i = 0; i < r; ++i) {
            simples[i].word = {i};
            simples[i].perm = R.reflection_permutation(R.simple_root_index(i));
            simples[i].mat.assign(r, std::vector<long long>(r, 0));
            // s_i on fundamental coords: I - f(alpha_i) v(alpha_i)^T
            const auto& f = R.root_fund(R.simple_root_index(i));
            const auto& v = R.coroot(R.simple_root_index(i));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) simples[i].mat[a][b] = (a == b ? 1 : 0) - f[a] * v[b];
        }

        WeylElement id;
        id.perm.resize(nroots);
        for (int j = 0; j < nroots; ++j) id.perm[j] = j;
        id.mat.assign(r, std::vector<long long>(r, 0));
        for (int a = 0; a < r; ++a) id.mat[a][a] = 1;
        elements_.push_back(std::move(id));
        index_.emplace(perm_key(elements_[0].perm), 0);

        for (std::size_t head = 0; head < elements_.size(); ++head) {
            for (int i = 0; i < r; ++i) {
                std::vector<int> perm(nroots);
                for (int j = 0; j < nroots; ++j) perm[j] = elements_[head].perm[simples[i].perm[j]];
                std::string key = perm_key(perm);
                if (index_.count(key)) continue;
                if (static_cast<long long>(elements_.size()) + 1 > max_order)
                    throw Error("Internal", "Weyl group order exceeds configured bound " + std::to_string(max_order));
                WeylElement e;
                e.word = elements_[head].word;
                e.word.push_back(i);
                e.perm = std::move(perm);
                e.mat = mat_mul(elements_[head].mat, simples[i].mat);
                index_.emplace(std::move(key), static_cast<int>(elements_.size()));
                elements_.push_back(std::move(e));
            }
        }

        simple_.resize(r);
        for (int i = 0; i < r; ++i) simple_[i] = index_.at(perm_key(simples[i].perm));
        inverse_.resize(elements_.size());
        for (std::size_t w = 0; w < elements_.size(); ++w) {
            std::vector<int> inv(nroots);
            for (int j = 0; j < nroots; ++j) inv[elements_[w].perm[j]] = j;
            inverse_[w] = index_.at(perm_key(inv));
        }
    }

    const RootSystem& roots() const { return *rs_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const WeylElement& operator[](int i) const { return elements_[i]; }
    int identity() const { return 0; }
    int simple(int i) const { return simple_[i]; }
    int sign(int w) const { return elements_[w].sign(); }
    int length(int w) const { return elements_[w].length(); }
    int inverse(int w) const { return inverse_[w]; }

    /// compose(a, b) acts as "first b, then a": perm[j] = a.perm[b.perm[j]].
    int compose(int a, int b) const {
        const int n = rs_->root_count();
        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j) perm[j] = elements_[a].perm[elements_[b].perm[j]];
        auto it = index_.find(perm_key(perm));
        if (it == index_.end()) throw Error("Internal", "composition left the group");
        return it->second;
    }

    int act_root(int w, int root) const { return elements_[w].perm[root]; }

    Weight act(int w, const Weight& mu) const {
        const int r = rs_->rank();
        std::vector<Rational> out(r, Rational(0));
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                if (elements_[w].mat[a][b] != 0) out[a] += Rational(elements_[w].mat[a][b]) * mu.fc[b];
        return Weight(std::move(out));
    }

    int index_of_permutation(const std::vector<int>& perm) const {
        auto it = index_.find(perm_key(perm));
        return it == index_.end() ? -1 : it->second;
    }

    /// Element index of the reflection in an arbitrary root.
    int reflection_of_root(int root_index) const {
        int idx = index_of_permutation(rs_->reflection_permutation(root_index));
        if (idx < 0) throw Error("Internal", "root reflection missing from group");
        return idx;
    }

    /// Subgroup generated by the given element indices; sorted, contains the
    /// identity.
    std::vector<int> subgroup_closure(const std::vector<int>& generators) const {
        std::set<int> seen = {identity()};
        std::vector<int> queue = {identity()};
        while (!queue.empty()) {
            int w = queue.back();
            queue.pop_back();
            for (int g : generators) {
                int p = compose(w, g);
                if (seen.insert(p).second) queue.push_back(p);
            }
        }
        return std::vector<int>(seen.begin(), seen.end());
    }

    /// Shortlex-minimal representatives of the left cosets w * K. Verifies
    /// that K is a genuine subgroup first.
    std::vector<int> coset_representatives(const std::vector<int>& subgroup) const {
        validate_subgroup(subgroup);
        std::vector<char> taken(order(), 0);
        std::vector<int> reps;
        for (int w = 0; w < order(); ++w) {
            if (taken[w]) continue;
            reps.push_back(w);
            for (int k : subgroup) taken[compose(w, k)] = 1;
        }
        return reps;
    }

    /// The longest element; maps every positive root to a negative one.
    int longest() const {
        const int npos = rs_->positive_count();
        for (int w = 0; w < order(); ++w) {
            bool all = true;
            for (int i = 0; i < npos && all; ++i) all = !rs_->is_positive_root(elements_[w].perm[i]);
            if (all) return w;
        }
        throw Error("Internal", "no longest element found");
    }

    /// Some w with w(nu) dominant (greedy ascent through simple walls).
    int dominant_chamber_element(const Weight& nu) const {
        Weight mu = nu;
        int w = identity();
        for (;;) {
            int neg = -1;
            for (int i = 0; i < rs_->rank(); ++i)
                if (mu.fc[i] < 0) {
                    neg = i;
                    break;
                }
            if (neg < 0) return w;
            mu = rs_->reflect(mu, rs_->simple_root_index(neg));
            w = compose(simple(neg), w);
        }
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<WeylElement> elements_;
    std::vector<int> simple_;
    std::vector<int> inverse_;
    std::unordered_map<std::string, int> index_;

    static std::string perm_key(const std::vector<int>& perm) {
        std::string key(perm.size(), '\0');
        for (std::size_t i = 0; i < perm.size(); ++i) key[i] = static_cast<char>(perm[i]);
        return key;
    }

    static std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& a,
                                                       const std::vector<std::vector<long long>>& b) {
        const std::size_t n = a.size();
        std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
            }
        return out;
    }

    void validate_subgroup(const std::vector<int>& subgroup) const {
        if (subgroup.empty()) throw NotASubgroup("empty subgroup");
        std::set<int> members(subgroup.begin(), subgroup.end());
        if (members.size() != subgroup.size()) throw NotASubgroup("duplicate subgroup elements");
        for (int k : subgroup)
            if (k < 0 || k >= order()) throw NotASubgroup("element index out of range");
        if (!members.count(identity())) throw NotASubgroup("subgroup misses the identity");
        for (int a : subgroup)
            for (int b : subgroup)
                if (!members.count(compose(a, b))) throw NotASubgroup("subgroup is not closed under composition");
    }
};

/// Convenience bundle: a root system plus its enumerated Weyl group.
struct LieData {
    std::shared_ptr<const RootSystem> R;
    std::shared_ptr<const WeylGroup> W;
};

inline LieData make_lie(const std::string& spec, RootSystemOptions opts = {}) {
    auto R = std::make_shared<const RootSystem>(RootSystem::from_spec(spec, opts));
    auto W = std::make_shared<const WeylGroup>(R);
    return LieData{std::move(R), std::move(W)};
}

}  // namespace charid
