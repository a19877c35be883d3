#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charid/errors.hpp"
#include "charid/weyl_group.hpp"

namespace charid {

/// An equal-rank real form, given purely by the root system together with
/// the subset of compact roots (the roots of the maximal compact subalgebra).
/// The compact form has every root compact; a form with no compact roots has
/// a torus as maximal compact subgroup.
struct RealFormSpec {
    LieData lie;
    std::string name;
    std::vector<int> compact_roots;  // sorted root indices

    bool is_compact_root(int i) const {
        return std::binary_search(compact_roots.begin(), compact_roots.end(), i);
    }
};

struct GradingViolation {
    int a = -1, b = -1, sum = -1;
    std::string message;
};

/// Checks the Z2-grading of the root set: R_c symmetric, closed under the
/// rule compact+compact -> compact, noncompact+noncompact -> compact,
/// mixed -> noncompact, and an even number of noncompact roots. Violations
/// are returned, not thrown.
inline std::vector<GradingViolation> validate_real_form(const RealFormSpec& spec) {
    const RootSystem& R = *spec.lie.R;
    std::vector<GradingViolation> out;
    for (int i : spec.compact_roots)
        if (i < 0 || i >= R.root_count()) {
            out.push_back({i, -1, -1, "compact root index " + std::to_string(i) + " out of range"});
            return out;
        }
    for (int i : spec.compact_roots)
        if (!spec.is_compact_root(R.negative_of(i)))
            out.push_back({i, -1, -1, "compact set is not symmetric: missing -root(" + std::to_string(i) + ")"});

    const int n = R.root_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = R.root_sum(i, j);
            if (s < 0) continue;
            bool ci = spec.is_compact_root(i), cj = spec.is_compact_root(j), cs = spec.is_compact_root(s);
            bool expect_compact = (ci == cj);
            if (cs != expect_compact) {
                std::ostringstream os;
                os << "roots " << i << " (" << (ci ? "compact" : "noncompact") << ") + " << j << " ("
                   << (cj ? "compact" : "noncompact") << ") = " << s << " must be "
                   << (expect_compact ? "compact" : "noncompact");
                out.push_back({i, j, s, os.str()});
            }
        }

    int noncompact = R.root_count() - static_cast<int>(spec.compact_roots.size());
    if (noncompact % 2 != 0)
        out.push_back({-1, -1, -1, "odd number of noncompact roots: " + std::to_string(noncompact)});
    return out;
}

struct QDim {
    int q = 0;
    int dim_gk = 0;  // = number of noncompact roots
};

inline QDim q_and_dim(const RealFormSpec& spec) {
    QDim out;
    out.dim_gk = spec.lie.R->root_count() - static_cast<int>(spec.compact_roots.size());
    out.q = out.dim_gk / 2;
    return out;
}

/// The subgroup of the Weyl group generated by reflections in compact roots.
inline std::vector<int> weyl_subgroup_K(const RealFormSpec& spec) {
    const WeylGroup& W = *spec.lie.W;
    std::vector<int> gens;
    for (int i : spec.compact_roots)
        if (spec.lie.R->is_positive_root(i)) gens.push_back(W.reflection_of_root(i));
    return W.subgroup_closure(gens);
}

/// A noncompact form together with the compact form on the same root system.
/// Everything downstream (packets, coset representatives, signs) is derived
/// once here.
struct InnerFormPair {
    std::string name;
    RealFormSpec noncompact;
    RealFormSpec compact;
    LieData lie;
    std::vector<int> wk;          // W_K inside W_G, sorted
    std::vector<int> coset_reps;  // shortlex-minimal, deterministic
    int q = 0;
    int dim_gk = 0;

    int packet_size() const { return static_cast<int>(coset_reps.size()); }
};

inline InnerFormPair make_pair(LieData lie, const std::string& name, const std::string& noncompact_name,
                               const std::string& compact_name, std::vector<int> compact_roots) {
    std::sort(compact_roots.begin(), compact_roots.end());
    compact_roots.erase(std::unique(compact_roots.begin(), compact_roots.end()), compact_roots.end());

    InnerFormPair pair;
    pair.name = name;
    pair.lie = lie;
    pair.noncompact = RealFormSpec{lie, noncompact_name, std::move(compact_roots)};
    std::vector<int> all(lie.R->root_count());
    for (int i = 0; i < lie.R->root_count(); ++i) all[i] = i;
    pair.compact = RealFormSpec{lie, compact_name, std::move(all)};

    auto violations = validate_real_form(pair.noncompact);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "pair '" << name << "' fails validation:";
        for (const auto& v : violations) os << " [" << v.message << "]";
        throw CatalogError(os.str());
    }
    pair.wk = weyl_subgroup_K(pair.noncompact);
    pair.coset_reps = lie.W->coset_representatives(pair.wk);
    QDim qd = q_and_dim(pair.noncompact);
    pair.q = qd.q;
    pair.dim_gk = qd.dim_gk;
    return pair;
}

}  // namespace charid
