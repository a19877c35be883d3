#pragma once

#include <set>
#include <string>
#include <vector>

#include "charid/characters.hpp"

namespace charid {

/// One fixed point of the torus action on a flag manifold: the point w T,
/// the equivariant line bundle weight nu, and the positive system w' R+
/// giving the invariant complex structure there. Both w and the chamber are
/// Weyl element indices.
struct FixedPointDatum {
    int point = 0;
    Weight bundle;
    int chamber = 0;
};

/// Holomorphic fixed-point contribution
///   e^{w nu}(g) / prod_{alpha in w (chamber R+)} (1 - e^{-alpha}(g)).
inline Cyclotomic local_contribution(const LieData& lie, const FixedPointDatum& d, const TorusPoint& g,
                                     EvalContext* shared_ctx = nullptr) {
    const RootSystem& R = *lie.R;
    if (!is_regular(R, g)) throw SingularPoint("torus point " + g.str() + " is singular");
    if (!R.is_integral(d.bundle)) throw NonIntegralWeight("bundle weight " + d.bundle.str() + " is not integral");
    EvalContext local(lie, g);
    EvalContext& ctx = shared_ctx ? *shared_ctx : local;
    const WeylGroup& W = ctx.W();
    int transported = W.compose(d.point, d.chamber);
    return ctx.eval(W.act(d.point, d.bundle)) * ctx.inv_chamber_product(transported);
}

/// Index character of the Dolbeault operator on the full flag manifold of
/// the compact form, coupled to the bundle of weight lambda - rho: the sum
/// of local contributions over all |W_G| fixed points, each carrying the
/// complex structure of the dominant chamber.
inline Cyclotomic tau_index_compact(const LieData& lie, const Weight& lambda, const TorusPoint& g,
                                    EvalContext* shared_ctx = nullptr) {
    const RootSystem& R = *lie.R;
    detail::check_character_args(R, lambda, g);
    if (!R.is_dominant(lambda))
        throw SingularWeight("parameter " + lambda.str() + " must be dominant here");
    EvalContext local(lie, g);
    EvalContext& ctx = shared_ctx ? *shared_ctx : local;
    const Weight bundle = lambda - R.rho();
    Cyclotomic acc;
    for (int w = 0; w < ctx.W().order(); ++w)
        acc += local_contribution(lie, FixedPointDatum{w, bundle, ctx.W().identity()}, g, &ctx);
    return acc;
}

/// The [w]-summand of the regrouped index on the noncompact side: fixed
/// points run over W_K, the bundle weight is w^{-1}(lambda - rho) and the
/// complex structure is the one of the chamber w^{-1} R+. Equals
/// (-1)^q Theta_{w^{-1} lambda} on the regular torus; asserted in tests,
/// not assumed here.
inline Cyclotomic tau_index_noncompact(const InnerFormPair& pair, const Weight& lambda, int coset_rep,
                                       const TorusPoint& g, EvalContext* shared_ctx = nullptr) {
    const RootSystem& R = *pair.lie.R;
    detail::check_character_args(R, lambda, g);
    EvalContext local(pair.lie, g);
    EvalContext& ctx = shared_ctx ? *shared_ctx : local;
    const WeylGroup& W = ctx.W();
    const int winv = W.inverse(coset_rep);
    const Weight bundle = W.act(winv, lambda - R.rho());
    Cyclotomic acc;
    for (int k : pair.wk) acc += local_contribution(pair.lie, FixedPointDatum{k, bundle, winv}, g, &ctx);
    return acc;
}

struct Pf1Result {
    bool equal = false;
    Cyclotomic compact_side;
    Cyclotomic regrouped_side;
};

/// Checks that the index character of the compact form decomposes exactly
/// into the coset-indexed noncompact summands, after verifying that the
/// products {rep * k} tile the Weyl group (the fixed points of the two
/// manifolds match up bijectively).
inline Pf1Result verify_pf1_decomposition(const InnerFormPair& pair, const Weight& lambda, const TorusPoint& g,
                                          EvalContext* shared_ctx = nullptr) {
    const WeylGroup& W = *pair.lie.W;
    std::set<int> covered;
    for (int rep : pair.coset_reps)
        for (int k : pair.wk)
            if (!covered.insert(W.compose(rep, k)).second)
                throw Error("Internal", "coset products collide; fixed points do not biject");
    if (static_cast<int>(covered.size()) != W.order())
        throw Error("Internal", "coset products do not cover the Weyl group");

    EvalContext local(pair.lie, g);
    EvalContext& ctx = shared_ctx ? *shared_ctx : local;
    Pf1Result out;
    out.compact_side = tau_index_compact(pair.lie, lambda, g, &ctx);
    Cyclotomic acc;
    for (int rep : pair.coset_reps) acc += tau_index_noncompact(pair, lambda, rep, g, &ctx);
    out.regrouped_side = std::move(acc);
    out.equal = out.compact_side == out.regrouped_side;
    return out;
}

}  // namespace charid
