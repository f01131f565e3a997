#include "permcx/counterexample.hpp"

namespace permcx {

BoundedComplex periodicity_complex(int p, const FieldPtr& field) {
    if (!field || field->p() != p)
        throw Error("periodicity_complex: field characteristic must equal p");
    const ElemAbGroup g{p, 1};
    validate_group(g);
    const GModule triv = make_trivial(g, field, 1);
    const GModule reg = make_permutation(Subgroup::trivial(g), field);

    Matrix norm(field, p, 1);
    for (int i = 0; i < p; ++i) norm.set(i, 0, field->one());
    const Matrix shift_minus_one = reg.action[0] - Matrix::identity(field, p);
    Matrix aug(field, 1, p);
    for (int i = 0; i < p; ++i) aug.set(0, i, field->one());

    BoundedComplex c;
    c.terms = {triv, reg, reg, triv};
    c.diffs = {norm, shift_minus_one, aug};
    return c;
}

CounterexampleReport chain_pair_counterexample(const Subgroup& sub, const Subgroup& super,
                                               const FieldPtr& field) {
    if (sub.group() != super.group())
        throw Error("chain_pair_counterexample: subgroups of different groups");
    const ElemAbGroup g = sub.group();
    const int p = g.p;
    if (!field || field->p() != p)
        throw Error("chain_pair_counterexample: field characteristic must equal p");
    const auto rel = lattice_ops(sub, super);
    if (!rel.contains || rel.index_if_contained != p)
        throw Error("chain_pair_counterexample: requires E contained in F with index exactly p");

    const int s = super.rank();
    const FieldPtr fp = sub.basis().field();

    // coordinates of E's basis w.r.t. F's basis
    const auto coords = super.basis().transpose().solve(sub.basis().transpose());
    if (!coords) throw Error("chain_pair_counterexample: internal coordinate failure");
    const Matrix e_in_f = coords->transpose(); // (s-1) x s

    // lowest-index completion: first basis row of F outside E
    int completion = -1;
    for (int j = 0; j < s; ++j) {
        Matrix row(fp, 1, g.r);
        for (int k = 0; k < g.r; ++k) row.set(0, k, super.basis().at(j, k));
        if (!in_row_space(sub.basis(), row)) { completion = j; break; }
    }
    if (completion < 0) throw Error("chain_pair_counterexample: internal completion failure");

    // quotient map F ->> F/E = C_p: project onto the completion coordinate
    Matrix basis_change(fp, s, s);
    basis_change.paste(0, 0, e_in_f);
    basis_change.set(s - 1, completion, fp->one());
    const auto inv = basis_change.inverse();
    if (!inv) throw Error("chain_pair_counterexample: internal basis-change failure");
    const Matrix quotient = inv->submatrix(0, s - 1, s, 1); // s x 1 over F_p

    BoundedComplex built = induce_complex(
        inflate_complex(periodicity_complex(p, field), quotient), super.basis());

    // Re-base every term onto the canonical permutation module. Each built
    // basis index carries a known member of its coset, tracked through the
    // inflation (t |-> t * f, f the completion row) and the induction
    // (coset-major blocks).
    const VecFp f_vec = super.basis_row(completion);
    const auto reps_f = coset_reps(super);
    const std::vector<Subgroup> stabilizers = {super, sub, sub, super};

    BoundedComplex canonical;
    std::vector<Matrix> change; // change[t] : built basis -> canonical basis
    for (int t = 0; t < 4; ++t) {
        const Subgroup& stab = stabilizers[static_cast<std::size_t>(t)];
        std::vector<VecFp> members;
        if (t == 0 || t == 3) {
            members = reps_f;
        } else {
            for (const auto& c : reps_f)
                for (int j = 0; j < p; ++j)
                    members.push_back(vec_add(g, c, vec_scale(g, j, f_vec)));
        }
        const GModule canon = make_permutation(stab, field);
        const auto reps = coset_reps(stab);
        std::vector<int> rep_index(static_cast<std::size_t>(g.order()), -1);
        const auto elts = stab.elements();
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (const auto& sel : elts)
                rep_index[static_cast<std::size_t>(vec_code(g, vec_add(g, reps[a], sel)))] =
                    static_cast<int>(a);

        Matrix perm(field, canon.dim, canon.dim);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int target = rep_index[static_cast<std::size_t>(vec_code(g, members[i]))];
            perm.set(target, static_cast<int>(i), field->one());
        }
        const Matrix perm_t = perm.transpose();
        for (int gen = 0; gen < g.r; ++gen) {
            if (perm * built.terms[static_cast<std::size_t>(t)].action[gen] * perm_t !=
                canon.action[gen])
                throw Error("chain_pair_counterexample: internal re-basing failure");
        }
        canonical.terms.push_back(canon);
        change.push_back(std::move(perm));
    }
    for (int t = 0; t < 3; ++t)
        canonical.diffs.push_back(change[t + 1] * built.diffs[static_cast<std::size_t>(t)] *
                                  change[t].transpose());

    require_valid(canonical);
    const auto exact = is_exact(canonical);
    const auto contraction = is_contractible(canonical);
    if (!exact.exact || contraction.contractible)
        throw Error("chain_pair_counterexample: certification failed (construction bug)");
    return {sub, super, std::move(canonical), exact.exact, contraction.contractible};
}

std::vector<CounterexampleReport> necessity_report(const SubgroupCollection& h,
                                                   const FieldPtr& field) {
    const auto cond = check_chain_condition(h);
    std::vector<CounterexampleReport> out;
    out.reserve(cond.violations.size());
    for (const auto& v : cond.violations)
        out.push_back(chain_pair_counterexample(v.sub, v.super, field));
    return out;
}

} // namespace permcx
