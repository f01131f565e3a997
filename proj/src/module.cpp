#include "permcx/module.hpp"

#include <algorithm>
#include <sstream>

namespace permcx {

namespace {

void check_module_context(const GModule& m, const char* who) {
    validate_group(m.group);
    if (!m.field) throw Error(std::string(who) + ": missing field");
    if (m.field->p() != m.group.p)
        throw Error(std::string(who) + ": field characteristic must equal the group prime");
    if (m.dim < 0) throw Error(std::string(who) + ": negative dimension");
    if (static_cast<int>(m.action.size()) != m.group.r)
        throw Error(std::string(who) + ": expected one action matrix per generator");
}

std::vector<Matrix> canonical_block_actions(const SummandTag& tag, const ElemAbGroup& g,
                                            const FieldPtr& field) {
    switch (tag.kind) {
        case SummandKind::trivial: {
            std::vector<Matrix> a;
            for (int i = 0; i < g.r; ++i) a.push_back(Matrix::identity(field, 1));
            return a;
        }
        case SummandKind::free_module:
            return make_permutation(Subgroup::trivial(g), field).action;
        case SummandKind::permutation:
            if (!tag.subgroup) throw Error("tag: permutation tag without a subgroup");
            if (tag.subgroup->group() != g) throw Error("tag: subgroup over the wrong group");
            return make_permutation(*tag.subgroup, field).action;
    }
    throw Error("tag: unknown summand kind");
}

int canonical_block_dim(const SummandTag& tag, const ElemAbGroup& g) {
    switch (tag.kind) {
        case SummandKind::trivial: return 1;
        case SummandKind::free_module: return static_cast<int>(g.order());
        case SummandKind::permutation:
            if (!tag.subgroup) throw Error("tag: permutation tag without a subgroup");
            return static_cast<int>(tag.subgroup->index());
    }
    throw Error("tag: unknown summand kind");
}

} // namespace

const char* kind_name(SummandKind k) {
    switch (k) {
        case SummandKind::trivial: return "trivial";
        case SummandKind::free_module: return "free";
        case SummandKind::permutation: return "permutation";
    }
    return "?";
}

bool SummandTag::operator==(const SummandTag& o) const {
    if (kind != o.kind || multiplicity != o.multiplicity || begin != o.begin || end != o.end)
        return false;
    if (subgroup.has_value() != o.subgroup.has_value()) return false;
    return !subgroup || *subgroup == *o.subgroup;
}

GModule make_trivial(const ElemAbGroup& g, const FieldPtr& field, int multiplicity) {
    if (multiplicity < 0) throw Error("make_trivial: negative multiplicity");
    GModule m{g, field, multiplicity, {}, std::vector<SummandTag>{}};
    for (int i = 0; i < g.r; ++i) m.action.push_back(Matrix::identity(field, multiplicity));
    if (multiplicity > 0)
        m.tags->push_back({SummandKind::trivial, std::nullopt, multiplicity, 0, multiplicity});
    check_module_context(m, "make_trivial");
    return m;
}

GModule make_free(const ElemAbGroup& g, const FieldPtr& field, int multiplicity) {
    if (multiplicity < 0) throw Error("make_free: negative multiplicity");
    const GModule regular = make_permutation(Subgroup::trivial(g), field);
    const int n = regular.dim;
    GModule m{g, field, multiplicity * n, {}, std::vector<SummandTag>{}};
    for (int i = 0; i < g.r; ++i) {
        Matrix a(field, m.dim, m.dim);
        for (int c = 0; c < multiplicity; ++c) a.paste(c * n, c * n, regular.action[i]);
        m.action.push_back(std::move(a));
    }
    if (multiplicity > 0)
        m.tags->push_back({SummandKind::free_module, std::nullopt, multiplicity, 0, m.dim});
    return m;
}

GModule make_permutation(const Subgroup& e, const FieldPtr& field) {
    const ElemAbGroup g = e.group();
    if (!field || field->p() != g.p)
        throw Error("make_permutation: field characteristic must equal the group prime");
    const auto reps = coset_reps(e);
    const int n = static_cast<int>(reps.size());

    // map every vector code to the index of its coset representative
    const long long order = g.order();
    std::vector<int> rep_index(static_cast<std::size_t>(order), -1);
    const auto elts = e.elements();
    for (int a = 0; a < n; ++a)
        for (const auto& s : elts)
            rep_index[static_cast<std::size_t>(vec_code(g, vec_add(g, reps[a], s)))] = a;

    GModule m{g, field, n, {}, std::vector<SummandTag>{}};
    for (int i = 0; i < g.r; ++i) {
        Matrix a(field, n, n);
        VecFp gen(g.r, 0);
        gen[i] = 1;
        for (int col = 0; col < n; ++col) {
            const int row = rep_index[static_cast<std::size_t>(vec_code(g, vec_add(g, reps[col], gen)))];
            a.set(row, col, field->one());
        }
        m.action.push_back(std::move(a));
    }
    if (e.rank() == g.r)
        m.tags->push_back({SummandKind::trivial, std::nullopt, 1, 0, n});
    else if (e.rank() == 0)
        m.tags->push_back({SummandKind::free_module, std::nullopt, 1, 0, n});
    else
        m.tags->push_back({SummandKind::permutation, e, 1, 0, n});
    return m;
}

GModule direct_sum(const std::vector<GModule>& modules) {
    if (modules.empty()) throw Error("direct_sum: empty list (use make_trivial(g, f, 0) for zero)");
    const ElemAbGroup g = modules[0].group;
    const FieldPtr field = modules[0].field;
    int dim = 0;
    bool all_tagged = true;
    for (const auto& m : modules) {
        if (m.group != g) throw Error("direct_sum: mixed groups");
        check_same_field(field, m.field);
        dim += m.dim;
        all_tagged = all_tagged && m.tags.has_value();
    }
    GModule out{g, field, dim, {}, std::nullopt};
    for (int i = 0; i < g.r; ++i) {
        Matrix a(field, dim, dim);
        int off = 0;
        for (const auto& m : modules) {
            a.paste(off, off, m.action[i]);
            off += m.dim;
        }
        out.action.push_back(std::move(a));
    }
    if (all_tagged) {
        std::vector<SummandTag> tags;
        int off = 0;
        for (const auto& m : modules) {
            for (const auto& t : *m.tags) {
                SummandTag shifted = t;
                shifted.begin += off;
                shifted.end += off;
                tags.push_back(std::move(shifted));
            }
            off += m.dim;
        }
        out.tags = std::move(tags);
    }
    return out;
}

void validate_module(const GModule& m) {
    check_module_context(m, "module");
    for (int i = 0; i < m.group.r; ++i) {
        const Matrix& a = m.action[i];
        if (a.rows() != m.dim || a.cols() != m.dim)
            throw Error("module: action matrix " + std::to_string(i) + " has the wrong shape");
        check_same_field(m.field, a.field());
    }
    for (int i = 0; i < m.group.r; ++i)
        for (int j = i + 1; j < m.group.r; ++j)
            if (m.action[i] * m.action[j] != m.action[j] * m.action[i])
                throw Error("module: generators " + std::to_string(i) + " and " + std::to_string(j) +
                            " do not commute");
    const Matrix id = Matrix::identity(m.field, m.dim);
    for (int i = 0; i < m.group.r; ++i) {
        if (!(m.action[i] - id).pow(m.group.p).is_zero())
            throw Error("module: generator " + std::to_string(i) +
                        " is not unipotent of exponent p");
    }
    if (!m.tags) return;

    int expected_begin = 0;
    for (std::size_t k = 0; k < m.tags->size(); ++k) {
        const SummandTag& t = (*m.tags)[k];
        if (t.begin != expected_begin || t.end < t.begin)
            throw Error("module: tag ranges must partition [0, dim) in order");
        if (t.multiplicity < 0) throw Error("module: negative tag multiplicity");
        const int block = canonical_block_dim(t, m.group);
        if (t.end - t.begin != t.multiplicity * block)
            throw Error("module: tag " + std::to_string(k) + " range does not match multiplicity x summand dimension");
        expected_begin = t.end;
    }
    if (expected_begin != m.dim)
        throw Error("module: tag ranges must cover [0, dim)");

    // off-block entries must vanish, diagonal blocks must match canonical actions
    for (int i = 0; i < m.group.r; ++i) {
        const Matrix& a = m.action[i];
        for (const auto& t : *m.tags) {
            for (int row = t.begin; row < t.end; ++row)
                for (int col = 0; col < m.dim; ++col) {
                    const bool inside = col >= t.begin && col < t.end;
                    if (!inside && a.at(row, col) != 0)
                        throw Error("module: tagged summand is not an invariant block");
                }
        }
    }
    for (const auto& t : *m.tags) {
        if (t.multiplicity == 0) continue;
        const auto canon = canonical_block_actions(t, m.group, m.field);
        const int block = canonical_block_dim(t, m.group);
        for (int i = 0; i < m.group.r; ++i) {
            for (int c = 0; c < t.multiplicity; ++c) {
                const Matrix sub = m.action[i].submatrix(t.begin + c * block, t.begin + c * block,
                                                         block, block);
                if (sub != canon[i])
                    throw Error(std::string("module: tag '") + kind_name(t.kind) +
                                "' does not match the canonical action matrices");
            }
        }
    }
}

bool same_module(const GModule& a, const GModule& b) {
    if (a.group != b.group || a.dim != b.dim) return false;
    if (!a.field || !b.field || !a.field->same(*b.field)) return false;
    for (int i = 0; i < a.group.r; ++i)
        if (a.action[i] != b.action[i]) return false;
    return true;
}

Matrix element_action(const GModule& m, const VecFp& v) {
    if (static_cast<int>(v.size()) != m.group.r)
        throw Error("element_action: vector length mismatch");
    Matrix result = Matrix::identity(m.field, m.dim);
    for (int i = 0; i < m.group.r; ++i) {
        const int c = ((v[i] % m.group.p) + m.group.p) % m.group.p;
        if (c > 0) result = result * m.action[i].pow(c);
    }
    return result;
}

std::vector<Matrix> hom_space(const GModule& source, const GModule& target) {
    if (source.group != target.group) throw Error("hom_space: group mismatch");
    check_same_field(source.field, target.field);
    const int mdim = source.dim, ndim = target.dim;
    const int unknowns = ndim * mdim;
    const int r = source.group.r;
    const FieldPtr field = source.field;
    const Field& F = *field;

    // Constraint rows of (X A_g - B_g X) = 0, unknowns vectorized row-major.
    Matrix sys(field, r * unknowns, unknowns);
    for (int g = 0; g < r; ++g) {
        const Matrix& A = source.action[g];
        const Matrix& B = target.action[g];
        for (int i = 0; i < ndim; ++i)
            for (int j = 0; j < mdim; ++j) {
                const int row = g * unknowns + i * mdim + j;
                for (int b = 0; b < mdim; ++b) {
                    const int col = i * mdim + b;
                    sys.set(row, col, F.add(sys.at(row, col), A.at(b, j)));
                }
                for (int a = 0; a < ndim; ++a) {
                    const int col = a * mdim + j;
                    sys.set(row, col, F.sub(sys.at(row, col), B.at(i, a)));
                }
            }
    }
    const Matrix basis = sys.kernel_basis();
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(basis.rows()));
    for (int k = 0; k < basis.rows(); ++k) {
        Matrix x(field, ndim, mdim);
        for (int i = 0; i < ndim; ++i)
            for (int j = 0; j < mdim; ++j) x.set(i, j, basis.at(k, i * mdim + j));
        out.push_back(std::move(x));
    }
    return out;
}

Matrix fixed_points(const GModule& m) {
    if (m.group.r == 0) return Matrix::identity(m.field, m.dim);
    const Matrix id = Matrix::identity(m.field, m.dim);
    Matrix stacked(m.field, 0, m.dim);
    for (int i = 0; i < m.group.r; ++i) stacked = vstack(stacked, m.action[i] - id);
    return stacked.kernel_basis();
}

Matrix radical(const GModule& m) {
    const Matrix id = Matrix::identity(m.field, m.dim);
    Matrix stacked(m.field, 0, m.dim);
    for (int i = 0; i < m.group.r; ++i)
        stacked = vstack(stacked, (m.action[i] - id).transpose());
    return stacked.row_space_basis();
}

GModule restrict_to(const GModule& m, const Subgroup& h) {
    if (h.group() != m.group) throw Error("restrict_to: subgroup of a different group");
    GModule out{{m.group.p, h.rank()}, m.field, m.dim, {}, std::nullopt};
    for (int i = 0; i < h.rank(); ++i) out.action.push_back(element_action(m, h.basis_row(i)));
    if (m.tags) {
        const bool all_trivial = std::all_of(m.tags->begin(), m.tags->end(), [](const SummandTag& t) {
            return t.kind == SummandKind::trivial;
        });
        if (all_trivial) out.tags = m.tags;
    }
    return out;
}

GModule induce(const GModule& m, const Matrix& embedding) {
    if (!embedding.field() || embedding.field()->p() != m.group.p || embedding.field()->e() != 1)
        throw Error("induce: embedding must be over the prime field F_p");
    if (embedding.rows() != m.group.r)
        throw Error("induce: embedding must have one row per generator of the subgroup");
    if (embedding.rank() != embedding.rows())
        throw Error("induce: embedding rows must be independent");
    const ElemAbGroup big{m.group.p, embedding.cols()};
    validate_group(big);

    std::vector<VecFp> emb_rows;
    for (int i = 0; i < embedding.rows(); ++i) {
        VecFp v(big.r, 0);
        for (int j = 0; j < big.r; ++j) v[j] = embedding.at(i, j);
        emb_rows.push_back(std::move(v));
    }
    const Subgroup h = Subgroup::from_generators(big, emb_rows);
    const auto reps = coset_reps(h);
    const int n_cosets = static_cast<int>(reps.size());

    std::vector<int> rep_index(static_cast<std::size_t>(big.order()), -1);
    const auto elts = h.elements();
    for (int a = 0; a < n_cosets; ++a)
        for (const auto& s : elts)
            rep_index[static_cast<std::size_t>(vec_code(big, vec_add(big, reps[a], s)))] = a;

    GModule out{big, m.field, n_cosets * m.dim, {}, std::nullopt};
    const Matrix emb_t = embedding.transpose();
    for (int i = 0; i < big.r; ++i) {
        Matrix a(m.field, out.dim, out.dim);
        VecFp gen(big.r, 0);
        gen[i] = 1;
        for (int c = 0; c < n_cosets; ++c) {
            const VecFp w = vec_add(big, reps[c], gen);
            const int c2 = rep_index[static_cast<std::size_t>(vec_code(big, w))];
            const VecFp carry = vec_sub(big, w, reps[c2]);
            // carry lies in the embedded subgroup; express it in the ordered basis
            Matrix rhs(embedding.field(), big.r, 1);
            for (int j = 0; j < big.r; ++j) rhs.set(j, 0, embedding.field()->from_int(carry[j]));
            const auto coords = emb_t.solve(rhs);
            if (!coords) throw Error("induce: internal coset carry failure");
            VecFp t(m.group.r, 0);
            for (int j = 0; j < m.group.r; ++j) t[j] = coords->at(j, 0);
            a.paste(c2 * m.dim, c * m.dim, element_action(m, t));
        }
        out.action.push_back(std::move(a));
    }

    if (m.tags) {
        if (m.dim == 0) {
            out.tags = std::vector<SummandTag>{};
        } else if (m.dim == 1 && m.tags->size() == 1 &&
                   (*m.tags)[0].kind == SummandKind::trivial) {
            std::vector<SummandTag> tags;
            if (h.rank() == big.r)
                tags.push_back({SummandKind::trivial, std::nullopt, 1, 0, out.dim});
            else if (h.rank() == 0)
                tags.push_back({SummandKind::free_module, std::nullopt, 1, 0, out.dim});
            else
                tags.push_back({SummandKind::permutation, h, 1, 0, out.dim});
            out.tags = std::move(tags);
        }
    }
    return out;
}

Matrix induce_map(const Matrix& f, int copies) {
    if (copies < 0) throw Error("induce_map: negative coset count");
    std::vector<Matrix> blocks(static_cast<std::size_t>(copies), f);
    if (copies == 0) return Matrix(f.field(), 0, 0);
    return block_diag(blocks);
}

GModule inflate(const GModule& m, const Matrix& quotient_map) {
    if (!quotient_map.field() || quotient_map.field()->p() != m.group.p ||
        quotient_map.field()->e() != 1)
        throw Error("inflate: quotient map must be over the prime field F_p");
    if (quotient_map.cols() != m.group.r)
        throw Error("inflate: quotient map must have one column per generator of the quotient");
    if (quotient_map.rank() != m.group.r)
        throw Error("inflate: quotient map must be surjective");
    const ElemAbGroup big{m.group.p, quotient_map.rows()};
    validate_group(big);
    GModule out{big, m.field, m.dim, {}, std::nullopt};
    for (int i = 0; i < big.r; ++i) {
        VecFp image(m.group.r, 0);
        for (int j = 0; j < m.group.r; ++j) image[j] = quotient_map.at(i, j);
        out.action.push_back(element_action(m, image));
    }
    if (m.tags) {
        const bool all_trivial = std::all_of(m.tags->begin(), m.tags->end(), [](const SummandTag& t) {
            return t.kind == SummandKind::trivial;
        });
        if (all_trivial) out.tags = m.tags;
    }
    return out;
}

void validate_map(const EquivariantMap& f) {
    if (f.source.group != f.target.group) throw Error("map: group mismatch");
    check_same_field(f.source.field, f.target.field);
    check_same_field(f.source.field, f.matrix.field());
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim)
        throw Error("map: matrix shape must be target.dim x source.dim");
    for (int i = 0; i < f.source.group.r; ++i)
        if (f.matrix * f.source.action[i] != f.target.action[i] * f.matrix)
            throw Error("map: not equivariant for generator " + std::to_string(i));
}

} // namespace permcx
