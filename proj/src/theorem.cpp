#include "hda/theorem.hpp"

#include <stdexcept>

namespace hda {

Permutation theta_of_cube(const Hda& B, const LabelRelation& ltimes, std::size_t dim, CubeIndex b)
{
    if (dim <= 1) {
        return Permutation::identity(dim);
    }
    if (!is_acyclic(ltimes)) {
        throw HypothesisError("relation not acyclic");
    }
    const int n = static_cast<int>(dim);
    std::vector<LabelIndex> label(dim);
    for (int i = 1; i <= n; ++i) {
        label[static_cast<std::size_t>(i - 1)] = B.label(starting_edge(B.cells, dim, b, i));
    }
    // An acyclic tournament is a total order; the rank of an edge is the
    // number of labels preceding its own.
    std::vector<int> images(dim, 0);
    for (std::size_t p = 0; p < dim; ++p) {
        std::size_t rank = 0;
        for (std::size_t q = 0; q < dim; ++q) {
            if (p == q) {
                continue;
            }
            const bool before = ltimes.contains(label[q], label[p]);
            const bool after = ltimes.contains(label[p], label[q]);
            if (before == after) {
                throw HypothesisError("starting edges " + std::to_string(p + 1) + " and " + std::to_string(q + 1)
                                      + " of cube " + B.cells.describe(dim, b) + " carry unrelated labels '"
                                      + B.alphabet.label(label[p]) + "' and '" + B.alphabet.label(label[q]) + "'");
            }
            rank += before ? 1 : 0;
        }
        images[rank] = static_cast<int>(p) + 1;
    }
    return Permutation(std::move(images));
}

GradedMap skeleton_identity(const Hda& B, const Hda& Q)
{
    GradedMap low;
    for (std::size_t d = 0; d <= 1; ++d) {
        if (B.cells.size(d) != Q.cells.size(d)) {
            throw std::invalid_argument("1-skeleta differ in dimension " + std::to_string(d));
        }
        low.images.emplace_back(B.cells.size(d));
        for (std::size_t x = 0; x < B.cells.size(d); ++x) {
            low.images[d][x] = static_cast<CubeIndex>(x);
        }
    }
    return low;
}

GradedMap phi_map(const Hda& B, const Hda& Q, const LabelRelation& ltimes, const GradedMap& low)
{
    GradedMap phi;
    for (std::size_t d = 0; d <= 1 && d < low.images.size(); ++d) {
        phi.images.push_back(low.images[d]);
    }
    const FamilyIndex index(Q.cells);
    for (int d = 2; d <= B.cells.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        phi.images.emplace_back(B.cells.size(dim), kNoCube);
        for (std::size_t x = 0; x < B.cells.size(dim); ++x) {
            const auto b = static_cast<CubeIndex>(x);
            const auto theta = theta_of_cube(B, ltimes, dim, b);
            BoundaryFamily family{dim, std::vector<CubeIndex>(2 * dim)};
            for (int k = 0; k <= 1; ++k) {
                for (int i = 1; i <= d; ++i) {
                    family.entries[static_cast<std::size_t>(k) * dim + static_cast<std::size_t>(i - 1)]
                        = phi(dim - 1, B.cells.face_unchecked(dim, b, k, theta(i)));
                }
            }
            try {
                phi.images[dim][x] = unique_cube_for_family(index, Q.cells, family);
            } catch (const FamilyLookupError& e) {
                throw FamilyLookupError("phi(" + B.cells.describe(dim, b) + "): " + e.what());
            }
        }
    }
    return phi;
}

GradedMap phi_map(const Hda& B, const Hda& Q, const LabelRelation& ltimes)
{
    return phi_map(B, Q, ltimes, skeleton_identity(B, Q));
}

namespace {

GradedMap pair_with_theta(const Hda& A, const LabelRelation& ltimes, const GradedMap& phi,
                          const SymmetricLayout& layout)
{
    GradedMap iso;
    for (int d = 0; d <= A.cells.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        iso.images.emplace_back(A.cells.size(dim));
        for (std::size_t x = 0; x < A.cells.size(dim); ++x) {
            const auto b = static_cast<CubeIndex>(x);
            iso.images[dim][x] = layout.index_of(SymCube{theta_of_cube(A, ltimes, dim, b), phi(dim, b)});
        }
    }
    return iso;
}

} // namespace

GradedMap iso_to_free_symmetric(const Hda& A, const Hda& Q, const LabelRelation& ltimes,
                                const SymmetricLayout& layout)
{
    return pair_with_theta(A, ltimes, phi_map(A, Q, ltimes), layout);
}

Report check_theta_on_free(const FreeSymmetricHda& SQ, const LabelRelation& ltimes)
{
    Report report;
    const auto& P = SQ.hda.cells;
    for (int d = 0; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const auto c = SQ.layout.cube(dim, static_cast<CubeIndex>(x));
            const auto theta = theta_of_cube(SQ.hda, ltimes, dim, static_cast<CubeIndex>(x));
            if (theta != c.perm) {
                report.add("theta-free", "theta" + P.describe(dim, static_cast<CubeIndex>(x)) + " = "
                                             + theta.to_string());
            }
        }
    }
    return report;
}

Report check_theta_morphism(const Hda& B, const LabelRelation& ltimes)
{
    Report report;
    const auto& P = B.cells;
    for (int d = 1; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const auto b = static_cast<CubeIndex>(x);
            const auto theta = theta_of_cube(B, ltimes, dim, b);
            for (int k = 0; k <= 1; ++k) {
                for (int i = 1; i <= d; ++i) {
                    const auto face = P.face_unchecked(dim, b, k, i);
                    const auto lhs = theta_of_cube(B, ltimes, dim - 1, face);
                    const auto rhs = perm_face(theta, i);
                    if (lhs != rhs) {
                        report.add("theta-morphism", "theta(d^" + std::to_string(k) + "_" + std::to_string(i)
                                                         + P.describe(dim, b) + ") = " + lhs.to_string()
                                                         + " but d_" + std::to_string(i) + " theta = "
                                                         + rhs.to_string());
                    }
                }
            }
        }
    }
    return report;
}

Report check_phi_compatibility(const Hda& B, const Hda& Q, const LabelRelation& ltimes, const GradedMap& phi)
{
    Report report;
    const auto& P = B.cells;
    for (int d = 1; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const auto b = static_cast<CubeIndex>(x);
            const auto theta = theta_of_cube(B, ltimes, dim, b);
            for (int k = 0; k <= 1; ++k) {
                for (int i = 1; i <= d; ++i) {
                    const auto lhs = Q.cells.face(dim, phi(dim, b), k, i);
                    const auto rhs = phi(dim - 1, P.face_unchecked(dim, b, k, theta(i)));
                    if (lhs != rhs) {
                        report.add("phi-compatibility", "d^" + std::to_string(k) + "_" + std::to_string(i)
                                                            + " phi" + P.describe(dim, b) + " = "
                                                            + Q.cells.describe(dim - 1, lhs) + " but phi(d^"
                                                            + std::to_string(k) + "_" + std::to_string(theta(i))
                                                            + ") = " + Q.cells.describe(dim - 1, rhs));
                    }
                }
            }
        }
    }
    return report;
}

Report check_sign_identity(const FreeSymmetricHda& SQ, const Hda& Q)
{
    Report report;
    const auto& P = SQ.hda.cells;
    for (int d = 0; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const auto c = SQ.layout.cube(dim, static_cast<CubeIndex>(x));
            const auto lhs = label_chain(SQ.hda, dim, static_cast<CubeIndex>(x));
            const auto rhs = Integer(sign(c.perm)) * label_chain(Q, dim, c.base);
            if (!(lhs == rhs)) {
                report.add("sign-identity", "l" + P.describe(dim, static_cast<CubeIndex>(x)) + " = "
                                                + lhs.to_string(Q.alphabet) + " but sign * l(x) = "
                                                + rhs.to_string(Q.alphabet));
            }
        }
    }
    return report;
}

namespace {

std::string render_sizes(const std::string& name, const std::vector<std::size_t>& sizes)
{
    std::string out = name + ":";
    for (std::size_t n = 0; n < sizes.size(); ++n) {
        out += " " + name + "_" + std::to_string(n) + "=" + std::to_string(sizes[n]);
    }
    return out + "\n";
}

std::string verdict(bool ok)
{
    return ok ? "ok" : "FAILED";
}

} // namespace

std::string TheoremReport::to_string() const
{
    std::string out;
    out += render_sizes("Q", sizes_q);
    out += render_sizes("A", sizes_a);
    out += render_sizes("SQ", sizes_sq);
    out += "SQ is an HDA model of ST: " + verdict(sq_model.ok()) + "\n";
    out += "A -> SQ isomorphism: " + verdict(iso_ok) + "\n";
    out += "theta/phi/sign checks: " + verdict(auxiliary.ok()) + "\n";
    out += "HL(Q):\n" + hl_q.to_string();
    out += "HL(A) = HL(Q): " + verdict(hl_equal) + "\n";
    out += "HL(SQ) = HL(Q): " + verdict(hl_sq_equal) + "\n";
    out += "theorem: " + std::string(holds() ? "holds" : "FAILS") + "\n";
    if (!witness.empty()) {
        out += "witness: " + witness + "\n";
    }
    return out;
}

TheoremReport check_main_theorem(const TransitionSystem& T, const LabelRelation& I, const LabelRelation& ltimes,
                                 Coefficients coeff, const BuildOptions& options)
{
    if (I.alphabet_size() != T.alphabet.size() || ltimes.alphabet_size() != T.alphabet.size()) {
        throw HypothesisError("relation and transition system use alphabets of different sizes");
    }
    if (!is_independence(I)) {
        throw HypothesisError("relation not an independence relation: " + I.to_string(T.alphabet));
    }
    if (!is_acyclic(ltimes)) {
        throw HypothesisError("relation not acyclic: " + ltimes.to_string(T.alphabet));
    }
    if (!(symmetric_closure(ltimes) == I)) {
        throw HypothesisError("symmetric closure of the acyclic relation is "
                              + symmetric_closure(ltimes).to_string(T.alphabet) + ", not "
                              + I.to_string(T.alphabet));
    }

    TheoremReport r;
    const Hda Q = build_hda_model(T, ltimes, options);
    const Hda A = build_hda_model(T, I, options);
    const auto SQ = free_symmetric_hda(Q);
    const auto ST = free_symmetric_hda(T);
    r.sizes_q = Q.cells.sizes();
    r.sizes_a = A.cells.sizes();
    r.sizes_sq = SQ.hda.cells.sizes();

    r.sq_model = verify_hda_model(SQ.hda, ST.hda, I);

    try {
        const auto phi = phi_map(A, Q, ltimes);
        r.auxiliary.append(check_phi_compatibility(A, Q, ltimes, phi));
        const auto check = check_hda_morphism(pair_with_theta(A, ltimes, phi, SQ.layout), A, SQ.hda);
        r.iso_ok = check.is_isomorphism();
        r.iso_violations = check.violations;
        if (check.is_morphism() && !r.iso_ok) {
            r.iso_violations.add("bijectivity", "b -> (theta_b, phi(b)) is not bijective in some dimension");
        }
    } catch (const FamilyLookupError& e) {
        r.iso_violations.add("phi", e.what());
    } catch (const std::out_of_range& e) {
        r.iso_violations.add("iso", e.what());
    }
    r.auxiliary.append(check_theta_on_free(SQ, ltimes));
    r.auxiliary.append(check_theta_morphism(A, ltimes));
    r.auxiliary.append(check_sign_identity(SQ, Q));

    r.hl_q = homology_language(Q, coeff);
    r.hl_a = homology_language(A, coeff);
    r.hl_sq = homology_language(SQ.hda, coeff);
    r.hl_equal = lattice_equal(r.hl_a, r.hl_q);
    r.hl_sq_equal = lattice_equal(r.hl_sq, r.hl_q);

    if (!r.sq_model.ok()) {
        r.witness = r.sq_model.violations().front().check + ": " + r.sq_model.violations().front().detail;
    } else if (!r.iso_ok) {
        const auto& v = r.iso_violations.violations();
        r.witness = v.empty() ? "isomorphism check failed" : v.front().check + ": " + v.front().detail;
    } else if (!r.auxiliary.ok()) {
        r.witness = r.auxiliary.violations().front().check + ": " + r.auxiliary.violations().front().detail;
    } else if (!r.hl_equal) {
        r.witness = "HL(A) differs:\n" + r.hl_a.to_string();
    } else if (!r.hl_sq_equal) {
        r.witness = "HL(SQ) differs:\n" + r.hl_sq.to_string();
    }
    return r;
}

} // namespace hda
