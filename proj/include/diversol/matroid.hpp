#ifndef DIVERSOL_MATROID_HPP
#define DIVERSOL_MATROID_HPP

#include <memory>
#include <string>
#include <vector>

#include "diversol/errors.hpp"
#include "diversol/linalg_mod_p.hpp"
#include "diversol/sets.hpp"

namespace diversol {

// Independence oracle over a fixed ground set. Concrete matroids use dense
// ids 0..n-1; views (duals, minors) keep the base ids and shrink the ground
// set, so an element keeps its identity through any chain of views.
//
// Oracles are immutable after construction; every query is a pure function.
class Matroid {
public:
    virtual ~Matroid() = default;

    const ElemSet& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }

    // Independence query. `a` must be a canonical set within the ground set.
    bool is_independent(const ElemSet& a) const;

    // rank(A): greedy augmentation in ascending id order, O(|A|) queries.
    int rank(const ElemSet& a) const;
    int rank() const { return rank(ground_); }

    // corank(A) = |A| - rank(M) + rank(E \ A); equals the rank of A in the dual.
    int corank(const ElemSet& a) const;
    int corank() const { return corank(ground_); }

    bool is_coindependent(const ElemSet& a) const { return corank(a) == static_cast<int>(a.size()); }

    // cl(A) = {x : rank(A + x) = rank(A)}.
    ElemSet closure(const ElemSet& a) const;

    bool is_basis(const ElemSet& a) const {
        return static_cast<int>(a.size()) == rank() && is_independent(a);
    }

    // Maximal independent subset of `a`, greedy in ascending id order.
    ElemSet max_independent_subset(const ElemSet& a) const;

    // Basis containing independent X and avoiding coindependent Y (X, Y
    // disjoint). Such a basis always exists; precondition violations are
    // caller bugs and raise ContractError.
    ElemSet extend_to_basis(const ElemSet& x, const ElemSet& y) const;

protected:
    explicit Matroid(ElemSet ground) : ground_(std::move(ground)) {}

    virtual bool indep_impl(const ElemSet& a) const = 0;

    ElemSet ground_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// U_n^r: independent iff |A| <= r.
class UniformMatroid final : public Matroid {
public:
    UniformMatroid(int n, int r);
    int r() const { return r_; }

protected:
    bool indep_impl(const ElemSet& a) const override {
        return static_cast<int>(a.size()) <= r_;
    }

private:
    int r_;
};

// Cycle matroid of an undirected multigraph; element ids are edge indices,
// independence is acyclicity.
class GraphicMatroid final : public Matroid {
public:
    GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

protected:
    bool indep_impl(const ElemSet& a) const override;

private:
    int num_vertices_;
    std::vector<std::pair<int, int>> edges_;
};

// Column matroid of a matrix over GF(p).
class LinearMatroid final : public Matroid {
public:
    explicit LinearMatroid(ModMatrix m);

    const ModMatrix& matrix() const { return m_; }

protected:
    bool indep_impl(const ElemSet& a) const override { return m_.columns_independent(a); }

private:
    ModMatrix m_;
};

// Dual view: A independent in M* iff E \ A spans M. Lazy; one query costs
// O(|E|) base queries.
class DualView final : public Matroid {
public:
    explicit DualView(MatroidPtr base);

    const MatroidPtr& base() const { return base_; }

protected:
    bool indep_impl(const ElemSet& a) const override;

private:
    MatroidPtr base_;
    int base_rank_;
};

// Deletion/contraction view (M - deleted) / contracted over a base oracle.
// A query for A answers base.is_independent(I_C + A) where I_C is a fixed
// maximal independent subset of the contracted set.
class MinorView final : public Matroid {
public:
    MinorView(MatroidPtr base, ElemSet deleted, ElemSet contracted);

    const MatroidPtr& base() const { return base_; }
    const ElemSet& deleted() const { return deleted_; }
    const ElemSet& contracted() const { return contracted_; }

protected:
    bool indep_impl(const ElemSet& a) const override;

private:
    MatroidPtr base_;
    ElemSet deleted_;
    ElemSet contracted_;
    ElemSet contracted_basis_;
};

MatroidPtr make_uniform(int n, int r);
MatroidPtr make_graphic(int num_vertices, std::vector<std::pair<int, int>> edges);
MatroidPtr make_linear(ModMatrix m);
MatroidPtr make_dual(MatroidPtr m);

// Minor constructors flatten stacked MinorViews onto the common base, so the
// recursive algorithms stay O(1) queries deep.
MatroidPtr make_deleted(MatroidPtr m, const ElemSet& x);
MatroidPtr make_contracted(MatroidPtr m, const ElemSet& x);
MatroidPtr make_minor(MatroidPtr m, const ElemSet& deleted, const ElemSet& contracted);

// Exhaustive axiom verification for small ground sets.
enum class AxiomMode { Independence, Basis, Closure };

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> violations;
    long long checks = 0;
};

AxiomReport check_axioms(const Matroid& m, AxiomMode mode, int exhaustive_bound = 12);

}  // namespace diversol

#endif
