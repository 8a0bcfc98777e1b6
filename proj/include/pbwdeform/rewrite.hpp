#pragma once

#include "pbwdeform/pbw_check.hpp"

#include <functional>

namespace pbwdeform {

/// Word in the free algebra on {v_0..v_{m-1}} and the elements of G.
/// Letters 0..m-1 are basis vectors; letter m+k is group element k.
struct FreeTerm {
    std::vector<int> word;
    int t = 0;

    bool operator==(const FreeTerm&) const = default;
    bool operator<(const FreeTerm& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        if (word != o.word) return word < o.word;
        return t < o.t;
    }
};

/// Formal k[t]-linear combination of words.
class FreeElem {
public:
    FreeElem() = default;
    explicit FreeElem(Field f) : field_(f) {}

    static FreeElem letter(Field f, int letter, int t = 0) {
        FreeElem e(f);
        e.add_term({{letter}, t}, FieldScalar::one(f));
        return e;
    }
    static FreeElem word(Field f, std::vector<int> w, int t = 0) {
        FreeElem e(f);
        e.add_term({std::move(w), t}, FieldScalar::one(f));
        return e;
    }
    static FreeElem empty_word(Field f) { return word(f, {}); }

    Field field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<FreeTerm, FieldScalar>& terms() const { return terms_; }
    void add_term(FreeTerm tm, const FieldScalar& c);

    friend FreeElem operator+(const FreeElem& a, const FreeElem& b);
    friend FreeElem operator-(const FreeElem& a, const FreeElem& b);
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b);  // concatenation
    friend FreeElem operator*(const FieldScalar& s, const FreeElem& a);
    FreeElem operator-() const;

private:
    Field field_{};
    std::map<FreeTerm, FieldScalar> terms_;
};

/// Terminating reduction system for H_{lambda,kappa} (or its t-graded
/// version H_{lambda,kappa,t}, or a generalized-kappa variant).
/// Rules: g.h -> gh; g.v -> (^g v).g + lambda(g,v) t^{d1};
/// v_j.v_i (j>i) -> v_i.v_j + kappa(v_j,v_i) t^{d2} (+ tail terms).
class ReductionSystem {
public:
    ReductionSystem(RepPtr rep, LambdaParam lambda, KappaParam kappa,
                    int t_lambda = 0, int t_kappa = 0);
    ReductionSystem(RepPtr rep, LambdaParam lambda, GeneralKappa kappa,
                    int t_lambda = 0, int t_kappa = 0);

    const RepPtr& rep() const { return rep_; }
    Field field() const { return rep_->field(); }
    int dim() const { return rep_->dim(); }
    int t_lambda() const { return t_lambda_; }
    int t_kappa() const { return t_kappa_; }
    bool has_general_kappa() const { return gkappa_.has_value(); }
    const LambdaParam& lambda() const { return lambda_; }
    const KappaParam& kappa() const { return kappa_; }

    bool is_group_letter(int letter) const { return letter >= rep_->dim(); }
    int group_index(int letter) const { return letter - rep_->dim(); }
    int group_letter(int g) const { return rep_->dim() + g; }

    /// The right-hand side the pair (a, b) of adjacent letters rewrites to,
    /// or nullopt when the pair is already normal.
    std::optional<FreeElem> reduce_pair(int a, int b) const;

    /// Defining relations of the presented algebra, as elements of the free
    /// algebra that are zero in the quotient.
    std::vector<FreeElem> relations() const;

private:
    RepPtr rep_;
    LambdaParam lambda_;
    KappaParam kappa_;
    std::optional<GeneralKappa> gkappa_;
    int t_lambda_ = 0, t_kappa_ = 0;
};

/// Fully reduced form of x: leftmost-innermost, deterministic.  When the
/// system is confluent the result is independent of reduction order.
SkewElem normal_form(const FreeElem& x, const ReductionSystem& sys);

/// Convenience: normal form of a SkewElem product a*b computed in the free
/// algebra (each PBW monomial becomes a word).
SkewElem nf_product(const SkewElem& a, const SkewElem& b, const ReductionSystem& sys);

FreeElem to_free(const SkewElem& a, const ReductionSystem& sys);

struct Ambiguity {
    std::vector<int> word;     // the overlap word
    SkewElem difference;       // nf(one way) - nf(other way)
    bool resolves() const { return difference.is_zero(); }
};

struct AmbiguityReport {
    std::vector<Ambiguity> overlaps;
    bool confluent() const {
        for (const auto& a : overlaps)
            if (!a.resolves()) return false;
        return true;
    }
    /// First non-resolving overlap, if any.
    const Ambiguity* first_failure() const {
        for (const auto& a : overlaps)
            if (!a.resolves()) return &a;
        return nullptr;
    }
};

/// Reduce every overlap ambiguity (g h v, g v_j v_i, v_k v_j v_i) both ways;
/// the system is confluent iff all differences vanish (Diamond Lemma), and
/// confluence is exactly the PBW property.
AmbiguityReport resolve_ambiguities(const ReductionSystem& sys);

/// Dimensions of the filtered pieces F_0 <= F_1 <= ... <= F_n of the
/// presented algebra (untwisted system only).
std::vector<std::size_t> filtered_dimensions(const ReductionSystem& sys, int n);

/// Dimension of the degree-<=n filtered piece.
std::size_t graded_dimension(const ReductionSystem& sys, int n);

/// Coefficient of t^j in the *-product of t-free a and b in the t-graded
/// system; checked to be homogeneous of degree deg a + deg b - j.
SkewElem extract_mu(const ReductionSystem& sys_t, int j, const SkewElem& a, const SkewElem& b);

/// Filtered map out of a presented algebra, given by images of the basis
/// vectors and of every group element.
struct GeneratorImages {
    std::vector<FreeElem> v_images;   // one per basis vector
    std::vector<FreeElem> g_images;   // one per group element
};

/// Letter-by-letter substitution of generator images into x (letters below
/// source_dim are basis vectors, the rest group elements).
FreeElem apply_images(const FreeElem& x, const GeneratorImages& images, int source_dim);

struct HomomorphismCheck {
    bool ok = true;
    FreeElem failing_relation;
    SkewElem residual;
};

/// Substitutes the images into every source relation and reduces in the
/// target; passes iff every image reduces to zero.
HomomorphismCheck verify_homomorphism(const GeneratorImages& images,
                                      const std::vector<FreeElem>& source_relations,
                                      const ReductionSystem& target);

struct FilteredIso {
    GeneratorImages images;
};

/// All degree-respecting algebra isomorphisms source -> target, found by
/// exhausting generator images over the (finite) coefficient field:
/// f(g) ranges over kG per non-identity group element, f(v_i) over
/// V (x) kG (+) kG.  Bijectivity is tested on the filtered piece of degree
/// <= 1, with degree-2 surjectivity asserted for survivors.
std::vector<FilteredIso> find_filtered_isos(const ReductionSystem& source,
                                            const ReductionSystem& target);

struct IsoSearchHit {
    int source_index = 0;
    FilteredIso iso;
};

struct IsoSearchResult {
    std::uint64_t candidates = 0;
    std::vector<IsoSearchHit> hits;
    bool empty() const { return hits.empty(); }
};

/// Runs find_filtered_isos from each candidate source system into the target
/// and merges the survivors deterministically.
IsoSearchResult iso_search(const std::vector<ReductionSystem>& sources,
                           const ReductionSystem& target);

}  // namespace pbwdeform
