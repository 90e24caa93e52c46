//! The right ideals `𝓡_α = B_α ℚ[S_n]`, the LRM basis `β_w = B_{cLRM′(w)} · w`
//! and the spans `𝓢_α`, `𝓢′_α` built from it.
//!
//! Group algebra elements are turned into vectors of `ℚ^{n!}` through the
//! lexicographic rank of permutations, shared with [`crate::linalg`].

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compositions::{
    compositions_of, eta, partition_refines, refines, Composition, Partition,
};
use crate::error::{Error, Result};
use crate::group_algebra::{b_element, b_product_mackey, GroupAlgebraElement};
use crate::linalg::{
    span_equal, subspace_sum, unitriangular_certificate, RationalMatrix, SparseVector,
    SubspaceBasis,
};
use crate::permutations::{all_permutations, factorial, Permutation};
use crate::rational::{from_json_parts, to_json_parts, JsonInt, Rational};
use crate::report::{Case, Report};

/// How much of a large verification to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Exhaustive,
    /// At most `per_case` inputs per case, chosen by a seeded generator.
    Sampled {
        per_case: usize,
        seed: u64,
    },
}

impl Scope {
    /// Exhaustive up to `n = 4`, sampled above.
    pub fn for_size(n: usize) -> Scope {
        if n <= 4 {
            Scope::Exhaustive
        } else {
            Scope::Sampled {
                per_case: 12,
                seed: 0x00de_5ce7,
            }
        }
    }

    fn pick<T: Clone>(&self, items: &[T], case: usize) -> Vec<T> {
        match *self {
            Scope::Sampled { per_case, seed } if per_case < items.len() => {
                let mut rng = ChaCha8Rng::seed_from_u64(
                    seed ^ (case as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
                );
                let mut idx = sample(&mut rng, items.len(), per_case).into_vec();
                idx.sort_unstable();
                idx.into_iter().map(|i| items[i].clone()).collect()
            }
            _ => items.to_vec(),
        }
    }
}

fn ambient(n: usize) -> usize {
    factorial(n).expect("n is guarded")
}

/// `β_w = B_{cLRM′(w)} · w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrmBasisElement {
    pub index: Permutation,
    pub value: GroupAlgebraElement,
}

/// The family `{β_w}` in lexicographic order of `w`.
#[derive(Clone, Debug)]
pub struct LrmBasis {
    n: usize,
    elements: Vec<LrmBasisElement>,
    vectors: Vec<SparseVector>,
}

pub fn lrm_basis(n: usize) -> Result<LrmBasis> {
    let mut cache: HashMap<Composition, GroupAlgebraElement> = HashMap::new();
    let mut elements = Vec::with_capacity(ambient(n));
    for w in all_permutations(n)? {
        let c = w.clrm_prime();
        let b = cache.entry(c.clone()).or_insert_with(|| b_element(&c));
        let value = b.right_translate(&w)?;
        elements.push(LrmBasisElement { index: w, value });
    }
    let vectors = elements
        .iter()
        .map(|e| e.value.to_sparse_vector())
        .collect();
    Ok(LrmBasis {
        n,
        elements,
        vectors,
    })
}

impl LrmBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[LrmBasisElement] {
        &self.elements
    }

    pub fn vectors(&self) -> &[SparseVector] {
        &self.vectors
    }

    /// Each `β_w` is `w` plus lexicographically smaller permutations.
    pub fn certificate(&self) -> bool {
        unitriangular_certificate(&self.vectors, ambient(self.n)).expect("square family")
    }

    /// Coordinates of `a` in the basis `{β_w}` as `(lex rank of w, coefficient)`.
    ///
    /// Peels off the lexicographically largest remaining permutation, which
    /// is exactly the leading term of its basis element.
    pub fn expand(&self, a: &GroupAlgebraElement) -> Result<SparseVector> {
        if a.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: a.degree(),
            });
        }
        let mut acc = vec![Rational::zero(); ambient(self.n)];
        for (i, c) in a.to_sparse_vector() {
            acc[i] = c;
        }
        let mut out = Vec::new();
        for idx in (0..acc.len()).rev() {
            if acc[idx].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut acc[idx]);
            for (j, b) in &self.vectors[idx] {
                if *j != idx {
                    acc[*j] -= &(&c * b);
                }
            }
            out.push((idx, c));
        }
        out.reverse();
        Ok(out)
    }

    fn span_where(&self, mut keep: impl FnMut(&Permutation) -> bool) -> SubspaceBasis {
        let vectors = self
            .elements
            .iter()
            .zip(&self.vectors)
            .filter(|(e, _)| keep(&e.index))
            .map(|(_, v)| v.clone());
        SubspaceBasis::span(ambient(self.n), vectors).expect("vectors fit the ambient space")
    }

    fn check_weight(&self, alpha: &Composition) -> Result<()> {
        if alpha.weight() != self.n {
            return Err(Error::WeightMismatch {
                left: self.n,
                right: alpha.weight(),
            });
        }
        Ok(())
    }

    /// `𝓢_α`: span of the `β_w` whose class partition refines `α̃`.
    pub fn s_alpha(&self, alpha: &Composition) -> Result<SubspaceBasis> {
        self.check_weight(alpha)?;
        let target = alpha.underlying_partition();
        let mut memo: HashMap<Composition, bool> = HashMap::new();
        Ok(self.span_where(|w| {
            let c = w.clrm_prime();
            *memo.entry(c.clone()).or_insert_with(|| {
                partition_refines(&c.underlying_partition(), &target).expect("same weight")
            })
        }))
    }

    /// `𝓢′_α`: span of the `β_w` with `cLRM′(w) ⪯ α`.
    pub fn s_prime_alpha(&self, alpha: &Composition) -> Result<SubspaceBasis> {
        self.check_weight(alpha)?;
        Ok(self.span_where(|w| refines(&w.clrm_prime(), alpha).expect("same weight")))
    }
}

/// `𝓡_α`: the row space of `{B_α · δ_w : w ∈ S_n}`.
pub fn r_alpha(alpha: &Composition) -> Result<SubspaceBasis> {
    let n = alpha.weight();
    let b = b_element(alpha);
    let mut basis = SubspaceBasis::zero(ambient(n));
    let full = ambient(n);
    for w in all_permutations(n)? {
        basis.insert(b.right_translate(&w)?.to_sparse_vector())?;
        if basis.rank() == full {
            break;
        }
    }
    Ok(basis)
}

pub fn s_alpha(alpha: &Composition) -> Result<SubspaceBasis> {
    lrm_basis(alpha.weight())?.s_alpha(alpha)
}

pub fn s_prime_alpha(alpha: &Composition) -> Result<SubspaceBasis> {
    lrm_basis(alpha.weight())?.s_prime_alpha(alpha)
}

fn r_table(n: usize) -> Result<BTreeMap<Composition, SubspaceBasis>> {
    compositions_of(n)
        .into_par_iter()
        .map(|a| r_alpha(&a).map(|r| (a, r)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

fn vector_to_element(n: usize, v: &SparseVector) -> GroupAlgebraElement {
    GroupAlgebraElement::from_sparse_vector(n, v).expect("ranks are in range")
}

/// `𝐚 = Σ_α λ_α B_α ∈ Σ_n`, held by its B-coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SigmaElement {
    n: usize,
    coeffs: BTreeMap<Composition, Rational>,
}

impl SigmaElement {
    pub fn new<I>(n: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, Rational)>,
    {
        let mut acc: BTreeMap<Composition, Rational> = BTreeMap::new();
        for (alpha, c) in coeffs {
            if alpha.weight() != n {
                return Err(Error::WeightMismatch {
                    left: n,
                    right: alpha.weight(),
                });
            }
            *acc.entry(alpha).or_default() += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(SigmaElement { n, coeffs: acc })
    }

    pub fn b(alpha: &Composition) -> Self {
        Self::new(alpha.weight(), [(alpha.clone(), Rational::one())]).expect("weights agree")
    }

    /// Integer coefficients drawn uniformly from `lo..=hi` for every `α ⊨ n`.
    pub fn random<R: Rng>(n: usize, rng: &mut R, lo: i64, hi: i64) -> Self {
        let coeffs = compositions_of(n)
            .into_iter()
            .map(|a| (a, Rational::from(rng.gen_range(lo..=hi))));
        Self::new(n, coeffs).expect("weights agree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn to_group_algebra(&self) -> GroupAlgebraElement {
        self.coeffs
            .iter()
            .fold(GroupAlgebraElement::zero(self.n), |acc, (a, c)| {
                acc.add(&b_element(a).scale(c)).expect("same degree")
            })
    }

    /// `Σ_α λ_α η_β(α)`, the predicted eigenvalue on the class of `β`.
    pub fn predicted_eigenvalue(&self, beta: &Composition) -> Result<Rational> {
        let mut total = Rational::zero();
        for (alpha, c) in &self.coeffs {
            let e = eta(beta, alpha)?;
            if e != 0 {
                total += &(c * &Rational::from(e as usize));
            }
        }
        Ok(total)
    }

    pub fn to_json(&self) -> Vec<SigmaTerm> {
        self.coeffs
            .iter()
            .map(|(a, c)| {
                let (num, den) = to_json_parts(c);
                SigmaTerm {
                    alpha: a
                        .parts()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    num,
                    den,
                }
            })
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(text: &str, n: usize) -> Result<Self> {
        let raw: Vec<SigmaTerm> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = raw
            .iter()
            .map(|t| {
                Ok((
                    t.alpha.parse::<Composition>()?,
                    from_json_parts(&t.num, &t.den)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, terms)
    }
}

impl fmt::Display for SigmaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·B{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SigmaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SigmaElement(n={}, {self})", self.n)
    }
}

/// One `{alpha, num, den}` record of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaTerm {
    pub alpha: String,
    pub num: JsonInt,
    pub den: JsonInt,
}

/// Sort key placing strictly finer classes first: more parts first, then the
/// partition, then the one-line notation.
fn class_key(w: &Permutation) -> (Reverse<usize>, Vec<usize>, Permutation) {
    let p = w.clrm_prime().underlying_partition();
    (Reverse(p.len()), p.parts().to_vec(), w.clone())
}

/// `S_n` in the order used by [`left_mult_matrix`]: a linear extension of
/// strict partition refinement on the classes `cLRM′(w)~`, lexicographic
/// inside a class.
pub fn lrm_order(n: usize) -> Result<Vec<Permutation>> {
    let mut perms: Vec<Permutation> = all_permutations(n)?.collect();
    perms.sort_by_cached_key(class_key);
    Ok(perms)
}

/// `x ↦ 𝐚 · x` in the basis `{β_w}`, with diagnostics.
#[derive(Clone, Debug)]
pub struct LeftMultiplication {
    /// Row and column labels.
    pub order: Vec<Permutation>,
    /// Column `j` holds the coordinates of `𝐚 · β_{order[j]}`.
    pub matrix: RationalMatrix,
    pub triangular: bool,
    pub diagonal: Vec<Rational>,
    pub predicted: Vec<Rational>,
    /// Distinct diagonal values with multiplicities, largest first. Only
    /// available when the matrix is triangular.
    pub eigenvalues: Option<Vec<(Rational, usize)>>,
}

impl LeftMultiplication {
    pub fn diagonal_matches_prediction(&self) -> bool {
        self.diagonal == self.predicted
    }
}

pub fn left_mult_matrix(a: &SigmaElement) -> Result<LeftMultiplication> {
    left_mult_matrix_with(a, &lrm_basis(a.n())?)
}

pub fn left_mult_matrix_with(a: &SigmaElement, basis: &LrmBasis) -> Result<LeftMultiplication> {
    let n = a.n();
    if basis.n() != n {
        return Err(Error::DegreeMismatch {
            expected: basis.n(),
            found: n,
        });
    }
    let order = lrm_order(n)?;
    let size = order.len();
    let position: HashMap<usize, usize> = order
        .iter()
        .enumerate()
        .map(|(i, w)| (w.lex_rank(), i))
        .collect();
    let ga = a.to_group_algebra();
    let mut a_times_b: HashMap<Composition, GroupAlgebraElement> = HashMap::new();
    let mut matrix = RationalMatrix::zeros(size, size);
    let mut predicted = Vec::with_capacity(size);
    for (j, w) in order.iter().enumerate() {
        let c = w.clrm_prime();
        if !a_times_b.contains_key(&c) {
            a_times_b.insert(c.clone(), ga.convolve(&b_element(&c))?);
        }
        let column = basis.expand(&a_times_b[&c].right_translate(w)?)?;
        for (rank, coeff) in column {
            matrix.set(position[&rank], j, coeff);
        }
        predicted.push(a.predicted_eigenvalue(&c)?);
    }
    let triangular = matrix.is_upper_triangular();
    let diagonal = matrix.diagonal();
    let eigenvalues = triangular.then(|| {
        let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
        for d in &diagonal {
            *counts.entry(d.clone()).or_insert(0) += 1;
        }
        counts.into_iter().rev().collect()
    });
    Ok(LeftMultiplication {
        order,
        matrix,
        triangular,
        diagonal,
        predicted,
        eigenvalues,
    })
}

/// `𝓡_α = 𝓡_β` whenever `α` and `β` are anagrams.
pub fn verify_anagram_invariance(n: usize) -> Result<Report> {
    let table = r_table(n)?;
    let mut first_of_class: BTreeMap<Partition, &Composition> = BTreeMap::new();
    let mut cases = Vec::new();
    for (alpha, r) in &table {
        let rep = *first_of_class
            .entry(alpha.underlying_partition())
            .or_insert(alpha);
        let other = &table[rep];
        let equal = span_equal(r, other)?;
        let witness = (!equal).then(|| {
            format!(
                "R{alpha} has rank {}, R{rep} has rank {}, bases differ",
                r.rank(),
                other.rank()
            )
        });
        cases.push(Case::from_result(format!("R{alpha} = R{rep}"), 1, witness));
    }
    Ok(Report::new("anagram", n, cases))
}

fn inclusion_witness(n: usize, small: &SubspaceBasis, big: &SubspaceBasis) -> Option<String> {
    small
        .rows()
        .iter()
        .find(|r| !big.contains(r).expect("same ambient"))
        .map(|r| {
            format!(
                "basis vector {} is not in the larger span",
                vector_to_element(n, r)
            )
        })
}

/// `𝓡_β ⊆ 𝓡_γ` for `β ⪯ γ` and for `β̃ ⪯_π γ̃`.
pub fn verify_refinement_inclusion(n: usize) -> Result<Report> {
    let table = r_table(n)?;
    let comps: Vec<&Composition> = table.keys().collect();
    let mut pairs = Vec::new();
    for beta in &comps {
        for gamma in &comps {
            let by_comp = refines(beta, gamma)?;
            let by_part =
                partition_refines(&beta.underlying_partition(), &gamma.underlying_partition())?;
            if by_comp || by_part {
                let kind = if by_comp { "composition" } else { "partition" };
                pairs.push((*beta, *gamma, kind));
            }
        }
    }
    let cases = pairs
        .par_iter()
        .map(|(beta, gamma, kind)| {
            let witness = inclusion_witness(n, &table[*beta], &table[*gamma]);
            Case::from_result(
                format!("R{beta} ⊆ R{gamma} ({kind})"),
                table[*beta].rank() as u64,
                witness,
            )
        })
        .collect();
    Ok(Report::new("inclusion", n, cases))
}

fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|i| {
            let mut v: Vec<usize> = (1..=n).collect();
            v.swap(i - 1, i);
            Permutation::new(v).expect("transposition")
        })
        .collect()
}

/// `B_α · x ∈ 𝓡_β` and `x · s_i ∈ 𝓡_β` for basis vectors `x` of `𝓡_β`.
pub fn verify_bimodule(n: usize, scope: Scope) -> Result<Report> {
    let table = r_table(n)?;
    let comps: Vec<Composition> = table.keys().cloned().collect();
    let gens = adjacent_transpositions(n);
    let pairs: Vec<(usize, &Composition, &Composition)> = comps
        .iter()
        .flat_map(|a| comps.iter().map(move |b| (a, b)))
        .enumerate()
        .map(|(i, (a, b))| (i, a, b))
        .collect();
    let cases = pairs
        .par_iter()
        .map(|&(case, alpha, beta)| -> Result<Case> {
            let r = &table[beta];
            let ba = b_element(alpha);
            let rows = scope.pick(r.rows(), case);
            let mut checks = 0;
            for row in &rows {
                let x = vector_to_element(n, row);
                let left = ba.convolve(&x)?;
                checks += 1;
                if !r.contains(&left.to_sparse_vector())? {
                    let w = format!("x = {x}\nB{alpha}·x = {left}\nis not in R{beta}");
                    return Ok(Case::fail(format!("B{alpha}·R{beta}"), checks, w));
                }
                for s in &gens {
                    let right = x.right_translate(s)?;
                    checks += 1;
                    if !r.contains(&right.to_sparse_vector())? {
                        let w = format!("x = {x}\nx·{s} = {right}\nis not in R{beta}");
                        return Ok(Case::fail(format!("B{alpha}·R{beta}"), checks, w));
                    }
                }
            }
            Ok(Case::pass(format!("B{alpha}·R{beta}"), checks))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("bimodule", n, cases))
}

/// `Σ 𝓡_{α′}` over compositions strictly finer than `β`, and the same sum
/// over compositions whose partition is strictly finer than `β̃`.
fn finer_sums(
    beta: &Composition,
    table: &BTreeMap<Composition, SubspaceBasis>,
) -> Result<(SubspaceBasis, SubspaceBasis)> {
    let n = beta.weight();
    let bp = beta.underlying_partition();
    let mut by_comp = SubspaceBasis::zero(ambient(n));
    let mut by_part = SubspaceBasis::zero(ambient(n));
    for (alpha, r) in table {
        if alpha == beta {
            continue;
        }
        if refines(alpha, beta)? {
            by_comp = subspace_sum(&by_comp, r)?;
        }
        let ap = alpha.underlying_partition();
        if ap != bp && partition_refines(&ap, &bp)? {
            by_part = subspace_sum(&by_part, r)?;
        }
    }
    Ok((by_comp, by_part))
}

/// `B_α` acts on `𝓡_β / Σ_{α′ ≺ β} 𝓡_{α′}` as multiplication by `η_β(α)`.
pub fn verify_scalar_action(n: usize, scope: Scope) -> Result<Report> {
    let table = r_table(n)?;
    let comps: Vec<Composition> = table.keys().cloned().collect();
    let perms: Vec<Permutation> = all_permutations(n)?.collect();
    let finer: Vec<(SubspaceBasis, SubspaceBasis)> = comps
        .par_iter()
        .map(|b| finer_sums(b, &table))
        .collect::<Result<Vec<_>>>()?;

    let mut cases: Vec<Case> = comps
        .iter()
        .zip(&finer)
        .map(|(beta, (fc, fp))| {
            let equal = span_equal(fc, fp).expect("same ambient");
            let witness = (!equal).then(|| format!("ranks {} and {}", fc.rank(), fp.rank()));
            Case::from_result(
                format!("F{beta}: composition and partition index sets agree"),
                1,
                witness,
            )
        })
        .collect();

    let pairs: Vec<(usize, usize, usize)> = (0..comps.len())
        .flat_map(|a| (0..comps.len()).map(move |b| (a, b)))
        .enumerate()
        .map(|(i, (a, b))| (i, a, b))
        .collect();
    let action_cases = pairs
        .par_iter()
        .map(|&(case, ai, bi)| -> Result<Case> {
            let (alpha, beta) = (&comps[ai], &comps[bi]);
            let f = &finer[bi].0;
            let e = Rational::from(eta(beta, alpha)? as usize);
            let ba = b_element(alpha);
            let bb = b_element(beta);
            let label = format!("B{alpha} on R{beta}/F: η = {e}");
            let ws = scope.pick(&perms, case);
            for (k, w) in ws.iter().enumerate() {
                let x = bb.right_translate(w)?;
                let lhs = ba.convolve(&x)?;
                let residual = lhs.sub(&x.scale(&e))?;
                if !f.contains(&residual.to_sparse_vector())? {
                    let wit = format!(
                        "w = {w}\nB{alpha}·B{beta}·w = {lhs}\nη·B{beta}·w = {}\nresidual not in F",
                        x.scale(&e)
                    );
                    return Ok(Case::fail(label, k as u64 + 1, wit));
                }
            }
            Ok(Case::pass(label, ws.len() as u64))
        })
        .collect::<Result<Vec<_>>>()?;
    cases.extend(action_cases);
    Ok(Report::new("scalar-action", n, cases))
}

/// `𝓢_α = 𝓡_α` for every `α ⊨ n`; also checks `𝓢′_α ⊆ 𝓢_α`.
pub fn verify_filtration_equality(n: usize) -> Result<Report> {
    let basis = lrm_basis(n)?;
    let cases = compositions_of(n)
        .par_iter()
        .map(|alpha| -> Result<Case> {
            let s = basis.s_alpha(alpha)?;
            let r = r_alpha(alpha)?;
            let sp = basis.s_prime_alpha(alpha)?;
            let label = format!("S{alpha} = R{alpha}, dim {}", r.rank());
            if !span_equal(&s, &r)? {
                let wit = format!("dim S = {}, dim R = {}", s.rank(), r.rank());
                return Ok(Case::fail(label, 2, wit));
            }
            let wit = inclusion_witness(n, &sp, &s).map(|w| format!("S'{alpha} ⊄ S{alpha}: {w}"));
            Ok(Case::from_result(label, 2, wit))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("filtration", n, cases))
}

/// B-coordinates of `B_β B_δ` in `Σ_n`, indexed by position in [`compositions_of`].
fn sigma_product_coords(
    beta: &Composition,
    delta: &Composition,
    index: &HashMap<Composition, usize>,
) -> Result<SparseVector> {
    let mut v: Vec<(usize, Rational)> = b_product_mackey(beta, delta)?
        .into_iter()
        .map(|(c, m)| (index[&c], Rational::from(m as usize)))
        .collect();
    v.sort_by_key(|(i, _)| *i);
    Ok(v)
}

/// For `β̃ ⪯_π γ̃`: `B_β Σ_n ⊆ B_γ Σ_n` inside `Σ_n`.
pub fn verify_sigma_inclusion(n: usize) -> Result<Report> {
    let comps = compositions_of(n);
    let dim = comps.len();
    let index: HashMap<Composition, usize> = comps
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let spans: Vec<SubspaceBasis> = comps
        .par_iter()
        .map(|g| {
            let vs = comps
                .iter()
                .map(|d| sigma_product_coords(g, d, &index))
                .collect::<Result<Vec<_>>>()?;
            SubspaceBasis::span(dim, vs)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for (bi, beta) in comps.iter().enumerate() {
        for (gi, gamma) in comps.iter().enumerate() {
            if partition_refines(&beta.underlying_partition(), &gamma.underlying_partition())? {
                pairs.push((bi, gi));
            }
        }
    }
    let cases = pairs
        .par_iter()
        .map(|&(bi, gi)| -> Result<Case> {
            let (beta, gamma) = (&comps[bi], &comps[gi]);
            let label = format!("B{beta}Σ ⊆ B{gamma}Σ");
            for (k, delta) in comps.iter().enumerate() {
                let v = sigma_product_coords(beta, delta, &index)?;
                if !spans[gi].contains(&v)? {
                    let terms: Vec<String> = v
                        .iter()
                        .map(|(i, c)| format!("{c}·B{}", comps[*i]))
                        .collect();
                    let wit = format!(
                        "B{beta}·B{delta} = {} is not in B{gamma}Σ",
                        terms.join(" + ")
                    );
                    return Ok(Case::fail(label, k as u64 + 1, wit));
                }
            }
            Ok(Case::pass(label, dim as u64))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("sigma-inclusion", n, cases))
}

/// `B_α β_w − η_{cLRM′(w)}(α) β_w` expands only in `β_u` whose class
/// partition is strictly finer than that of `w`.
pub fn verify_block_scalar(n: usize) -> Result<Report> {
    let basis = lrm_basis(n)?;
    let parts: Vec<Partition> = basis
        .elements()
        .iter()
        .map(|e| e.index.clrm_prime().underlying_partition())
        .collect();
    let cases = compositions_of(n)
        .par_iter()
        .map(|alpha| -> Result<Case> {
            let ba = b_element(alpha);
            let label = format!("B{alpha} on the LRM basis");
            let mut strictly_finer: HashMap<(usize, usize), bool> = HashMap::new();
            for (k, e) in basis.elements().iter().enumerate() {
                let c = e.index.clrm_prime();
                let eta_c = Rational::from(eta(&c, alpha)? as usize);
                let residual = ba.convolve(&e.value)?.sub(&e.value.scale(&eta_c))?;
                for (u, coeff) in basis.expand(&residual)? {
                    let ok = *strictly_finer.entry((u, k)).or_insert_with(|| {
                        parts[u] != parts[k]
                            && partition_refines(&parts[u], &parts[k]).expect("same weight")
                    });
                    if !ok {
                        let wit = format!(
                            "w = {}\nB{alpha}·β_w − {eta_c}·β_w has coefficient {coeff} on β_{}",
                            e.index,
                            basis.elements()[u].index
                        );
                        return Ok(Case::fail(label, k as u64 + 1, wit));
                    }
                }
            }
            Ok(Case::pass(label, basis.elements().len() as u64))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("block-scalar", n, cases))
}

/// Random integer elements of `Σ_n` act triangularly on the LRM basis with
/// the predicted diagonal; the sum of all permutations has spectrum
/// `n!` once and `0` otherwise.
pub fn verify_eigenvalues(n: usize, samples: usize, seed: u64) -> Result<Report> {
    let basis = lrm_basis(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<SigmaElement> = (0..samples)
        .map(|_| SigmaElement::random(n, &mut rng, -3, 3))
        .collect();
    let mut cases = elements
        .par_iter()
        .enumerate()
        .map(|(i, a)| -> Result<Case> {
            let lm = left_mult_matrix_with(a, &basis)?;
            let label = format!("random element #{i}");
            let wit = if !lm.triangular {
                Some(format!("a = {a}\nmatrix is not triangular"))
            } else if !lm.diagonal_matches_prediction() {
                let j = (0..lm.diagonal.len())
                    .find(|&j| lm.diagonal[j] != lm.predicted[j])
                    .expect("mismatch");
                Some(format!(
                    "a = {a}\nw = {}: diagonal {} but predicted {}",
                    lm.order[j], lm.diagonal[j], lm.predicted[j]
                ))
            } else {
                None
            };
            Ok(Case::from_result(label, lm.diagonal.len() as u64, wit))
        })
        .collect::<Result<Vec<_>>>()?;

    let all = SigmaElement::b(&Composition::ones(n));
    let lm = left_mult_matrix_with(&all, &basis)?;
    let size = ambient(n);
    let expected: Vec<(Rational, usize)> = if size == 1 {
        vec![(Rational::one(), 1)]
    } else {
        vec![(Rational::from(size), 1), (Rational::zero(), size - 1)]
    };
    let wit = (lm.eigenvalues.as_ref() != Some(&expected))
        .then(|| format!("spectrum {:?}", lm.eigenvalues));
    cases.push(Case::from_result("sum of all permutations", 1, wit));
    Ok(Report::new("eigenvalues", n, cases))
}
