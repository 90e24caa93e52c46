//! The group algebra `ℚ[S_n]`, the B-basis of the descent algebra and
//! Solomon's Mackey formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::{matrices_with_margins, refines, Composition};
use crate::error::{Error, Result};
use crate::permutations::{all_permutations, Permutation};
use crate::rational::{from_json_parts, to_json_parts, JsonInt, Rational};

/// A finitely supported `ℚ`-linear combination of permutations of `[n]`.
///
/// Terms are kept in lexicographic order of the one-line notation and zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `δ_w`
    pub fn basis(w: Permutation) -> Self {
        let n = w.size();
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::one());
        GroupAlgebraElement { n, terms }
    }

    /// The unit `δ_id`.
    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// Sums the given terms; repeated permutations accumulate.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut acc: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (w, c) in terms {
            if w.size() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: w.size(),
                });
            }
            *acc.entry(w).or_default() += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement { n, terms: acc })
    }

    /// `Σ_{w ∈ ws} w` for distinct permutations of size `n`.
    fn sum_of(n: usize, ws: impl IntoIterator<Item = Permutation>) -> Self {
        GroupAlgebraElement {
            n,
            terms: ws.into_iter().map(|w| (w, Rational::one())).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    /// Coefficient of `w`, zero if absent.
    pub fn coefficient(&self, w: &Permutation) -> Rational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        Ok(GroupAlgebraElement { n: self.n, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// The product `self · other` with `(uv)(i) = u(v(i))`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: HashMap<Permutation, Rational> = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                *acc.entry(u.compose_unchecked(v)).or_default() += &(a * b);
            }
        }
        Ok(GroupAlgebraElement {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `self · δ_w`
    pub fn right_translate(&self, w: &Permutation) -> Result<Self> {
        if w.size() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: w.size(),
            });
        }
        Ok(GroupAlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.compose_unchecked(w), c.clone()))
                .collect(),
        })
    }

    /// `δ_w · self`
    pub fn left_translate(&self, w: &Permutation) -> Result<Self> {
        if w.size() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: w.size(),
            });
        }
        Ok(GroupAlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (w.compose_unchecked(u), c.clone()))
                .collect(),
        })
    }

    /// Coordinates `(lex rank, coefficient)` in increasing rank order.
    pub fn to_sparse_vector(&self) -> Vec<(usize, Rational)> {
        self.terms
            .iter()
            .map(|(w, c)| (w.lex_rank(), c.clone()))
            .collect()
    }

    /// Dense coordinates in the lexicographic enumeration of `S_n`.
    pub fn to_dense_vector(&self) -> Vec<Rational> {
        let size = crate::permutations::factorial(self.n).expect("n! fits in usize");
        let mut v = vec![Rational::zero(); size];
        for (w, c) in &self.terms {
            v[w.lex_rank()] = c.clone();
        }
        v
    }

    /// Inverse of [`GroupAlgebraElement::to_sparse_vector`].
    pub fn from_sparse_vector(n: usize, coords: &[(usize, Rational)]) -> Result<Self> {
        let terms = coords
            .iter()
            .map(|(r, c)| Ok((Permutation::from_lex_rank(n, *r)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, terms)
    }

    pub fn to_json(&self) -> Vec<PermTerm> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let (num, den) = to_json_parts(c);
                PermTerm {
                    perm: w.to_string(),
                    num,
                    den,
                }
            })
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    /// Parses the JSON list form; every permutation must have size `n`.
    pub fn from_json_str(text: &str, n: usize) -> Result<Self> {
        let raw: Vec<PermTerm> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = raw
            .iter()
            .map(|t| {
                Ok((
                    t.perm.parse::<Permutation>()?,
                    from_json_parts(&t.num, &t.den)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, terms)
    }
}

/// One `{perm, num, den}` record of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermTerm {
    pub perm: String,
    pub num: JsonInt,
    pub den: JsonInt,
}

pub(crate) fn write_signed_sum<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let (neg, mag) = if c.is_negative() {
            (true, c.abs())
        } else {
            (false, c.clone())
        };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if !mag.is_one() {
            write!(f, "{mag}·")?;
        }
        write!(f, "{key}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.terms.iter())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlgebraElement(n={}, {self})", self.n)
    }
}

/// `B_α`: the sum of all `w` with `Des(w) ⊆ Set(α)`, i.e. all `w` increasing
/// on every α-block.
///
/// Built directly from the set compositions of `[n]` with block sizes α
/// (each block listed increasingly), so no filtering of `S_n` is needed.
pub fn b_element(alpha: &Composition) -> GroupAlgebraElement {
    let n = alpha.weight();
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut one_line = Vec::with_capacity(n);
    fill_blocks(alpha.parts(), 0, 0, &mut used, &mut one_line, &mut out);
    GroupAlgebraElement::sum_of(n, out)
}

fn fill_blocks(
    parts: &[usize],
    block: usize,
    filled: usize,
    used: &mut Vec<bool>,
    one_line: &mut Vec<u8>,
    out: &mut Vec<Permutation>,
) {
    if block == parts.len() {
        out.push(Permutation::from_bytes_unchecked(one_line.clone()));
        return;
    }
    if filled == parts[block] {
        fill_blocks(parts, block + 1, 0, used, one_line, out);
        return;
    }
    let n = used.len() - 1;
    let start = if filled == 0 {
        1
    } else {
        *one_line.last().unwrap() as usize + 1
    };
    for x in start..=n {
        if used[x] {
            continue;
        }
        used[x] = true;
        one_line.push(x as u8);
        fill_blocks(parts, block, filled + 1, used, one_line, out);
        one_line.pop();
        used[x] = false;
    }
}

/// Solomon's Mackey formula: `B_α B_β = Σ_{M ∈ ℕ^{α,β}} B_{read(M)}`.
///
/// Returns the multiset `{read(M)}` as a count per composition.
pub fn b_product_mackey(
    alpha: &Composition,
    beta: &Composition,
) -> Result<BTreeMap<Composition, u64>> {
    let mut counts = BTreeMap::new();
    for m in matrices_with_margins(alpha, beta)? {
        *counts.entry(m.read()).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Expands a multiset of compositions into `Σ mult · B_γ`.
pub fn b_sum(n: usize, multiset: &BTreeMap<Composition, u64>) -> Result<GroupAlgebraElement> {
    let mut acc = GroupAlgebraElement::zero(n);
    for (gamma, &mult) in multiset {
        if gamma.weight() != n {
            return Err(Error::WeightMismatch {
                left: n,
                right: gamma.weight(),
            });
        }
        acc = acc.add(&b_element(gamma).scale(&Rational::from(mult as usize)))?;
    }
    Ok(acc)
}

/// `B_{γ→β}`: the sum of all `w` with `w(I) = I` for every γ-block `I`
/// and `Des(w) ⊆ Set(β)`. Satisfies `B_β = B_γ · B_{γ→β}`.
pub fn b_blocked(gamma: &Composition, beta: &Composition) -> Result<GroupAlgebraElement> {
    if !refines(beta, gamma)? {
        return Err(Error::NotRefinement {
            finer: beta.to_string(),
            coarser: gamma.to_string(),
        });
    }
    let n = gamma.weight();
    let blocks = gamma.blocks();
    let allowed = beta.set_of();
    let ws = all_permutations(n)?.filter(|w| {
        blocks
            .iter()
            .all(|b| b.clone().all(|x| b.contains(&w.apply(x))))
            && w.descent_set().is_subset_of(&allowed)
    });
    Ok(GroupAlgebraElement::sum_of(n, ws))
}

/// A permutation `w` with `B_β · w = B_α` for anagrams α, β.
///
/// `w` maps the i-th α-block order-preservingly onto the first unused
/// β-block of the same size.
pub fn anagram_conjugator(alpha: &Composition, beta: &Composition) -> Result<Permutation> {
    if alpha.weight() != beta.weight() || !alpha.is_anagram_of(beta) {
        return Err(Error::NotAnagrams {
            left: alpha.to_string(),
            right: beta.to_string(),
        });
    }
    let n = alpha.weight();
    let beta_blocks = beta.blocks();
    let mut used = vec![false; beta_blocks.len()];
    let mut one_line = vec![0usize; n];
    for a_block in alpha.blocks() {
        let size = a_block.clone().count();
        let j = (0..beta_blocks.len())
            .find(|&j| !used[j] && beta_blocks[j].clone().count() == size)
            .expect("anagrams have matching block sizes");
        used[j] = true;
        for (x, y) in a_block.zip(beta_blocks[j].clone()) {
            one_line[x - 1] = y;
        }
    }
    Permutation::new(one_line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::compositions_of;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn elem(n: usize, ws: &[&str]) -> GroupAlgebraElement {
        GroupAlgebraElement::from_terms(n, ws.iter().map(|w| (p(w), Rational::one()))).unwrap()
    }

    // Oracle: filter S_n by the descent condition.
    fn b_by_filter(alpha: &Composition) -> GroupAlgebraElement {
        let set = alpha.set_of();
        let n = alpha.weight();
        GroupAlgebraElement::sum_of(
            n,
            all_permutations(n)
                .unwrap()
                .filter(|w| w.descent_set().is_subset_of(&set)),
        )
    }

    #[test]
    fn linear_ops() {
        let a = b_element(&c("2,1"));
        assert_eq!(a.add(&GroupAlgebraElement::zero(3)).unwrap(), a);
        assert!(a.scale(&Rational::zero()).is_zero());
        assert_eq!(a.coefficient(&p("231")), Rational::one());
        assert_eq!(a.coefficient(&p("321")), Rational::zero());
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a.add(&GroupAlgebraElement::zero(2)).is_err());
    }

    #[test]
    fn convolve_examples() {
        let u = p("2314");
        let v = p("1432");
        assert_eq!(
            GroupAlgebraElement::basis(u.clone())
                .convolve(&GroupAlgebraElement::basis(v.clone()))
                .unwrap(),
            GroupAlgebraElement::basis(u.compose(&v).unwrap())
        );
        let b11 = b_element(&c("1,1"));
        assert_eq!(b11, elem(2, &["12", "21"]));
        assert_eq!(b11.convolve(&b11).unwrap(), b11.scale(&Rational::from(2)));
        let a = GroupAlgebraElement::from_terms(
            2,
            [
                (p("21"), Rational::from(3)),
                (p("12"), "-1/2".parse().unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(b_element(&c("2")).convolve(&a).unwrap(), a);
        assert!(a.convolve(&GroupAlgebraElement::identity(3)).is_err());
    }

    #[test]
    fn b_element_examples() {
        assert_eq!(
            b_element(&c("3,1")),
            elem(4, &["1234", "1243", "1342", "2341"])
        );
        for n in 0..6 {
            assert_eq!(
                b_element(&Composition::single(n)),
                GroupAlgebraElement::identity(n)
            );
        }
        assert_eq!(b_element(&c("2,1")), elem(3, &["123", "132", "231"]));
        for n in 0..=6 {
            for a in compositions_of(n) {
                assert_eq!(b_element(&a), b_by_filter(&a), "{a}");
            }
        }
    }

    #[test]
    fn mackey_examples() {
        let m = b_product_mackey(&c("1,1"), &c("1,1")).unwrap();
        assert_eq!(m, BTreeMap::from([(c("1,1"), 2)]));
        let m = b_product_mackey(&c("2"), &c("1,1")).unwrap();
        assert_eq!(m, BTreeMap::from([(c("1,1"), 1)]));
        let a = c("2,1");
        let direct = b_element(&a).convolve(&b_element(&a)).unwrap();
        let m = b_product_mackey(&a, &a).unwrap();
        assert_eq!(b_sum(3, &m).unwrap(), direct);
    }

    #[test]
    fn mackey_matches_convolution() {
        for n in 0..=4 {
            let all = compositions_of(n);
            for a in &all {
                for b in &all {
                    let m = b_product_mackey(a, b).unwrap();
                    let direct = b_element(a).convolve(&b_element(b)).unwrap();
                    assert_eq!(b_sum(n, &m).unwrap(), direct, "{a} {b}");
                    let diag = m.get(b).copied().unwrap_or(0);
                    assert_eq!(diag, crate::compositions::eta(b, a).unwrap(), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn b_blocked_examples() {
        let g = c("3");
        let bb = b_blocked(&g, &g).unwrap();
        assert!(bb.coefficient(&Permutation::identity(3)).is_one());
        assert_eq!(b_element(&g).convolve(&bb).unwrap(), b_element(&g));

        assert_eq!(b_blocked(&c("3"), &c("2,1")).unwrap(), b_element(&c("2,1")));

        let bb = b_blocked(&c("2,2"), &c("1,1,2")).unwrap();
        assert_eq!(bb, elem(4, &["1234", "2134"]));
        assert_eq!(
            b_element(&c("2,2")).convolve(&bb).unwrap(),
            b_element(&c("1,1,2"))
        );

        assert!(b_blocked(&c("1,2"), &c("2,1")).is_err());
    }

    #[test]
    fn b_blocked_factorization() {
        for n in 0..=5 {
            let all = compositions_of(n);
            for g in &all {
                for b in &all {
                    if refines(b, g).unwrap() {
                        let lhs = b_element(g).convolve(&b_blocked(g, b).unwrap()).unwrap();
                        assert_eq!(lhs, b_element(b), "{g} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn anagram_conjugator_examples() {
        let a = c("2,1,1");
        assert!(anagram_conjugator(&a, &a).unwrap().is_identity());
        for (a, b) in [("1,2", "2,1"), ("2,1,1", "1,2,1")] {
            let (a, b) = (c(a), c(b));
            let w = anagram_conjugator(&a, &b).unwrap();
            assert_eq!(b_element(&b).right_translate(&w).unwrap(), b_element(&a));
        }
        assert!(anagram_conjugator(&c("1,2"), &c("3")).is_err());
    }

    #[test]
    fn anagram_conjugator_identity_exhaustive() {
        for n in 0..=5 {
            let all = compositions_of(n);
            for a in &all {
                for b in all.iter().filter(|b| b.is_anagram_of(a)) {
                    let w = anagram_conjugator(a, b).unwrap();
                    assert_eq!(
                        b_element(b).right_translate(&w).unwrap(),
                        b_element(a),
                        "{a} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_and_display() {
        let a = GroupAlgebraElement::from_terms(
            3,
            [
                (p("123"), Rational::one()),
                (p("231"), "-3/2".parse().unwrap()),
                (p("132"), Rational::from(2)),
            ],
        )
        .unwrap();
        assert_eq!(a.to_string(), "123 + 2·132 - 3/2·231");
        let json = a.to_json_string();
        assert_eq!(
            json,
            r#"[{"perm":"123","num":1,"den":1},{"perm":"132","num":2,"den":1},{"perm":"231","num":-3,"den":2}]"#
        );
        assert_eq!(GroupAlgebraElement::from_json_str(&json, 3).unwrap(), a);
        assert!(GroupAlgebraElement::from_json_str(&json, 4).is_err());
        assert_eq!(GroupAlgebraElement::zero(2).to_string(), "0");
        let big = r#"[{"perm":"21","num":"123456789012345678901234567890","den":"7"}]"#;
        let e = GroupAlgebraElement::from_json_str(big, 2).unwrap();
        assert_eq!(
            GroupAlgebraElement::from_json_str(&e.to_json_string(), 2).unwrap(),
            e
        );
    }
}
