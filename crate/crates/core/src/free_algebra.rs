//! The free algebra on letters `1, …, n`, Dynkin elements and their action.
//!
//! `S_k` acts on words of length `k` from the right by place permutation,
//! `(w_1 ⋯ w_k) · σ = w_{σ(1)} ⋯ w_{σ(k)}`. With the composition convention
//! of [`crate::permutations`], sending a permutation to its one-line word
//! intertwines right multiplication in `ℚ[S_n]` with this action.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::{Composition, Subset};
use crate::error::{Error, Result};
use crate::group_algebra::{write_signed_sum, GroupAlgebraElement};
use crate::permutations::{v_shape_valley, Permutation, MAX_DEGREE};
use crate::rational::{from_json_parts, to_json_parts, JsonInt, Rational};

/// A word over the positive integers. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Word> {
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x > MAX_DEGREE) {
            return Err(Error::Parse(format!("letter {bad} out of range")));
        }
        Ok(Word(letters.into_iter().map(|x| x as u8).collect()))
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `w · σ` with `(w · σ)_i = w_{σ(i)}`; lengths must agree.
    pub fn act(&self, sigma: &Permutation) -> Word {
        debug_assert_eq!(self.len(), sigma.size());
        Word(
            sigma
                .one_line()
                .into_iter()
                .map(|i| self.0[i - 1])
                .collect(),
        )
    }

    /// The permutation whose one-line notation is this word, if any.
    pub fn as_permutation(&self) -> Option<Permutation> {
        Permutation::new(self.letters()).ok()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Space-separated letters, e.g. `"2 6 7"`; `""` or `"()"` is the empty word.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Word::empty());
        }
        let letters = t
            .split_whitespace()
            .map(|tok| {
                if !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad letter {tok:?}")));
                }
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// A noncommutative polynomial with rational coefficients in letters `1..=alphabet`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAlgebraElement {
    alphabet: usize,
    terms: BTreeMap<Word, Rational>,
}

impl FreeAlgebraElement {
    pub fn zero(alphabet: usize) -> Self {
        FreeAlgebraElement {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word.
    pub fn one(alphabet: usize) -> Self {
        Self::word(alphabet, Word::empty()).expect("empty word is valid")
    }

    pub fn word(alphabet: usize, w: Word) -> Result<Self> {
        Self::from_terms(alphabet, [(w, Rational::one())])
    }

    pub fn letter(alphabet: usize, x: usize) -> Result<Self> {
        Self::word(alphabet, Word::new(vec![x])?)
    }

    pub fn from_terms<I>(alphabet: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in terms {
            if w.max_letter() > alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet,
                    right: w.max_letter(),
                });
            }
            *acc.entry(w).or_default() += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(FreeAlgebraElement {
            alphabet,
            terms: acc,
        })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
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

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The common length of all words, if there is one. `None` for zero
    /// and for inhomogeneous elements.
    pub fn degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Word::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        Ok(FreeAlgebraElement {
            alphabet: self.alphabet,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet);
        }
        FreeAlgebraElement {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Bilinear extension of concatenation.
    pub fn concat_product(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                *acc.entry(u.concat(v)).or_default() += &(a * b);
            }
        }
        Ok(FreeAlgebraElement {
            alphabet: self.alphabet,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `[a, b] = ab − ba`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.concat_product(other)?
            .sub(&other.concat_product(self)?)
    }

    fn check_action_degree(&self, k: usize) -> Result<()> {
        if self.is_zero() {
            return Ok(());
        }
        match self.degree() {
            None => Err(Error::Inhomogeneous),
            Some(d) if d != k => Err(Error::DegreeMismatch {
                expected: d,
                found: k,
            }),
            Some(_) => Ok(()),
        }
    }

    /// `e · σ` for `e` homogeneous of degree `k = |σ|`.
    pub fn right_action(&self, sigma: &Permutation) -> Result<Self> {
        self.check_action_degree(sigma.size())?;
        Ok(FreeAlgebraElement {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.act(sigma), c.clone()))
                .collect(),
        })
    }

    /// `e · a = Σ_σ a_σ (e · σ)`.
    pub fn right_action_by_algebra(&self, a: &GroupAlgebraElement) -> Result<Self> {
        self.check_action_degree(a.degree())?;
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (sigma, coeff) in a.terms() {
            for (w, c) in &self.terms {
                *acc.entry(w.act(sigma)).or_default() += &(c * coeff);
            }
        }
        Ok(FreeAlgebraElement {
            alphabet: self.alphabet,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn to_json(&self) -> Vec<WordTerm> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let (num, den) = to_json_parts(c);
                WordTerm {
                    word: w.to_string(),
                    num,
                    den,
                }
            })
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(text: &str, alphabet: usize) -> Result<Self> {
        let raw: Vec<WordTerm> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = raw
            .iter()
            .map(|t| Ok((t.word.parse::<Word>()?, from_json_parts(&t.num, &t.den)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(alphabet, terms)
    }
}

/// One `{word, num, den}` record of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTerm {
    pub word: String,
    pub num: JsonInt,
    pub den: JsonInt,
}

impl fmt::Display for FreeAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<(BracketWord, Rational)> = self
            .terms
            .iter()
            .map(|(w, c)| (BracketWord(w), c.clone()))
            .collect();
        write_signed_sum(f, shown.iter().map(|(w, c)| (w, c)))
    }
}

// Multi-letter words are bracketed inside sums so "[2 1 3] - [1 2 3]" stays readable.
struct BracketWord<'a>(&'a Word);

impl fmt::Display for BracketWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() > 1 {
            write!(f, "[{}]", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Debug for FreeAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAlgebraElement(alphabet={}, {self})", self.alphabet)
    }
}

/// `a ↦ a̲`: each permutation goes to its one-line word.
pub fn embed(a: &GroupAlgebraElement) -> FreeAlgebraElement {
    FreeAlgebraElement {
        alphabet: a.degree(),
        terms: a
            .terms()
            .map(|(w, c)| (Word(w.bytes().to_vec()), c.clone()))
            .collect(),
    }
}

fn check_dynkin_set(alphabet: usize, set: &Subset) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(m) = set.max().filter(|&m| m > alphabet) {
        return Err(Error::SubsetOutOfRange {
            element: m,
            max: alphabet,
        });
    }
    Ok(())
}

/// The Dynkin element `V^S = [[…[s_1, s_2], …], s_k]` for `s_1 < ⋯ < s_k`.
pub fn dynkin(alphabet: usize, set: &Subset) -> Result<FreeAlgebraElement> {
    check_dynkin_set(alphabet, set)?;
    let mut letters = set.iter();
    let first = letters.next().expect("nonempty");
    let mut acc = FreeAlgebraElement::letter(alphabet, first)?;
    for s in letters {
        acc = acc.commutator(&FreeAlgebraElement::letter(alphabet, s)?)?;
    }
    Ok(acc)
}

/// `Σ (−1)^{val(w)−1} w` over the V-shaped arrangements `w` of `S`.
///
/// The valley of such a word is `min S`; every subset of the remaining
/// letters can sit (decreasingly) to its left.
pub fn dynkin_vshape(alphabet: usize, set: &Subset) -> Result<FreeAlgebraElement> {
    check_dynkin_set(alphabet, set)?;
    let elems: Vec<u8> = set.iter().map(|x| x as u8).collect();
    let (min, rest) = elems.split_first().expect("nonempty");
    let mut terms = Vec::with_capacity(1 << rest.len());
    for mask in 0u64..(1u64 << rest.len()) {
        let mut left: Vec<u8> = Vec::new();
        let mut right: Vec<u8> = Vec::new();
        for (i, &x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(x);
            } else {
                right.push(x);
            }
        }
        left.reverse();
        let mut word = left;
        word.push(*min);
        word.extend(right);
        let val = v_shape_valley(&word).expect("constructed V-shaped");
        let sign = if val % 2 == 1 {
            Rational::one()
        } else {
            -Rational::one()
        };
        terms.push((Word(word), sign));
    }
    FreeAlgebraElement::from_terms(alphabet, terms)
}

/// `𝐕_α = V^{Set(α)_1} ⋯ V^{Set(α)_p}` over the alphabet `[|α|]`.
pub fn v_alpha(alpha: &Composition) -> FreeAlgebraElement {
    let n = alpha.weight();
    let mut acc = FreeAlgebraElement::one(n);
    for block in alpha.blocks() {
        let set = Subset::new(block.collect()).expect("intervals are sets");
        let v = dynkin(n, &set).expect("blocks are nonempty subsets of [n]");
        acc = acc.concat_product(&v).expect("same alphabet");
    }
    acc
}

/// An ordered set partition `(T_1, …, T_q)` of `[p]`; blocks are increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Checks that the blocks are nonempty, disjoint and cover `[p]`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let p: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; p + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > p || seen[x] {
                    return Err(Error::Parse(format!("{x} is not a fresh element of [{p}]")));
                }
                seen[x] = true;
            }
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, b) in self.blocks.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            let s = Subset::new(b.clone()).map_err(|_| fmt::Error)?;
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// `𝓛_{β,γ}`: ordered set partitions `T` of `[ℓ(β)]` into `ℓ(γ)` blocks with
/// `Σ_{i ∈ T_j} β_i = γ_j`. Listed in lexicographic order of the block
/// assignment `i ↦ j`.
pub fn ordered_set_partitions(
    beta: &Composition,
    gamma: &Composition,
) -> Result<Vec<OrderedSetPartition>> {
    if beta.weight() != gamma.weight() {
        return Err(Error::WeightMismatch {
            left: beta.weight(),
            right: gamma.weight(),
        });
    }
    let mut out = Vec::new();
    let mut remaining = gamma.parts().to_vec();
    let mut assignment = Vec::with_capacity(beta.len());
    assign_blocks(beta.parts(), &mut remaining, &mut assignment, &mut out);
    Ok(out)
}

fn assign_blocks(
    parts: &[usize],
    remaining: &mut [usize],
    assignment: &mut Vec<usize>,
    out: &mut Vec<OrderedSetPartition>,
) {
    let i = assignment.len();
    if i == parts.len() {
        if remaining.iter().all(|&r| r == 0) {
            let mut blocks = vec![Vec::new(); remaining.len()];
            for (idx, &j) in assignment.iter().enumerate() {
                blocks[j].push(idx + 1);
            }
            out.push(OrderedSetPartition { blocks });
        }
        return;
    }
    for j in 0..remaining.len() {
        if remaining[j] >= parts[i] {
            remaining[j] -= parts[i];
            assignment.push(j);
            assign_blocks(parts, remaining, assignment, out);
            assignment.pop();
            remaining[j] += parts[i];
        }
    }
}

/// Product of the Dynkin elements `V^{Set(β)_i}` in the given index order.
pub fn dynkin_block_product(beta: &Composition, indices: &[usize]) -> FreeAlgebraElement {
    let n = beta.weight();
    let blocks = beta.blocks();
    let mut acc = FreeAlgebraElement::one(n);
    for &i in indices {
        let set = Subset::new(blocks[i - 1].clone().collect()).expect("interval");
        acc = acc
            .concat_product(&dynkin(n, &set).expect("nonempty block"))
            .expect("same alphabet");
    }
    acc
}

/// `Σ_{T ∈ 𝓛_{β,γ}} V^{!T_1} ⋯ V^{!T_q}`, where `V^{!T_j}` multiplies the
/// `V^{Set(β)_i}`, `i ∈ T_j`, in increasing `i`.
pub fn vb_rhs(beta: &Composition, gamma: &Composition) -> Result<FreeAlgebraElement> {
    let n = beta.weight();
    let mut acc = FreeAlgebraElement::zero(n);
    for t in ordered_set_partitions(beta, gamma)? {
        let order: Vec<usize> = t.blocks().iter().flatten().copied().collect();
        acc = acc.add(&dynkin_block_product(beta, &order))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{compositions_of, eta, partition_refines};
    use crate::group_algebra::b_element;
    use crate::permutations::all_permutations;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn set(s: &str) -> Subset {
        s.parse().unwrap()
    }

    /// Signed word list, e.g. `[(1, "1 2"), (-1, "2 1")]`.
    fn fa(alphabet: usize, terms: &[(i64, &str)]) -> FreeAlgebraElement {
        FreeAlgebraElement::from_terms(
            alphabet,
            terms
                .iter()
                .map(|(k, w)| (w.parse::<Word>().unwrap(), Rational::from(*k))),
        )
        .unwrap()
    }

    #[test]
    fn concat_examples() {
        let v12 = fa(4, &[(1, "1 2"), (-1, "2 1")]);
        let three = fa(4, &[(1, "3")]);
        assert_eq!(
            v12.concat_product(&three).unwrap(),
            fa(4, &[(1, "1 2 3"), (-1, "2 1 3")])
        );
        assert_eq!(
            v12.concat_product(&FreeAlgebraElement::one(4)).unwrap(),
            v12
        );
        assert_eq!(
            FreeAlgebraElement::one(4).concat_product(&v12).unwrap(),
            v12
        );
        let v34 = fa(4, &[(1, "3 4"), (-1, "4 3")]);
        assert_eq!(
            v12.concat_product(&v34).unwrap(),
            fa(
                4,
                &[
                    (1, "1 2 3 4"),
                    (-1, "1 2 4 3"),
                    (-1, "2 1 3 4"),
                    (1, "2 1 4 3")
                ]
            )
        );
        assert!(v12.concat_product(&FreeAlgebraElement::one(3)).is_err());
    }

    #[test]
    fn right_action_examples() {
        // letters a, b, c as 1, 2, 3
        let abc = fa(3, &[(1, "1 2 3")]);
        let s: Permutation = "213".parse().unwrap();
        assert_eq!(abc.right_action(&s).unwrap(), fa(3, &[(1, "2 1 3")]));
        let e = fa(3, &[(2, "3 1 1"), (-1, "1 2 3")]);
        assert_eq!(e.right_action(&Permutation::identity(3)).unwrap(), e);
        assert!(e.right_action(&Permutation::identity(2)).is_err());
        let mixed = fa(3, &[(1, "1"), (1, "1 2")]);
        assert_eq!(
            mixed.right_action(&Permutation::identity(1)),
            Err(Error::Inhomogeneous)
        );

        // (e·σ)·τ = e·(στ) on every word of length 3 over [3].
        let perms: Vec<_> = all_permutations(3).unwrap().collect();
        for code in 0..27 {
            let w = Word::new(vec![code % 3 + 1, code / 3 % 3 + 1, code / 9 + 1]).unwrap();
            let e = FreeAlgebraElement::word(3, w).unwrap();
            for s in &perms {
                for t in &perms {
                    let lhs = e.right_action(s).unwrap().right_action(t).unwrap();
                    let rhs = e.right_action(&s.compose(t).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn action_by_algebra_examples() {
        let v22 = v_alpha(&c("2,2"));
        assert_eq!(
            v22.right_action_by_algebra(&GroupAlgebraElement::identity(4))
                .unwrap(),
            v22
        );
        assert!(v22
            .right_action_by_algebra(&b_element(&c("3,1")))
            .unwrap()
            .is_zero());
        let v12 = dynkin(4, &set("{1,2}")).unwrap();
        let v34 = dynkin(4, &set("{3,4}")).unwrap();
        let expected = v12
            .concat_product(&v34)
            .unwrap()
            .add(&v34.concat_product(&v12).unwrap())
            .unwrap();
        assert_eq!(
            v22.right_action_by_algebra(&b_element(&c("2,2"))).unwrap(),
            expected
        );
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            embed(&GroupAlgebraElement::identity(4)),
            fa(4, &[(1, "1 2 3 4")])
        );
        assert_eq!(
            embed(&b_element(&c("2,1"))),
            fa(3, &[(1, "1 2 3"), (1, "1 3 2"), (1, "2 3 1")])
        );
    }

    #[test]
    fn embed_is_equivariant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let perms: Vec<_> = all_permutations(4).unwrap().collect();
        let random_elem = |rng: &mut rand_chacha::ChaCha8Rng| {
            let k = rng.gen_range(1..6);
            GroupAlgebraElement::from_terms(
                4,
                (0..k).map(|_| {
                    (
                        perms[rng.gen_range(0..24)].clone(),
                        Rational::from(rng.gen_range(-5i64..6)),
                    )
                }),
            )
            .unwrap()
        };
        for _ in 0..50 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let lhs = embed(&a).right_action_by_algebra(&b).unwrap();
            let rhs = embed(&a.convolve(&b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dynkin_examples() {
        assert_eq!(
            dynkin(7, &set("{2,6,7}")).unwrap(),
            fa(
                7,
                &[(1, "2 6 7"), (-1, "6 2 7"), (-1, "7 2 6"), (1, "7 6 2")]
            )
        );
        assert_eq!(dynkin(7, &set("{3}")).unwrap(), fa(7, &[(1, "3")]));
        assert_eq!(
            dynkin(7, &set("{1,4}")).unwrap(),
            fa(7, &[(1, "1 4"), (-1, "4 1")])
        );
        assert_eq!(dynkin(3, &Subset::empty()), Err(Error::EmptySet));
        assert!(dynkin(3, &set("{4}")).is_err());
    }

    #[test]
    fn dynkin_vshape_examples() {
        // 1 4: valley at 1, sign +; 4 1: valley at 2, sign −.
        assert_eq!(
            dynkin_vshape(4, &set("{1,4}")).unwrap(),
            fa(4, &[(1, "1 4"), (-1, "4 1")])
        );
        assert_eq!(dynkin_vshape(4, &set("{3}")).unwrap(), fa(4, &[(1, "3")]));
        assert_eq!(
            dynkin_vshape(7, &set("{2,6,7}")).unwrap(),
            dynkin(7, &set("{2,6,7}")).unwrap()
        );
        assert_eq!(dynkin_vshape(3, &Subset::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn dynkin_matches_vshape_and_recursion() {
        let n = 7;
        for mask in 1u32..(1 << n) {
            let s = Subset::new((1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()).unwrap();
            let d = dynkin(n, &s).unwrap();
            assert_eq!(d, dynkin_vshape(n, &s).unwrap(), "{s}");
            assert_eq!(d.len(), 1 << (s.len() - 1));
            if s.len() > 1 {
                let max = *s.elements().last().unwrap();
                let rest = Subset::new(s.iter().filter(|&x| x != max).collect()).unwrap();
                let rec = dynkin(n, &rest)
                    .unwrap()
                    .commutator(&FreeAlgebraElement::letter(n, max).unwrap())
                    .unwrap();
                assert_eq!(d, rec);
            }
        }
    }

    #[test]
    fn v_alpha_examples() {
        assert_eq!(v_alpha(&c("2,1")), fa(3, &[(1, "1 2 3"), (-1, "2 1 3")]));
        assert_eq!(
            v_alpha(&c("2,2")),
            fa(
                4,
                &[
                    (1, "1 2 3 4"),
                    (-1, "2 1 3 4"),
                    (-1, "1 2 4 3"),
                    (1, "2 1 4 3")
                ]
            )
        );
        assert_eq!(v_alpha(&Composition::ones(5)), fa(5, &[(1, "1 2 3 4 5")]));
    }

    #[test]
    fn ordered_set_partition_examples() {
        assert!(ordered_set_partitions(&c("2,2"), &c("3,1"))
            .unwrap()
            .is_empty());
        let two = ordered_set_partitions(&c("2,2"), &c("2,2")).unwrap();
        let expected = vec![
            OrderedSetPartition::new(vec![vec![1], vec![2]]).unwrap(),
            OrderedSetPartition::new(vec![vec![2], vec![1]]).unwrap(),
        ];
        assert_eq!(two, expected);
        assert_eq!(
            ordered_set_partitions(&c("1,2"), &c("1,2")).unwrap(),
            vec![OrderedSetPartition::new(vec![vec![1], vec![2]]).unwrap()]
        );
        assert!(ordered_set_partitions(&c("1,2"), &c("2")).is_err());
        assert_eq!(two[1].to_string(), "({2},{1})");
    }

    #[test]
    fn ordered_set_partitions_are_counted_by_eta() {
        for n in 0..=6 {
            let all = compositions_of(n);
            for b in &all {
                for g in &all {
                    let ts = ordered_set_partitions(b, g).unwrap();
                    assert_eq!(ts.len() as u64, eta(b, g).unwrap());
                }
            }
        }
    }

    #[test]
    fn vb_rhs_examples() {
        assert!(vb_rhs(&c("2,2"), &c("3,1")).unwrap().is_zero());
        let v12 = dynkin(4, &set("{1,2}")).unwrap();
        let v34 = dynkin(4, &set("{3,4}")).unwrap();
        let expected = v12
            .concat_product(&v34)
            .unwrap()
            .add(&v34.concat_product(&v12).unwrap())
            .unwrap();
        assert_eq!(vb_rhs(&c("2,2"), &c("2,2")).unwrap(), expected);
        assert_eq!(
            vb_rhs(&c("2,1"), &c("1,2")).unwrap(),
            fa(3, &[(1, "3 1 2"), (-1, "3 2 1")])
        );
    }

    #[test]
    fn action_formula_small() {
        for n in 0..=4 {
            let all = compositions_of(n);
            for b in &all {
                let v = v_alpha(b);
                for g in &all {
                    let lhs = v.right_action_by_algebra(&b_element(g)).unwrap();
                    assert_eq!(lhs, vb_rhs(b, g).unwrap(), "{b} {g}");
                    if !partition_refines(&b.underlying_partition(), &g.underlying_partition())
                        .unwrap()
                    {
                        assert!(lhs.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn parsing_and_json() {
        let w: Word = " 2 6  7 ".parse().unwrap();
        assert_eq!(w.letters(), vec![2, 6, 7]);
        assert_eq!(w.to_string(), "2 6 7");
        assert!("2,6".parse::<Word>().is_err());
        assert!("0".parse::<Word>().is_err());
        let d = dynkin(7, &set("{2,6,7}")).unwrap();
        assert_eq!(d.to_string(), "[2 6 7] - [6 2 7] - [7 2 6] + [7 6 2]");
        let back = FreeAlgebraElement::from_json_str(&d.to_json_string(), 7).unwrap();
        assert_eq!(back, d);
        assert!(FreeAlgebraElement::from_json_str(&d.to_json_string(), 6).is_err());
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let a: Word = "9".parse().unwrap();
        let b: Word = "1 1".parse().unwrap();
        assert!(a < b);
        assert!(Word::empty() < a);
    }
}
