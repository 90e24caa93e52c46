//! Permutations of `[n]` in one-line notation.
//!
//! Composition convention, used everywhere in this crate:
//!
//! ```text
//! (u w)(i) = u(w(i))
//! ```
//!
//! i.e. `u.compose(&w)` applies `w` first. This is the convention under
//! which the one-line embedding into the free algebra intertwines the right
//! actions (`embed(a) · b = embed(a b)`).

use std::fmt;
use std::str::FromStr;

use crate::compositions::{comp_of, Composition, Subset};
use crate::error::{Error, Result};

/// Largest `n` for which [`all_permutations`] enumerates without an explicit override.
pub const ENUMERATION_GUARD: usize = 8;

/// Largest supported size; letters are stored as bytes.
pub const MAX_DEGREE: usize = u8::MAX as usize;

/// An element of `S_n`, stored as its one-line notation `w(1) w(2) … w(n)`.
///
/// The derived ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    /// Checks that `one_line` is a rearrangement of `1..=n`.
    pub fn new(one_line: Vec<usize>) -> Result<Permutation> {
        let n = one_line.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "size {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            one_line: one_line.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub(crate) fn from_bytes_unchecked(one_line: Vec<u8>) -> Permutation {
        debug_assert!(Permutation::new(one_line.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation { one_line }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n as u8).collect(),
        }
    }

    /// `n, n−1, …, 1`
    pub fn reversal(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n as u8).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.one_line
    }

    pub fn is_identity(&self) -> bool {
        self.one_line
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    /// `self ∘ w`, i.e. `i ↦ self(w(i))`.
    pub fn compose(&self, w: &Permutation) -> Result<Permutation> {
        if self.size() != w.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: w.size(),
            });
        }
        Ok(self.compose_unchecked(w))
    }

    pub(crate) fn compose_unchecked(&self, w: &Permutation) -> Permutation {
        Permutation {
            one_line: w
                .one_line
                .iter()
                .map(|&x| self.one_line[x as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.size()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { one_line: inv }
    }

    /// `Des(w) = {i ∈ [n−1] : w(i) > w(i+1)}`.
    pub fn descent_set(&self) -> Subset {
        let des = self
            .one_line
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect();
        Subset::new(des).expect("descents are distinct and positive")
    }

    /// The entries smaller than every entry to their left, in reading order
    /// (which is decreasing order).
    pub fn lrm_sequence(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut running_min = usize::MAX;
        for &x in &self.one_line {
            let x = x as usize;
            if x < running_min {
                out.push(x);
                running_min = x;
            }
        }
        out
    }

    /// `LRM(w)`, the set of left-to-right minima.
    pub fn lrm(&self) -> Subset {
        Subset::new(self.lrm_sequence()).expect("minima are distinct")
    }

    /// `LRM′(w) = {ℓ − 1 : ℓ ∈ LRM(w), ℓ > 1}`.
    pub fn lrm_prime(&self) -> Subset {
        Subset::new(
            self.lrm_sequence()
                .into_iter()
                .filter(|&l| l > 1)
                .map(|l| l - 1)
                .collect(),
        )
        .expect("shifted minima are distinct")
    }

    /// `cLRM′(w) = Comp(LRM′(w))`.
    pub fn clrm_prime(&self) -> Composition {
        comp_of(&self.lrm_prime(), self.size()).expect("LRM′ lies in [n−1]")
    }

    /// Rank in the lexicographic enumeration of `S_n` (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.size();
        let mut rank = 0;
        for i in 0..n {
            let smaller_right = self.one_line[i + 1..]
                .iter()
                .filter(|&&y| y < self.one_line[i])
                .count();
            rank = rank * (n - i) + smaller_right;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Result<Permutation> {
        let total = factorial(n).ok_or(Error::GuardExceeded { n, max: 20 })?;
        if rank >= total {
            return Err(Error::InvalidPermutation(format!("rank {rank} in S_{n}")));
        }
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let one_line = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Permutation { one_line })
    }
}

/// `n!`, or `None` on overflow.
pub fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Strict lexicographic comparison of one-line notations.
pub fn lex_less(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.size() != w.size() {
        return Err(Error::SizeMismatch {
            left: u.size(),
            right: w.size(),
        });
    }
    Ok(u < w)
}

/// The valley position (1-based, relative to the word) if `word` strictly
/// decreases and then strictly increases.
pub fn v_shape_valley(word: &[u8]) -> Option<usize> {
    if word.is_empty() {
        return None;
    }
    let mut i = 0;
    while i + 1 < word.len() && word[i] > word[i + 1] {
        i += 1;
    }
    let valley = i;
    while i + 1 < word.len() && word[i] < word[i + 1] {
        i += 1;
    }
    (i + 1 == word.len()).then_some(valley + 1)
}

/// Whether `w(i), …, w(j)` has V-shape; returns its valley position
/// counted from the start of the interval (1 = the entry `w(i)`).
pub fn has_v_shape_on(w: &Permutation, i: usize, j: usize) -> Result<Option<usize>> {
    let n = w.size();
    if i == 0 || i > j || j > n {
        return Err(Error::BadInterval {
            start: i,
            end: j,
            n,
        });
    }
    Ok(v_shape_valley(&w.one_line[i - 1..j]))
}

/// Iterator over `S_n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { one_line: current })
    }
}

fn next_lex(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order; refuses `n > ENUMERATION_GUARD`.
pub fn all_permutations(n: usize) -> Result<Permutations> {
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            n,
            max: ENUMERATION_GUARD,
        });
    }
    Ok(all_permutations_unguarded(n))
}

/// [`all_permutations`] without the size guard.
pub fn all_permutations_unguarded(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n.min(MAX_DEGREE) as u8).collect()),
    }
}

impl fmt::Display for Permutation {
    /// Compact digits for `n ≤ 9`, comma-separated otherwise, `()` for `n = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.is_empty() {
            return f.write_str("()");
        }
        if self.size() <= 9 {
            for &x in &self.one_line {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            for (i, &x) in self.one_line.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts compact digit strings (`"672491853"`, sizes up to 9) and
/// comma-separated one-line notation (`"10,2,1,…"`); `""`/`"()"` is the
/// empty permutation.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Permutation> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Permutation {
                one_line: Vec::new(),
            });
        }
        let bad = || Error::InvalidPermutation(s.to_string());
        let values: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad());
                    }
                    tok.parse::<usize>().map_err(|_| bad())
                })
                .collect::<Result<_>>()?
        } else {
            if !t.bytes().all(|b| b.is_ascii_digit()) || t.len() > 9 {
                return Err(bad());
            }
            t.bytes().map(|b| (b - b'0') as usize).collect()
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(s: &str) -> Subset {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let w = p("3142");
        assert_eq!(Permutation::identity(4).compose(&w).unwrap(), w);
        assert_eq!(p("21").compose(&p("21")).unwrap(), p("12"));
        // 231∘312: 1↦3↦1, 2↦1↦2, 3↦2↦3
        assert_eq!(p("231").compose(&p("312")).unwrap(), p("123"));
        assert!(p("21").compose(&p("123")).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("672491853").inverse(), p("639481275"));
        assert_eq!(p("231").inverse(), p("312"));
    }

    #[test]
    fn descent_examples() {
        assert!(Permutation::identity(6).descent_set().is_empty());
        assert_eq!(p("321").descent_set(), set("{1,2}"));
        assert_eq!(p("231").descent_set(), set("{2}"));
    }

    #[test]
    fn lrm_examples() {
        let w = p("672491853");
        assert_eq!(w.lrm(), set("{1,2,6}"));
        assert_eq!(w.inverse().lrm(), set("{1,3,6}"));
        assert_eq!(w.lrm_prime(), set("{1,5}"));
        assert_eq!(w.clrm_prime().to_string(), "(1,4,4)");
        assert_eq!(w.lrm_sequence(), vec![6, 2, 1]);

        let id = Permutation::identity(5);
        assert_eq!(id.lrm(), set("{1}"));
        assert!(id.lrm_prime().is_empty());
        assert_eq!(id.clrm_prime(), Composition::single(5));
        assert_eq!(id.lrm_sequence(), vec![1]);

        let rev = Permutation::reversal(5);
        assert_eq!(rev.lrm(), set("{1,2,3,4,5}"));
        assert_eq!(rev.lrm_prime(), set("{1,2,3,4}"));
        assert_eq!(rev.clrm_prime(), Composition::ones(5));

        assert_eq!(p("3142").lrm_sequence(), vec![3, 1]);
    }

    #[test]
    fn lex_examples() {
        assert!(lex_less(&p("123"), &p("132")).unwrap());
        assert!(!lex_less(&p("231"), &p("231")).unwrap());
        assert!(!lex_less(&p("312"), &p("231")).unwrap());
        assert!(lex_less(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn v_shape_examples() {
        assert_eq!(has_v_shape_on(&p("3142"), 1, 3).unwrap(), Some(2));
        let id = Permutation::identity(5);
        for i in 1..=5 {
            for j in i..=5 {
                assert_eq!(has_v_shape_on(&id, i, j).unwrap(), Some(1));
            }
        }
        assert_eq!(has_v_shape_on(&p("1324"), 1, 3).unwrap(), None);
        assert!(has_v_shape_on(&id, 0, 2).is_err());
        assert!(has_v_shape_on(&id, 3, 2).is_err());
        assert!(has_v_shape_on(&id, 1, 6).is_err());
        assert_eq!(v_shape_valley(&[7, 6, 2]), Some(3));
    }

    #[test]
    fn enumeration() {
        let s0: Vec<_> = all_permutations(0).unwrap().collect();
        assert_eq!(s0, vec![Permutation::identity(0)]);
        let s3: Vec<_> = all_permutations(3)
            .unwrap()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(5).unwrap().count(), 120);
        assert!(all_permutations(9).is_err());
        for (r, w) in all_permutations(5).unwrap().enumerate() {
            assert_eq!(w.lex_rank(), r);
            assert_eq!(Permutation::from_lex_rank(5, r).unwrap(), w);
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(p("6,7,2,4,9,1,8,5,3"), p("672491853"));
        let big = p("10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.size(), 10);
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(p("()").size(), 0);
        for bad in ["112", "13", "0", "1,,2", "1a", "1234567891"] {
            assert!(bad.parse::<Permutation>().is_err(), "{bad}");
        }
    }

    // Remark: LRM(w) = w(LRM(w⁻¹)).
    #[test]
    fn lrm_of_inverse_sits_at_lrm_positions() {
        for n in 0..=6 {
            for w in all_permutations(n).unwrap() {
                let image =
                    Subset::new(w.inverse().lrm().iter().map(|i| w.apply(i)).collect()).unwrap();
                assert_eq!(w.lrm(), image, "{w}");
            }
        }
    }

    #[test]
    fn lrm_sequence_recursion() {
        for n in 1..=6 {
            for w in all_permutations(n).unwrap() {
                let inv = w.inverse();
                let seq = w.lrm_sequence();
                let mut prev = n + 1;
                for &l in &seq {
                    let first_pos = (1..prev).map(|x| inv.apply(x)).min().unwrap();
                    assert_eq!(l, w.apply(first_pos), "{w}");
                    prev = l;
                }
                assert_eq!(*seq.last().unwrap(), 1);
                assert!(seq.windows(2).all(|x| x[0] > x[1]));
            }
        }
    }

    #[test]
    fn clrm_prime_consistency() {
        for n in 1..=6 {
            for w in all_permutations(n).unwrap() {
                let c = w.clrm_prime();
                assert_eq!(c.len(), w.lrm().len());
                assert_eq!(c.set_of(), w.lrm_prime());
            }
        }
    }

    // If Des(u) ⊆ LRM′(w) then uw ≤_lex w, with equality iff u = id.
    #[test]
    fn lrm_triangularity_lemma() {
        for n in 0..=5 {
            let all: Vec<_> = all_permutations(n).unwrap().collect();
            for w in &all {
                let allowed = w.lrm_prime();
                for u in &all {
                    if !u.descent_set().is_subset_of(&allowed) {
                        continue;
                    }
                    let uw = u.compose(w).unwrap();
                    assert!(uw <= *w, "u={u} w={w}");
                    assert_eq!(uw == *w, u.is_identity());
                }
            }
        }
    }

    #[test]
    fn group_axioms() {
        for n in 0..=4 {
            let all: Vec<_> = all_permutations(n).unwrap().collect();
            let id = Permutation::identity(n);
            for a in &all {
                assert_eq!(a.compose(&a.inverse()).unwrap(), id);
                assert_eq!(a.inverse().compose(a).unwrap(), id);
                for b in &all {
                    for c in &all {
                        let l = a.compose(b).unwrap().compose(c).unwrap();
                        let r = a.compose(&b.compose(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }
}
