//! Permutation combinatorics: rank matrices, Bruhat order, bubblesort
//! reduced words and the incidence data of the associated Bott-Samelson
//! variety.
//!
//! Permutations are stored in 1-based one-line notation. Right
//! multiplication by `s_i` swaps the entries in positions `i` and `i + 1`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a bijection of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The longest element `(n n-1 ... 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// Every permutation of `1..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation {
            one_line: cur.clone(),
        }];
        while next_permutation(&mut cur) {
            out.push(Permutation {
                one_line: cur.clone(),
            });
        }
        out
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_i`: swap positions `i` and `i + 1`.
    pub fn mul_simple(&self, i: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// Product `e · s_{d_1} · … · s_{d_m}`.
    pub fn from_word(n: usize, letters: &[usize]) -> Permutation {
        let mut one_line: Vec<usize> = (1..=n).collect();
        for &d in letters {
            one_line.swap(d - 1, d);
        }
        Permutation { one_line }
    }

    pub fn rank_matrix(&self) -> RankMatrix {
        let n = self.n();
        let mut d = vec![0usize; n * n];
        for p in 1..=n {
            let v = self.at(p);
            for q in 1..=n {
                let above = if p > 1 { d[(p - 2) * n + q - 1] } else { 0 };
                d[(p - 1) * n + q - 1] = above + usize::from(v <= q);
            }
        }
        RankMatrix { n, d }
    }

    /// For each row `i`, the column where the rank matrix row jumps
    /// relative to row `i - 1`.
    pub fn jump_points(&self) -> Vec<usize> {
        let r = self.rank_matrix();
        (1..=self.n())
            .map(|i| {
                (1..=self.n())
                    .find(|&q| r.get(i, q) - r.get(i - 1, q) == 1)
                    .expect("every row of a rank matrix jumps")
            })
            .collect()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Permutation::new(Vec::new());
        }
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `d_pq = #{i ≤ p : w(i) ≤ q}`, indexed 1-based with zero borders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    d: Vec<usize>,
}

impl RankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `d_pq`; returns 0 when `p` or `q` is 0.
    pub fn get(&self, p: usize, q: usize) -> usize {
        if p == 0 || q == 0 {
            0
        } else {
            self.d[(p - 1) * self.n + q - 1]
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.d.chunks(self.n.max(1)).map(<[usize]>::to_vec).collect()
    }
}

/// Bruhat comparison `u ≤ w`, i.e. `d^u ≥ d^w` entrywise.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::LengthMismatch {
            expected: w.n(),
            got: u.n(),
        });
    }
    let (du, dw) = (u.rank_matrix(), w.rank_matrix());
    Ok(du.d.iter().zip(&dw.d).all(|(a, b)| a >= b))
}

/// A reduced word split into bubblesort blocks `t_1, …, t_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedWord {
    pub n: usize,
    pub letters: Vec<usize>,
    /// `blocks[b]` is the letter range of `t_{b+1}`.
    pub blocks: Vec<Range<usize>>,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self) -> Permutation {
        Permutation::from_word(self.n, &self.letters)
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.letters[self.blocks[b].clone()]
    }
}

/// Bubblesort word of `w`: for `m = n, …, 2` move `w(m)` into position
/// `m` of the current arrangement by adjacent swaps.
pub fn bubblesort_word(w: &Permutation) -> ReducedWord {
    let n = w.n();
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut letters = Vec::with_capacity(w.length());
    let mut blocks = Vec::with_capacity(n.saturating_sub(1));
    for m in (2..=n).rev() {
        let start = letters.len();
        let pos = cur.iter().position(|&v| v == w.at(m)).unwrap() + 1;
        for i in pos..m {
            cur.swap(i - 1, i);
            letters.push(i);
        }
        blocks.push(start..letters.len());
    }
    ReducedWord { n, letters, blocks }
}

/// `p(i)` for `i = 1..n-1`: the 1-based index of the last occurrence of
/// `s_i`, or `None` when `s_i` does not occur.
pub fn last_occurrence_indices(word: &ReducedWord) -> Vec<Option<usize>> {
    (1..word.n)
        .map(|i| word.letters.iter().rposition(|&d| d == i).map(|j| j + 1))
        .collect()
}

/// The closed-form count `Σ_{j=i+1}^{n} #{k < j : w(k) > w(j)}` for each
/// `i = 1..n-1`. Agrees with the last occurrence of `s_i` whenever the
/// block moving `w(i+1)` is nonempty.
pub fn sum_formula_indices(w: &Permutation) -> Vec<usize> {
    let n = w.n();
    let moved: Vec<usize> = (1..=n)
        .map(|j| (1..j).filter(|&k| w.at(k) > w.at(j)).count())
        .collect();
    (1..n).map(|i| moved[i..].iter().sum()).collect()
}

/// Reference to an earlier space of a Bott-Samelson point or to a fixed
/// space `F_i` of the standard flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpaceRef {
    /// 1-based letter index.
    Index(usize),
    Fixed(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BsLetter {
    pub letter: usize,
    pub left: SpaceRef,
    pub right: SpaceRef,
}

/// Incidence data `V_{l(j)} ⊆ V_j ⊆ V_{r(j)}` for an arbitrary word.
pub fn bs_incidence(letters: &[usize]) -> Vec<BsLetter> {
    letters
        .iter()
        .enumerate()
        .map(|(j, &d)| {
            let find = |target: usize, fixed: usize| {
                letters[..j]
                    .iter()
                    .rposition(|&x| x == target)
                    .map_or(SpaceRef::Fixed(fixed), |i| SpaceRef::Index(i + 1))
            };
            BsLetter {
                letter: d,
                left: find(d - 1, d - 1),
                right: find(d + 1, d + 1),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(perm("4,8,6,2,7,3,1,5").length(), 18);
        assert_eq!(perm("2,3,1").length(), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
    }

    #[test]
    fn rank_matrices() {
        assert_eq!(perm("2,1").rank_matrix().rows(), vec![vec![0, 1], vec![1, 2]]);
        let id = Permutation::identity(3).rank_matrix();
        for p in 1..=3 {
            for q in 1..=3 {
                assert_eq!(id.get(p, q), p.min(q));
            }
        }
        let s = perm("4,8,6,2,7,3,1,5");
        assert_eq!(s.jump_points(), s.one_line());
    }

    #[test]
    fn bubblesort_small() {
        let w = bubblesort_word(&perm("2,3,1"));
        assert_eq!(w.letters, vec![1, 2]);
        assert_eq!(w.block(0), &[1, 2]);
        assert!(w.block(1).is_empty());
        assert!(bubblesort_word(&Permutation::identity(4)).is_empty());
        let s = perm("4,8,6,2,7,3,1,5");
        let ws = bubblesort_word(&s);
        assert_eq!(ws.len(), 18);
        assert_eq!(ws.product(), s);
    }

    #[test]
    fn last_occurrence_and_formula() {
        let w = perm("2,3,1");
        let word = bubblesort_word(&w);
        assert_eq!(last_occurrence_indices(&word), vec![Some(1), Some(2)]);
        assert_eq!(sum_formula_indices(&w), vec![2, 2]);
        let id = bubblesort_word(&Permutation::identity(3));
        assert_eq!(last_occurrence_indices(&id), vec![None, None]);
    }

    #[test]
    fn incidence_examples() {
        let one = bs_incidence(&[1]);
        assert_eq!(one[0].left, SpaceRef::Fixed(0));
        assert_eq!(one[0].right, SpaceRef::Fixed(2));
        let up = bs_incidence(&[1, 2]);
        assert_eq!(up[1].left, SpaceRef::Index(1));
        assert_eq!(up[1].right, SpaceRef::Fixed(3));
        let down = bs_incidence(&[2, 1]);
        assert_eq!(down[1].left, SpaceRef::Fixed(0));
        assert_eq!(down[1].right, SpaceRef::Index(1));
    }

    #[test]
    fn all_is_lexicographic() {
        let s3 = Permutation::all(3);
        assert_eq!(s3.len(), 6);
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).len(), 1);
    }
}
