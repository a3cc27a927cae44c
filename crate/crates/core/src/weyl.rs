//! Combinatorics of the `A_{N-1}` root system.
//!
//! Weyl group elements act on the positions of the `ε`-basis: the simple
//! reflection `s_j` swaps entries `j` and `j + 1` of a vector (0-based), so
//! `w(μ)` is a rearrangement of the entries of `μ`. A [`ReducedWord`] stores
//! its letters in application order: the word `[j1, j2, .., jl]` is the
//! element `s_{jl} ⋯ s_{j2} s_{j1}`, and `j1` acts first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dunkl::Params;
use crate::error::{Error, Result};
use crate::exactpoly::Rational;

/// Default bound on `N` for routines that enumerate all of `S_N`.
pub const ENUMERATION_BOUND: usize = 8;

/// A vector of non-negative integer exponents, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition(entries)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Strictly decreasing entries (a regular dominant weight).
    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Applies the simple reflection `s_j` (swap of entries `j` and `j + 1`).
    pub fn reflect(&self, j: usize) -> Composition {
        let mut e = self.0.clone();
        e.swap(j, j + 1);
        Composition(e)
    }

    /// `⟨α_j^∨, μ⟩ = μ_j − μ_{j+1}`.
    pub fn simple_pairing(&self, j: usize) -> i64 {
        self.0[j] as i64 - self.0[j + 1] as i64
    }

    pub fn add(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    /// Parses a comma separated list such as `"2,1,0"`.
    pub fn parse(s: &str) -> Result<Composition> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("composition entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        Ok(Composition(entries))
    }

    /// All compositions with `n` parts and the given degree, in
    /// lexicographically decreasing order.
    pub fn all_of_degree(n: usize, degree: u32) -> Vec<Composition> {
        fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for v in (0..=left).rev() {
                cur.push(v);
                rec(n, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        rec(n, degree, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All compositions with `n` parts and degree at most `max_degree`.
    pub fn all_up_to_degree(n: usize, max_degree: u32) -> Vec<Composition> {
        (0..=max_degree)
            .flat_map(|d| Composition::all_of_degree(n, d))
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

/// A composition with weakly decreasing entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(entries: Vec<u32>) -> Result<Partition> {
        Partition::try_from(Composition(entries))
    }

    pub fn zero(n: usize) -> Partition {
        Partition(Composition::zero(n))
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn into_composition(self) -> Composition {
        self.0
    }

    pub fn entries(&self) -> &[u32] {
        self.0.entries()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    /// All partitions with at most `n` parts (padded with zeros) and the given degree.
    pub fn all_of_degree(n: usize, degree: u32) -> Vec<Partition> {
        fn rec(n: usize, left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                if left == 0 {
                    out.push(Partition(Composition(cur.clone())));
                }
                return;
            }
            for v in (0..=left.min(max)).rev() {
                cur.push(v);
                rec(n, left - v, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, degree, degree, &mut Vec::with_capacity(n), &mut out);
        out
    }

    pub fn all_up_to_degree(n: usize, max_degree: u32) -> Vec<Partition> {
        (0..=max_degree)
            .flat_map(|d| Partition::all_of_degree(n, d))
            .collect()
    }
}

impl TryFrom<Composition> for Partition {
    type Error = Error;

    fn try_from(c: Composition) -> Result<Partition> {
        if c.is_partition() {
            Ok(Partition(c))
        } else {
            Err(Error::InvalidSector {
                label: c.to_string(),
                reason: "entries must be weakly decreasing".into(),
            })
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A positive root `ε_i − ε_j` with `i < j` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosRoot {
    pub i: usize,
    pub j: usize,
}

impl PosRoot {
    /// `⟨α^∨, v⟩ = v_i − v_j` (all roots of `A_{N-1}` have squared length 2).
    pub fn pairing_int(&self, v: &[u32]) -> i64 {
        v[self.i] as i64 - v[self.j] as i64
    }

    /// `⟨α, ρ⟩ = j − i`, the height of the root.
    pub fn height(&self) -> i64 {
        (self.j - self.i) as i64
    }

    pub fn to_vector(&self, n: usize) -> RootVector {
        let mut coords = vec![Rational::zero(); n];
        coords[self.i] = Rational::one();
        coords[self.j] = -Rational::one();
        RootVector { coords }
    }

    /// All positive roots of `A_{n-1}`.
    pub fn all(n: usize) -> Vec<PosRoot> {
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(PosRoot { i, j });
            }
        }
        out
    }
}

impl fmt::Display for PosRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

/// A vector of `V` in coordinates over the `ε`-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub coords: Vec<Rational>,
}

impl RootVector {
    pub fn inner(&self, other: &RootVector) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }

    /// `α^∨ = 2α/⟨α,α⟩`.
    pub fn coroot(&self) -> RootVector {
        let norm = self.inner(self);
        let two = Rational::from_integer(2.into());
        RootVector {
            coords: self.coords.iter().map(|c| c * &two / &norm).collect(),
        }
    }

    /// Applies `s_j` (swap of coordinates `j` and `j + 1`).
    pub fn reflect(&self, j: usize) -> RootVector {
        let mut coords = self.coords.clone();
        coords.swap(j, j + 1);
        RootVector { coords }
    }

    pub fn is_positive(&self) -> bool {
        self.coords
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_positive())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A permutation `w` of `{0, .., n-1}`; `w.images[i]` is the position that
/// the entry at position `i` is moved to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of inversions, equal to the length `ℓ(w)`.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Left-multiplies by the simple reflection `s_j`.
    fn then_simple(&mut self, j: usize) {
        for p in self.images.iter_mut() {
            if *p == j {
                *p = j + 1;
            } else if *p == j + 1 {
                *p = j;
            }
        }
    }

    /// `R_w = R_+ ∩ w^{-1}R_-`, computed directly from the permutation.
    pub fn inversion_roots(&self) -> BTreeSet<PosRoot> {
        PosRoot::all(self.images.len())
            .into_iter()
            .filter(|r| self.images[r.i] > self.images[r.j])
            .collect()
    }

    /// Moves each entry of `v` to its image position.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }

    /// All permutations of `{0, .., n-1}`.
    pub fn all(n: usize) -> Vec<Perm> {
        fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if k <= 1 {
                out.push(Perm { images: a.clone() });
                return;
            }
            heap(k - 1, a, out);
            for i in 0..k - 1 {
                if k % 2 == 0 {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
                heap(k - 1, a, out);
            }
        }
        let mut out = Vec::new();
        let mut a: Vec<usize> = (0..n).collect();
        heap(n, &mut a, &mut out);
        out
    }
}

/// A reduced expression `s_{jl} ⋯ s_{j1}`; letters in application order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn identity(n: usize) -> ReducedWord {
        ReducedWord {
            n,
            letters: Vec::new(),
        }
    }

    /// Validates the letters and rejects non-reduced words.
    pub fn new(n: usize, letters: Vec<usize>) -> Result<ReducedWord> {
        if let Some(&bad) = letters.iter().find(|&&j| j + 1 >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        let word = ReducedWord { n, letters };
        let inversions = word.to_perm().inversions();
        if inversions != word.letters.len() {
            return Err(Error::NonReducedWord {
                letters: word.letters.clone(),
                len: word.letters.len(),
                inversions,
            });
        }
        Ok(word)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_perm(&self) -> Perm {
        let mut p = Perm::identity(self.n);
        for &j in &self.letters {
            p.then_simple(j);
        }
        p
    }

    /// Applies the word to a vector, first letter first.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for &j in &self.letters {
            out.swap(j, j + 1);
        }
        out
    }

    pub fn apply_composition(&self, mu: &Composition) -> Composition {
        Composition(self.apply(mu.entries()))
    }

    /// `R_w = {α_{j1}, s_{j1}(α_{j2}), …, s_{j1}⋯s_{j(l−1)}(α_{jl})}` in order.
    pub fn inversion_sequence(&self) -> Vec<PosRoot> {
        self.letters
            .iter()
            .enumerate()
            .map(|(k, &j)| {
                // positions of ε_j and ε_{j+1} after applying s_{j(k−1)} .. s_{j1}
                let (mut p, mut q) = (j, j + 1);
                for &l in self.letters[..k].iter().rev() {
                    p = swap_index(p, l);
                    q = swap_index(q, l);
                }
                if p < q {
                    PosRoot { i: p, j: q }
                } else {
                    // cannot happen for a reduced word; kept total for safety
                    PosRoot { i: q, j: p }
                }
            })
            .collect()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .rev()
            .map(|j| format!("s{}", j + 1))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn swap_index(p: usize, j: usize) -> usize {
    if p == j {
        j + 1
    } else if p == j + 1 {
        j
    } else {
        p
    }
}

/// Returns `μ⁺` and a reduced word for the shortest `w_μ` with `w_μ(μ⁺) = μ`.
pub fn sort_to_partition(mu: &Composition) -> (Partition, ReducedWord) {
    // Bubble μ towards μ⁺ swapping only strictly ascending neighbours; each
    // swap removes exactly one inversion, so the word is reduced and, equal
    // entries never being exchanged, the element is the shortest one.
    let mut v = mu.entries().to_vec();
    let mut swaps = Vec::new();
    let n = v.len();
    loop {
        let mut changed = false;
        for j in 0..n.saturating_sub(1) {
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                swaps.push(j);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    swaps.reverse();
    (
        Partition(Composition(v)),
        ReducedWord { n, letters: swaps },
    )
}

/// `R_w` as a set of root vectors; rejects non-reduced words.
pub fn inversion_set(w: &ReducedWord) -> Result<BTreeSet<RootVector>> {
    let checked = ReducedWord::new(w.n, w.letters.clone())?;
    Ok(checked
        .inversion_sequence()
        .into_iter()
        .map(|r| r.to_vector(w.n))
        .collect())
}

/// Inversion roots of `w_μ` for a composition `μ`.
pub fn inversion_roots_of(mu: &Composition) -> Vec<PosRoot> {
    sort_to_partition(mu).1.inversion_sequence()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderRelation {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// Strict dominance `ν <_d μ` for partitions of equal degree.
pub fn dominance_less(nu: &[u32], mu: &[u32]) -> bool {
    if nu == mu {
        return false;
    }
    let (mut sn, mut sm) = (0i64, 0i64);
    for (x, y) in nu.iter().zip(mu) {
        sn += *x as i64;
        sm += *y as i64;
        if sn > sm {
            return false;
        }
    }
    sn == sm
}

/// `μ − ν ∈ Q_+`: all partial sums of `μ − ν` are non-negative and the total vanishes.
pub fn in_positive_root_cone(nu: &[u32], mu: &[u32]) -> bool {
    let mut s = 0i64;
    for (x, y) in nu.iter().zip(mu) {
        s += *y as i64 - *x as i64;
        if s < 0 {
            return false;
        }
    }
    s == 0
}

/// Compares two compositions by the order `⪯`.
pub fn order_compare(nu: &Composition, mu: &Composition) -> Result<OrderRelation> {
    if nu.n() != mu.n() {
        return Err(Error::DimensionMismatch {
            expected: mu.n(),
            got: nu.n(),
        });
    }
    if nu == mu {
        return Ok(OrderRelation::Equal);
    }
    let (np, _) = sort_to_partition(nu);
    let (mp, _) = sort_to_partition(mu);
    let (a, b) = (nu.entries(), mu.entries());
    let rel = if np == mp {
        if in_positive_root_cone(a, b) {
            OrderRelation::Less
        } else if in_positive_root_cone(b, a) {
            OrderRelation::Greater
        } else {
            OrderRelation::Incomparable
        }
    } else if dominance_less(np.entries(), mp.entries()) {
        OrderRelation::Less
    } else if dominance_less(mp.entries(), np.entries()) {
        OrderRelation::Greater
    } else {
        OrderRelation::Incomparable
    };
    Ok(rel)
}

/// Total order extending `⪯` within each degree: sorted partition
/// (lexicographic), then the composition itself (lexicographic). Larger
/// keys are higher in the order.
pub fn triangular_key(mu: &Composition) -> (u32, Vec<u32>, Vec<u32>) {
    let (p, _) = sort_to_partition(mu);
    (
        mu.degree(),
        p.entries().to_vec(),
        mu.entries().to_vec(),
    )
}

/// One element of a Weyl orbit together with its shortest word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitElement {
    pub composition: Composition,
    pub word: ReducedWord,
}

/// All distinct rearrangements of `μ⁺`, ordered by word length then lexicographically decreasing.
pub fn weyl_orbit(mu_plus: &Partition) -> Vec<OrbitElement> {
    let mut seen: BTreeMap<(usize, std::cmp::Reverse<Composition>), ReducedWord> = BTreeMap::new();
    let mut frontier = vec![mu_plus.as_composition().clone()];
    let mut visited: BTreeSet<Composition> = frontier.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        let (_, word) = sort_to_partition(&c);
        for j in 0..c.n().saturating_sub(1) {
            let s = c.reflect(j);
            if visited.insert(s.clone()) {
                frontier.push(s);
            }
        }
        seen.insert((word.len(), std::cmp::Reverse(c)), word);
    }
    seen.into_iter()
        .map(|((_, std::cmp::Reverse(composition)), word)| OrbitElement { composition, word })
        .collect()
}

/// `ρ`, `δ` and `ρ_k^{(B)}` for the given rank and couplings.
pub fn special_vectors(n: usize, params: &Params) -> (RootVector, RootVector, RootVector) {
    let two = Rational::from_integer(2.into());
    let rho = (0..n)
        .map(|j| Rational::new((n as i64 - 2 * j as i64 - 1).into(), 2.into()))
        .collect();
    let delta = (0..n)
        .map(|j| Rational::from_integer(((n - 1 - j) as i64).into()))
        .collect();
    let rho_b = (0..n)
        .map(|j| {
            &two * params.a() * Rational::from_integer(((n - 1 - j) as i64).into()) + params.b()
        })
        .collect();
    (
        RootVector { coords: rho },
        RootVector { coords: delta },
        RootVector { coords: rho_b },
    )
}

/// Length generating function of `S_N`, coefficients in ascending powers of `t`.
pub fn poincare_polynomial(n: usize) -> Result<Vec<u64>> {
    poincare_polynomial_bounded(n, ENUMERATION_BOUND)
}

pub fn poincare_polynomial_bounded(n: usize, bound: usize) -> Result<Vec<u64>> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let max_len = n * n.saturating_sub(1) / 2;
    let mut coeffs = vec![0u64; max_len + 1];
    for p in Perm::all(n.max(1)) {
        coeffs[p.inversions()] += 1;
    }
    Ok(coeffs)
}

/// `∏_{j=1}^{N} (1 + t + … + t^{j−1})`, for cross-checking the enumeration.
pub fn poincare_product_formula(n: usize) -> Vec<u64> {
    let mut acc = vec![1u64];
    for j in 1..=n {
        let mut next = vec![0u64; acc.len() + j - 1];
        for (k, c) in acc.iter().enumerate() {
            for l in 0..j {
                next[k + l] += c;
            }
        }
        acc = next;
    }
    acc
}

/// Evaluates an integer-coefficient polynomial at a rational point.
pub fn eval_poly_u64(coeffs: &[u64], t: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
        acc * t + Rational::from_integer((*c).into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn sorting_small_cases() {
        let (p, w) = sort_to_partition(&c(&[1, 0]));
        assert_eq!(p.entries(), &[1, 0]);
        assert!(w.is_empty());
        let (p, w) = sort_to_partition(&c(&[0, 1]));
        assert_eq!(p.entries(), &[1, 0]);
        assert_eq!(w.letters(), &[0]);
    }

    #[test]
    fn sorting_matches_brute_force_shortest() {
        // brute force: shortest permutation w with w(μ⁺) = μ
        let mu = c(&[0, 2, 1]);
        let plus = [2u32, 1, 0];
        let best = Perm::all(3)
            .into_iter()
            .filter(|p| p.act(&plus) == mu.entries())
            .min_by_key(|p| p.inversions())
            .unwrap();
        let (p, w) = sort_to_partition(&mu);
        assert_eq!(p.entries(), &plus);
        assert_eq!(w.to_perm(), best);
        assert_eq!(w.len(), 2);
        assert_eq!(w.apply_composition(p.as_composition()), mu);
    }

    #[test]
    fn inversion_sets() {
        assert!(inversion_set(&ReducedWord::identity(3)).unwrap().is_empty());
        let w = ReducedWord::new(2, vec![0]).unwrap();
        let set = inversion_set(&w).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&PosRoot { i: 0, j: 1 }.to_vector(2)));

        let w = ReducedWord::new(3, vec![0, 1]).unwrap();
        let set = inversion_set(&w).unwrap();
        let direct: BTreeSet<RootVector> =
            w.to_perm().inversion_roots().iter().map(|r| r.to_vector(3)).collect();
        assert_eq!(set, direct);
        let expected: BTreeSet<RootVector> = [PosRoot { i: 0, j: 1 }, PosRoot { i: 0, j: 2 }]
            .iter()
            .map(|r| r.to_vector(3))
            .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn non_reduced_word_rejected() {
        assert!(matches!(
            ReducedWord::new(3, vec![0, 0]),
            Err(Error::NonReducedWord { .. })
        ));
        assert!(matches!(
            ReducedWord::new(3, vec![2]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn braid_equivalent_words_share_inversion_set() {
        let w1 = ReducedWord::new(3, vec![0, 1, 0]).unwrap();
        let w2 = ReducedWord::new(3, vec![1, 0, 1]).unwrap();
        assert_eq!(w1.to_perm(), w2.to_perm());
        assert_eq!(inversion_set(&w1).unwrap(), inversion_set(&w2).unwrap());
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            order_compare(&c(&[1, 1]), &c(&[2, 0])).unwrap(),
            OrderRelation::Less
        );
        assert_eq!(
            order_compare(&c(&[0, 1]), &c(&[1, 0])).unwrap(),
            OrderRelation::Less
        );
        assert_eq!(
            order_compare(&c(&[2, 0, 0]), &c(&[1, 1, 1])).unwrap(),
            OrderRelation::Incomparable
        );
        assert_eq!(
            order_compare(&c(&[3, 0, 0]), &c(&[0, 2, 1])).unwrap(),
            OrderRelation::Greater
        );
    }

    #[test]
    fn orbits() {
        assert_eq!(weyl_orbit(&Partition::zero(2)).len(), 1);
        let o = weyl_orbit(&Partition::new(vec![1, 0]).unwrap());
        let comps: Vec<_> = o.iter().map(|e| e.composition.clone()).collect();
        assert_eq!(comps, vec![c(&[1, 0]), c(&[0, 1])]);
        assert_eq!(weyl_orbit(&Partition::new(vec![2, 1, 0]).unwrap()).len(), 6);
        assert_eq!(weyl_orbit(&Partition::new(vec![2, 1, 1, 0]).unwrap()).len(), 12);
    }

    #[test]
    fn special_vector_values() {
        let p = Params::a_type(Rational::new(1.into(), 2.into()), Rational::one()).unwrap();
        let (rho, delta, _) = special_vectors(2, &p);
        assert_eq!(rho.coords, vec![Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into())]);
        assert_eq!(delta.coords, vec![Rational::one(), Rational::zero()]);
        let (rho3, _, _) = special_vectors(3, &p);
        assert_eq!(rho3.coords, vec![Rational::one(), Rational::zero(), -Rational::one()]);
        let pb = Params::b_type(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 3.into()),
            Rational::one(),
        )
        .unwrap();
        let (_, _, rb) = special_vectors(2, &pb);
        assert_eq!(rb.coords, vec![Rational::new(4.into(), 3.into()), Rational::new(1.into(), 3.into())]);
    }

    #[test]
    fn poincare_small() {
        assert_eq!(poincare_polynomial(1).unwrap(), vec![1]);
        assert_eq!(poincare_polynomial(2).unwrap(), vec![1, 1]);
        assert_eq!(poincare_polynomial(3).unwrap(), vec![1, 2, 2, 1]);
        for n in 1..=6 {
            assert_eq!(poincare_polynomial(n).unwrap(), poincare_product_formula(n));
        }
        assert!(matches!(poincare_polynomial(9), Err(Error::BoundExceeded { .. })));
        let w4 = poincare_polynomial(4).unwrap();
        assert_eq!(eval_poly_u64(&w4, &Rational::one()), Rational::from_integer(24.into()));
    }
}
