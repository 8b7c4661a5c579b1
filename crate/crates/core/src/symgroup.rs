//! Permutations, cycle types and hook characters of the symmetric group.
//!
//! Characters are evaluated with the Murnaghan–Nakayama rule specialised to
//! hook shapes `(k, 1^(n-k))`. A hook has at most three removable rim hooks
//! of a given length `l`: the last `l` cells of the arm, the bottom `l`
//! cells of the leg, or the whole diagram when `l = n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Largest `n` for which all of `S_n` may be enumerated.
pub const MAX_ENUMERATION: usize = 10;

/// A permutation of `{0, .., n-1}`; displayed 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameter(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// The permutation on the points outside `cycle`, relabelled to
    /// `0..n-|cycle|` in increasing order. `cycle` must be a union of cycles.
    pub fn remove_points(&self, points: &[usize]) -> Permutation {
        let n = self.len();
        let mut removed = vec![false; n];
        for &p in points {
            removed[p] = true;
        }
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if !removed[i] {
                relabel[i] = next;
                next += 1;
            }
        }
        let images = (0..n)
            .filter(|&i| !removed[i])
            .map(|i| relabel[self.images[i]])
            .collect();
        Permutation { images }
    }

    /// Rearranges to the lexicographically next permutation. Returns false
    /// (leaving the permutation unchanged) at the last one.
    pub fn advance(&mut self) -> bool {
        let a = &mut self.images;
        let n = a.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }

    /// The permutation of lexicographic rank `rank` in `S_n`.
    pub fn unrank(n: usize, mut rank: u64) -> Permutation {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial(i);
            let idx = (rank / f) as usize;
            rank %= f;
            images.push(pool.remove(idx));
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        for c in self.cycles() {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Conjugacy class label: cycle lengths in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Sorts the given lengths; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    p.cycle_type()
}

/// Lexicographic stream of all `n!` permutations of `S_n`.
pub struct Permutations {
    current: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        if !cur.advance() {
            self.current = None;
        }
        Some(out)
    }
}

pub fn permutations(n: usize) -> Result<Permutations> {
    if n > MAX_ENUMERATION {
        return Err(Error::SizeLimit {
            what: "symmetric group degree",
            got: n,
            limit: MAX_ENUMERATION,
        });
    }
    Ok(Permutations {
        current: Some(Permutation::identity(n)),
    })
}

/// Murnaghan–Nakayama on the hook `(k, 1^(size-k))`, removing `parts` in the
/// given order. `size = 0` is the residual left after a whole hook was
/// stripped; it carries the value `(-1)^(k-1)` for `k >= 1` (see
/// [`split_character`]).
fn mn_hook(k: i64, size: usize, parts: &[usize]) -> i64 {
    let Some((&l, rest)) = parts.split_first() else {
        return residual(k, size);
    };
    let s = size as i64;
    if k < 1 || k > s {
        return 0;
    }
    let l_i = l as i64;
    if l == size {
        // whole hook, height = leg length
        return if (s - k) % 2 == 0 { 1 } else { -1 } * mn_hook(1, 0, rest);
    }
    let mut total = 0;
    if l_i < k {
        total += mn_hook(k - l_i, size - l, rest);
    }
    if l_i <= s - k {
        let sign = if (l_i - 1) % 2 == 0 { 1 } else { -1 };
        total += sign * mn_hook(k, size - l, rest);
    }
    total
}

fn residual(k: i64, size: usize) -> i64 {
    match (size, k) {
        (0, k) if k >= 1 => {
            if (k - 1) % 2 == 0 {
                1
            } else {
                -1
            }
        }
        (0, _) => 0,
        // unreachable with consistent inputs: parts exhausted but cells remain
        _ => 0,
    }
}

/// Character `χ_(k,1^(n-k))` on the class `ct`. Zero when `k < 1` or `k > n`.
pub fn hook_character(n: usize, k: i64, ct: &CycleType) -> Result<BigInt> {
    check_class(n, ct)?;
    if n == 0 || k < 1 || k > n as i64 {
        return Ok(BigInt::from(0));
    }
    Ok(BigInt::from(mn_hook(k, n, ct.parts())))
}

/// The value the rim-hook splitting rules assign to index `k` on a class of
/// `S_n`.
///
/// For `n >= 1` this is exactly [`hook_character`]. For `n = 0` it is the
/// residual left when a cycle consumes every remaining cell: `(-1)^(k-1)`
/// for `k >= 1` and `0` otherwise. With this value the arm/leg splitting
/// `χ_k(σ) = χ_{k-l}(σ') + (-1)^(l-1) χ_k(σ')` also holds when `σ'` is empty.
pub fn split_character(n: usize, k: i64, ct: &CycleType) -> Result<BigInt> {
    check_class(n, ct)?;
    if n == 0 {
        return Ok(BigInt::from(residual(k, 0)));
    }
    hook_character(n, k, ct)
}

fn check_class(n: usize, ct: &CycleType) -> Result<()> {
    if ct.size() != n {
        return Err(Error::InconsistentCycleType {
            n,
            parts: ct.parts().to_vec(),
        });
    }
    Ok(())
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<CycleType> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if rem == 0 {
            out.push(CycleType { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Hook character rows `k = 1..=n` (outer) against [`partitions`]`(n)`.
pub fn hook_character_table(n: usize) -> Result<(Vec<CycleType>, Vec<Vec<BigInt>>)> {
    if n > MAX_ENUMERATION * 2 {
        return Err(Error::SizeLimit {
            what: "character table degree",
            got: n,
            limit: MAX_ENUMERATION * 2,
        });
    }
    let classes = partitions(n);
    let rows = (1..=n as i64)
        .map(|k| {
            classes
                .iter()
                .map(|ct| hook_character(n, k, ct))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((classes, rows))
}

/// Memo of full hook-character rows `[χ_1, .., χ_n]` per cycle type.
///
/// Internally synchronised, so one cache may be shared by the worker
/// threads of a single permutation sum.
#[derive(Default)]
pub struct CharacterCache {
    rows: Mutex<HashMap<CycleType, Arc<Vec<Rational>>>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_(k,1^(n-k))(ct)` for `k = 1..=n`, index `k-1`.
    pub fn row(&self, ct: &CycleType) -> Arc<Vec<Rational>> {
        if let Some(row) = self.rows.lock().unwrap().get(ct) {
            return Arc::clone(row);
        }
        let n = ct.size();
        let row: Arc<Vec<Rational>> = Arc::new(
            (1..=n as i64)
                .map(|k| Rational::from(mn_hook(k, n, ct.parts())))
                .collect(),
        );
        self.rows
            .lock()
            .unwrap()
            .entry(ct.clone())
            .or_insert(row)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.rows.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(p: &[usize]) -> CycleType {
        CycleType::new(p.to_vec())
    }

    fn chi(n: usize, k: i64, p: &[usize]) -> i64 {
        hook_character(n, k, &ct(p)).unwrap().try_into().unwrap()
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        let t = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(t.cycle_type().parts(), &[2, 1, 1]);
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(c.cycle_type().parts(), &[3]);
        assert_eq!(c.to_string(), "(1 2 3)");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(3).unwrap().count(), 6);
        let all: Vec<_> = permutations(0).unwrap().collect();
        assert_eq!(all, vec![Permutation::identity(0)]);
        let four: std::collections::HashSet<_> = permutations(4).unwrap().collect();
        assert_eq!(four.len(), 24);
        assert!(matches!(
            permutations(11),
            Err(Error::SizeLimit { got: 11, .. })
        ));
    }

    #[test]
    fn unrank_matches_enumeration_order() {
        for (r, p) in permutations(5).unwrap().enumerate() {
            assert_eq!(Permutation::unrank(5, r as u64), p);
        }
    }

    #[test]
    fn s3_values() {
        assert_eq!(chi(3, 2, &[1, 1, 1]), 2);
        assert_eq!(chi(3, 2, &[2, 1]), 0);
        assert_eq!(chi(3, 2, &[3]), -1);
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=7 {
            for class in partitions(n) {
                assert_eq!(chi(n, n as i64, class.parts()), 1);
                let sign = if (n - class.num_parts()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(chi(n, 1, class.parts()), sign);
            }
        }
    }

    #[test]
    fn out_of_range_k_is_zero() {
        assert_eq!(chi(3, 0, &[3]), 0);
        assert_eq!(chi(3, 4, &[1, 1, 1]), 0);
    }

    #[test]
    fn inconsistent_class_rejected() {
        assert!(matches!(
            hook_character(4, 2, &ct(&[2, 1])),
            Err(Error::InconsistentCycleType { .. })
        ));
    }

    #[test]
    fn s4_hook_rows() {
        // classes [4], [3,1], [2,2], [2,1,1], [1^4]
        let classes = partitions(4);
        let row = |k: i64| -> Vec<i64> { classes.iter().map(|c| chi(4, k, c.parts())).collect() };
        assert_eq!(row(4), vec![1, 1, 1, 1, 1]);
        assert_eq!(row(3), vec![-1, 0, -1, 1, 3]);
        assert_eq!(row(2), vec![1, 0, -1, -1, 3]);
        assert_eq!(row(1), vec![-1, 1, 1, -1, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn cache_agrees_with_direct() {
        let cache = CharacterCache::new();
        for class in partitions(6) {
            let row = cache.row(&class);
            for k in 1..=6 {
                assert_eq!(
                    row[k - 1],
                    Rational::from(hook_character(6, k as i64, &class).unwrap())
                );
            }
        }
        assert_eq!(cache.len(), 11);
    }

    #[test]
    fn residual_convention() {
        let e = ct(&[]);
        assert_eq!(split_character(0, 1, &e).unwrap(), BigInt::from(1));
        assert_eq!(split_character(0, 2, &e).unwrap(), BigInt::from(-1));
        assert_eq!(split_character(0, 0, &e).unwrap(), BigInt::from(0));
        assert_eq!(hook_character(0, 1, &e).unwrap(), BigInt::from(0));
    }
}
