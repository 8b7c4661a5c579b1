//! Brute-force hook immanants by summation over `S_n`, with independent
//! determinant (fraction-free elimination) and permanent (Ryser) routes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{Poly, Rational};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graphs::RationalMatrix;
use crate::symgroup::{factorial, CharacterCache, Permutation, MAX_ENUMERATION};

/// Index `k` of the hook `(k, 1^(n-k))`. Any integer is accepted; values
/// outside `1..=n` select the zero function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookIndex(pub i64);

impl HookIndex {
    pub fn in_range(self, order: usize) -> bool {
        self.0 >= 1 && self.0 <= order as i64
    }
}

impl From<i64> for HookIndex {
    fn from(k: i64) -> Self {
        HookIndex(k)
    }
}

/// Largest order accepted by [`permanent_crosscheck`].
pub const MAX_RYSER: usize = 12;

fn check_oracle_size(m: &RationalMatrix) -> Result<()> {
    if m.order() > MAX_ENUMERATION {
        return Err(Error::SizeLimit {
            what: "matrix order for permutation sum",
            got: m.order(),
            limit: MAX_ENUMERATION,
        });
    }
    Ok(())
}

/// Rank ranges `[start, end)` covering `S_n` in lexicographic order.
fn rank_chunks(n: usize) -> Vec<(u64, u64)> {
    let total = factorial(n);
    let chunk = if n >= 3 { factorial(n - 2) } else { total };
    (0..total)
        .step_by(chunk as usize)
        .map(|s| (s, (s + chunk).min(total)))
        .collect()
}

trait Accumulator: Clone + Send + Sync {
    fn zero() -> Self;
    fn absorb(&mut self, other: Self);
}

impl Accumulator for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn absorb(&mut self, other: Self) {
        self.add_scaled(&other, &Rational::one());
    }
}

impl Accumulator for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn absorb(&mut self, other: Self) {
        *self += other;
    }
}

/// Runs `term(σ, χ-row, acc)` over every `σ ∈ S_n`, where `χ-row[k-1]` is
/// `χ_(k,1^(n-k))(σ)` and `acc[k-1]` collects the sum for index `k`.
fn permutation_sum<T, F>(n: usize, exec: Exec, term: F) -> Vec<T>
where
    T: Accumulator,
    F: Fn(&Permutation, &[Rational], &mut [T]) + Send + Sync,
{
    let cache = CharacterCache::new();
    let partials = exec.map(rank_chunks(n), |(start, end)| {
        let mut acc = vec![T::zero(); n];
        let mut sigma = Permutation::unrank(n, start);
        for r in start..end {
            let row = cache.row(&sigma.cycle_type());
            term(&sigma, &row, &mut acc);
            if r + 1 < end {
                sigma.advance();
            }
        }
        acc
    });
    let mut total = vec![T::zero(); n];
    for part in partials {
        for (x, y) in total.iter_mut().zip(part) {
            x.absorb(y);
        }
    }
    total
}

/// `Π_i m[i][σ(i)]` restricted to the moved points, or `None` when one of
/// those entries vanishes.
fn off_diagonal_product(m: &RationalMatrix, sigma: &Permutation) -> Option<Rational> {
    let mut c = Rational::one();
    for i in 0..m.order() {
        let j = sigma.apply(i);
        if j != i {
            let e = m.get(i, j);
            if e.is_zero() {
                return None;
            }
            c *= e;
        }
    }
    Some(c)
}

/// `d_k(m)` for `k = 1..=n` (index `k-1`).
pub fn immanants_bruteforce(m: &RationalMatrix, exec: Exec) -> Result<Vec<Rational>> {
    check_oracle_size(m)?;
    let n = m.order();
    Ok(permutation_sum(
        n,
        exec,
        |sigma, chi, acc: &mut [Rational]| {
            let Some(mut prod) = off_diagonal_product(m, sigma) else {
                return;
            };
            for i in 0..n {
                if sigma.apply(i) == i {
                    prod *= m.get(i, i);
                }
            }
            if prod.is_zero() {
                return;
            }
            for (a, c) in acc.iter_mut().zip(chi) {
                if !c.is_zero() {
                    *a += &prod * c;
                }
            }
        },
    ))
}

/// `Φ_k(m, x) = d_k(x I - m)` for `k = 1..=n` (index `k-1`).
pub fn hook_polys_bruteforce(m: &RationalMatrix, exec: Exec) -> Result<Vec<Poly>> {
    check_oracle_size(m)?;
    let n = m.order();
    Ok(permutation_sum(n, exec, |sigma, chi, acc: &mut [Poly]| {
        let Some(c) = off_diagonal_product(m, sigma) else {
            return;
        };
        // entries of xI - m off the diagonal are -m[i][j]
        let moved = (0..n).filter(|&i| sigma.apply(i) != i).count();
        let mut prod = Poly::constant(if moved % 2 == 0 { c } else { -c });
        for i in 0..n {
            if sigma.apply(i) == i {
                prod = &prod * &Poly::x_minus(m.get(i, i));
            }
        }
        for (a, ch) in acc.iter_mut().zip(chi) {
            a.add_scaled(&prod, ch);
        }
    }))
}

/// Hook immanant `d_k(m) = Σ_σ χ_(k,1^(n-k))(σ) Π_i m[i][σ(i)]`.
///
/// Zero when `k` is outside `1..=n`. The `0 x 0` matrix has `d_1 = 1` and
/// `d_k = 0` otherwise.
pub fn immanant_bruteforce(m: &RationalMatrix, k: HookIndex) -> Result<Rational> {
    immanant_bruteforce_with(m, k, Exec::default())
}

pub fn immanant_bruteforce_with(m: &RationalMatrix, k: HookIndex, exec: Exec) -> Result<Rational> {
    check_oracle_size(m)?;
    if m.order() == 0 {
        return Ok(if k.0 == 1 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    if !k.in_range(m.order()) {
        return Ok(Rational::zero());
    }
    let mut all = immanants_bruteforce(m, exec)?;
    Ok(all.swap_remove(k.0 as usize - 1))
}

/// Hook immanantal polynomial `Φ_k(m, x) = d_k(x I - m)`, by brute force.
///
/// Zero when `k` is outside `1..=n`; the `0 x 0` matrix gives the constant
/// `1` for `k = 1` and zero otherwise.
pub fn hook_poly_bruteforce(m: &RationalMatrix, k: HookIndex) -> Result<Poly> {
    hook_poly_bruteforce_with(m, k, Exec::default())
}

pub fn hook_poly_bruteforce_with(m: &RationalMatrix, k: HookIndex, exec: Exec) -> Result<Poly> {
    check_oracle_size(m)?;
    if m.order() == 0 {
        return Ok(if k.0 == 1 { Poly::one() } else { Poly::zero() });
    }
    if !k.in_range(m.order()) {
        return Ok(Poly::zero());
    }
    let mut all = hook_polys_bruteforce(m, exec)?;
    Ok(all.swap_remove(k.0 as usize - 1))
}

/// Determinant by Bareiss fraction-free elimination after clearing
/// denominators row by row.
pub fn determinant_crosscheck(m: &RationalMatrix) -> Rational {
    let n = m.order();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let lcm = m.row(i).iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            scale *= &lcm;
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Rational::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = Rational::from(a[n - 1][n - 1].clone() * sign);
    det / Rational::from(scale)
}

/// Permanent by Ryser's inclusion–exclusion over column subsets, visited in
/// Gray-code order.
pub fn permanent_crosscheck(m: &RationalMatrix) -> Result<Rational> {
    let n = m.order();
    if n > MAX_RYSER {
        return Err(Error::SizeLimit {
            what: "matrix order for Ryser permanent",
            got: n,
            limit: MAX_RYSER,
        });
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut row_sums = vec![Rational::zero(); n];
    let mut subset = 0u64;
    let mut total = Rational::zero();
    for step in 1u64..(1 << n) {
        let j = step.trailing_zeros() as usize;
        subset ^= 1 << j;
        let adding = subset >> j & 1 == 1;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += m.get(i, j);
            } else {
                *s -= m.get(i, j);
            }
        }
        let prod: Rational = row_sums.iter().cloned().product();
        if subset.count_ones().is_multiple_of(2) {
            total += prod;
        } else {
            total -= &prod;
        }
    }
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_h_graph, families, MatrixParams};

    fn r(x: i64) -> Rational {
        Rational::from(x)
    }

    fn lap_k3() -> RationalMatrix {
        build_h_graph(&families::complete(3).unwrap(), &MatrixParams::laplacian())
    }

    fn adj_k2() -> RationalMatrix {
        build_h_graph(&families::complete(2).unwrap(), &MatrixParams::adjacency())
    }

    #[test]
    fn laplacian_k3_immanants() {
        let m = lap_k3();
        assert_eq!(immanant_bruteforce(&m, HookIndex(1)).unwrap(), r(0));
        assert_eq!(immanant_bruteforce(&m, HookIndex(2)).unwrap(), r(18));
        assert_eq!(immanant_bruteforce(&m, HookIndex(3)).unwrap(), r(12));
        assert_eq!(immanant_bruteforce(&m, HookIndex(5)).unwrap(), r(0));
        assert_eq!(immanant_bruteforce(&m, HookIndex(0)).unwrap(), r(0));
    }

    #[test]
    fn adjacency_k2_polys() {
        let m = adj_k2();
        assert_eq!(
            hook_poly_bruteforce(&m, HookIndex(1)).unwrap(),
            Poly::from_ints(&[-1, 0, 1])
        );
        let phi2 = hook_poly_bruteforce(&m, HookIndex(2)).unwrap();
        assert_eq!(phi2, Poly::from_ints(&[1, 0, 1]));
        assert_eq!(
            phi2.eval(&r(0)),
            immanant_bruteforce(&m, HookIndex(2)).unwrap()
        );
    }

    #[test]
    fn empty_matrix_convention() {
        let e = RationalMatrix::zeros(0);
        assert_eq!(immanant_bruteforce(&e, HookIndex(1)).unwrap(), r(1));
        assert_eq!(immanant_bruteforce(&e, HookIndex(2)).unwrap(), r(0));
        assert_eq!(hook_poly_bruteforce(&e, HookIndex(1)).unwrap(), Poly::one());
        assert!(hook_poly_bruteforce(&e, HookIndex(0)).unwrap().is_zero());
    }

    #[test]
    fn size_limit() {
        let big = RationalMatrix::identity(11);
        assert!(matches!(
            immanant_bruteforce(&big, HookIndex(1)),
            Err(Error::SizeLimit { got: 11, .. })
        ));
        assert!(matches!(
            permanent_crosscheck(&RationalMatrix::identity(13)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant_crosscheck(&lap_k3()), r(0));
        assert_eq!(determinant_crosscheck(&RationalMatrix::identity(4)), r(1));
        assert_eq!(determinant_crosscheck(&adj_k2()), r(-1));
        let m = RationalMatrix::from_rows(vec![
            vec![Rational::new(1, 2).unwrap(), r(3)],
            vec![r(0), Rational::new(2, 3).unwrap()],
        ])
        .unwrap();
        assert_eq!(determinant_crosscheck(&m), Rational::new(1, 3).unwrap());
        // pivoting needed
        let p = RationalMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).unwrap();
        assert_eq!(determinant_crosscheck(&p), r(-5));
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(permanent_crosscheck(&lap_k3()).unwrap(), r(12));
        let ones = RationalMatrix::from_int_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(permanent_crosscheck(&ones).unwrap(), r(6));
        for n in 0..6 {
            assert_eq!(
                permanent_crosscheck(&RationalMatrix::identity(n)).unwrap(),
                r(1)
            );
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let m = build_h_graph(&families::cycle(6).unwrap(), &MatrixParams::from_ints(2, 5));
        assert_eq!(
            hook_polys_bruteforce(&m, Exec::Sequential).unwrap(),
            hook_polys_bruteforce(&m, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn leading_coefficient_is_hook_dimension() {
        let m = build_h_graph(&families::path(5).unwrap(), &MatrixParams::laplacian());
        let polys = hook_polys_bruteforce(&m, Exec::Sequential).unwrap();
        let binom = [1, 4, 6, 4, 1];
        for (p, b) in polys.iter().zip(binom) {
            assert_eq!(p.degree(), Some(5));
            assert_eq!(p.leading_coefficient().unwrap(), &r(b));
        }
    }
}
