//! Non-intersecting lattice path counting via determinants.
//!
//! Families of non-intersecting paths with unit east/north steps are counted
//! by the classical path-matrix determinant: entry `(i, j)` is the number of
//! paths from start `i` to end `j`, and when only one pairing of starts to
//! ends admits a non-intersecting family, the determinant equals the number
//! of such families.
//!
//! Ends are paired with starts in boundary order (largest `x` first, then
//! smallest `y`), which makes the determinants here non-negative counts.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::binomial;
use crate::diagram::Partition;
use crate::error::Error;
use crate::poly::{binomial_poly, RatPoly};

/// Exact integer determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    for row in &a {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut denom = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &denom).is_zero());
                a[i][j] = num / &denom;
            }
            a[i][k] = BigInt::zero();
        }
        denom = a[k][k].clone();
    }
    let det = a.pop().unwrap().pop().unwrap();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a small polynomial matrix by Laplace expansion along the
/// first row.
pub fn laplace_det(a: &[Vec<RatPoly>]) -> RatPoly {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return RatPoly::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut det = RatPoly::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RatPoly>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = a[0][j].mul(&laplace_det(&minor));
        if j % 2 == 0 {
            det = det.add(&term);
        } else {
            det = det.sub(&term);
        }
    }
    det
}

/// Number of east/north lattice paths from `a` to `b`.
fn paths(a: (i64, i64), b: (i64, i64)) -> BigInt {
    let dx = b.0 - a.0;
    let dy = b.1 - a.1;
    if dx < 0 || dy < 0 {
        return BigInt::zero();
    }
    binomial(dx + dy, dx)
}

/// Standard starts `A_i = (-i, i)` for `i = 1 ..= count` on the antidiagonal.
fn standard_starts(count: usize) -> Vec<(i64, i64)> {
    (1..=count as i64).map(|i| (-i, i)).collect()
}

/// Raw path-matrix determinant: the signed sum of vertex-disjoint family
/// counts over all pairings of `starts` with `ends`.
fn path_determinant(starts: &[(i64, i64)], ends: &[(i64, i64)]) -> BigInt {
    assert_eq!(starts.len(), ends.len());
    let a: Vec<Vec<BigInt>> = starts
        .iter()
        .map(|&s| ends.iter().map(|&t| paths(s, t)).collect())
        .collect();
    bareiss_det(a)
}

/// Sort ends into boundary order so that the non-intersecting pairing with
/// [`standard_starts`] is the identity: since every start lies on the
/// antidiagonal `x + y = 0`, the ends must be taken by decreasing diagonal
/// coordinate `x - y` (south-east first). The geometries used here never
/// produce ties.
fn sort_ends<T>(ends: &mut Vec<((i64, i64), T)>) {
    ends.sort_by_key(|&((x, y), _)| -(x - y));
    debug_assert!(
        ends.windows(2).all(|w| w[0].0 .0 - w[0].0 .1 != w[1].0 .0 - w[1].0 .1),
        "ambiguous end order"
    );
}

/// Count non-intersecting path families from the antidiagonal starts
/// `A_1, ..., A_{d+e}` to the mixed boundary:
///
/// * `d` ends on the top row `y = h + d + e` at `x = lambda_j - j - e`;
/// * `e` ends on the column `x = k - 1` at `y = mu_j + e - j + 1`.
///
/// This is the two-sided region count appearing in the two-matching formula.
/// Requires `lambda` inside the `d x d` box and `mu` inside the `e x e` box.
/// With one block absent (`mu` empty or `d = 0`), or with `h >= 2` as in
/// every use by the two-matching formula, the boundary-order pairing is the
/// relevant one and the determinant is a non-negative family count; the
/// function asserts non-negativity and panics on degenerate parameters
/// (small `h` with both blocks present) where several pairings compete.
pub fn count_r(
    lambda: &Partition,
    mu: &Partition,
    d: usize,
    e: usize,
    h: i64,
    k: i64,
) -> Result<BigInt, Error> {
    if !lambda.fits_in_box(d, d) {
        return Err(Error::Invalid(alloc::format!(
            "first shape {} must fit in the {d} x {d} box",
            lambda.display()
        )));
    }
    if !mu.fits_in_box(e, e) {
        return Err(Error::Invalid(alloc::format!(
            "second shape {} must fit in the {e} x {e} box",
            mu.display()
        )));
    }
    if h < 0 || k < 1 {
        return Err(Error::Invalid("require h >= 0 and k >= 1".into()));
    }
    let ends = r_ends(lambda, mu, d, e, h, k);
    let det = path_determinant(&standard_starts(d + e), &ends);
    assert!(!det.is_negative(), "path determinant must be non-negative");
    Ok(det)
}

fn validate_subset(set: &[usize], max: usize, name: &str) -> Result<(), Error> {
    for w in set.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Invalid(alloc::format!(
                "{name} must be strictly increasing"
            )));
        }
    }
    if let Some(&last) = set.last() {
        let first = set[0];
        if first < 1 || last > max {
            return Err(Error::Invalid(alloc::format!(
                "{name} must lie within 1..={max}"
            )));
        }
    }
    Ok(())
}

/// End points of the hexagon path family for index sets `E` and `F`.
///
/// `E` selects ends on the top row `y = m + 1` at `x = -d + j`; the
/// complement of `F` in `1..=d` selects ends on the antidiagonal
/// `x + y = m` at `x = d - j - 1`.
fn hexagon_ends(e_set: &[usize], f_set: &[usize], d: usize, m: i64) -> Vec<(i64, i64)> {
    let di = d as i64;
    let mut ends: Vec<(i64, i64)> = Vec::new();
    for &j in e_set {
        ends.push((-di + j as i64, m + 1));
    }
    for j in 1..=d {
        if !f_set.contains(&j) {
            let ji = j as i64;
            ends.push((di - ji - 1, m - di + ji + 1));
        }
    }
    ends
}

pub(crate) fn validate_n_sets(e_set: &[usize], f_set: &[usize], d: usize) -> Result<(), Error> {
    if d < 1 {
        return Err(Error::Invalid("require d >= 1".into()));
    }
    validate_subset(e_set, d.saturating_sub(2), "E")?;
    validate_subset(f_set, d, "F")?;
    if f_set.len() != e_set.len() + 1 {
        return Err(Error::Invalid(alloc::format!(
            "need |F| = |E| + 1, got |E| = {}, |F| = {}",
            e_set.len(),
            f_set.len()
        )));
    }
    Ok(())
}

/// The hexagon-family count `N(E, F, m)` for a grid parameter `d`: paths from
/// `d - 1` antidiagonal starts to the mixed ends of [`hexagon_ends`]. As a
/// polynomial in `m` it vanishes mod `m` except for the staircase pair
/// `E = {1..d-2}`, `F = {1..d-1}`, whose count is identically `1`.
///
/// The numeric value agrees with [`count_n_poly`] for `m >= d - 2`; below
/// that the truncated path counts fall short of the polynomial.
pub fn count_n(e_set: &[usize], f_set: &[usize], d: usize, m: i64) -> Result<BigInt, Error> {
    validate_n_sets(e_set, f_set, d)?;
    if m < 0 {
        return Err(Error::Invalid("require m >= 0".into()));
    }
    let mut ends: Vec<((i64, i64), ())> = hexagon_ends(e_set, f_set, d, m)
        .into_iter()
        .map(|p| (p, ()))
        .collect();
    sort_ends(&mut ends);
    let ends: Vec<(i64, i64)> = ends.into_iter().map(|(p, ())| p).collect();
    let starts = standard_starts(d - 1);
    let det = path_determinant(&starts, &ends);
    assert!(!det.is_negative(), "path determinant must be non-negative");
    Ok(det)
}

/// [`count_n`] as an exact polynomial in `m`.
///
/// Entries are binomial polynomials in `m`; the determinant is expanded
/// symbolically (the matrices are at most `(d-1) x (d-1)`).
pub fn count_n_poly(e_set: &[usize], f_set: &[usize], d: usize) -> Result<RatPoly, Error> {
    validate_n_sets(e_set, f_set, d)?;
    let di = d as i64;
    // Column descriptors: (end point at a formal large m, entry builder).
    // Sorting must agree with the numeric order for every m in range, so we
    // sort by the same key evaluated at a fixed reference value; the relative
    // x-order of ends is independent of m and ties in x never occur between
    // columns whose y-order depends on m.
    enum Col {
        Top(i64),  // j in E: entry C(m + 1 + j - d, j + i - d)
        Anti(i64), // j not in F: entry C(m, d - j - 1 + i)
    }
    let mut cols: Vec<((i64, i64), Col)> = Vec::new();
    let reference_m = 4 * di + 4;
    for &j in e_set {
        let ji = j as i64;
        cols.push(((-di + ji, reference_m + 1), Col::Top(ji)));
    }
    for j in 1..=d {
        if !f_set.contains(&j) {
            let ji = j as i64;
            cols.push(((di - ji - 1, reference_m - di + ji + 1), Col::Anti(ji)));
        }
    }
    sort_ends(&mut cols);
    let rows = d - 1;
    let a: Vec<Vec<RatPoly>> = (1..=rows as i64)
        .map(|i| {
            cols.iter()
                .map(|(_, col)| match *col {
                    Col::Top(j) => binomial_poly(1 + j - di, j + i - di),
                    Col::Anti(j) => binomial_poly(0, di - j - 1 + i),
                })
                .collect()
        })
        .collect();
    Ok(laplace_det(&a))
}

/// Brute-force count of vertex-disjoint east/north path families connecting
/// `starts[i]` to `ends[i]` for every `i`. Independent of the determinant
/// machinery; exponential, for cross-checks on tiny instances only.
pub fn count_families_brute(starts: &[(i64, i64)], ends: &[(i64, i64)]) -> BigInt {
    assert_eq!(starts.len(), ends.len());
    fn extend(
        starts: &[(i64, i64)],
        ends: &[(i64, i64)],
        i: usize,
        at: (i64, i64),
        visited: &mut Vec<(i64, i64)>,
        count: &mut BigInt,
    ) {
        let goal = ends[i];
        if at == goal {
            if i + 1 == starts.len() {
                *count += 1;
                return;
            }
            let next = starts[i + 1];
            if !visited.contains(&next) {
                visited.push(next);
                extend(starts, ends, i + 1, next, visited, count);
                visited.pop();
            }
            return;
        }
        for step in [(1, 0), (0, 1)] {
            let to = (at.0 + step.0, at.1 + step.1);
            if to.0 > goal.0 || to.1 > goal.1 || visited.contains(&to) {
                continue;
            }
            visited.push(to);
            extend(starts, ends, i, to, visited, count);
            visited.pop();
        }
    }
    let mut count = BigInt::zero();
    if starts.is_empty() {
        return BigInt::one();
    }
    let mut visited = alloc::vec![starts[0]];
    extend(starts, ends, 0, starts[0], &mut visited, &mut count);
    count
}

/// The ends of the two-boundary family of [`count_r`], sorted in the pairing
/// order used by the determinant.
pub fn r_ends(lambda: &Partition, mu: &Partition, d: usize, e: usize, h: i64, k: i64) -> Vec<(i64, i64)> {
    let (di, ei) = (d as i64, e as i64);
    let mut ends: Vec<((i64, i64), ())> = Vec::new();
    for j in 1..=di {
        let lj = lambda.part(j as usize) as i64;
        ends.push(((lj - j - ei, h + di + ei), ()));
    }
    for j in 1..=ei {
        let mj = mu.part(j as usize) as i64;
        ends.push(((k - 1, mj + ei - j + 1), ()));
    }
    sort_ends(&mut ends);
    ends.into_iter().map(|(p, ())| p).collect()
}

/// The staircase index pair `E = {1..d-2}`, `F = {1..d-1}` whose hexagon
/// count is identically one (`F = {1}` in the degenerate case `d = 1`).
pub fn staircase_pair(d: usize) -> (Vec<usize>, Vec<usize>) {
    if d == 1 {
        (Vec::new(), alloc::vec![1])
    } else {
        ((1..=d - 2).collect(), (1..d).collect())
    }
}

/// All valid index pairs `(E, F)` for a given `d`.
pub fn all_n_pairs(d: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let e_universe: Vec<usize> = (1..=d.saturating_sub(2)).collect();
    let f_universe: Vec<usize> = (1..=d).collect();
    for e_mask in 0u32..1 << e_universe.len() {
        let e_set: Vec<usize> = e_universe
            .iter()
            .enumerate()
            .filter(|&(b, _)| e_mask >> b & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        for f_mask in 0u32..1 << f_universe.len() {
            let f_set: Vec<usize> = f_universe
                .iter()
                .enumerate()
                .filter(|&(b, _)| f_mask >> b & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if f_set.len() == e_set.len() + 1 {
                out.push((e_set.clone(), f_set));
            }
        }
    }
    out
}
