//! Polynomial assembly for the loop-count expansions.
//!
//! The grid counts `A_X(m)` agree with polynomials in `m`. Three routes
//! produce those polynomials here:
//!
//! * [`a_poly_main`] — the nested-placement expansion: a hook-content
//!   polynomial for the shape of `X` plus triangle-weighted hook-content
//!   polynomials for the strictly smaller shapes.
//! * [`a_poly_corner`] — the corner-placement expansion: corner-triangle
//!   counts paired with interpolated pentagon determinants.
//! * [`a_poly_squeeze`] — the two-sided expansion for a pair of matchings
//!   placed on opposite corners, built from two triangle tables and
//!   interpolated strip determinants.
//!
//! All arithmetic is exact; interpolation always verifies one extra sample
//! beyond the degree bound and fails loudly on a mismatch.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::diagram::{diagram_to_word, ssyt_poly, Partition};
use crate::error::Error;
use crate::grid::{census, nested_placement, Parity, MAX_ENUM_N};
use crate::lgv::{all_n_pairs, count_n, count_r};
use crate::matching::Matching;
use crate::poly::RatPoly;
use crate::region::{corner_count, TriangleTables};

/// Largest half-size accepted by [`a_poly_main`] (triangle enumeration guard).
pub const MAX_MAIN_D: usize = 5;

/// Largest half-size accepted by [`a_poly_corner`].
pub const MAX_CORNER_D: usize = 4;

/// Largest half-size accepted by [`a_poly_squeeze`] on either side.
pub const MAX_SQUEEZE_D: usize = 3;

/// The unique polynomial of degree `<= degree_bound` through the samples
/// `(t, evaluate(t))` for `t = t0, t0+1, ..., t0+degree_bound`.
///
/// One extra sample at `t0 + degree_bound + 1` is compared against the
/// interpolant; a mismatch means the data does not satisfy the claimed
/// degree bound and is reported as an error.
pub fn interpolate<F>(mut evaluate: F, t0: i64, degree_bound: usize) -> Result<RatPoly, Error>
where
    F: FnMut(i64) -> Result<BigRational, Error>,
{
    let points: Vec<i64> = (0..=degree_bound as i64).map(|i| t0 + i).collect();
    let mut diffs: Vec<BigRational> = Vec::with_capacity(points.len());
    for &t in &points {
        diffs.push(evaluate(t)?);
    }
    // Newton divided differences over the consecutive sample points.
    for level in 1..=degree_bound {
        for i in (level..=degree_bound).rev() {
            let num = &diffs[i] - &diffs[i - 1];
            let den = BigRational::from_integer(BigInt::from(points[i] - points[i - level]));
            diffs[i] = num / den;
        }
    }
    let mut poly = RatPoly::zero();
    for k in (0..=degree_bound).rev() {
        let factor = RatPoly::x_plus(BigRational::from_integer(BigInt::from(-points[k])));
        poly = poly.mul(&factor).add(&RatPoly::constant(diffs[k].clone()));
    }
    let check_at = t0 + degree_bound as i64 + 1;
    let expected = evaluate(check_at)?;
    let got = poly.eval(&BigRational::from_integer(BigInt::from(check_at)));
    if got != expected {
        return Err(Error::Invalid(alloc::format!(
            "samples violate the degree bound {degree_bound}: \
             at t = {check_at} interpolant gives {got}, data gives {expected}"
        )));
    }
    Ok(poly)
}

/// The boundary slot set whose occupancy word encodes `lambda` on
/// `2len` letters (`len` zeros, `len` ones).
fn slot_set_of_shape(lambda: &Partition, len: usize) -> Result<Vec<usize>, Error> {
    let word = diagram_to_word(lambda, len, len)?;
    Ok(word
        .iter()
        .enumerate()
        .filter(|&(_, &step)| step == 0)
        .map(|(i, _)| i + 1)
        .collect())
}

/// The count polynomial `m -> A_X(m)` from the nested placement.
///
/// This is the hook-content polynomial of `lambda(X)` shifted to
/// `m - 2d + 1`, plus, for every shape strictly inside `lambda(X)`, the
/// triangle weight of its slot set times the shifted hook-content
/// polynomial of that shape. The result counts grid configurations for
/// every `m >= 0`.
pub fn a_poly_main(x: &Matching) -> Result<RatPoly, Error> {
    let d = x.size();
    if d > MAX_MAIN_D {
        return Err(Error::TooLarge(alloc::format!(
            "matching has {d} arches; the triangle tables stop at {MAX_MAIN_D}"
        )));
    }
    let lam_x = x.to_partition();
    let shift = 1 - 2 * d as i64;
    let mut acc = ssyt_poly(&lam_x, shift);
    if d >= 2 {
        let tables = TriangleTables::build(d)?;
        for lam in Partition::all_in_box(d - 1, d - 1) {
            if lam == lam_x || !lam_x.contains(&lam) {
                continue;
            }
            let slots = slot_set_of_shape(&lam, d - 1)?;
            let weight = tables.a_single(x, &slots);
            if weight.is_zero() {
                continue;
            }
            let term = ssyt_poly(&lam, shift).scale(&BigRational::from_integer(weight));
            acc = acc.add(&term);
        }
    }
    Ok(acc)
}

/// The count polynomial `m -> A_X(m)` from the corner placement: corner
/// triangle counts paired with interpolated pentagon determinants.
///
/// Agrees with [`a_poly_main`] coefficient by coefficient; its value at
/// `m = 0` is the number of plain grid configurations of `X` on the
/// `d x d` grid.
pub fn a_poly_corner(x: &Matching) -> Result<RatPoly, Error> {
    let d = x.size();
    if d > MAX_CORNER_D {
        return Err(Error::TooLarge(alloc::format!(
            "matching has {d} arches; the corner triangle stops at {MAX_CORNER_D}"
        )));
    }
    if d == 0 {
        return Ok(RatPoly::one());
    }
    let mut acc = RatPoly::zero();
    for (e_set, f_set) in all_n_pairs(d) {
        let weight = corner_count(x, &e_set, &f_set)?;
        if weight.is_zero() {
            continue;
        }
        let pentagon = interpolate(
            |m| count_n(&e_set, &f_set, d, m).map(BigRational::from_integer),
            2 * d as i64,
            d * d,
        )?;
        acc = acc.add(&pentagon.scale(&BigRational::from_integer(weight)));
    }
    Ok(acc)
}

/// Strip-count polynomial in the height `h`: interpolates the strip
/// determinant for fixed shapes and width, with degree bound
/// `|lambda|`.
///
/// Samples start at `h = 2`: with both end blocks present the
/// determinant is certified as the degree-`|lambda|` counting polynomial
/// from that height on, and the extra verification point guards the
/// bound.
fn poly_r(
    lambda: &Partition,
    mu: &Partition,
    d: usize,
    e: usize,
    k: i64,
) -> Result<RatPoly, Error> {
    interpolate(
        |h| count_r(lambda, mu, d, e, h, k).map(BigRational::from_integer),
        2,
        lambda.size(),
    )
}

/// `p(x + a)` — substitute a shifted argument into the polynomial.
fn shift_arg(p: &RatPoly, a: &BigRational) -> RatPoly {
    let factor = RatPoly::x_plus(a.clone());
    let mut acc = RatPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&factor).add(&RatPoly::constant(c.clone()));
    }
    acc
}

/// All strictly increasing `k`-subsets of `1..=max`.
fn subsets_of_size(max: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn extend(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, next: usize, max: usize, k: usize) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for value in next..=max + 1 - needed {
            current.push(value);
            extend(out, current, value + 1, max, k);
            current.pop();
        }
    }
    extend(&mut out, &mut current, 1, max, k);
    out
}

/// The count polynomial `m -> A_{X,Y}(m)` for a pair of matchings placed
/// on opposite corners, from the two-sided expansion.
///
/// The sum runs over pairs of slot sets on each side; each term couples
/// two triangle weights with two interpolated strip polynomials whose
/// heights are affine in `m`. An empty `Y` delegates to [`a_poly_main`].
/// The sides may be given in either order.
pub fn a_poly_squeeze(x: &Matching, y: &Matching) -> Result<RatPoly, Error> {
    if y.size() > x.size() {
        return a_poly_squeeze(y, x);
    }
    let d = x.size();
    let e = y.size();
    if e == 0 {
        return a_poly_main(x);
    }
    if d > MAX_SQUEEZE_D {
        return Err(Error::TooLarge(alloc::format!(
            "matching has {d} arches; the two-sided expansion stops at {MAX_SQUEEZE_D}"
        )));
    }
    let tables_x = TriangleTables::build(d)?;
    let tables_y = TriangleTables::build(e)?;
    // First strip height: h = m - (3d - e - 2); second: h = m - (d + e - 2).
    let shift1 = BigRational::from_integer(BigInt::from(-(3 * d as i64 - e as i64 - 2)));
    let shift2 = BigRational::from_integer(BigInt::from(-(d as i64 + e as i64 - 2)));
    let x_sets = subsets_of_size(2 * d - 2, d - 1);
    let y_sets = subsets_of_size(2 * e - 2, e - 1);
    let mut acc = RatPoly::zero();
    for e1 in &x_sets {
        let lam_e1 = crate::diagram::partition_of_set(e1, 2 * d - 2);
        for e2 in &x_sets {
            let a1 = tables_x.a_double(x, e1, e2);
            if a1 == 0 {
                continue;
            }
            let lam_e2 = crate::diagram::partition_of_set(e2, 2 * d - 2);
            for f1 in &y_sets {
                let lam_f1 = crate::diagram::partition_of_set(f1, 2 * e - 2);
                for f2 in &y_sets {
                    let a2 = tables_y.a_double(y, f1, f2);
                    if a2 == 0 {
                        continue;
                    }
                    let lam_f2 = crate::diagram::partition_of_set(f2, 2 * e - 2);
                    let strip1 = poly_r(&lam_e1, &lam_f2, d - 1, e - 1, 2 * (d - e) as i64 + 1)?;
                    let strip2 = poly_r(&lam_f1, &lam_e2, e - 1, d - 1, 1)?;
                    let term = shift_arg(&strip1, &shift1).mul(&shift_arg(&strip2, &shift2));
                    let weight = BigRational::from_integer(BigInt::from(a1) * BigInt::from(a2));
                    acc = acc.add(&term.scale(&weight));
                }
            }
        }
    }
    Ok(acc)
}

/// `scale * a`, plus a flag reporting whether every coefficient of the
/// scaled polynomial is an integer.
pub fn scaled_p(a: &RatPoly, scale: &BigInt) -> (RatPoly, bool) {
    let scaled = a.scale(&BigRational::from_integer(scale.clone()));
    let integral = scaled.coeffs().iter().all(|c| c.is_integer());
    (scaled, integral)
}

/// Comparison of the polynomial prediction for `A_X(m)` against a direct
/// grid enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crosscheck {
    /// The matching, as a balanced-parenthesis word.
    pub x_word: String,
    /// Number of enclosing arches.
    pub m: usize,
    /// Grid size used for the enumeration.
    pub n: usize,
    /// Polynomial prediction.
    pub predicted: BigInt,
    /// Enumerated count.
    pub counted: u64,
    /// Whether the two agree.
    pub agree: bool,
}

/// Evaluates [`a_poly_main`] at `m` and enumerates the grid `Q_{d+m}`
/// with `X` nested inside `m` arches to compare.
pub fn crosscheck(x: &Matching, m: usize) -> Result<Crosscheck, Error> {
    let d = x.size();
    if d == 0 {
        return Err(Error::Invalid("need at least one arch".into()));
    }
    let n = d + m;
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge(alloc::format!(
            "grid Q_{n} exceeds the enumeration bound Q_{MAX_ENUM_N}"
        )));
    }
    let poly = a_poly_main(x)?;
    let predicted = poly.eval_int(m as i64)?;
    let target = nested_placement(x, m);
    let counted = census(n, Parity::of_grid(n))?.count(&target);
    let agree = predicted == BigInt::from(counted);
    Ok(Crosscheck {
        x_word: x.to_paren_word(),
        m,
        n,
        predicted,
        counted,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(s: &str) -> Matching {
        Matching::parse(s).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn interpolate_recovers_polynomials() {
        let constant = interpolate(|_| Ok(BigRational::one()), 0, 0).unwrap();
        assert_eq!(constant.coeffs(), &[BigRational::one()]);

        let line = interpolate(
            |t| Ok(BigRational::from_integer(BigInt::from(2 * t - 5))),
            3,
            1,
        )
        .unwrap();
        assert_eq!(line.coeff(0), rat(-5, 1));
        assert_eq!(line.coeff(1), rat(2, 1));
    }

    #[test]
    fn interpolate_rejects_degree_violations() {
        let err = interpolate(
            |t| Ok(BigRational::from_integer(BigInt::from(t * t))),
            0,
            1,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn main_poly_small_matchings() {
        // A fully nested matching has the empty shape: the count is 1.
        for word in ["()", "(())", "((()))"] {
            let poly = a_poly_main(&m(word)).unwrap();
            assert_eq!(poly.coeffs(), &[BigRational::one()]);
        }
        // Two side-by-side arches: A(m) = m + 1.
        let poly = a_poly_main(&m("()()")).unwrap();
        assert_eq!(poly.coeff(0), rat(1, 1));
        assert_eq!(poly.coeff(1), rat(1, 1));
        assert_eq!(poly.degree(), Some(1));
    }

    #[test]
    fn main_poly_three_arches_frozen_values() {
        // Shape (2, 1): cubic with leading coefficient dim/3! = 2/6 = 1/3.
        let poly = a_poly_main(&m("()()()")).unwrap();
        assert_eq!(poly.degree(), Some(3));
        assert_eq!(poly.leading().unwrap(), &rat(1, 3));
        let values: Vec<BigInt> = (0..5).map(|t| poly.eval_int(t).unwrap()).collect();
        let expected: Vec<BigInt> = [2, 7, 17, 34, 60].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(values, expected);
    }

    #[test]
    fn crosscheck_small_grids() {
        for (word, m_max) in [("()", 5), ("()()", 4), ("(())", 4)] {
            for mm in 0..=m_max {
                let report = crosscheck(&m(word), mm).unwrap();
                assert!(
                    report.agree,
                    "{word} with {mm} arches: predicted {} counted {}",
                    report.predicted, report.counted
                );
            }
        }
    }

    #[test]
    fn scaled_p_detects_integrality() {
        let poly = a_poly_main(&m("()()()")).unwrap();
        let (scaled, integral) = scaled_p(&poly, &BigInt::from(6));
        assert!(integral);
        assert_eq!(scaled.leading().unwrap(), &rat(2, 1));
        let (_, fails) = scaled_p(&poly, &BigInt::from(2));
        assert!(!fails);
    }

    #[test]
    fn squeeze_reduces_to_main_when_one_side_is_empty() {
        let empty = Matching::from_partner(Vec::new()).unwrap();
        let lhs = a_poly_squeeze(&m("()()"), &empty).unwrap();
        let rhs = a_poly_main(&m("()()")).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn squeeze_structural_checks_small_pairs() {
        // Degree |lambda(X)| + |lambda(Y)| and leading coefficient
        // dim(X) * dim(Y) / (|X|! * |Y|!) for a mixed pair.
        let x = m("()()");
        let y = m("()()");
        let poly = a_poly_squeeze(&x, &y).unwrap();
        assert_eq!(poly.degree(), Some(2));
        assert_eq!(poly.leading().unwrap(), &rat(1, 1));

        let nested = m("(())");
        let poly = a_poly_squeeze(&nested, &nested).unwrap();
        assert_eq!(poly.coeffs(), &[BigRational::one()]);
    }
}
