//! Dense univariate polynomials with exact rational coefficients.
//!
//! Used for the counting polynomials `A_X(m)`: degrees stay tiny (at most a few
//! dozen), so naive convolution and Lagrange interpolation are plenty.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::factorial;
use crate::error::Error;

/// Polynomial in one variable; `coeffs[i]` is the coefficient of `x^i`.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The polynomial `x + a`.
    pub fn x_plus(a: BigRational) -> Self {
        let mut p = RatPoly {
            coeffs: vec![a, BigRational::one()],
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        let mut p = RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.trim();
        p
    }

    /// Evaluate at a rational point (Horner).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at an integer point, requiring an integer value.
    pub fn eval_int(&self, x: i64) -> Result<BigInt, Error> {
        let v = self.eval(&rat(x));
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::Invalid(alloc::format!(
                "polynomial value at {x} is not an integer: {v}"
            )))
        }
    }

    /// Multiply by the scalar `s` and return the coefficients if they are all
    /// integers, lowest degree first. `None` if any scaled coefficient is
    /// non-integral.
    pub fn scaled_integer_coeffs(&self, s: &BigInt) -> Option<Vec<BigInt>> {
        let s = BigRational::from_integer(s.clone());
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let v = c * &s;
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(out)
    }
}

/// The polynomial `C(x + shift, k)` in `x`: a degree-`k` polynomial for
/// `k >= 0`, the zero polynomial for `k < 0`.
pub fn binomial_poly(shift: i64, k: i64) -> RatPoly {
    if k < 0 {
        return RatPoly::zero();
    }
    let mut p = RatPoly::one();
    for t in 0..k {
        p = p.mul(&RatPoly::x_plus(rat(shift - t)));
    }
    let kfac = BigRational::from_integer(factorial(k as u64));
    p.scale(&kfac.recip())
}

/// Lagrange interpolation through `(x_i, y_i)` with distinct integer nodes.
pub fn lagrange_interpolate(points: &[(i64, BigInt)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::constant(BigRational::from_integer(yi.clone()));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            assert_ne!(xi, xj, "interpolation nodes must be distinct");
            let num = RatPoly::x_plus(rat(-xj));
            basis = basis.mul(&num).scale(&rat(xi - xj).recip());
        }
        acc = acc.add(&basis);
    }
    acc
}

/// Pretty form like `(2*m^2 + m - 1)/2` with integer numerator coefficients.
/// Returns the numerator coefficients (lowest degree first) and the common
/// positive denominator.
pub fn normalized_coeffs(p: &RatPoly) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    if den.is_negative() {
        den = -den;
    }
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    (coeffs, den)
}
