//! Exact bivariate polynomial kernel up to degree two.
//!
//! The only polynomial machinery the conic constructions need: affine forms,
//! their squares, sums and scalar multiples of quadrics, exact evaluation,
//! canonicalization, and equality up to a nonzero scalar.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ConicError;
use crate::minkowski::Point;
use crate::rational::{format_rational, rat_to_f64, Rat};

/// Linear form `cx * x + cy * y + c0` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    pub cx: Rat,
    pub cy: Rat,
    pub c0: Rat,
}

impl AffineForm {
    pub fn new(cx: Rat, cy: Rat, c0: Rat) -> AffineForm {
        AffineForm { cx, cy, c0 }
    }

    pub fn eval(&self, p: &Point) -> Rat {
        &self.cx * &p.x + &self.cy * &p.y + &self.c0
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        rat_to_f64(&self.cx) * x + rat_to_f64(&self.cy) * y + rat_to_f64(&self.c0)
    }

    pub fn is_zero(&self) -> bool {
        self.cx.is_zero() && self.cy.is_zero() && self.c0.is_zero()
    }

    /// Expands the square of the form into a quadric. The quadratic part of
    /// the result always satisfies `B^2 - 4AC = 0` exactly.
    pub fn square(&self) -> ImplicitQuadric {
        let two = Rat::from_integer(BigInt::from(2));
        ImplicitQuadric {
            a: &self.cx * &self.cx,
            b: &two * &self.cx * &self.cy,
            c: &self.cy * &self.cy,
            d: &two * &self.cx * &self.c0,
            e: &two * &self.cy * &self.c0,
            f: &self.c0 * &self.c0,
        }
    }
}

/// Implicit quadric `A x^2 + B xy + C y^2 + D x + E y + F = 0` with exact
/// rational coefficients.
///
/// The all-zero tuple does not describe a curve; [`ImplicitQuadric::new`]
/// rejects it, while the arithmetic helpers (`add`, `sub`, `scale`) may pass
/// through zero as an intermediate value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicitQuadric {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
}

impl ImplicitQuadric {
    /// Checked constructor: rejects the all-zero quadric.
    pub fn new(
        a: Rat,
        b: Rat,
        c: Rat,
        d: Rat,
        e: Rat,
        f: Rat,
    ) -> Result<ImplicitQuadric, ConicError> {
        let q = ImplicitQuadric { a, b, c, d, e, f };
        if q.is_zero() {
            return Err(ConicError::DegeneratePlane);
        }
        Ok(q)
    }

    /// Unchecked constructor for internal arithmetic.
    pub fn from_coeffs(coeffs: [Rat; 6]) -> ImplicitQuadric {
        let [a, b, c, d, e, f] = coeffs;
        ImplicitQuadric { a, b, c, d, e, f }
    }

    pub fn from_ints(coeffs: [i64; 6]) -> ImplicitQuadric {
        ImplicitQuadric::from_coeffs(coeffs.map(|v| Rat::from_integer(BigInt::from(v))))
    }

    pub fn coeffs(&self) -> [&Rat; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    /// Exact value of the polynomial at a rational point.
    pub fn eval(&self, p: &Point) -> Rat {
        let x = &p.x;
        let y = &p.y;
        &self.a * x * x + &self.b * x * y + &self.c * y * y + &self.d * x + &self.e * y + &self.f
    }

    /// Float coefficients in `[A, B, C, D, E, F]` order.
    pub fn coeffs_f64(&self) -> [f64; 6] {
        [
            rat_to_f64(&self.a),
            rat_to_f64(&self.b),
            rat_to_f64(&self.c),
            rat_to_f64(&self.d),
            rat_to_f64(&self.e),
            rat_to_f64(&self.f),
        ]
    }

    /// Float coefficients rescaled so the largest magnitude is one.
    ///
    /// The rescaling is exact (rational) before conversion, so the locus is
    /// unchanged and evaluation is well conditioned regardless of the
    /// original scale.
    pub fn unit_coeffs_f64(&self) -> [f64; 6] {
        let max = self
            .coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("six coefficients");
        if max.is_zero() {
            return [0.0; 6];
        }
        let scaled = self.scale(&max.recip());
        scaled.coeffs_f64()
    }

    pub fn scale(&self, k: &Rat) -> ImplicitQuadric {
        ImplicitQuadric {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
            e: &self.e * k,
            f: &self.f * k,
        }
    }

    pub fn add(&self, rhs: &ImplicitQuadric) -> ImplicitQuadric {
        ImplicitQuadric {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
            e: &self.e + &rhs.e,
            f: &self.f + &rhs.f,
        }
    }

    pub fn sub(&self, rhs: &ImplicitQuadric) -> ImplicitQuadric {
        ImplicitQuadric {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
            e: &self.e - &rhs.e,
            f: &self.f - &rhs.f,
        }
    }

    /// Canonical representative of the scalar-equivalence class: integer
    /// coefficients with trivial common divisor and a positive leading
    /// (first nonzero) coefficient. Used for display and golden files.
    pub fn canonicalized(&self) -> ImplicitQuadric {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.coeffs() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| (*c * Rat::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        let lead_negative = ints
            .iter()
            .find(|v| !v.is_zero())
            .map(|v| v.is_negative())
            .unwrap_or(false);
        if lead_negative {
            gcd = -gcd;
        }
        let normalized: Vec<Rat> = ints
            .into_iter()
            .map(|v| Rat::from_integer(v / &gcd))
            .collect();
        let mut it = normalized.into_iter();
        ImplicitQuadric {
            a: it.next().unwrap(),
            b: it.next().unwrap(),
            c: it.next().unwrap(),
            d: it.next().unwrap(),
            e: it.next().unwrap(),
            f: it.next().unwrap(),
        }
    }

    /// True when `self = lambda * other` for some nonzero rational
    /// `lambda`, decided exactly. All-zero inputs are never equivalent to
    /// anything.
    pub fn scalar_equivalent(&self, other: &ImplicitQuadric) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        let mut lambda: Option<Rat> = None;
        for (s, o) in self.coeffs().iter().zip(other.coeffs().iter()) {
            match (s.is_zero(), o.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let ratio = *s / *o;
                    match &lambda {
                        None => lambda = Some(ratio),
                        Some(l) => {
                            if *l != ratio {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        lambda.is_some()
    }

    /// Exact gradient `(2Ax + By + D, Bx + 2Cy + E)` at a rational point.
    pub fn gradient(&self, p: &Point) -> (Rat, Rat) {
        let two = Rat::from_integer(BigInt::from(2));
        (
            &two * &self.a * &p.x + &self.b * &p.y + &self.d,
            &self.b * &p.x + &two * &self.c * &p.y + &self.e,
        )
    }
}

/// Renders one term of the pretty equation.
fn push_term(out: &mut String, coeff: &Rat, var: &str) {
    if coeff.is_zero() {
        return;
    }
    let mag = coeff.abs();
    if out.is_empty() {
        if coeff.is_negative() {
            out.push('-');
        }
    } else if coeff.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if var.is_empty() {
        out.push_str(&format_rational(&mag));
    } else if mag.is_one() {
        out.push_str(var);
    } else {
        out.push_str(&format_rational(&mag));
        out.push('*');
        out.push_str(var);
    }
}

impl fmt::Display for ImplicitQuadric {
    /// `"x^2 - 4*x*y + 4*y^2 + 12*x - 18*y + 15 = 0"`-style rendering with
    /// exact rational coefficients (`num/den` when non-integral), zero
    /// terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        push_term(&mut out, &self.a, "x^2");
        push_term(&mut out, &self.b, "x*y");
        push_term(&mut out, &self.c, "y^2");
        push_term(&mut out, &self.d, "x");
        push_term(&mut out, &self.e, "y");
        push_term(&mut out, &self.f, "");
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} = 0")
    }
}
