//! Exact bivariate polynomials, used by the calculus module as the
//! symbolic-differentiation oracle for the dimension-2 identities.

use alloc::collections::BTreeMap;
use alloc::string::String;

use core::fmt::Write;

use num_traits::{One, Zero};

use crate::Rat;

/// A polynomial in two variables with exact rational coefficients,
/// stored sparsely by exponent pair.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly2::default();
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    pub fn one() -> Self {
        Poly2::constant(Rat::one())
    }

    /// The variable `x_0` or `x_1`.
    pub fn var(which: usize) -> Self {
        let mut p = Poly2::default();
        let key = if which == 0 { (1, 0) } else { (0, 1) };
        p.terms.insert(key, Rat::one());
        p
    }

    pub fn term(c: Rat, e0: u32, e1: u32) -> Self {
        let mut p = Poly2::default();
        if !c.is_zero() {
            p.terms.insert((e0, e1), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            let entry = out.terms.entry(*k).or_insert_with(Rat::zero);
            *entry += v;
            if entry.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for ((a0, a1), av) in &self.terms {
            for ((b0, b1), bv) in &other.terms {
                let key = (a0 + b0, a1 + b1);
                let entry = out.terms.entry(key).or_insert_with(Rat::zero);
                *entry += av * bv;
                if entry.is_zero() {
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Poly2 {
        if s.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly2 {
        let mut acc = Poly2::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable 0 or 1.
    pub fn derivative(&self, which: usize) -> Poly2 {
        let mut out = Poly2::default();
        for ((e0, e1), v) in &self.terms {
            let (e, key) = if which == 0 {
                (*e0, (e0.wrapping_sub(1), *e1))
            } else {
                (*e1, (*e0, e1.wrapping_sub(1)))
            };
            if e > 0 {
                out.terms.insert(key, v * Rat::from_integer(e.into()));
            }
        }
        out
    }

    pub fn eval(&self, x0: &Rat, x1: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for ((e0, e1), v) in &self.terms {
            acc += v * x0.pow(*e0 as i32) * x1.pow(*e1 as i32);
        }
        acc
    }

    /// Substitutes polynomials for the two variables.
    pub fn compose(&self, p0: &Poly2, p1: &Poly2) -> Poly2 {
        let mut acc = Poly2::zero();
        for ((e0, e1), v) in &self.terms {
            let t = p0.pow(*e0).mul(&p1.pow(*e1)).scale(v);
            acc = acc.add(&t);
        }
        acc
    }

    /// Renders with the given variable names, e.g. `x0^2 - x1`.
    pub fn render(&self, v0: &str, v1: &str) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, ((e0, e1), c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{c}");
            if *e0 > 0 {
                let _ = if *e0 == 1 {
                    write!(out, "*{v0}")
                } else {
                    write!(out, "*{v0}^{e0}")
                };
            }
            if *e1 > 0 {
                let _ = if *e1 == 1 {
                    write!(out, "*{v1}")
                } else {
                    write!(out, "*{v1}^{e1}")
                };
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let x = Poly2::var(0);
        let y = Poly2::var(1);
        // (x + y)^2 = x^2 + 2xy + y^2
        let p = x.add(&y).pow(2);
        assert_eq!(p.eval(&r(2), &r(3)), r(25));
        assert_eq!(p.derivative(0), x.add(&y).scale(&r(2)));
        // d/dy x^2 = 0
        assert!(x.pow(2).derivative(1).is_zero());
    }

    #[test]
    fn composition() {
        let f = Poly2::var(0).pow(2).sub(&Poly2::var(1)); // x^2 - y
        let g = f.compose(&Poly2::var(1), &Poly2::var(0)); // swap vars
        assert_eq!(g, Poly2::var(1).pow(2).sub(&Poly2::var(0)));
    }
}
