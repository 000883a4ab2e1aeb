//! The Hurwitz matrix `H(u;c)`, its Clifford decomposition and exact
//! integer powers, plus the small dense rational matrix type backing
//! them.
//!
//! The dimension-4 and dimension-2 matrices are produced by restricting
//! a single dimension-8 template, mirroring the construction rule for
//! the smaller algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{quad, AlgebraSignature, Element};
use crate::{Error, Rat, Result};

/// One entry of the dimension-8 template: sign, mask of `c_i` factors
/// (bit 0 = c1, bit 1 = c2, bit 2 = c3) and the index of the `u`
/// coordinate carried by the entry.
type Entry = (i8, u8, usize);

/// Dimension-8 template of `H(u;c)`. Each entry is a signed
/// `c`-monomial times one coordinate of `u`; the index pattern is
/// `alpha XOR gamma` on (row, column).
const H8: [[Entry; 8]; 8] = [
    [
        (1, 0, 0), (1, 1, 1), (1, 2, 2), (-1, 3, 3),
        (1, 4, 4), (-1, 5, 5), (-1, 6, 6), (1, 7, 7),
    ],
    [
        (1, 0, 1), (1, 0, 0), (1, 2, 3), (-1, 2, 2),
        (1, 4, 5), (-1, 4, 4), (1, 6, 7), (-1, 6, 6),
    ],
    [
        (1, 0, 2), (-1, 1, 3), (1, 0, 0), (1, 1, 1),
        (1, 4, 6), (-1, 5, 7), (-1, 4, 4), (1, 5, 5),
    ],
    [
        (1, 0, 3), (-1, 0, 2), (1, 0, 1), (1, 0, 0),
        (1, 4, 7), (-1, 4, 6), (1, 4, 5), (-1, 4, 4),
    ],
    [
        (1, 0, 4), (-1, 1, 5), (-1, 2, 6), (1, 3, 7),
        (1, 0, 0), (1, 1, 1), (1, 2, 2), (-1, 3, 3),
    ],
    [
        (1, 0, 5), (-1, 0, 4), (-1, 2, 7), (1, 2, 6),
        (1, 0, 1), (1, 0, 0), (-1, 2, 3), (1, 2, 2),
    ],
    [
        (1, 0, 6), (1, 1, 7), (-1, 0, 4), (-1, 1, 5),
        (1, 0, 2), (1, 1, 3), (1, 0, 0), (-1, 1, 1),
    ],
    // the (7,3) entry is -u4: +u4 breaks the norm property and the
    // antisymmetry of the structure constants (unique one-entry fix)
    [
        (1, 0, 7), (1, 0, 6), (-1, 0, 5), (-1, 0, 4),
        (1, 0, 3), (1, 0, 2), (-1, 0, 1), (1, 0, 0),
    ],
];

/// Dense square matrix of exact rationals (at most 8x8 here).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMat {
    n: usize,
    a: Vec<Rat>,
}

impl RatMat {
    pub fn zero(n: usize) -> Self {
        RatMat { n, a: vec![Rat::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n);
        for i in 0..n {
            m.a[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        RatMat { n, a }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rat) -> RatMat {
        RatMat { n: self.n, a: self.a.iter().map(|x| x * s).collect() }
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        RatMat::from_fn(n, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..n {
                let x = self.get(i, k);
                if !x.is_zero() {
                    acc += x * other.get(k, j);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| {
                let mut acc = Rat::zero();
                for k in 0..self.n {
                    let x = self.get(i, k);
                    if !x.is_zero() {
                        acc += x * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    /// Multiplies by the diagonal `eta` on the left.
    pub fn diag_mul_left(&self, eta: &[i8]) -> RatMat {
        RatMat::from_fn(self.n, |i, j| {
            let x = self.get(i, j).clone();
            if eta[i] == 1 {
                x
            } else {
                -x
            }
        })
    }
}

/// Integer matrix with entries in {-1, 0, +1} (basis and Gamma
/// matrices) or small integers (quadratic-form coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    n: usize,
    a: Vec<i64>,
}

impl IntMat {
    pub fn zero(n: usize) -> Self {
        IntMat { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> IntMat {
        let mut m = IntMat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(j, i));
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        let n = self.n;
        let mut m = IntMat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        let mut m = IntMat::zero(self.n);
        for i in 0..self.n * self.n {
            m.a[i] = self.a[i] + other.a[i];
        }
        m
    }

    pub fn scale(&self, s: i64) -> IntMat {
        IntMat { n: self.n, a: self.a.iter().map(|x| x * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }
}

/// The constant matrices `B_alpha` with `H(u;c) = sum_alpha u_alpha B_alpha`;
/// `B_0` is the identity and `B_k = Gamma_k'` for `k >= 1`.
#[derive(Clone, Debug)]
pub struct HurwitzBasis {
    b: Vec<IntMat>,
}

impl HurwitzBasis {
    pub fn matrices(&self) -> &[IntMat] {
        &self.b
    }
}

/// The Clifford generators `Gamma_1 ... Gamma_{2m-1}` satisfying
/// `Gamma_i Gamma_j + Gamma_j Gamma_i = -2 g_ij I`.
#[derive(Clone, Debug)]
pub struct GammaSet {
    gammas: Vec<IntMat>,
}

impl GammaSet {
    pub fn gammas(&self) -> &[IntMat] {
        &self.gammas
    }
}

/// The matrix `H(u;c)` representing left multiplication by `u`,
/// linear in `u`. Dimensions 4 and 2 keep the top-left block of the
/// dimension-8 template.
pub fn hurwitz(u: &Element, sig: &AlgebraSignature) -> Result<RatMat> {
    let dim = sig.dim();
    if u.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: u.dim() });
    }
    Ok(RatMat::from_fn(dim, |i, j| {
        let (sign, mask, idx) = H8[i][j];
        let s = sign * sig.c_product(mask);
        let x = u.coeff(idx).clone();
        if s == 1 {
            x
        } else {
            -x
        }
    }))
}

/// Symbolic rendering of `H(u;c)` with `c` substituted: entries as
/// signed monomials in the `u_alpha`.
pub fn hurwitz_symbolic(sig: &AlgebraSignature) -> Vec<Vec<String>> {
    let dim = sig.dim();
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let (sign, mask, idx) = H8[i][j];
                    let s = sign * sig.c_product(mask);
                    if s == 1 {
                        format!("u{idx}")
                    } else {
                        format!("-u{idx}")
                    }
                })
                .collect()
        })
        .collect()
}

/// The coefficient matrices of `H(u;c)` seen as a linear map of `u`.
pub fn basis(sig: &AlgebraSignature) -> HurwitzBasis {
    let dim = sig.dim();
    let mut b = vec![IntMat::zero(dim); dim];
    for i in 0..dim {
        for j in 0..dim {
            let (sign, mask, idx) = H8[i][j];
            b[idx].set(i, j, (sign * sig.c_product(mask)) as i64);
        }
    }
    HurwitzBasis { b }
}

/// `Gamma_k = B_k'` read off the Hurwitz basis.
pub fn gamma_set(sig: &AlgebraSignature) -> GammaSet {
    let b = basis(sig);
    GammaSet {
        gammas: b.b[1..].iter().map(IntMat::transpose).collect(),
    }
}

/// Checks `H' eta H = (u' eta u) eta` exactly and returns
/// `r = u' eta u`. A failure signals an implementation bug.
pub fn verify_property1(u: &Element, sig: &AlgebraSignature) -> Result<Rat> {
    let h = hurwitz(u, sig)?;
    let eta = sig.metric().eta().to_vec();
    let r = quad(&eta, u.coeffs());
    let lhs = h.transpose().mul(&h.diag_mul_left(&eta));
    let mut rhs = RatMat::zero(sig.dim());
    for i in 0..sig.dim() {
        let v = if eta[i] == 1 { r.clone() } else { -r.clone() };
        rhs.set(i, i, v);
    }
    if lhs != rhs {
        return Err(Error::IdentityViolation("H' eta H != (u' eta u) eta"));
    }
    Ok(r)
}

/// `H(u;c)^N` for any integer `N`. Negative powers use
/// `H^{-1} = r^{-1} eta H' eta` and require `r = u' eta u != 0`.
pub fn power(u: &Element, sig: &AlgebraSignature, n: i64) -> Result<RatMat> {
    let dim = sig.dim();
    if u.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: u.dim() });
    }
    let base = if n >= 0 {
        hurwitz(u, sig)?
    } else {
        inverse(u, sig)?
    };
    let mut acc = RatMat::identity(dim);
    for _ in 0..n.unsigned_abs() {
        acc = acc.mul(&base);
    }
    Ok(acc)
}

fn inverse(u: &Element, sig: &AlgebraSignature) -> Result<RatMat> {
    let eta = sig.metric().eta().to_vec();
    let r = quad(&eta, u.coeffs());
    if r.is_zero() {
        return Err(Error::NullCone);
    }
    let h = hurwitz(u, sig)?;
    // eta H' eta, then divide by r
    let m = h.transpose().diag_mul_left(&eta);
    let mut out = RatMat::zero(sig.dim());
    for i in 0..sig.dim() {
        for j in 0..sig.dim() {
            let x = if eta[j] == 1 {
                m.get(i, j).clone()
            } else {
                -m.get(i, j).clone()
            };
            out.set(i, j, x / &r);
        }
    }
    Ok(out)
}

/// `H(u;c)^N v` by repeated matrix-vector products; cheaper than
/// forming the matrix power when only the image is needed.
pub fn power_apply(
    u: &Element,
    sig: &AlgebraSignature,
    n: i64,
    v: &[Rat],
) -> Result<Vec<Rat>> {
    let dim = sig.dim();
    if u.dim() != dim || v.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
    }
    let mut w = v.to_vec();
    if n == 0 {
        return Ok(w);
    }
    if n > 0 {
        let h = hurwitz(u, sig)?;
        for _ in 0..n {
            w = h.mul_vec(&w);
        }
    } else {
        let hinv = inverse(u, sig)?;
        for _ in 0..(-n) {
            w = hinv.mul_vec(&w);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{multiply, norm_form};
    use alloc::vec;

    fn sig(dim: usize, c: &[i8]) -> AlgebraSignature {
        AlgebraSignature::new(dim, c).unwrap()
    }

    #[test]
    fn unit_gives_identity_matrix() {
        for s in AlgebraSignature::all() {
            let h = hurwitz(&Element::one(s.dim()), &s).unwrap();
            assert_eq!(h, RatMat::identity(s.dim()));
        }
    }

    #[test]
    fn dim2_block_matches_complex_multiplication() {
        let s = sig(2, &[-1]);
        let u = Element::from_ints(&[3, 4]).unwrap();
        let h = hurwitz(&u, &s).unwrap();
        // [[a, -b], [b, a]]
        assert_eq!(*h.get(0, 0), Rat::from_integer(3.into()));
        assert_eq!(*h.get(0, 1), Rat::from_integer((-4).into()));
        assert_eq!(*h.get(1, 0), Rat::from_integer(4.into()));
        assert_eq!(*h.get(1, 1), Rat::from_integer(3.into()));
    }

    #[test]
    fn dim8_first_row_last_entry_is_c1c2c3_u7() {
        let s = sig(8, &[-1, -1, -1]);
        let e7 = Element::basis(8, 7);
        let h = hurwitz(&e7, &s).unwrap();
        assert_eq!(*h.get(0, 7), Rat::from_integer((-1).into()));
        for i in 1..8 {
            // column 0 of H(e7) is e7
            let expect = if i == 7 { 1 } else { 0 };
            assert_eq!(*h.get(i, 0), Rat::from_integer(expect.into()));
        }
    }

    #[test]
    fn eq8_reconstruction_from_gammas() {
        for s in AlgebraSignature::all() {
            let dim = s.dim();
            let u = Element::from_ints(&(1..=dim as i64).collect::<Vec<_>>()).unwrap();
            let h = hurwitz(&u, &s).unwrap();
            let gammas = gamma_set(&s);
            let mut rec = RatMat::zero(dim);
            for i in 0..dim {
                rec.set(i, i, u.coeff(0).clone());
            }
            for (k, g) in gammas.gammas().iter().enumerate() {
                let gt = g.transpose();
                for i in 0..dim {
                    for j in 0..dim {
                        let cij = gt.get(i, j);
                        if cij != 0 {
                            let add = u.coeff(k + 1) * Rat::from_integer(cij.into());
                            let cur = rec.get(i, j).clone();
                            rec.set(i, j, cur + add);
                        }
                    }
                }
            }
            assert_eq!(h, rec, "Eq. 8 reconstruction failed for {s:?}");
        }
    }

    #[test]
    fn gamma_anticommutation() {
        for s in AlgebraSignature::all() {
            let g = s.metric();
            let gammas = gamma_set(&s);
            let dim = s.dim();
            for i in 0..dim - 1 {
                for j in 0..dim - 1 {
                    let gi = &gammas.gammas()[i];
                    let gj = &gammas.gammas()[j];
                    let anti = gi.mul(gj).add(&gj.mul(gi));
                    let expect = if i == j {
                        IntMat::identity(dim).scale(-2 * g.g()[i] as i64)
                    } else {
                        IntMat::zero(dim)
                    };
                    assert_eq!(anti, expect, "Eq. 9 failed for {s:?} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn basis_matrices_are_signed_permutations() {
        for s in AlgebraSignature::all() {
            let b = basis(&s);
            assert_eq!(b.matrices()[0], IntMat::identity(s.dim()));
            for bk in &b.matrices()[1..] {
                for i in 0..s.dim() {
                    let row: i64 = (0..s.dim()).map(|j| bk.get(i, j).abs()).sum();
                    let col: i64 = (0..s.dim()).map(|j| bk.get(j, i).abs()).sum();
                    assert_eq!(row, 1);
                    assert_eq!(col, 1);
                }
            }
        }
    }

    #[test]
    fn multiplication_agrees_with_hurwitz() {
        for s in AlgebraSignature::all() {
            let dim = s.dim();
            let u = Element::from_ints(&(0..dim as i64).map(|i| 2 * i - 3).collect::<Vec<_>>())
                .unwrap();
            let v =
                Element::from_ints(&(0..dim as i64).map(|i| i * i - 1).collect::<Vec<_>>()).unwrap();
            let w = multiply(&u, &v, &s).unwrap();
            let h = hurwitz(&u, &s).unwrap();
            assert_eq!(w.coeffs(), h.mul_vec(v.coeffs()).as_slice());
        }
    }

    #[test]
    fn property1_examples() {
        let s = sig(4, &[-1, -1]);
        let u = Element::from_ints(&[1, 2, 3, 4]).unwrap();
        let r = verify_property1(&u, &s).unwrap();
        assert_eq!(r, Rat::from_integer(30.into()));
        // compact case: H' H = 30 I
        let h = hurwitz(&u, &s).unwrap();
        assert_eq!(h.transpose().mul(&h), RatMat::identity(4).scale(&r));

        let s2 = sig(2, &[1]);
        let null = Element::from_ints(&[1, 1]).unwrap();
        assert!(verify_property1(&null, &s2).unwrap().is_zero());
    }

    #[test]
    fn power_examples() {
        let s = sig(2, &[-1]);
        let u = Element::from_ints(&[1, 1]).unwrap();
        let h2 = power(&u, &s, 2).unwrap();
        assert_eq!(*h2.get(0, 0), Rat::zero());
        assert_eq!(*h2.get(0, 1), Rat::from_integer((-2).into()));
        assert_eq!(*h2.get(1, 0), Rat::from_integer(2.into()));
        assert_eq!(*h2.get(1, 1), Rat::zero());

        assert_eq!(power(&u, &s, 0).unwrap(), RatMat::identity(2));

        let split = sig(2, &[1]);
        assert_eq!(power(&u, &split, -1), Err(Error::NullCone));
    }

    #[test]
    fn power_law_and_inverse() {
        for s in AlgebraSignature::all() {
            let dim = s.dim();
            let u = Element::from_ints(&(0..dim as i64).map(|i| i + 2).collect::<Vec<_>>()).unwrap();
            if norm_form(&u, &s).unwrap().is_zero() {
                continue;
            }
            let h1 = power(&u, &s, 1).unwrap();
            let hm1 = power(&u, &s, -1).unwrap();
            assert_eq!(hm1.mul(&h1), RatMat::identity(dim));
            let h2 = power(&u, &s, 2).unwrap();
            let h3 = power(&u, &s, 3).unwrap();
            assert_eq!(h1.mul(&h2), h3);
            let hm3 = power(&u, &s, -3).unwrap();
            assert_eq!(hm3.mul(&h3), RatMat::identity(dim));
        }
    }

    #[test]
    fn power_apply_matches_power() {
        let s = sig(8, &[-1, 1, -1]);
        let u = Element::from_ints(&[2, 1, 0, -1, 3, 1, 1, -2]).unwrap();
        let v = Element::from_ints(&[1, -1, 2, 0, 1, 1, -3, 2]).unwrap();
        for n in [-2i64, -1, 0, 1, 2, 3] {
            let direct = power(&u, &s, n).unwrap().mul_vec(v.coeffs());
            let via = power_apply(&u, &s, n, v.coeffs()).unwrap();
            assert_eq!(direct, via);
        }
    }
}
